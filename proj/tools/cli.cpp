#include "cli.hpp"

#include "edvlab/canon.hpp"
#include "edvlab/classify.hpp"
#include "edvlab/edv.hpp"
#include "edvlab/enumerate.hpp"
#include "edvlab/error.hpp"
#include "edvlab/families.hpp"
#include "edvlab/indices.hpp"
#include "edvlab/transforms.hpp"
#include "edvlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace edvlab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

Tree load_tree(const std::string& path) {
  if (path == "-")
    return read_tree(std::cin);
  return read_tree_file(path);
}

int parse_int(const std::string& text, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidArgument(std::string(what) + ": expected an integer, got '" + text + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(parse_int(item, "leg"));
  return out;
}

std::string verdict_text(const DedvPrediction& p) {
  if (!p.verdict)
    return "unknown";
  return *p.verdict ? "dedv" : "not-dedv";
}

// Cached enumeration: EDVLAB_CACHE_DIR/trees-n<n>-v<version>.txt
std::vector<Tree> cached_trees(int n) {
  const char* dir = std::getenv("EDVLAB_CACHE_DIR");
  if (dir == nullptr || *dir == '\0')
    return all_trees(n);
  const fs::path file = fs::path(dir) / ("trees-n" + std::to_string(n) + "-v" +
                                         std::to_string(kGeneratorVersion) + ".txt");
  if (std::ifstream in(file); in) {
    std::stringstream buf;
    buf << in.rdbuf();
    auto trees = parse_tree_stream(buf.str());
    if (static_cast<std::int64_t>(trees.size()) == count_trees(n))
      return trees;
  }
  auto trees = all_trees(n);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (std::ofstream out(file); out)
    out << to_text_stream(trees);
  return trees;
}

void print_indices(std::ostream& out, const IndexTable& table, OutputFormat format) {
  switch (format) {
  case OutputFormat::Table:
    for (IndexKind k : kAllIndexKinds)
      out << column_name(k) << '\t' << table[k].to_string() << '\n';
    break;
  case OutputFormat::Csv: {
    std::string header;
    std::string row;
    for (IndexKind k : kAllIndexKinds) {
      header += (header.empty() ? "" : ",") + std::string(column_name(k));
      row += (row.empty() ? "" : ",") + table[k].to_string();
    }
    out << header << '\n' << row << '\n';
    break;
  }
  case OutputFormat::Json: {
    json j;
    for (IndexKind k : kAllIndexKinds)
      j[std::string(column_name(k))] = table[k].to_string();
    out << j.dump() << '\n';
    break;
  }
  }
}

void print_family(std::ostream& out, const Tree& t) {
  out << to_text(t);
  out << "edv " << edv(t).to_string() << '\n';
  const auto p = predict_dedv(t);
  out << "prediction " << verdict_text(p) << " (" << p.rule << ")\n";
}

Tree build_family(const std::string& kind, const std::vector<std::string>& args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw InvalidArgument("family " + kind + " takes " + std::to_string(count) +
                            " argument(s)");
  };
  auto num = [&](std::size_t i) { return parse_int(args[i], kind.c_str()); };
  if (kind == "starlike") {
    need(1);
    return make_starlike(StarlikeSpec::make(parse_int_list(args[0])));
  }
  if (kind == "double-star") {
    need(2);
    return make_double_star(num(0), num(1));
  }
  if (kind == "power-star") {
    need(2);
    return make_power_star(num(0), num(1));
  }
  if (kind == "dt") {
    need(4);
    return make_double_starlike({num(0), num(1), num(2), num(3)});
  }
  if (kind == "two-spider") {
    need(5);
    return make_two_spider({num(0), num(1), num(2), num(3), num(4)});
  }
  if (kind == "rooted-product") {
    need(2);
    return rooted_product_path(load_tree(args[0]), num(1));
  }
  if (kind == "corona") {
    need(2);
    return corona_k1(load_tree(args[0]), num(1));
  }
  throw InvalidArgument("unknown family '" + kind + "'");
}

struct Options {
  int n = 0;
  std::string format = "table";
  std::string tree_file;
  std::vector<std::string> tree_files;
  std::string edv_text;
  std::string lambda = "1";
  int k = 3;
  int u = -1;
  int v = -1;
  int apply = -1;
  bool census_only = false;
  bool closure_report = false;
  int jobs = 1;
  std::string suite = "all";
  int max_n = 9;
  std::uint64_t seed = kDefaultSeed;
  std::string family;
  std::vector<std::string> family_args;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge division vectors of trees"};
  app.name("edvlab");
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "List every tree of order n");
  enumerate->add_option("n", o.n, "Order")->required();
  enumerate->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* edv_cmd = app.add_subcommand("edv", "Edge division vector of a tree");
  edv_cmd->add_option("--tree,tree", o.tree_file, "Tree file ('-' for stdin)")->required();

  auto* compare_cmd = app.add_subcommand("compare", "Order relation of two trees");
  compare_cmd->add_option("trees", o.tree_files, "Two tree files")->required()->expected(2);

  auto* indices_cmd = app.add_subcommand("indices", "Edge-additive indices");
  auto* tree_opt = indices_cmd->add_option("--tree", o.tree_file, "Tree file");
  auto* edv_opt = indices_cmd->add_option("--edv", o.edv_text, "Vector such as (4,1,1)");
  indices_cmd->add_option("--n", o.n, "Order for --edv");
  indices_cmd->add_option("--lambda", o.lambda, "Exponent for mW and vW");
  indices_cmd->add_option("--k", o.k, "Steiner k");
  indices_cmd->add_option("--format", o.format, "table, json or csv");
  tree_opt->excludes(edv_opt);

  auto* exchange_cmd = app.add_subcommand("exchange", "Balanced pairs between two vertices");
  exchange_cmd->add_option("--tree", o.tree_file, "Tree file")->required();
  exchange_cmd->add_option("--u", o.u, "First vertex")->required();
  exchange_cmd->add_option("--v", o.v, "Second vertex")->required();
  exchange_cmd->add_option("--apply", o.apply, "Print the tree after exchanging pair i");

  auto* closure_cmd = app.add_subcommand("closure", "Branch-exchange closure of a tree");
  closure_cmd->add_option("--tree,tree", o.tree_file, "Tree file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Group trees of order n by vector");
  classify_cmd->add_option("n", o.n, "Order")->required();
  classify_cmd->add_option("--format", o.format, "table, json or csv");
  classify_cmd->add_flag("--census", o.census_only, "Only the census row");
  classify_cmd->add_flag("--closure-report", o.closure_report,
                         "Compare each tree's exchange closure with its class");
  classify_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* family_cmd = app.add_subcommand("family", "Build a tree from a named family");
  family_cmd->add_option("kind", o.family,
                         "starlike, double-star, power-star, dt, two-spider, "
                         "rooted-product, corona")
      ->required();
  family_cmd->add_option("args", o.family_args, "Family parameters");

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-n", o.max_n, "Largest order to check");
  verify_cmd->add_option("--seed", o.seed, "Seed for randomized checks");
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*enumerate) {
      if (o.n < 1 || o.n > kMaxEnumerationOrder)
        throw OutOfRange("n must lie in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
      const auto trees = cached_trees(o.n);
      if (o.format == "json") {
        for (const Tree& t : trees) {
          json j;
          j["n"] = t.order();
          j["code"] = canonical_code(t).hex();
          json edges = json::array();
          for (const Edge& e : t.edges())
            edges.push_back({e.u, e.v});
          j["edges"] = edges;
          out << j.dump() << '\n';
        }
      } else {
        out << to_text_stream(trees);
      }
    } else if (*edv_cmd) {
      out << edv(load_tree(o.tree_file)).to_string() << '\n';
    } else if (*compare_cmd) {
      const auto a = edv(load_tree(o.tree_files[0]));
      const auto b = edv(load_tree(o.tree_files[1]));
      out << to_string(compare(a, b)) << '\n';
    } else if (*indices_cmd) {
      const OutputFormat format = parse_format(o.format);
      IndexParams params{Exponent::parse(o.lambda), o.k};
      EdgeDivisionVector r;
      if (!o.edv_text.empty()) {
        if (o.n < 2)
          throw InvalidArgument("--edv needs --n >= 2");
        r = parse_edv(o.edv_text, o.n);
      } else if (!o.tree_file.empty()) {
        r = edv(load_tree(o.tree_file));
      } else {
        throw InvalidArgument("indices needs --tree or --edv");
      }
      print_indices(out, all_indices(r, params), format);
    } else if (*exchange_cmd) {
      const Tree t = load_tree(o.tree_file);
      if (!t.contains(o.u) || !t.contains(o.v) || o.u == o.v)
        throw InvalidArgument("--u and --v must be distinct vertices of the tree");
      const auto pairs = find_balanced_pairs(t, o.u, o.v);
      if (o.apply >= 0) {
        if (o.apply >= static_cast<int>(pairs.size()))
          throw OutOfRange("--apply index beyond the " + std::to_string(pairs.size()) +
                           " balanced pairs");
        out << to_text(branch_exchange(t, pairs[o.apply]));
      } else {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          const auto cert = exchange_certificate(t, pairs[i]);
          json j;
          j["index"] = i;
          j["s_u"] = pairs[i].s_u;
          j["s_v"] = pairs[i].s_v;
          j["branches_strongly_isomorphic"] = cert.branches_strongly_isomorphic;
          j["roots_similar_in_remainder"] = cert.roots_similar_in_remainder;
          j["certified_non_isomorphic"] = cert.certifies_non_isomorphic();
          out << j.dump() << '\n';
        }
      }
    } else if (*closure_cmd) {
      const Tree t = load_tree(o.tree_file);
      const auto members = exchange_closure_members(t);
      json j;
      j["size"] = members.size();
      j["vector"] = edv(t).to_string();
      json codes = json::array();
      for (const auto& [code, tree] : members)
        codes.push_back(code.hex());
      j["members"] = codes;
      out << j.dump() << '\n';
    } else if (*classify_cmd) {
      const OutputFormat format = parse_format(o.format);
      if (o.closure_report) {
        out << render_closure_report(problem1_report(o.n));
      } else {
        const auto classes = classify(o.n, o.jobs);
        if (o.census_only)
          out << render_census({census(o.n, classes)}, format);
        else
          out << render_classification(o.n, classes, format);
      }
    } else if (*family_cmd) {
      print_family(out, build_family(o.family, o.family_args));
    } else if (*verify_cmd) {
      const auto results = run_suite(o.suite, {o.max_n, o.seed});
      out << render_results(results);
      for (const auto& r : results)
        if (!r.passed)
          return 1;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace edvlab::cli
