#include "cli.hpp"

#include "edvlab/tree.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"edvlab"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned)
    argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = edvlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_tree(const std::string& name, const edvlab::Tree& t) {
  const auto path = std::filesystem::temp_directory_path() / ("edvlab_cli_" + name + ".txt");
  std::ofstream(path) << edvlab::to_text(t);
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("edv and compare") {
  const auto spider = write_tree("spider", fixture::spider_1113());
  const auto broom = write_tree("broom", fixture::broom_7());
  const auto path = write_tree("path", edvlab::make_path(7));
  auto r = run({"edv", spider});
  CHECK(r.code == 0);
  CHECK(r.out == "(4,1,1)\n");
  r = run({"compare", spider, broom});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "equivalent"));
  r = run({"compare", spider, path});
  CHECK(contains(r.out, "less"));
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "5"});
  CHECK(r.code == 0);
  CHECK(edvlab::parse_tree_stream(r.out).size() == 3);
  CHECK(run({"enumerate", "0"}).code == 2);
  CHECK(run({"enumerate", "21"}).code == 2);
}

TEST_CASE("indices from a vector") {
  const auto r = run({"indices", "--edv", "(4,1,1)", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "W\t46\n"));
  CHECK(contains(r.out, "h\t56\n"));
  CHECK(contains(r.out, "Gut\t106\n"));
  CHECK(run({"indices", "--edv", "(4,1)", "--n", "7"}).code == 2);
}

TEST_CASE("families") {
  auto r = run({"family", "starlike", "1,1,1,3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "edv (4,1,1)\n"));
  CHECK(contains(r.out, "prediction not-dedv (starlike-weak-balanced)"));
  r = run({"family", "double-star", "3", "4"});
  CHECK(contains(r.out, "prediction dedv (double-star)"));
  CHECK(run({"family", "starlike", "1,0"}).code == 2);
  CHECK(run({"family", "nonsense"}).code == 2);
}

TEST_CASE("exchange on the worked example") {
  const auto file = write_tree("exchange", fixture::exchange_example());
  using namespace fixture::ex;
  const auto r = run({"exchange", "--tree", file, "--u", std::to_string(u), "--v", std::to_string(v)});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"certified_non_isomorphic\":true"));
}

TEST_CASE("classify") {
  auto r = run({"classify", "7", "--census", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "7,11,9,2,1,0.8182,0.1818"));
  r = run({"classify", "8", "--format", "json"});
  CHECK(contains(r.out, "\"equivalent_fraction_4dp\": \"0.2609\""));
  CHECK(run({"classify", "1"}).code == 2);
  CHECK(run({"classify", "7", "--format", "xml"}).code == 2);
}

TEST_CASE("verify and usage errors") {
  const auto r = run({"verify", "--suite", "counts", "--max-n", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"status\":\"pass\""));
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"compare"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"edv", "/nonexistent/tree.txt"}).code == 2);
}

} // TEST_SUITE
