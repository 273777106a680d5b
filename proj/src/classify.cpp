#include "edvlab/classify.hpp"

#include "edvlab/enumerate.hpp"
#include "edvlab/error.hpp"
#include "edvlab/transforms.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace edvlab {

namespace {

struct Keyed {
  EdgeDivisionVector vector;
  CanonicalCode code;
};

std::vector<Keyed> key_all(int n, int jobs) {
  const auto trees = all_trees(n);
  std::vector<Keyed> out(trees.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < trees.size(); i += step)
      out[i] = {edv(trees[i]), canonical_code(trees[i])};
  };
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, trees.size());
  if (workers <= 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back(work, w, workers);
  for (auto& th : pool)
    th.join();
  return out;
}

} // namespace

std::vector<EdvClass> classify(int n, int jobs) {
  if (n < 2)
    throw OutOfRange("classification needs n >= 2");
  std::map<EdgeDivisionVector, std::vector<CanonicalCode>> buckets;
  for (auto& k : key_all(n, jobs))
    buckets[k.vector].push_back(std::move(k.code));
  std::vector<EdvClass> out;
  for (auto& [vec, codes] : buckets) {
    std::sort(codes.begin(), codes.end());
    out.push_back({vec, std::move(codes)});
  }
  return out;
}

Census census(int n, const std::vector<EdvClass>& classes) {
  Census c;
  c.n = n;
  for (const auto& cls : classes) {
    c.total_trees += cls.size();
    if (cls.size() == 1) {
      ++c.dedv_count;
    } else {
      c.equivalent_tree_count += cls.size();
      ++c.class_count_nontrivial;
    }
  }
  if (c.total_trees == 0)
    throw InternalError("empty classification");
  c.dedv_fraction = Rational(c.dedv_count, c.total_trees);
  c.equivalent_fraction = Rational(c.equivalent_tree_count, c.total_trees);
  return c;
}

Census census(int n, int jobs) { return census(n, classify(n, jobs)); }

std::string render_fraction(const Rational& q, int digits) {
  if (q < 0)
    throw InvalidArgument("fraction must be non-negative");
  if (q == 0 || q == 1)
    return q.str();
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i)
    scale *= 10;
  const BigInt num = numerator(q) * scale * 2 + denominator(q);
  const BigInt scaled = num / (denominator(q) * 2);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  return whole.str() + "." + frac;
}

bool is_dedv(const Tree& t) {
  static std::mutex lock;
  static std::map<int, std::map<CanonicalCode, int>> cache;
  const int n = t.order();
  if (n < 2)
    return true;
  std::lock_guard guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::map<CanonicalCode, int> sizes;
    for (const auto& cls : classify(n))
      for (const auto& code : cls.members)
        sizes[code] = cls.size();
    it = cache.emplace(n, std::move(sizes)).first;
  }
  return it->second.at(canonical_code(t)) == 1;
}

std::vector<ClosureRow> ClosureReport::mismatches() const {
  std::vector<ClosureRow> out;
  for (const auto& row : rows)
    if (!row.closure_equals_class)
      out.push_back(row);
  return out;
}

ClosureReport problem1_report(int n) {
  ClosureReport report;
  report.n = n;
  for (const auto& cls : classify(n)) {
    const std::set<CanonicalCode> members(cls.members.begin(), cls.members.end());
    for (const auto& code : cls.members) {
      const auto closure = exchange_closure(tree_from_code(code));
      report.rows.push_back({code, cls.vector, cls.size(),
                             static_cast<int>(closure.size()), closure == members});
    }
  }
  return report;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "table")
    return OutputFormat::Table;
  if (name == "json")
    return OutputFormat::Json;
  if (name == "csv")
    return OutputFormat::Csv;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

namespace {

std::string join_codes(const std::vector<CanonicalCode>& codes, char sep) {
  std::string out;
  for (const auto& c : codes) {
    if (!out.empty())
      out += sep;
    out += c.hex();
  }
  return out;
}

nlohmann::ordered_json census_json(const Census& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["trees"] = c.total_trees;
  j["dedv"] = c.dedv_count;
  j["equivalent"] = c.equivalent_tree_count;
  j["classes"] = c.class_count_nontrivial;
  j["dedv_fraction"] = c.dedv_fraction.str();
  j["equivalent_fraction"] = c.equivalent_fraction.str();
  j["dedv_fraction_4dp"] = render_fraction(c.dedv_fraction);
  j["equivalent_fraction_4dp"] = render_fraction(c.equivalent_fraction);
  return j;
}

std::string census_line(const Census& c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-3d %-7d %-6d %-11d %-10s %s\n", c.n, c.total_trees,
                c.dedv_count, c.equivalent_tree_count,
                render_fraction(c.dedv_fraction).c_str(),
                render_fraction(c.equivalent_fraction).c_str());
  return buf;
}

constexpr const char* kCensusHeader = "n   trees   dedv   equivalent  dedv_frac  equiv_frac\n";

} // namespace

std::string render_census(const std::vector<Census>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
  case OutputFormat::Table:
    out << kCensusHeader;
    for (const auto& c : rows)
      out << census_line(c);
    break;
  case OutputFormat::Csv:
    out << "n,trees,dedv,equivalent,classes,dedv_fraction,equivalent_fraction\n";
    for (const auto& c : rows)
      out << c.n << ',' << c.total_trees << ',' << c.dedv_count << ','
          << c.equivalent_tree_count << ',' << c.class_count_nontrivial << ','
          << render_fraction(c.dedv_fraction) << ','
          << render_fraction(c.equivalent_fraction) << '\n';
    break;
  case OutputFormat::Json:
    for (const auto& c : rows)
      out << census_json(c).dump() << '\n';
    break;
  }
  return out.str();
}

std::string render_classification(int n, const std::vector<EdvClass>& classes,
                                  OutputFormat format) {
  const Census c = census(n, classes);
  std::ostringstream out;
  switch (format) {
  case OutputFormat::Table:
    out << kCensusHeader << census_line(c) << '\n';
    out << "vector  size  members\n";
    for (const auto& cls : classes)
      out << cls.vector.to_string() << "  " << cls.size() << "  "
          << join_codes(cls.members, ' ') << '\n';
    break;
  case OutputFormat::Csv:
    out << "vector,size,members\n";
    for (const auto& cls : classes)
      out << '"' << cls.vector.to_string() << "\"," << cls.size() << ','
          << join_codes(cls.members, ' ') << '\n';
    break;
  case OutputFormat::Json: {
    nlohmann::ordered_json j;
    j["census"] = census_json(c);
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : classes) {
      nlohmann::ordered_json e;
      e["vector"] = cls.vector.counts();
      e["size"] = cls.size();
      std::vector<std::string> hex;
      for (const auto& m : cls.members)
        hex.push_back(m.hex());
      e["members"] = hex;
      j["classes"].push_back(e);
    }
    out << j.dump(2) << '\n';
    break;
  }
  }
  return out.str();
}

std::string render_closure_report(const ClosureReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["trees"] = report.rows.size();
  j["mismatches"] = report.mismatches().size();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["code"] = row.code.hex();
    r["vector"] = row.vector.to_string();
    r["class_size"] = row.class_size;
    r["closure_size"] = row.closure_size;
    r["closure_equals_class"] = row.closure_equals_class;
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

} // namespace edvlab
