#include "edvlab/verify.hpp"

#include "edvlab/canon.hpp"
#include "edvlab/classify.hpp"
#include "edvlab/edv.hpp"
#include "edvlab/enumerate.hpp"
#include "edvlab/error.hpp"
#include "edvlab/families.hpp"
#include "edvlab/indices.hpp"
#include "edvlab/transforms.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace edvlab {

namespace {

class Check {
public:
  Check(std::string suite, std::string invariant) {
    r_.suite = std::move(suite);
    r_.invariant = std::move(invariant);
  }

  void expect(bool ok, const Tree& t, const std::string& detail) {
    ++r_.cases;
    if (ok || !r_.passed)
      return;
    r_.passed = false;
    r_.counterexample = to_text(t);
    r_.detail = detail;
  }

  void expect(bool ok, const std::string& detail) {
    ++r_.cases;
    if (ok || !r_.passed)
      return;
    r_.passed = false;
    r_.detail = detail;
  }

  CheckResult done() && { return std::move(r_); }

private:
  CheckResult r_;
};

using Results = std::vector<CheckResult>;

// Unlabeled tree counts for n = 1..20.
constexpr std::int64_t kTreeCounts[] = {1,     1,     1,      2,      3,      6,     11,
                                        23,    47,    106,    235,    551,    1301,  3159,
                                        7741,  19320, 48629,  123867, 317955, 823065};

void counts_suite(const VerifyOptions& o, Results& out) {
  Check counts("counts", "tree_counts");
  for (int n = 1; n <= std::min(o.max_n, 16); ++n)
    counts.expect(count_trees(n) == kTreeCounts[n - 1],
                  "n=" + std::to_string(n) + " count " + std::to_string(count_trees(n)));
  out.push_back(std::move(counts).done());

  Check distinct("counts", "distinct_codes");
  for (int n = 1; n <= std::min(o.max_n, 12); ++n) {
    std::set<CanonicalCode> seen;
    for (const Tree& t : all_trees(n))
      distinct.expect(seen.insert(canonical_code(t)).second, t, "duplicate tree");
  }
  out.push_back(std::move(distinct).done());
}

void edv_suite(const VerifyOptions& o, Results& out) {
  Check total("edv", "entries_sum_to_edge_count");
  for (int n = 2; n <= std::min(o.max_n, 12); ++n)
    for (const Tree& t : all_trees(n))
      total.expect(edv(t).edge_total() == n - 1, t, "sum differs from n-1");
  out.push_back(std::move(total).done());

  Check relabeled("edv", "relabel_invariance");
  std::mt19937_64 rng(o.seed);
  for (int n = 2; n <= std::min(o.max_n, 9); ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int rep = 0; rep < 20; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        relabeled.expect(edv(relabel(t, perm)) == r, t, "vector changed under relabeling");
      }
    }
  out.push_back(std::move(relabeled).done());

  Check order("edv", "order_laws");
  for (int n = 2; n <= std::min(o.max_n, 10); ++n) {
    std::set<EdgeDivisionVector> vs;
    for (const Tree& t : all_trees(n))
      vs.insert(edv(t));
    const std::vector<EdgeDivisionVector> v(vs.begin(), vs.end());
    for (const auto& a : v) {
      order.expect(compare(a, a) == OrderRelation::Equivalent, a.to_string() + " not reflexive");
      for (const auto& b : v) {
        const auto ab = compare(a, b);
        order.expect(compare(b, a) == reverse(ab),
                     a.to_string() + " vs " + b.to_string() + " not antisymmetric");
        if (ab != OrderRelation::Less)
          continue;
        for (const auto& c : v)
          if (compare(b, c) == OrderRelation::Less)
            order.expect(compare(a, c) == OrderRelation::Less,
                         a.to_string() + " < " + b.to_string() + " < " + c.to_string() +
                             " not transitive");
      }
    }
  }
  out.push_back(std::move(order).done());
}

void order_suite(const VerifyOptions& o, Results& out) {
  Check c("order", "branch_move_prediction");
  for (int n = 3; n <= std::min(o.max_n, 8); ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      for (const auto& m : all_branch_moves(t)) {
        const auto got = compare(r, edv(branch_move(t, m)));
        const auto want = predict_branch_move(t, m);
        c.expect(got == want, t,
                 "move (" + std::to_string(m.u) + "," + std::to_string(m.v) + "," +
                     std::to_string(m.x) + ") predicted " + std::string(to_string(want)) +
                     ", observed " + std::string(to_string(got)));
      }
    }
  out.push_back(std::move(c).done());
}

void for_each_pair(const Tree& t, const std::function<void(const BalancedPair&)>& f) {
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v)
      for (const auto& p : find_balanced_pairs(t, u, v))
        f(p);
}

std::string pair_text(const BalancedPair& p) {
  std::ostringstream s;
  s << "u=" << p.u << " v=" << p.v << " S_u={";
  for (Vertex x : p.s_u)
    s << ' ' << x;
  s << " } S_v={";
  for (Vertex y : p.s_v)
    s << ' ' << y;
  s << " }";
  return s.str();
}

void exchange_suite(const VerifyOptions& o, Results& out) {
  Check keep("exchange", "exchange_preserves_vector");
  Check cert("exchange", "certificate_implies_non_isomorphic");
  for (int n = 2; n <= std::min(o.max_n, 9); ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      for_each_pair(t, [&](const BalancedPair& p) {
        const Tree next = branch_exchange(t, p);
        keep.expect(edv(next) == r, t, pair_text(p));
        if (exchange_certificate(t, p).certifies_non_isomorphic())
          cert.expect(!is_isomorphic(t, next), t, pair_text(p));
      });
    }
  out.push_back(std::move(keep).done());
  out.push_back(std::move(cert).done());

  Check within("exchange", "closure_within_class");
  for (int n = 2; n <= std::min(o.max_n, 10); ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      for (const auto& [code, member] : exchange_closure_members(t))
        within.expect(edv(member) == r, t, "closure leaves the class");
    }
  out.push_back(std::move(within).done());
}

// Sorted leg multisets with the given total.
void leg_multisets(int total, int min_leg, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& f) {
  if (total == 0) {
    f(cur);
    return;
  }
  for (int l = min_leg; l <= total; ++l) {
    cur.push_back(l);
    leg_multisets(total - l, l, cur, f);
    cur.pop_back();
  }
}

void families_suite(const VerifyOptions& o, Results& out) {
  const int closed_cap = 14;
  Check closed("families", "closed_form_vectors");
  for (int n = 4; n <= closed_cap; ++n) {
    std::vector<int> cur;
    leg_multisets(n - 1, 1, cur, [&](const std::vector<int>& legs) {
      const StarlikeSpec s{legs};
      closed.expect(starlike_edv(s) == edv(make_starlike(s)), make_starlike(s), "starlike");
    });
    for (int p = 2; p <= n - 2; ++p)
      closed.expect(double_star_edv(p, n - p) == edv(make_double_star(p, n - p)),
                    make_double_star(p, n - p), "double star");
    for (int p = 2; p * 2 + 1 <= n; ++p)
      if ((n - 1) % p == 0)
        closed.expect(power_star_edv(p, (n - 1) / p) == edv(make_power_star(p, (n - 1) / p)),
                      make_power_star(p, (n - 1) / p), "power star");
  }
  for (int m = 2; m <= closed_cap / 2; ++m)
    for (const Tree& t : all_trees(m)) {
      const auto r = edv(t);
      for (int s = 1; m * s <= closed_cap; ++s)
        closed.expect(rooted_product_edv(r, s) == edv(rooted_product_path(t, s)), t,
                      "rooted product s=" + std::to_string(s));
      for (int s = 1; m * (s + 1) <= closed_cap; ++s)
        closed.expect(corona_edv(r, s) == edv(corona_k1(t, s)), t,
                      "corona s=" + std::to_string(s));
    }
  out.push_back(std::move(closed).done());

  Check agree("families", "prediction_matches_classification");
  for (int n = 2; n <= std::min(o.max_n, 10); ++n)
    for (const Tree& t : all_trees(n)) {
      const auto p = predict_dedv(t);
      if (p.verdict)
        agree.expect(*p.verdict == is_dedv(t), t, "rule " + p.rule);
    }
  out.push_back(std::move(agree).done());

  Check weak("families", "weak_balanced_starlike");
  for (int n = 5; n <= std::min(o.max_n, 12); ++n) {
    std::vector<int> cur;
    leg_multisets(n - 1, 1, cur, [&](const std::vector<int>& legs) {
      if (legs.size() < 4)
        return;
      const StarlikeSpec s{legs};
      const Tree t = make_starlike(s);
      weak.expect(is_weak_balanced(s) == is_dedv(t), t, "starlike legs");
    });
  }
  out.push_back(std::move(weak).done());

  Check spider("families", "two_spider_criterion");
  for (int n = 6; n <= std::min(o.max_n, 11); ++n)
    for (int k = 1; k <= n - 5; ++k)
      for (int s1 = 1; s1 <= n; ++s1)
        for (int s2 = s1; s1 + s2 + k + 3 <= n; ++s2)
          for (int t1 = 1; s1 + s2 + k + 1 + 2 * t1 <= n; ++t1) {
            const int t2 = n - 1 - k - s1 - s2 - t1;
            if (t2 < t1 || s1 + s2 > t1 + t2)
              continue;
            const TwoSpiderSpec spec{s1, s2, k, t1, t2};
            const Tree t = make_two_spider(spec);
            spider.expect(check_two_spider_dedv(spec) == is_dedv(t), t,
                          "s=(" + std::to_string(s1) + "," + std::to_string(s2) + ") k=" +
                              std::to_string(k) + " t=(" + std::to_string(t1) + "," +
                              std::to_string(t2) + ")");
          }
  out.push_back(std::move(spider).done());

  Check dt("families", "double_starlike_dedv");
  for (int s = 1; s <= 5; ++s)
    for (int k1 = 2; k1 <= 6; ++k1)
      for (int k2 = k1; k2 <= k1 + 1; ++k2)
        for (int k = 1; k <= 10; ++k) {
          const DoubleStarlikeSpec spec{s, k1, k2, k};
          if (spec.order() > std::min(o.max_n, 12))
            continue;
          const Tree t = make_double_starlike(spec);
          dt.expect(is_dedv(t), t, "double starlike");
        }
  out.push_back(std::move(dt).done());

  Check prod("families", "products_preserve_dedv");
  const int prod_cap = std::min(o.max_n, 12);
  for (int m = 2; m <= 4; ++m)
    for (const Tree& t : all_trees(m)) {
      if (!is_dedv(t))
        continue;
      for (int s = 2; m * s <= prod_cap; ++s)
        prod.expect(is_dedv(rooted_product_path(t, s)), t, "rooted product s=" + std::to_string(s));
      for (int s = 1; m * (s + 1) <= prod_cap; ++s)
        prod.expect(is_dedv(corona_k1(t, s)), t, "corona s=" + std::to_string(s));
    }
  out.push_back(std::move(prod).done());
}

struct IndexRow {
  int n;
  std::vector<int> r;
  long w, h, gut;
};

const IndexRow kIndexTable[] = {
    {7, {4, 1, 1}, 46, 56, 106},       {8, {4, 1, 1, 1}, 71, 93, 179},
    {8, {4, 2, 1, 0}, 67, 85, 163},    {8, {5, 1, 1, 0}, 62, 75, 143},
    {9, {4, 1, 1, 2}, 104, 144, 280},  {9, {4, 1, 2, 1}, 102, 140, 272},
    {9, {4, 2, 1, 1}, 98, 132, 256},   {9, {4, 2, 2, 0}, 96, 128, 248},
    {9, {5, 1, 1, 1}, 92, 120, 232},   {9, {5, 1, 2, 0}, 90, 116, 224},
    {9, {5, 2, 0, 1}, 88, 112, 216},   {9, {5, 2, 1, 0}, 86, 108, 208},
    {9, {6, 0, 1, 1}, 86, 108, 208},   {9, {6, 1, 0, 1}, 82, 100, 192},
    {9, {6, 1, 1, 0}, 80, 96, 184},
};

void indices_suite(const VerifyOptions& o, Results& out) {
  Check table("indices", "reference_values");
  for (const auto& row : kIndexTable) {
    const EdgeDivisionVector r(row.n, row.r);
    const auto all = all_indices(r);
    const std::string label = r.to_string();
    table.expect(all[IndexKind::Wiener].to_string() == std::to_string(row.w), label + " W");
    table.expect(all[IndexKind::WienerHosoya].to_string() == std::to_string(row.h), label + " h");
    table.expect(all[IndexKind::Gutman].to_string() == std::to_string(row.gut), label + " Gut");
  }
  out.push_back(std::move(table).done());

  Check wiener("indices", "wiener_matches_distances");
  for (int n = 2; n <= std::min(o.max_n, 12); ++n)
    for (const Tree& t : all_trees(n))
      wiener.expect(*index_from_edv(edv(t), IndexSpec::wiener()).exact ==
                        wiener_distance_oracle(t),
                    t, "Wiener");
  out.push_back(std::move(wiener).done());

  Check weighted("indices", "degree_weighted_distances");
  Check steiner("indices", "steiner_forms_agree");
  Check lambda("indices", "unit_exponent_forms");
  for (int n = 2; n <= std::min(o.max_n, 10); ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      weighted.expect(*index_from_edv(r, IndexSpec::degree_distance()).exact ==
                          degree_distance_oracle(t),
                      t, "degree distance");
      weighted.expect(*index_from_edv(r, IndexSpec::gutman()).exact == gutman_oracle(t), t,
                      "Gutman");
      for (int k = 2; k <= n; ++k) {
        const auto f = steiner_wiener(r, k);
        steiner.expect(f.contribution_form == f.split_form, t, "k=" + std::to_string(k));
      }
      const auto one = Exponent::integer(1);
      lambda.expect(index_from_edv(r, IndexSpec::modified_wiener(one)) ==
                        index_from_edv(r, IndexSpec::wiener()),
                    t, "modified Wiener with exponent 1");
      lambda.expect(*index_from_edv(r, IndexSpec::variable_wiener(one)).exact == 0, t,
                    "variable Wiener with exponent 1");
    }
  out.push_back(std::move(weighted).done());
  out.push_back(std::move(steiner).done());
  out.push_back(std::move(lambda).done());

  Check constant("indices", "indices_constant_on_classes");
  for (int n = 2; n <= std::min(o.max_n, 10); ++n) {
    const IndexParams params{Exponent::parse("3/2"), std::min(3, n)};
    for (const auto& cls : classify(n)) {
      const Tree first = tree_from_code(cls.members.front());
      const auto want = all_indices(first, params);
      for (const auto& code : cls.members) {
        const Tree t = tree_from_code(code);
        constant.expect(all_indices(t, params) == want, t, "class " + cls.vector.to_string());
      }
    }
  }
  out.push_back(std::move(constant).done());
}

void closure_suite(const VerifyOptions& o, Results& out) {
  Check c("closure", "closure_equals_class");
  for (int n = 7; n <= std::min(o.max_n, 9); ++n)
    for (const auto& row : problem1_report(n).rows)
      c.expect(row.closure_equals_class, tree_from_code(row.code),
               "closure " + std::to_string(row.closure_size) + " vs class " +
                   std::to_string(row.class_size));
  out.push_back(std::move(c).done());
}

using SuiteFn = void (*)(const VerifyOptions&, Results&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"counts", counts_suite},     {"edv", edv_suite},
      {"order", order_suite},       {"exchange", exchange_suite},
      {"families", families_suite}, {"indices", indices_suite},
      {"closure", closure_suite},
  };
  return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
      out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxEnumerationOrder)
    throw OutOfRange("max-n must lie in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
  Results out;
  bool matched = false;
  for (const auto& [name, fn] : registry())
    if (suite == "all" || suite == name) {
      fn(options, out);
      matched = true;
    }
  if (!matched)
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  return out;
}

std::string render_results(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["invariant"] = r.invariant;
    j["status"] = r.passed ? "pass" : "fail";
    j["cases"] = r.cases;
    if (!r.passed) {
      j["detail"] = r.detail;
      if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    }
    out += j.dump() + "\n";
  }
  return out;
}

} // namespace edvlab
