#include "edvlab/edv.hpp"
#include "edvlab/enumerate.hpp"
#include "edvlab/error.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace edvlab;

namespace {

EdgeDivisionVector vec(int n, std::vector<int> r) { return EdgeDivisionVector(n, std::move(r)); }

} // namespace

TEST_SUITE("edv") {

TEST_CASE("known vectors") {
  CHECK(edv(make_star(5)) == vec(5, {4, 0}));
  CHECK(edv(make_path(7)) == vec(7, {2, 2, 2}));
  CHECK(edv(make_path(2)) == vec(2, {1}));
  CHECK(edv(fixture::spider_1113()) == vec(7, {4, 1, 1}));
  CHECK(edv(fixture::broom_7()) == vec(7, {4, 1, 1}));
  CHECK(edv(fixture::exchange_example()) == vec(14, {7, 1, 3, 0, 1, 0, 1}));
  CHECK_THROWS_AS(edv(Tree()), InvalidTree);
}

TEST_CASE("vector validation and text") {
  CHECK_THROWS_AS(vec(7, {4, 1}), InvalidArgument);
  CHECK_THROWS_AS(vec(7, {4, -1, 1}), InvalidArgument);
  CHECK_THROWS_AS(vec(1, {}), InvalidArgument);
  const auto r = vec(8, {5, 1, 1, 0});
  CHECK(r.to_string() == "(5,1,1,0)");
  CHECK(parse_edv("(5,1,1,0)", 8) == r);
  CHECK(parse_edv(" ( 5, 1,1 ,0 ) ", 8) == r);
  CHECK_THROWS_AS(parse_edv("(5,1,1)", 8), InvalidArgument);
  CHECK_THROWS_AS(parse_edv("5,1,1,0", 8), InvalidArgument);
  CHECK(r[1] == 5);
  CHECK(r[4] == 0);
  CHECK(r[9] == 0);
  CHECK(r.edge_total() == 7);
}

TEST_CASE("suffix sums") {
  CHECK(suffix_sums(vec(7, {4, 1, 1})) == std::vector<int>{6, 2, 1});
  CHECK(suffix_sums(vec(7, {6, 0, 0})) == std::vector<int>{6, 0, 0});
  CHECK(suffix_sums(vec(7, {2, 2, 2})) == std::vector<int>{6, 4, 2});
}

TEST_CASE("comparison") {
  CHECK(compare(vec(7, {4, 1, 1}), vec(7, {4, 1, 1})) == OrderRelation::Equivalent);
  CHECK(compare(edv(make_star(7)), edv(make_path(7))) == OrderRelation::Less);
  CHECK(compare(edv(make_path(7)), edv(make_star(7))) == OrderRelation::Greater);
  CHECK(compare(vec(9, {5, 2, 1, 0}), vec(9, {6, 0, 1, 1})) == OrderRelation::Incomparable);
  CHECK_THROWS_AS(compare(vec(7, {6, 0, 0}), vec(8, {7, 0, 0, 0})), InvalidComparison);
  CHECK(to_string(OrderRelation::Incomparable) == "incomparable");
  CHECK(reverse(OrderRelation::Less) == OrderRelation::Greater);
}

TEST_CASE("vectors match per-edge flood fill on random trees") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    const Tree t = oracle::random_tree(2 + rep % 19, rng);
    CHECK(edv(t).counts() == oracle::edge_division(t));
  }
}

TEST_CASE("structural properties over all trees up to 12") {
  for (int n = 2; n <= 12; ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      CHECK(r.size() == n / 2);
      CHECK(r.edge_total() == n - 1);
      CHECK(r[1] >= (n >= 3 ? 2 : 1));
    }
}

TEST_CASE("relabeling leaves the vector unchanged") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 9; ++n)
    for (const Tree& t : all_trees(n)) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int rep = 0; rep < 20; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(edv(relabel(t, perm)) == edv(t));
      }
    }
}

TEST_CASE("comparison agrees with direct suffix-sum dominance") {
  for (int n = 2; n <= 10; ++n) {
    std::set<EdgeDivisionVector> seen;
    for (const Tree& t : all_trees(n))
      seen.insert(edv(t));
    const std::vector<EdgeDivisionVector> vs(seen.begin(), seen.end());
    for (const auto& a : vs)
      for (const auto& b : vs) {
        const int want = oracle::dominance(a.counts(), b.counts());
        const auto got = compare(a, b);
        const int got_code = got == OrderRelation::Less      ? -1
                             : got == OrderRelation::Equivalent ? 0
                             : got == OrderRelation::Greater    ? 1
                                                                : 2;
        CHECK(got_code == want);
        CHECK(compare(b, a) == reverse(got));
      }
  }
}

} // TEST_SUITE
