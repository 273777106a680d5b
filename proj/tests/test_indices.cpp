#include "edvlab/enumerate.hpp"
#include "edvlab/error.hpp"
#include "edvlab/indices.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace edvlab;

namespace {

struct Row {
  int n;
  std::vector<int> r;
  long w, h, gut;
};

// Wiener, Wiener-Hosoya and Gutman values of the equivalent-tree classes on
// 7, 8 and 9 vertices.
const Row kRows[] = {
    {7, {4, 1, 1}, 46, 56, 106},      {8, {4, 1, 1, 1}, 71, 93, 179},
    {8, {4, 2, 1, 0}, 67, 85, 163},   {8, {5, 1, 1, 0}, 62, 75, 143},
    {9, {4, 1, 1, 2}, 104, 144, 280}, {9, {4, 1, 2, 1}, 102, 140, 272},
    {9, {4, 2, 1, 1}, 98, 132, 256},  {9, {4, 2, 2, 0}, 96, 128, 248},
    {9, {5, 1, 1, 1}, 92, 120, 232},  {9, {5, 1, 2, 0}, 90, 116, 224},
    {9, {5, 2, 0, 1}, 88, 112, 216},  {9, {5, 2, 1, 0}, 86, 108, 208},
    {9, {6, 0, 1, 1}, 86, 108, 208},  {9, {6, 1, 0, 1}, 82, 100, 192},
    {9, {6, 1, 1, 0}, 80, 96, 184},
};

Rational exact(const IndexValue& v) {
  REQUIRE(v.exact);
  return *v.exact;
}

} // namespace

TEST_SUITE("indices") {

TEST_CASE("reference table values") {
  for (const Row& row : kRows) {
    const auto all = all_indices(EdgeDivisionVector(row.n, row.r));
    CAPTURE(row.n);
    CHECK(all[IndexKind::Wiener].to_string() == std::to_string(row.w));
    CHECK(all[IndexKind::WienerHosoya].to_string() == std::to_string(row.h));
    CHECK(all[IndexKind::Gutman].to_string() == std::to_string(row.gut));
  }
}

TEST_CASE("small hand-computed values") {
  const Tree p3 = make_path(3);
  CHECK(exact(index_from_edv(edv(p3), IndexSpec::wiener())) == 4);
  // Edge form as printed: two edges with 1 and 2 vertices on each side.
  CHECK(exact(index_from_edv(edv(p3), IndexSpec::hyper_wiener())) == 6);
  CHECK(exact(index_from_edv(edv(make_star(4)), IndexSpec::wiener())) == 9);
  CHECK(exact(index_from_edv(edv(make_path(4)), IndexSpec::modified_wiener(Exponent::integer(2)))) ==
        9 + 16 + 9);
  CHECK(exact(index_from_edv(edv(make_path(4)), IndexSpec::variable_wiener(Exponent::integer(2)))) ==
        2 * (16 - 1 - 9) + (16 - 4 - 4));
  CHECK(index_from_edv(edv(make_star(4)), IndexSpec::abc2()).real ==
        doctest::Approx(3 * std::sqrt(2.0 / 3.0)));
}

TEST_CASE("exponents") {
  CHECK(Exponent::parse("3/2").exact == Rational(3, 2));
  CHECK(Exponent::parse("-1").value == -1.0);
  CHECK(Exponent::parse("0.5").value == 0.5);
  CHECK(Exponent::integer(2).is_integer());
  CHECK_FALSE(Exponent::parse("3/2").is_integer());
  CHECK_THROWS_AS(Exponent::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Exponent::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(Exponent::parse(""), InvalidArgument);
  const auto half = index_from_edv(edv(make_path(5)), IndexSpec::modified_wiener(Exponent::parse("1/2")));
  CHECK_FALSE(half.exact);
  CHECK(half.real == doctest::Approx(2 * 2.0 + 2 * std::sqrt(6.0)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(IndexSpec::steiner_wiener(1).validate(5), OutOfRange);
  CHECK_THROWS_AS(IndexSpec::steiner_wiener(6).validate(5), OutOfRange);
  CHECK_NOTHROW(IndexSpec::steiner_wiener(5).validate(5));
  CHECK_THROWS_AS(IndexSpec::wiener().validate(1), InvalidArgument);
}

TEST_CASE("edge forms match distance oracles") {
  for (int n = 2; n <= 10; ++n)
    for (const Tree& t : all_trees(n)) {
      const auto r = edv(t);
      const auto d = [&] {
        std::int64_t w = 0;
        for (Vertex s = 0; s < n; ++s)
          for (int x : oracle::bfs_distances(t, s))
            w += x;
        return w / 2;
      }();
      CHECK(exact(index_from_edv(r, IndexSpec::wiener())) == d);
      CHECK(wiener_distance_oracle(t) == d);
      CHECK(exact(index_from_edv(r, IndexSpec::degree_distance())) == degree_distance_oracle(t));
      CHECK(exact(index_from_edv(r, IndexSpec::gutman())) == gutman_oracle(t));
    }
}

TEST_CASE("weighted distance oracles on a star") {
  // Star on 5 vertices: centre degree 4.
  const Tree s = make_star(5);
  CHECK(degree_distance_oracle(s) == 4 * 5 + 6 * 4);
  CHECK(gutman_oracle(s) == 4 * 4 + 6 * 2);
}

TEST_CASE("Steiner forms agree with subset enumeration") {
  for (int n = 2; n <= 8; ++n)
    for (const Tree& t : all_trees(n))
      for (int k = 2; k <= n; ++k) {
        const auto f = steiner_wiener(edv(t), k);
        CHECK(f.contribution_form == f.split_form);
        CHECK(f.contribution_form == oracle::steiner_bruteforce(t, k));
      }
  CHECK(steiner_wiener(edv(make_path(6)), 2).contribution_form == 35);
}

TEST_CASE("equivalent trees share every index") {
  IndexParams params;
  params.lambda = Exponent::parse("3/2");
  const auto check = verify_theorem_equal_indices(fixture::spider_1113(), fixture::broom_7(), params);
  CHECK(check.vectors_equal);
  CHECK(check.indices_equal);
  const auto other = verify_theorem_equal_indices(make_path(7), make_star(7));
  CHECK_FALSE(other.vectors_equal);
  CHECK(other.holds());
}

} // TEST_SUITE
