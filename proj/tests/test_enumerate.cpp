#include "edvlab/canon.hpp"
#include "edvlab/enumerate.hpp"
#include "edvlab/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace edvlab;

TEST_SUITE("enumerate") {

TEST_CASE("counts of free trees") {
  const std::int64_t known[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= 14; ++n) {
    CHECK(count_trees(n) == known[n - 1]);
    CHECK(static_cast<std::int64_t>(all_trees(n).size()) == known[n - 1]);
  }
  CHECK(count_trees(20) == 823065);
  CHECK_THROWS_AS(all_trees(0), OutOfRange);
  CHECK_THROWS_AS(all_trees(kMaxEnumerationOrder + 1), OutOfRange);
}

TEST_CASE("emission order is stable") {
  const auto a = all_trees(9);
  const auto b = all_trees(9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == b[i]);
}

TEST_CASE("every emitted tree is valid and distinct") {
  for (int n = 1; n <= 12; ++n) {
    std::set<CanonicalCode> codes;
    for (const Tree& t : all_trees(n)) {
      CHECK(t.order() == n);
      CHECK(static_cast<int>(t.edges().size()) == n - 1);
      codes.insert(canonical_code(t));
    }
    CHECK(static_cast<std::int64_t>(codes.size()) == count_trees(n));
  }
}

TEST_CASE("matches Pruefer generation up to order 8") {
  for (int n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> want;
    oracle::for_each_labeled_tree(n, [&](const Tree& t) { want.insert(canonical_code(t)); });
    std::set<CanonicalCode> got;
    for (const Tree& t : all_trees(n))
      got.insert(canonical_code(t));
    CHECK(got == want);
  }
}

} // TEST_SUITE
