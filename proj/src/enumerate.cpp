#include "edvlab/enumerate.hpp"

#include "edvlab/error.hpp"

#include <algorithm>

namespace edvlab {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw OutOfRange("tree order must be in 1.." +
                     std::to_string(kMaxEnumerationOrder) + ", got " +
                     std::to_string(n));
}

Tree from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<Vertex> last(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(last[level[i] - 1], i);
    last[level[i]] = i;
  }
  return Tree(n, edges);
}

// Rooted trees come from canonical level sequences (root at level 0, child
// subtrees in non-increasing lexicographic order) stepped through with the
// Beyer-Hedetniemi successor. A free tree is kept only in the rooting at its
// centroid; a bicentroidal tree has two such rootings and we keep the one
// whose root-side half has the larger level sequence.
bool centroid_rooted(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  int start = -1;
  for (int i = 1; i <= n; ++i) {
    if (i < n && level[i] != 1)
      continue;
    if (start >= 0) {
      const int size = i - start;
      if (2 * size > n)
        return false;
      if (2 * size == n) {
        // Half A: root plus the other children; half B: this child subtree.
        std::vector<int> a;
        a.reserve(n / 2);
        for (int j = 0; j < n; ++j)
          if (j < start || j >= i)
            a.push_back(level[j]);
        for (int j = start; j < i; ++j)
          if (level[j] - 1 != a[j - start])
            return level[j] - 1 < a[j - start];
        return true;
      }
    }
    start = i;
  }
  return true;
}

} // namespace

void for_each_tree(int n, const std::function<void(const Tree&)>& visit) {
  check_order(n);
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i)
    level[i] = i;
  while (true) {
    if (centroid_rooted(level))
      visit(from_levels(level));
    int p = n - 1;
    while (p > 0 && level[p] <= 1)
      --p;
    if (p == 0)
      break;
    int q = p - 1;
    while (level[q] != level[p] - 1)
      --q;
    const int shift = p - q;
    for (int i = p; i < n; ++i)
      level[i] = level[i - shift];
  }
}

std::vector<Tree> all_trees(int n) {
  std::vector<Tree> out;
  for_each_tree(n, [&](const Tree& t) { out.push_back(t); });
  return out;
}

std::int64_t count_trees(int n) {
  std::int64_t count = 0;
  for_each_tree(n, [&](const Tree&) { ++count; });
  return count;
}

} // namespace edvlab
