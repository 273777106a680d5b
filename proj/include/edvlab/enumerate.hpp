#pragma once

#include "edvlab/tree.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace edvlab {

inline constexpr int kMaxEnumerationOrder = 20;
/// Bumped whenever the emission order of all_trees changes.
inline constexpr int kGeneratorVersion = 1;

/// Calls `visit` once for every free tree of order n, up to isomorphism, in a
/// fixed order. Trees are labeled in preorder from a centroid.
void for_each_tree(int n, const std::function<void(const Tree&)>& visit);

/// All free trees of order n (1 <= n <= 20).
std::vector<Tree> all_trees(int n);

std::int64_t count_trees(int n);

} // namespace edvlab
