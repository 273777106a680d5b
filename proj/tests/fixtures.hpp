#pragma once

#include "edvlab/tree.hpp"

namespace fixture {

using edvlab::Edge;
using edvlab::Tree;

// Starlike tree with legs 1,1,1,3: vector (4,1,1).
inline Tree spider_1113() {
  return Tree(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}});
}

// Adjacent hubs 0 and 1: 0 carries a leaf and a two-vertex leg, 1 carries two
// leaves. The other tree with vector (4,1,1).
inline Tree broom_7() {
  return Tree(7, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 3}, {4, 5}});
}

// Labels for the 14-vertex exchange example.
namespace ex {
inline constexpr int u = 0, c = 1, v = 2, a = 3, f = 4, g = 5, e = 6, d = 7;
inline constexpr int x = 8, x1 = 9, x2 = 10, y = 11, y1 = 12, y2 = 13;
} // namespace ex

// Two anchors u, v at distance two. A path on three vertices hangs at u by its
// center and at v by an end.
inline Tree exchange_example() {
  using namespace ex;
  return Tree(14, {{a, f}, {a, g}, {a, u}, {u, c}, {c, e}, {c, v}, {v, d},
                   {u, x}, {x, x1}, {x, x2},
                   {v, y}, {y, y1}, {y1, y2}});
}

} // namespace fixture
