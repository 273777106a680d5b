#include "edvlab/transforms.hpp"

#include "edvlab/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

namespace edvlab {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

} // namespace

Tree branch_move(const Tree& t, const BranchMove& m) {
  if (!t.has_edge(m.u, m.v))
    throw InvalidMove("uv = (" + vtx(m.u) + "," + vtx(m.v) + ") is not an edge");
  if (!t.has_edge(m.u, m.x))
    throw InvalidMove("ux = (" + vtx(m.u) + "," + vtx(m.x) + ") is not an edge");
  if (m.x == m.v)
    throw InvalidMove("x must differ from v");
  auto edges = t.edges();
  for (Edge& e : edges)
    if (e == Edge(m.u, m.x))
      e = Edge(m.v, m.x);
  return Tree(t.order(), edges);
}

OrderRelation predict_branch_move(const Tree& t, const BranchMove& m) {
  if (!t.has_edge(m.u, m.v) || !t.has_edge(m.u, m.x) || m.x == m.v)
    throw InvalidMove("illegal branch move (" + vtx(m.u) + "," + vtx(m.v) +
                      "," + vtx(m.x) + ")");
  SplitTable s(t);
  const int n_u = s.branch_size(m.v, m.u);
  const int n_v = s.branch_size(m.u, m.v);
  const int moved = s.branch_size(m.u, m.x);
  if (n_u <= n_v)
    return OrderRelation::Greater;
  const int diff = n_u - n_v;
  if (diff > moved)
    return OrderRelation::Less;
  if (diff < moved)
    return OrderRelation::Greater;
  return OrderRelation::Equivalent;
}

std::vector<BranchMove> all_branch_moves(const Tree& t) {
  std::vector<BranchMove> out;
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v : t.neighbors(u))
      for (Vertex x : t.neighbors(u))
        if (x != v)
          out.push_back({u, v, x});
  return out;
}

std::vector<Vertex> eligible_neighbors(const Tree& t, Vertex u, Vertex v) {
  if (u == v)
    throw InvalidArgument("exchange anchors must be distinct");
  const auto path = path_between(t, u, v);
  const Vertex toward = path[1];
  std::vector<Vertex> out;
  for (Vertex x : t.neighbors(u))
    if (x != toward)
      out.push_back(x);
  return out;
}

namespace {

constexpr std::size_t kMaxEligible = 30;

std::vector<std::pair<std::uint32_t, int>>
subset_sums(const std::vector<Vertex>& eligible, const SplitTable& s, Vertex anchor) {
  if (eligible.size() > kMaxEligible)
    throw OutOfRange("too many eligible branches for subset enumeration");
  std::vector<int> sizes;
  for (Vertex x : eligible)
    sizes.push_back(s.branch_size(anchor, x));
  std::vector<std::pair<std::uint32_t, int>> out;
  const std::uint32_t limit = std::uint32_t{1} << eligible.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    int sum = 0;
    for (std::size_t i = 0; i < eligible.size(); ++i)
      if (mask >> i & 1)
        sum += sizes[i];
    out.emplace_back(mask, sum);
  }
  return out;
}

std::vector<Vertex> pick(const std::vector<Vertex>& from, std::uint32_t mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (mask >> i & 1)
      out.push_back(from[i]);
  return out;
}

} // namespace

std::vector<BalancedPair> find_balanced_pairs(const Tree& t, Vertex u, Vertex v) {
  if (!t.contains(u) || !t.contains(v))
    throw InvalidArgument("vertex out of range");
  const auto eu = eligible_neighbors(t, u, v);
  const auto ev = eligible_neighbors(t, v, u);
  if (eu.empty() || ev.empty())
    return {};
  SplitTable s(t);
  std::map<int, std::vector<std::uint32_t>> by_sum;
  for (auto [mask, sum] : subset_sums(ev, s, v))
    by_sum[sum].push_back(mask);
  std::vector<BalancedPair> out;
  for (auto [mask_u, sum] : subset_sums(eu, s, u)) {
    auto it = by_sum.find(sum);
    if (it == by_sum.end())
      continue;
    for (std::uint32_t mask_v : it->second)
      out.push_back({u, v, pick(eu, mask_u), pick(ev, mask_v)});
  }
  return out;
}

void validate_pair(const Tree& t, const BalancedPair& p) {
  if (!t.contains(p.u) || !t.contains(p.v) || p.u == p.v)
    throw InvalidPair("anchors must be two distinct vertices of the tree");
  if (p.s_u.empty() || p.s_v.empty())
    throw InvalidPair("both branch sets must be nonempty");
  SplitTable s(t);
  auto total = [&](Vertex anchor, Vertex other, const std::vector<Vertex>& set) {
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end())
      throw InvalidPair("branch sets must be sorted without repeats");
    const auto eligible = eligible_neighbors(t, anchor, other);
    int sum = 0;
    for (Vertex x : set) {
      if (std::find(eligible.begin(), eligible.end(), x) == eligible.end())
        throw InvalidPair("vertex " + vtx(x) + " is not an eligible neighbor of " +
                          vtx(anchor));
      sum += s.branch_size(anchor, x);
    }
    return sum;
  };
  if (total(p.u, p.v, p.s_u) != total(p.v, p.u, p.s_v))
    throw InvalidPair("branch sets are not balanced");
}

Tree branch_exchange(const Tree& t, const BalancedPair& p) {
  validate_pair(t, p);
  auto edges = t.edges();
  for (Edge& e : edges) {
    for (Vertex x : p.s_u)
      if (e == Edge(p.u, x))
        e = Edge(p.v, x);
    for (Vertex y : p.s_v)
      if (e == Edge(p.v, y))
        e = Edge(p.u, y);
  }
  return Tree(t.order(), edges);
}

Remainder exchange_remainder(const Tree& t, const BalancedPair& p) {
  validate_pair(t, p);
  std::vector<char> removed(t.order(), 0);
  auto drop = [&](Vertex anchor, const std::vector<Vertex>& set) {
    for (Vertex x : set) {
      const Edge cut[] = {Edge(anchor, x)};
      for (Vertex w : reachable(t, x, cut))
        removed[w] = 1;
    }
  };
  drop(p.u, p.s_u);
  drop(p.v, p.s_v);
  std::vector<Vertex> kept;
  for (Vertex w = 0; w < t.order(); ++w)
    if (!removed[w])
      kept.push_back(w);
  RootedTree rest = induced(t, kept, p.u);
  const auto local = [&](Vertex w) {
    return static_cast<Vertex>(std::find(kept.begin(), kept.end(), w) - kept.begin());
  };
  return Remainder{std::move(rest), local(p.u), local(p.v)};
}

ExchangeCertificate exchange_certificate(const Tree& t, const BalancedPair& p) {
  validate_pair(t, p);
  auto forest = [&](Vertex anchor, const std::vector<Vertex>& set) {
    std::vector<RootedTree> out;
    for (Vertex x : set)
      out.push_back(component_of(t, Edge(anchor, x), x));
    return out;
  };
  ExchangeCertificate cert;
  cert.pair = p;
  cert.branches_strongly_isomorphic =
      forests_strongly_isomorphic(forest(p.u, p.s_u), forest(p.v, p.s_v));
  const Remainder rest = exchange_remainder(t, p);
  cert.roots_similar_in_remainder = are_similar(rest.tree.tree, rest.u, rest.v);
  return cert;
}

std::map<CanonicalCode, Tree> exchange_closure_members(const Tree& t,
                                                       std::size_t cap) {
  std::map<CanonicalCode, Tree> seen;
  seen.emplace(canonical_code(t), t);
  std::deque<Tree> queue{t};
  while (!queue.empty()) {
    const Tree cur = std::move(queue.front());
    queue.pop_front();
    for (Vertex u = 0; u < cur.order(); ++u)
      for (Vertex v = u + 1; v < cur.order(); ++v)
        for (const auto& p : find_balanced_pairs(cur, u, v)) {
          Tree next = branch_exchange(cur, p);
          auto [it, inserted] = seen.emplace(canonical_code(next), next);
          if (!inserted)
            continue;
          if (seen.size() > cap)
            throw ClosureOverflow("exchange closure exceeded " +
                                  std::to_string(cap) + " trees");
          queue.push_back(std::move(next));
        }
  }
  return seen;
}

std::set<CanonicalCode> exchange_closure(const Tree& t, std::size_t cap) {
  std::set<CanonicalCode> out;
  for (auto& [code, tree] : exchange_closure_members(t, cap))
    out.insert(code);
  return out;
}

std::pair<Tree, Tree> construct_equivalent_pair(const Tree& tstar, Vertex u,
                                                Vertex v, const RootedTree& branch) {
  if (!tstar.has_edge(u, v))
    throw PreconditionFailed("(" + vtx(u) + "," + vtx(v) +
                             ") is not an edge of the base tree");
  SplitTable s(tstar);
  if (s.branch_size(v, u) != s.branch_size(u, v))
    throw PreconditionFailed("the two sides of (" + vtx(u) + "," + vtx(v) +
                             ") differ in size");
  if (are_similar(tstar, u, v))
    throw PreconditionFailed("vertices " + vtx(u) + " and " + vtx(v) +
                             " are similar in the base tree");
  return {attach(tstar, u, branch), attach(tstar, v, branch)};
}

} // namespace edvlab
