#pragma once

#include "edvlab/canon.hpp"
#include "edvlab/edv.hpp"
#include "edvlab/tree.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace edvlab {

/// Detach the branch hanging at x from u and hang it at v: T - ux + vx.
struct BranchMove {
  Vertex u = 0;
  Vertex v = 0;
  Vertex x = 0;
};

/// Neighbor subsets of u and v (off the u-v path) whose branches have equal
/// total size. Both sets are sorted and nonempty.
struct BalancedPair {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> s_u;
  std::vector<Vertex> s_v;

  auto operator<=>(const BalancedPair&) const = default;
};

struct ExchangeCertificate {
  BalancedPair pair;
  /// The exchanged branch forests are strongly isomorphic.
  bool branches_strongly_isomorphic = false;
  /// u and v are similar in the tree left after removing both forests.
  bool roots_similar_in_remainder = false;

  /// Both hypotheses fail, so the exchange gives a non-isomorphic tree.
  bool certifies_non_isomorphic() const {
    return !branches_strongly_isomorphic && !roots_similar_in_remainder;
  }
};

Tree branch_move(const Tree& t, const BranchMove& m);

/// Relation of T to T' = branch_move(T, m) as predicted from n_u(uv),
/// n_v(uv) and |T_x(ux)| alone.
OrderRelation predict_branch_move(const Tree& t, const BranchMove& m);

/// All legal moves of t (every ordered edge uv, every other neighbor x of u).
std::vector<BranchMove> all_branch_moves(const Tree& t);

/// Neighbors of u that may take part in an exchange with v: N(u) minus the
/// neighbor on the u-v path.
std::vector<Vertex> eligible_neighbors(const Tree& t, Vertex u, Vertex v);

std::vector<BalancedPair> find_balanced_pairs(const Tree& t, Vertex u, Vertex v);

/// Throws InvalidPair unless p is a balanced pair of t.
void validate_pair(const Tree& t, const BalancedPair& p);

Tree branch_exchange(const Tree& t, const BalancedPair& p);

/// The tree left after deleting both exchanged forests, relabeled 0..k-1,
/// together with the new labels of u and v.
struct Remainder {
  RootedTree tree;
  Vertex u = 0;
  Vertex v = 0;
};
Remainder exchange_remainder(const Tree& t, const BalancedPair& p);

ExchangeCertificate exchange_certificate(const Tree& t, const BalancedPair& p);

inline constexpr std::size_t kClosureCap = 10000;

/// Breadth-first closure of t under branch exchange, keyed by canonical code.
/// Each entry holds one representative tree. Throws ClosureOverflow once more
/// than `cap` distinct trees are reached.
std::map<CanonicalCode, Tree> exchange_closure_members(const Tree& t,
                                                       std::size_t cap = kClosureCap);
std::set<CanonicalCode> exchange_closure(const Tree& t, std::size_t cap = kClosureCap);

/// (T* + ux + branch, T* + vx + branch) for an edge uv of T* with equal
/// sides and u, v not similar. Throws PreconditionFailed naming the failed
/// condition otherwise.
std::pair<Tree, Tree> construct_equivalent_pair(const Tree& tstar, Vertex u,
                                                Vertex v, const RootedTree& branch);

} // namespace edvlab
