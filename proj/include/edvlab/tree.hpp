#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edvlab {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Component sizes of T - e, reported for the endpoints of a normalized edge.
struct SplitSizes {
  int n_u = 0;
  int n_v = 0;

  auto operator<=>(const SplitSizes&) const = default;
};

/// Labeled free tree on the vertices 0..n-1. Immutable once built; the
/// constructor rejects anything that is not a tree.
class Tree {
public:
  /// Single-vertex tree.
  Tree();
  Tree(int n, std::span<const Edge> edges);
  Tree(int n, std::initializer_list<Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return order() - 1; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool contains(Vertex v) const { return v >= 0 && v < order(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Sorted edge list.
  std::vector<Edge> edges() const;

  std::vector<Vertex> leaves() const;
  bool is_path() const;
  bool is_star() const;

  friend bool operator==(const Tree&, const Tree&) = default;

private:
  std::vector<std::vector<Vertex>> adj_;
};

/// A tree with a distinguished root. `labels[i]` is the label vertex i carried
/// in the tree it was cut from, so callers can map results back.
struct RootedTree {
  Tree tree;
  Vertex root = 0;
  std::vector<Vertex> labels;

  int order() const { return tree.order(); }
};

/// Rooted tree whose labels are the identity.
RootedTree make_rooted(Tree tree, Vertex root);

/// Subtree sizes for every edge of a tree, from a single traversal.
class SplitTable {
public:
  explicit SplitTable(const Tree& t);

  /// |T_x(ux)|: size of the component of T - ux that contains x.
  int branch_size(Vertex u, Vertex x) const;
  SplitSizes split(Edge e) const;
  int mu(Edge e) const;

  int order() const { return n_; }

private:
  int n_;
  std::vector<Vertex> parent_;
  std::vector<int> size_;
};

SplitSizes split_sizes(const Tree& t, Edge e);
int mu(const Tree& t, Edge e);
/// |T_x(ux)| for an edge ux.
int branch_size(const Tree& t, Vertex u, Vertex x);

/// The component of t - e containing `side`, rooted at `side`.
RootedTree component_of(const Tree& t, Edge e, Vertex side);

/// Lengths (in vertices) of the maximal pendent paths, one entry per leaf,
/// sorted. A path graph reports a single entry equal to its order.
std::vector<int> maximal_pendent_paths(const Tree& t);

/// Vertices of the unique u-v path, u first.
std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v);

/// Vertices reachable from `start` once the edges in `cut` are removed,
/// in breadth-first order.
std::vector<Vertex> reachable(const Tree& t, Vertex start,
                              std::span<const Edge> cut);

/// Induced subtree on `vertices` (which must induce a connected subgraph),
/// relabeled 0..k-1 in the given order and rooted at `root`.
RootedTree induced(const Tree& t, std::span<const Vertex> vertices, Vertex root);

/// t with vertex v renamed to perm[v].
Tree relabel(const Tree& t, std::span<const Vertex> perm);

/// Disjoint union of `base` and `branch` joined by an edge from `anchor` in
/// `base` to the branch root. Branch vertices are appended after base's.
Tree attach(const Tree& base, Vertex anchor, const RootedTree& branch);

Tree make_path(int n);
Tree make_star(int n);

// Text format: first line `n`, then n-1 lines `u v` with u < v.
std::string to_text(const Tree& t);
Tree parse_tree(std::string_view text);
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);

/// Several trees separated by `--` lines.
std::vector<Tree> parse_tree_stream(std::string_view text);
std::string to_text_stream(std::span<const Tree> trees);

} // namespace edvlab
