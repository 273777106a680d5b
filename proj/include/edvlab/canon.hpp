#pragma once

#include "edvlab/tree.hpp"

#include <compare>
#include <span>
#include <string>

namespace edvlab {

/// AHU-style parenthesis string of a rooted tree: each vertex contributes
/// '(' followed by its children's codes in sorted order, then ')'. Equal
/// codes mean a root-preserving isomorphism exists.
class RootedCode {
public:
  RootedCode() = default;
  explicit RootedCode(std::string parens) : parens_(std::move(parens)) {}

  const std::string& parens() const { return parens_; }
  int order() const { return static_cast<int>(parens_.size() / 2); }

  auto operator<=>(const RootedCode&) const = default;

private:
  std::string parens_;
};

/// Isomorphism-invariant code of a free tree: the rooted code at the center,
/// or the smaller of the two rooted codes for a bicentral tree.
class CanonicalCode {
public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string parens) : parens_(std::move(parens)) {}

  const std::string& parens() const { return parens_; }
  int order() const { return static_cast<int>(parens_.size() / 2); }

  /// Bits ('(' = 1) packed MSB-first, zero padded to whole bytes, lowercase.
  std::string hex() const;
  static CanonicalCode from_hex(std::string_view hex);

  auto operator<=>(const CanonicalCode&) const = default;

private:
  std::string parens_;
};

RootedCode rooted_code(const Tree& t, Vertex root);
RootedCode rooted_code(const RootedTree& t);

CanonicalCode canonical_code(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);

/// One or two central vertices (leaf-peeling centers), ascending.
std::vector<Vertex> centers(const Tree& t);

/// Tree whose canonical code is `code`, labeled in preorder from the root.
Tree tree_from_code(const CanonicalCode& code);
Tree tree_from_code(const RootedCode& code);

/// True when the two rooted forests match under some permutation of their
/// members with strongly isomorphic pairs.
bool forests_strongly_isomorphic(std::span<const RootedTree> a,
                                 std::span<const RootedTree> b);

/// True when some automorphism of t swaps u and v.
bool are_similar(const Tree& t, Vertex u, Vertex v);

} // namespace edvlab
