#pragma once

#include "edvlab/tree.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace edvlab {

/// Edge division vector (r_1, ..., r_{floor(n/2)}): r_i counts the edges whose
/// removal leaves a smaller side of exactly i vertices. Always stored at full
/// length, trailing zeros included.
class EdgeDivisionVector {
public:
  EdgeDivisionVector() = default;
  /// Throws InvalidArgument unless counts has length floor(n/2).
  EdgeDivisionVector(int n, std::vector<int> counts);

  int order() const { return n_; }
  int size() const { return static_cast<int>(r_.size()); }
  /// r_i with 1-based i; zero for i outside 1..floor(n/2).
  int operator[](int i) const;
  const std::vector<int>& counts() const { return r_; }
  int edge_total() const;

  /// "(4,1,1)"
  std::string to_string() const;

  auto operator<=>(const EdgeDivisionVector&) const = default;

private:
  int n_ = 0;
  std::vector<int> r_;
};

enum class OrderRelation { Less, Greater, Equivalent, Incomparable };

std::string_view to_string(OrderRelation r);
OrderRelation reverse(OrderRelation r);

EdgeDivisionVector edv(const Tree& t);

/// S(k) = sum_{i >= k} r_i for k = 1..floor(n/2).
std::vector<int> suffix_sums(const EdgeDivisionVector& a);

/// Relation of a to b under the suffix-sum dominance order.
OrderRelation compare(const EdgeDivisionVector& a, const EdgeDivisionVector& b);

/// Parses "(4,1,1)" for a tree of order n.
EdgeDivisionVector parse_edv(std::string_view text, int n);

} // namespace edvlab
