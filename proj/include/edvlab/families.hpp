#pragma once

#include "edvlab/edv.hpp"
#include "edvlab/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edvlab {

/// Spider with one branching vertex and legs of the given vertex counts.
struct StarlikeSpec {
  std::vector<int> legs;

  /// Sorts legs; throws InvalidArgument on empty or non-positive legs.
  static StarlikeSpec make(std::vector<int> legs);
  int order() const;
};

/// Two branching vertices joined by a path of `path_edges` edges, with k1
/// legs at one end and k2 at the other, every leg of s vertices.
struct DoubleStarlikeSpec {
  int s = 1;
  int k1 = 2;
  int k2 = 2;
  int path_edges = 1;

  void validate() const;
  int order() const { return s * (k1 + k2) + path_edges + 1; }
};

/// Two spiders of two legs each, (s1, s2) at u and (t1, t2) at v, with u and
/// v joined by a path of `path_edges` edges.
struct TwoSpiderSpec {
  int s1 = 1;
  int s2 = 1;
  int path_edges = 1;
  int t1 = 1;
  int t2 = 1;

  /// Requires s1 <= s2, t1 <= t2, s1 + s2 <= t1 + t2, all positive.
  void validate() const;
  int order() const { return s1 + s2 + t1 + t2 + path_edges + 1; }
};

Tree make_starlike(const StarlikeSpec& spec);
EdgeDivisionVector starlike_edv(const StarlikeSpec& spec);
/// Two shortest legs together are at least as long as the longest one.
bool is_weak_balanced(const StarlikeSpec& spec);
/// Leg lengths pairwise differ by at most one.
bool is_balanced(const StarlikeSpec& spec);

/// Adjacent centers carrying p-1 and q-1 pendant vertices.
Tree make_double_star(int p, int q);
EdgeDivisionVector double_star_edv(int p, int q);

/// t copies of the star S_p whose centers all join one extra vertex.
Tree make_power_star(int p, int t);
EdgeDivisionVector power_star_edv(int p, int t);

Tree make_double_starlike(const DoubleStarlikeSpec& spec);
Tree make_double_broom(int path_edges, int k1, int k2);

Tree make_two_spider(const TwoSpiderSpec& spec);
/// Whether the two-spider tree is determined by its edge division vector,
/// from the four-way arithmetic criterion on its leg lengths.
bool check_two_spider_dedv(const TwoSpiderSpec& spec);

/// Pendant path of s vertices rooted at every vertex (order n*s).
Tree rooted_product_path(const Tree& t, int s);
/// s pendant leaves on every vertex (order n*(s+1)).
Tree corona_k1(const Tree& t, int s);

EdgeDivisionVector rooted_product_edv(const EdgeDivisionVector& r, int s);
EdgeDivisionVector corona_edv(const EdgeDivisionVector& r, int s);

// Recognizers. They inspect structure only, so any labeling works.
std::optional<StarlikeSpec> recognize_starlike(const Tree& t);
std::optional<std::pair<int, int>> recognize_double_star(const Tree& t);
std::optional<std::pair<int, int>> recognize_power_star(const Tree& t);
std::optional<DoubleStarlikeSpec> recognize_double_starlike(const Tree& t);
std::optional<TwoSpiderSpec> recognize_two_spider(const Tree& t);
/// Seed tree and s >= 2 with t isomorphic to rooted_product_path(seed, s).
std::optional<std::pair<Tree, int>> recognize_rooted_product(const Tree& t);
/// Seed tree and s >= 1 with t isomorphic to corona_k1(seed, s).
std::optional<std::pair<Tree, int>> recognize_corona(const Tree& t);

struct DedvPrediction {
  /// Empty when no known family rule applies.
  std::optional<bool> verdict;
  std::string rule = "unknown";
};

/// Verdict from the first matching family rule. Throws InternalError if two
/// applicable rules disagree.
DedvPrediction predict_dedv(const Tree& t);

} // namespace edvlab
