#pragma once

#include "edvlab/edv.hpp"
#include "edvlab/tree.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace edvlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent parameter of the modified and variable Wiener indices. Rational
/// exponents with unit denominator are evaluated exactly; anything else is
/// evaluated in double precision.
struct Exponent {
  std::optional<Rational> exact;
  double value = 1.0;

  static Exponent integer(long v);
  static Exponent real(double v);
  /// Accepts "2", "-1", "3/2", "0.5".
  static Exponent parse(std::string_view text);

  bool is_integer() const;
  std::string to_string() const;
};

enum class IndexKind {
  Wiener,
  ModifiedWiener,
  VariableWiener,
  SteinerWiener,
  HyperWiener,
  WienerHosoya,
  DegreeDistance,
  Gutman,
  Abc2,
};

inline constexpr std::array<IndexKind, 9> kAllIndexKinds = {
    IndexKind::Wiener,       IndexKind::ModifiedWiener, IndexKind::VariableWiener,
    IndexKind::SteinerWiener, IndexKind::HyperWiener,   IndexKind::WienerHosoya,
    IndexKind::DegreeDistance, IndexKind::Gutman,       IndexKind::Abc2,
};

/// Short column label: W, mW, vW, SWk, WW, h, DD, Gut, ABC2.
std::string_view column_name(IndexKind kind);
std::string_view index_name(IndexKind kind);

struct IndexSpec {
  IndexKind kind = IndexKind::Wiener;
  Exponent lambda = Exponent::integer(1);
  int k = 3;

  static IndexSpec wiener() { return {IndexKind::Wiener}; }
  static IndexSpec modified_wiener(Exponent l) { return {IndexKind::ModifiedWiener, l}; }
  static IndexSpec variable_wiener(Exponent l) { return {IndexKind::VariableWiener, l}; }
  static IndexSpec steiner_wiener(int k) {
    return {IndexKind::SteinerWiener, Exponent::integer(1), k};
  }
  static IndexSpec hyper_wiener() { return {IndexKind::HyperWiener}; }
  static IndexSpec wiener_hosoya() { return {IndexKind::WienerHosoya}; }
  static IndexSpec degree_distance() { return {IndexKind::DegreeDistance}; }
  static IndexSpec gutman() { return {IndexKind::Gutman}; }
  static IndexSpec abc2() { return {IndexKind::Abc2}; }

  /// Throws InvalidArgument / OutOfRange when the parameters do not make
  /// sense for trees of order n.
  void validate(int n) const;
};

struct IndexValue {
  std::optional<Rational> exact;
  double real = 0.0;

  /// Exact value when available ("46", "7/2"), otherwise %.12g of real.
  std::string to_string() const;
  bool operator==(const IndexValue& other) const;
};

/// Edge contribution f(x) for trees of order n.
IndexValue edge_contribution(const IndexSpec& spec, int n, int x);

/// sum_i r_i f(i).
IndexValue index_from_edv(const EdgeDivisionVector& r, const IndexSpec& spec);

/// Sum of all pairwise distances, from n breadth-first searches.
std::int64_t wiener_distance_oracle(const Tree& t);
/// sum_{u<v} (deg u + deg v) d(u, v)
std::int64_t degree_distance_oracle(const Tree& t);
/// sum_{u<v} deg u * deg v * d(u, v)
std::int64_t gutman_oracle(const Tree& t);

/// The Steiner k-Wiener index computed from its two edge forms:
/// C(n,k) - C(x,k) - C(n-x,k) and sum_{i=1}^{k-1} C(x,i) C(n-x,k-i).
struct SteinerForms {
  BigInt contribution_form;
  BigInt split_form;
};
SteinerForms steiner_wiener(const EdgeDivisionVector& r, int k);

struct IndexParams {
  Exponent lambda = Exponent::integer(1);
  int k = 3;
};

struct IndexTable {
  std::array<IndexValue, kAllIndexKinds.size()> values;

  const IndexValue& operator[](IndexKind kind) const {
    return values[static_cast<std::size_t>(kind)];
  }
  bool operator==(const IndexTable&) const = default;
};

IndexTable all_indices(const EdgeDivisionVector& r, const IndexParams& params = {});
IndexTable all_indices(const Tree& t, const IndexParams& params = {});

/// Edge-additive indices agree on trees with equal vectors.
struct EqualIndexCheck {
  bool vectors_equal = false;
  bool indices_equal = false;
  /// Equal vectors imply equal tables.
  bool holds() const { return !vectors_equal || indices_equal; }
};
EqualIndexCheck verify_theorem_equal_indices(const Tree& a, const Tree& b,
                                             const IndexParams& params = {});

} // namespace edvlab
