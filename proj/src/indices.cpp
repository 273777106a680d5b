#include "edvlab/indices.hpp"

#include "edvlab/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace edvlab {

Exponent Exponent::integer(long v) {
  return Exponent{Rational(v), static_cast<double>(v)};
}

Exponent Exponent::real(double v) {
  if (!std::isfinite(v))
    throw InvalidArgument("exponent must be finite");
  if (v == std::floor(v) && std::fabs(v) < 1e15)
    return integer(static_cast<long>(v));
  return Exponent{std::nullopt, v};
}

Exponent Exponent::parse(std::string_view text) {
  auto fail = [&] {
    throw InvalidArgument("malformed exponent '" + std::string(text) + "'");
  };
  auto parse_long = [&](std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      fail();
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const long p = parse_long(text.substr(0, slash));
    const long q = parse_long(text.substr(slash + 1));
    if (q == 0)
      fail();
    Rational r(p, q);
    return Exponent{r, static_cast<double>(p) / static_cast<double>(q)};
  }
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    fail();
  return real(v);
}

bool Exponent::is_integer() const {
  return exact && denominator(*exact) == 1;
}

std::string Exponent::to_string() const {
  if (exact)
    return exact->str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string_view column_name(IndexKind kind) {
  switch (kind) {
  case IndexKind::Wiener: return "W";
  case IndexKind::ModifiedWiener: return "mW";
  case IndexKind::VariableWiener: return "vW";
  case IndexKind::SteinerWiener: return "SWk";
  case IndexKind::HyperWiener: return "WW";
  case IndexKind::WienerHosoya: return "h";
  case IndexKind::DegreeDistance: return "DD";
  case IndexKind::Gutman: return "Gut";
  case IndexKind::Abc2: return "ABC2";
  }
  return "?";
}

std::string_view index_name(IndexKind kind) {
  switch (kind) {
  case IndexKind::Wiener: return "wiener";
  case IndexKind::ModifiedWiener: return "modified_wiener";
  case IndexKind::VariableWiener: return "variable_wiener";
  case IndexKind::SteinerWiener: return "steiner_wiener";
  case IndexKind::HyperWiener: return "hyper_wiener";
  case IndexKind::WienerHosoya: return "wiener_hosoya";
  case IndexKind::DegreeDistance: return "degree_distance";
  case IndexKind::Gutman: return "gutman";
  case IndexKind::Abc2: return "abc2";
  }
  return "?";
}

void IndexSpec::validate(int n) const {
  if (n < 2)
    throw InvalidArgument("indices need a tree with at least one edge");
  if (kind == IndexKind::SteinerWiener && (k < 2 || k > n))
    throw OutOfRange("Steiner k must satisfy 2 <= k <= n (k=" +
                     std::to_string(k) + ", n=" + std::to_string(n) + ")");
  if ((kind == IndexKind::ModifiedWiener || kind == IndexKind::VariableWiener) &&
      !std::isfinite(lambda.value))
    throw InvalidArgument("lambda must be finite");
}

std::string IndexValue::to_string() const {
  if (exact)
    return exact->str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", real);
  return buf;
}

bool IndexValue::operator==(const IndexValue& other) const {
  if (exact && other.exact)
    return *exact == *other.exact;
  const double scale = std::max(1.0, std::fabs(real));
  return std::fabs(real - other.real) <= 1e-9 * scale;
}

namespace {

BigInt binomial(int a, int b) {
  if (b < 0 || b > a)
    return 0;
  BigInt out = 1;
  for (int i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

Rational ipow(long base, const Rational& exponent) {
  const long e = numerator(exponent).convert_to<long>();
  Rational acc = 1;
  for (long i = 0; i < std::labs(e); ++i)
    acc *= base;
  return e >= 0 ? acc : Rational(1) / acc;
}

IndexValue from_exact(Rational v) {
  return IndexValue{v, v.convert_to<double>()};
}

IndexValue from_real(double v) { return IndexValue{std::nullopt, v}; }

} // namespace

IndexValue edge_contribution(const IndexSpec& spec, int n, int x) {
  const long a = x;
  const long b = n - x;
  switch (spec.kind) {
  case IndexKind::Wiener:
    return from_exact(Rational(a * b));
  case IndexKind::ModifiedWiener:
    if (spec.lambda.is_integer())
      return from_exact(ipow(a, *spec.lambda.exact) * ipow(b, *spec.lambda.exact));
    return from_real(std::pow(double(a), spec.lambda.value) *
                     std::pow(double(b), spec.lambda.value));
  case IndexKind::VariableWiener:
    if (spec.lambda.is_integer()) {
      const auto& l = *spec.lambda.exact;
      return from_exact(ipow(n, l) - ipow(a, l) - ipow(b, l));
    }
    return from_real(std::pow(double(n), spec.lambda.value) -
                     std::pow(double(a), spec.lambda.value) -
                     std::pow(double(b), spec.lambda.value));
  case IndexKind::SteinerWiener:
    return from_exact(Rational(binomial(n, spec.k) - binomial(x, spec.k) -
                               binomial(n - x, spec.k)));
  case IndexKind::HyperWiener:
    return from_exact(Rational(a * b, 2) + Rational(a * a * b * b, 2));
  case IndexKind::WienerHosoya:
    return from_exact(Rational(a * b + (a - 1) * (b - 1)));
  case IndexKind::DegreeDistance:
    return from_exact(Rational(4 * a * b - n));
  case IndexKind::Gutman:
    return from_exact(Rational(4 * a * b - (2L * n - 1)));
  case IndexKind::Abc2:
    return from_real(std::sqrt(double(n - 2) / (double(a) * double(b))));
  }
  throw InternalError("unknown index kind");
}

IndexValue index_from_edv(const EdgeDivisionVector& r, const IndexSpec& spec) {
  const int n = r.order();
  spec.validate(n);
  std::optional<Rational> exact = Rational(0);
  double real = 0.0;
  for (int i = 1; i <= r.size(); ++i) {
    if (r[i] == 0)
      continue;
    const IndexValue f = edge_contribution(spec, n, i);
    if (f.exact && exact)
      *exact += *f.exact * r[i];
    else
      exact.reset();
    real += f.real * r[i];
  }
  if (exact)
    return from_exact(*exact);
  return from_real(real);
}

namespace {

std::vector<std::vector<int>> all_distances(const Tree& t) {
  const int n = t.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    auto& d = dist[s];
    std::vector<Vertex> queue{s};
    d[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : t.neighbors(queue[i]))
        if (d[y] < 0) {
          d[y] = d[queue[i]] + 1;
          queue.push_back(y);
        }
  }
  return dist;
}

} // namespace

std::int64_t wiener_distance_oracle(const Tree& t) {
  const auto dist = all_distances(t);
  std::int64_t total = 0;
  for (Vertex a = 0; a < t.order(); ++a)
    for (Vertex b = a + 1; b < t.order(); ++b)
      total += dist[a][b];
  return total;
}

std::int64_t degree_distance_oracle(const Tree& t) {
  const auto dist = all_distances(t);
  std::int64_t total = 0;
  for (Vertex a = 0; a < t.order(); ++a)
    for (Vertex b = a + 1; b < t.order(); ++b)
      total += std::int64_t(t.degree(a) + t.degree(b)) * dist[a][b];
  return total;
}

std::int64_t gutman_oracle(const Tree& t) {
  const auto dist = all_distances(t);
  std::int64_t total = 0;
  for (Vertex a = 0; a < t.order(); ++a)
    for (Vertex b = a + 1; b < t.order(); ++b)
      total += std::int64_t(t.degree(a)) * t.degree(b) * dist[a][b];
  return total;
}

SteinerForms steiner_wiener(const EdgeDivisionVector& r, int k) {
  const int n = r.order();
  IndexSpec::steiner_wiener(k).validate(n);
  SteinerForms out{0, 0};
  for (int x = 1; x <= r.size(); ++x) {
    if (r[x] == 0)
      continue;
    out.contribution_form +=
        r[x] * (binomial(n, k) - binomial(x, k) - binomial(n - x, k));
    BigInt split = 0;
    for (int i = 1; i <= k - 1; ++i)
      split += binomial(x, i) * binomial(n - x, k - i);
    out.split_form += r[x] * split;
  }
  return out;
}

IndexTable all_indices(const EdgeDivisionVector& r, const IndexParams& params) {
  IndexTable table;
  for (IndexKind kind : kAllIndexKinds) {
    IndexSpec spec{kind, params.lambda, params.k};
    table.values[static_cast<std::size_t>(kind)] = index_from_edv(r, spec);
  }
  return table;
}

IndexTable all_indices(const Tree& t, const IndexParams& params) {
  return all_indices(edv(t), params);
}

EqualIndexCheck verify_theorem_equal_indices(const Tree& a, const Tree& b,
                                             const IndexParams& params) {
  if (a.order() != b.order())
    throw InvalidComparison("trees must have the same order");
  const auto ra = edv(a);
  const auto rb = edv(b);
  EqualIndexCheck out;
  out.vectors_equal = ra == rb;
  out.indices_equal = all_indices(ra, params) == all_indices(rb, params);
  return out;
}

} // namespace edvlab
