#include "edvlab/edv.hpp"

#include "edvlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace edvlab {

EdgeDivisionVector::EdgeDivisionVector(int n, std::vector<int> counts)
    : n_(n), r_(std::move(counts)) {
  if (n < 2)
    throw InvalidArgument("edge division vector needs n >= 2");
  if (static_cast<int>(r_.size()) != n / 2)
    throw InvalidArgument("edge division vector for n=" + std::to_string(n) +
                          " has length " + std::to_string(n / 2) + ", got " +
                          std::to_string(r_.size()));
  if (std::any_of(r_.begin(), r_.end(), [](int x) { return x < 0; }))
    throw InvalidArgument("edge division vector entries must be non-negative");
}

int EdgeDivisionVector::operator[](int i) const {
  if (i < 1 || i > size())
    return 0;
  return r_[i - 1];
}

int EdgeDivisionVector::edge_total() const {
  return std::accumulate(r_.begin(), r_.end(), 0);
}

std::string EdgeDivisionVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i > 0)
      out += ",";
    out += std::to_string(r_[i]);
  }
  out += ")";
  return out;
}

std::string_view to_string(OrderRelation r) {
  switch (r) {
  case OrderRelation::Less:
    return "less";
  case OrderRelation::Greater:
    return "greater";
  case OrderRelation::Equivalent:
    return "equivalent";
  case OrderRelation::Incomparable:
    return "incomparable";
  }
  return "?";
}

OrderRelation reverse(OrderRelation r) {
  switch (r) {
  case OrderRelation::Less:
    return OrderRelation::Greater;
  case OrderRelation::Greater:
    return OrderRelation::Less;
  default:
    return r;
  }
}

EdgeDivisionVector edv(const Tree& t) {
  const int n = t.order();
  if (n < 2)
    throw InvalidTree("edge division vector needs at least one edge");
  SplitTable splits(t);
  std::vector<int> r(n / 2, 0);
  for (const Edge& e : t.edges())
    ++r[splits.mu(e) - 1];
  return EdgeDivisionVector(n, std::move(r));
}

std::vector<int> suffix_sums(const EdgeDivisionVector& a) {
  std::vector<int> s(a.counts().size());
  int acc = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    acc += a.counts()[i];
    s[i] = acc;
  }
  return s;
}

OrderRelation compare(const EdgeDivisionVector& a, const EdgeDivisionVector& b) {
  if (a.order() != b.order())
    throw InvalidComparison("cannot compare vectors of orders " +
                            std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
  if (a.counts() == b.counts())
    return OrderRelation::Equivalent;
  const auto sa = suffix_sums(a);
  const auto sb = suffix_sums(b);
  bool le = true;
  bool ge = true;
  for (std::size_t k = 0; k < sa.size(); ++k) {
    le = le && sa[k] <= sb[k];
    ge = ge && sa[k] >= sb[k];
  }
  if (le)
    return OrderRelation::Less;
  if (ge)
    return OrderRelation::Greater;
  return OrderRelation::Incomparable;
}

EdgeDivisionVector parse_edv(std::string_view text, int n) {
  auto fail = [&] {
    throw InvalidArgument("malformed edge division vector '" +
                          std::string(text) + "'");
  };
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  const std::string_view outer = trim(text);
  if (outer.size() < 2 || outer.front() != '(' || outer.back() != ')')
    fail();
  std::string_view body = outer.substr(1, outer.size() - 2);
  std::vector<int> r;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos)
      end = body.size();
    std::string_view item = trim(body.substr(pos, end - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      fail();
    r.push_back(value);
    pos = end + 1;
  }
  return EdgeDivisionVector(n, std::move(r));
}

} // namespace edvlab
