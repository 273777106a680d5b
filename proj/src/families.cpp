#include "edvlab/families.hpp"

#include "edvlab/canon.hpp"
#include "edvlab/error.hpp"

#include <algorithm>
#include <numeric>

namespace edvlab {

namespace {

struct Builder {
  std::vector<Edge> edges;
  int next = 0;

  Vertex add() { return next++; }

  // Hangs a path of `len` new vertices below `at`.
  void leg(Vertex at, int len) {
    Vertex prev = at;
    for (int i = 0; i < len; ++i) {
      const Vertex w = add();
      edges.emplace_back(prev, w);
      prev = w;
    }
  }

  Tree build() const { return Tree(next, edges); }
};

// Two branching vertices joined by `path_edges` edges, with the given legs.
Tree two_hubs(const std::vector<int>& at_u, int path_edges, const std::vector<int>& at_v) {
  Builder b;
  const Vertex u = b.add();
  Vertex prev = u;
  for (int i = 0; i < path_edges; ++i) {
    const Vertex w = b.add();
    b.edges.emplace_back(prev, w);
    prev = w;
  }
  const Vertex v = prev;
  for (int l : at_u)
    b.leg(u, l);
  for (int l : at_v)
    b.leg(v, l);
  return b.build();
}

std::vector<Vertex> branching_vertices(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < t.order(); ++w)
    if (t.degree(w) >= 3)
      out.push_back(w);
  return out;
}

// Walks from `from` into `next` through degree-2 vertices. Returns the number
// of vertices visited and the vertex where the walk stopped.
std::pair<int, Vertex> walk(const Tree& t, Vertex from, Vertex next) {
  int count = 1;
  while (t.degree(next) == 2) {
    const auto nb = t.neighbors(next);
    const Vertex step = nb[0] == from ? nb[1] : nb[0];
    from = next;
    next = step;
    ++count;
  }
  return {count, next};
}

// Leg lengths at hub `c`, skipping the neighbor `skip`.
std::vector<int> legs_at(const Tree& t, Vertex c, Vertex skip) {
  std::vector<int> out;
  for (Vertex w : t.neighbors(c)) {
    if (w == skip)
      continue;
    auto [len, end] = walk(t, c, w);
    if (t.degree(end) != 1)
      return {};
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Hubs {
  Vertex u;
  Vertex v;
  int path_edges;
  std::vector<int> legs_u;
  std::vector<int> legs_v;
};

std::optional<Hubs> two_hub_shape(const Tree& t) {
  const auto hubs = branching_vertices(t);
  if (hubs.size() != 2)
    return std::nullopt;
  const auto path = path_between(t, hubs[0], hubs[1]);
  Hubs h{hubs[0], hubs[1], static_cast<int>(path.size()) - 1, {}, {}};
  h.legs_u = legs_at(t, h.u, path[1]);
  h.legs_v = legs_at(t, h.v, path[path.size() - 2]);
  if (h.legs_u.empty() || h.legs_v.empty())
    throw InternalError("two-hub tree with a leg that does not end in a leaf");
  return h;
}

void require_positive(int value, const char* what) {
  if (value < 1)
    throw InvalidArgument(std::string(what) + " must be positive");
}

} // namespace

StarlikeSpec StarlikeSpec::make(std::vector<int> legs) {
  if (legs.empty())
    throw InvalidArgument("a starlike tree needs at least one leg");
  for (int l : legs)
    require_positive(l, "leg length");
  std::sort(legs.begin(), legs.end());
  return StarlikeSpec{std::move(legs)};
}

int StarlikeSpec::order() const {
  return 1 + std::accumulate(legs.begin(), legs.end(), 0);
}

void DoubleStarlikeSpec::validate() const {
  require_positive(s, "leg length s");
  require_positive(path_edges, "path length");
  if (k1 < 2 || k2 < 2)
    throw InvalidArgument("both hubs need at least two legs");
}

void TwoSpiderSpec::validate() const {
  for (int x : {s1, s2, t1, t2})
    require_positive(x, "leg length");
  require_positive(path_edges, "path length");
  if (s1 > s2 || t1 > t2)
    throw InvalidArgument("legs must satisfy s1 <= s2 and t1 <= t2");
  if (s1 + s2 > t1 + t2)
    throw InvalidArgument("legs must satisfy s1 + s2 <= t1 + t2");
}

Tree make_starlike(const StarlikeSpec& spec) {
  const auto s = StarlikeSpec::make(spec.legs);
  Builder b;
  const Vertex c = b.add();
  for (int l : s.legs)
    b.leg(c, l);
  return b.build();
}

EdgeDivisionVector starlike_edv(const StarlikeSpec& spec) {
  const auto s = StarlikeSpec::make(spec.legs);
  const int n = s.order();
  if (n < 2)
    throw InvalidTree("edge division vector needs n >= 2");
  if (s.legs.back() > n / 2)
    return edv(make_starlike(s));
  std::vector<int> r(n / 2, 0);
  for (int l : s.legs)
    for (int i = 1; i <= l; ++i)
      ++r[i - 1];
  return EdgeDivisionVector(n, std::move(r));
}

bool is_weak_balanced(const StarlikeSpec& spec) {
  const auto s = StarlikeSpec::make(spec.legs);
  if (s.legs.size() < 2)
    return true;
  return s.legs[0] + s.legs[1] >= s.legs.back();
}

bool is_balanced(const StarlikeSpec& spec) {
  const auto s = StarlikeSpec::make(spec.legs);
  return s.legs.back() - s.legs.front() <= 1;
}

Tree make_double_star(int p, int q) {
  if (p < 2 || q < 2)
    throw InvalidArgument("double star needs p, q >= 2");
  Builder b;
  const Vertex a = b.add();
  const Vertex c = b.add();
  b.edges.emplace_back(a, c);
  for (int i = 1; i < p; ++i)
    b.leg(a, 1);
  for (int i = 1; i < q; ++i)
    b.leg(c, 1);
  return b.build();
}

EdgeDivisionVector double_star_edv(int p, int q) {
  if (p < 2 || q < 2)
    throw InvalidArgument("double star needs p, q >= 2");
  const int n = p + q;
  std::vector<int> r(n / 2, 0);
  r[0] = n - 2;
  r[std::min(p, q) - 1] += 1;
  return EdgeDivisionVector(n, std::move(r));
}

Tree make_power_star(int p, int t) {
  if (p < 2 || t < 2)
    throw InvalidArgument("power star needs p, t >= 2");
  Builder b;
  const Vertex c = b.add();
  for (int i = 0; i < t; ++i) {
    const Vertex hub = b.add();
    b.edges.emplace_back(c, hub);
    for (int j = 1; j < p; ++j)
      b.leg(hub, 1);
  }
  return b.build();
}

EdgeDivisionVector power_star_edv(int p, int t) {
  if (p < 2 || t < 2)
    throw InvalidArgument("power star needs p, t >= 2");
  const int n = p * t + 1;
  std::vector<int> r(n / 2, 0);
  r[0] += t * (p - 1);
  r[p - 1] += t;
  return EdgeDivisionVector(n, std::move(r));
}

Tree make_double_starlike(const DoubleStarlikeSpec& spec) {
  spec.validate();
  return two_hubs(std::vector<int>(spec.k1, spec.s), spec.path_edges,
                  std::vector<int>(spec.k2, spec.s));
}

Tree make_double_broom(int path_edges, int k1, int k2) {
  return make_double_starlike({1, k1, k2, path_edges});
}

Tree make_two_spider(const TwoSpiderSpec& spec) {
  spec.validate();
  return two_hubs({spec.s1, spec.s2}, spec.path_edges, {spec.t1, spec.t2});
}

bool check_two_spider_dedv(const TwoSpiderSpec& spec) {
  spec.validate();
  const int a = spec.s1 + spec.s2;
  const int k = spec.path_edges;
  return a == spec.t1 + spec.t2 || a > spec.t2 ||
         (a + k == spec.t2 && a > spec.t1) ||
         (a + k == spec.t2 && spec.t2 == spec.t1);
}

Tree rooted_product_path(const Tree& t, int s) {
  require_positive(s, "s");
  Builder b;
  b.edges = t.edges();
  b.next = t.order();
  for (Vertex w = 0; w < t.order(); ++w)
    b.leg(w, s - 1);
  return b.build();
}

Tree corona_k1(const Tree& t, int s) {
  require_positive(s, "s");
  Builder b;
  b.edges = t.edges();
  b.next = t.order();
  for (Vertex w = 0; w < t.order(); ++w)
    for (int i = 0; i < s; ++i)
      b.leg(w, 1);
  return b.build();
}

EdgeDivisionVector rooted_product_edv(const EdgeDivisionVector& r, int s) {
  require_positive(s, "s");
  const int n = r.order();
  const int big = n * s;
  std::vector<int> out(big / 2, 0);
  for (int i = 1; i <= s - 1; ++i)
    out[i - 1] = n;
  for (int k = 1; k <= r.size(); ++k)
    out[k * s - 1] += r[k];
  return EdgeDivisionVector(big, std::move(out));
}

EdgeDivisionVector corona_edv(const EdgeDivisionVector& r, int s) {
  require_positive(s, "s");
  const int n = r.order();
  const int big = n * (s + 1);
  std::vector<int> out(big / 2, 0);
  out[0] = n * s;
  for (int k = 1; k <= r.size(); ++k)
    out[k * (s + 1) - 1] += r[k];
  return EdgeDivisionVector(big, std::move(out));
}

std::optional<StarlikeSpec> recognize_starlike(const Tree& t) {
  const auto hubs = branching_vertices(t);
  if (hubs.size() != 1)
    return std::nullopt;
  return StarlikeSpec{legs_at(t, hubs[0], -1)};
}

std::optional<std::pair<int, int>> recognize_double_star(const Tree& t) {
  std::vector<Vertex> inner;
  for (Vertex w = 0; w < t.order(); ++w)
    if (t.degree(w) > 1)
      inner.push_back(w);
  if (inner.size() != 2)
    return std::nullopt;
  int p = t.degree(inner[0]);
  int q = t.degree(inner[1]);
  if (p > q)
    std::swap(p, q);
  return std::pair{p, q};
}

std::optional<std::pair<int, int>> recognize_power_star(const Tree& t) {
  const int n = t.order();
  for (Vertex c = 0; c < n; ++c) {
    const int tt = t.degree(c);
    if (tt < 2)
      continue;
    const int p = t.degree(t.neighbors(c)[0]);
    if (p < 2 || p * tt + 1 != n)
      continue;
    const bool uniform = std::all_of(t.neighbors(c).begin(), t.neighbors(c).end(),
                                     [&](Vertex w) { return t.degree(w) == p; });
    if (uniform)
      return std::pair{p, tt};
  }
  return std::nullopt;
}

std::optional<DoubleStarlikeSpec> recognize_double_starlike(const Tree& t) {
  const auto h = two_hub_shape(t);
  if (!h)
    return std::nullopt;
  const int s = h->legs_u.front();
  auto same = [&](const std::vector<int>& legs) {
    return std::all_of(legs.begin(), legs.end(), [&](int l) { return l == s; });
  };
  if (!same(h->legs_u) || !same(h->legs_v))
    return std::nullopt;
  int k1 = static_cast<int>(h->legs_u.size());
  int k2 = static_cast<int>(h->legs_v.size());
  if (k1 > k2)
    std::swap(k1, k2);
  return DoubleStarlikeSpec{s, k1, k2, h->path_edges};
}

std::optional<TwoSpiderSpec> recognize_two_spider(const Tree& t) {
  const auto h = two_hub_shape(t);
  if (!h || h->legs_u.size() != 2 || h->legs_v.size() != 2)
    return std::nullopt;
  auto a = h->legs_u;
  auto b = h->legs_v;
  if (a[0] + a[1] > b[0] + b[1])
    std::swap(a, b);
  return TwoSpiderSpec{a[0], a[1], h->path_edges, b[0], b[1]};
}

std::optional<std::pair<Tree, int>> recognize_rooted_product(const Tree& t) {
  const int n = t.order();
  const auto leaves = t.leaves();
  const int m = static_cast<int>(leaves.size());
  if (m < 2 || n % m != 0 || n / m < 2)
    return std::nullopt;
  const int s = n / m;
  std::vector<char> removed(n, 0);
  for (Vertex leaf : leaves) {
    Vertex prev = -1;
    Vertex cur = leaf;
    for (int i = 0; i < s - 1; ++i) {
      if (t.degree(cur) > 2 || removed[cur])
        return std::nullopt;
      removed[cur] = 1;
      const auto nb = t.neighbors(cur);
      const Vertex next = nb[0] == prev && nb.size() > 1 ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
  }
  std::vector<Vertex> kept;
  for (Vertex w = 0; w < n; ++w)
    if (!removed[w])
      kept.push_back(w);
  if (static_cast<int>(kept.size()) != m)
    return std::nullopt;
  // Induced subgraph must be connected for the seed to be a tree.
  std::vector<char> in_seed(n, 0);
  for (Vertex w : kept)
    in_seed[w] = 1;
  int inner_edges = 0;
  for (const Edge& e : t.edges())
    inner_edges += in_seed[e.u] && in_seed[e.v];
  if (inner_edges != m - 1)
    return std::nullopt;
  Tree seed = induced(t, kept, kept.front()).tree;
  if (!is_isomorphic(rooted_product_path(seed, s), t))
    return std::nullopt;
  return std::pair{std::move(seed), s};
}

std::optional<std::pair<Tree, int>> recognize_corona(const Tree& t) {
  const int n = t.order();
  std::vector<Vertex> inner;
  for (Vertex w = 0; w < n; ++w)
    if (t.degree(w) > 1)
      inner.push_back(w);
  const int m = static_cast<int>(inner.size());
  if (m < 2 || n % m != 0 || n / m < 2)
    return std::nullopt;
  const int s = n / m - 1;
  for (Vertex w : inner) {
    int pendants = 0;
    for (Vertex x : t.neighbors(w))
      pendants += t.degree(x) == 1;
    if (pendants != s)
      return std::nullopt;
  }
  Tree seed = induced(t, inner, inner.front()).tree;
  if (!is_isomorphic(corona_k1(seed, s), t))
    return std::nullopt;
  return std::pair{std::move(seed), s};
}

DedvPrediction predict_dedv(const Tree& t) {
  const int n = t.order();
  std::vector<DedvPrediction> found;
  auto add = [&](bool verdict, const char* rule) { found.push_back({verdict, rule}); };

  if (n < 7)
    add(true, "order-below-7");
  if (t.is_path())
    add(true, "path");
  if (t.is_star())
    add(true, "star");
  if (recognize_double_star(t))
    add(true, "double-star");
  if (recognize_power_star(t))
    add(true, "power-star");
  if (auto s = recognize_starlike(t)) {
    if (s->legs.size() == 3)
      add(true, "starlike-three-legs");
    else if (is_balanced(*s))
      add(true, "starlike-balanced");
    else
      add(is_weak_balanced(*s), "starlike-weak-balanced");
  }
  if (auto d = recognize_double_starlike(t); d && d->k2 - d->k1 <= 1)
    add(true, "double-starlike");
  if (auto sp = recognize_two_spider(t))
    add(check_two_spider_dedv(*sp), "two-spider");
  if (auto rp = recognize_rooted_product(t)) {
    if (predict_dedv(rp->first).verdict == std::optional<bool>(true))
      add(true, "rooted-product");
  }
  if (auto co = recognize_corona(t)) {
    if (predict_dedv(co->first).verdict == std::optional<bool>(true))
      add(true, "corona");
  }

  if (found.empty())
    return {};
  for (const auto& f : found)
    if (f.verdict != found.front().verdict)
      throw InternalError("family rules '" + found.front().rule + "' and '" + f.rule +
                          "' disagree on " + canonical_code(t).hex());
  return found.front();
}

} // namespace edvlab
