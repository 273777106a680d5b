#include "edvlab/canon.hpp"

#include "edvlab/error.hpp"

#include <algorithm>

namespace edvlab {

namespace {

// Rooted parenthesis code of the component of `root` when the vertices marked
// in `blocked` are treated as absent.
std::string parens_at(const Tree& t, Vertex root,
                      const std::vector<char>* blocked = nullptr) {
  const int n = t.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{root};
  order.reserve(n);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex x = order[i];
    for (Vertex y : t.neighbors(x)) {
      if (parent[y] >= 0 || (blocked && (*blocked)[y]))
        continue;
      parent[y] = x;
      order.push_back(y);
    }
  }
  std::vector<std::string> code(n);
  std::vector<std::vector<std::string*>> kids(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex x = *it;
    auto& ch = kids[x];
    std::sort(ch.begin(), ch.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::size_t len = 2;
    for (const auto* c : ch)
      len += c->size();
    std::string& s = code[x];
    s.reserve(len);
    s.push_back('(');
    for (const auto* c : ch)
      s += *c;
    s.push_back(')');
    if (x != root)
      kids[parent[x]].push_back(&s);
  }
  return std::move(code[root]);
}

} // namespace

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  const std::size_t bytes = (parens_.size() + 7) / 8;
  out.reserve(bytes * 2);
  for (std::size_t b = 0; b < bytes; ++b) {
    unsigned value = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      const std::size_t pos = b * 8 + i;
      value <<= 1;
      if (pos < parens_.size() && parens_[pos] == '(')
        value |= 1;
    }
    out.push_back(digits[value >> 4]);
    out.push_back(digits[value & 15]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.empty() || hex.size() % 2 != 0)
    throw InvalidArgument("malformed canonical code '" + std::string(hex) + "'");
  std::string parens;
  int depth = 0;
  for (char c : hex) {
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nibble = c - 'A' + 10;
    else
      throw InvalidArgument("malformed canonical code '" + std::string(hex) + "'");
    for (int bit = 3; bit >= 0; --bit) {
      if (!parens.empty() && depth == 0)
        break;
      const bool open = (nibble >> bit) & 1;
      parens.push_back(open ? '(' : ')');
      depth += open ? 1 : -1;
      if (depth < 0)
        throw InvalidArgument("malformed canonical code '" + std::string(hex) + "'");
    }
  }
  if (depth != 0)
    throw InvalidArgument("malformed canonical code '" + std::string(hex) + "'");
  return CanonicalCode(std::move(parens));
}

RootedCode rooted_code(const Tree& t, Vertex root) {
  if (!t.contains(root))
    throw InvalidArgument("root " + std::to_string(root) + " not in tree");
  return RootedCode(parens_at(t, root));
}

RootedCode rooted_code(const RootedTree& t) { return rooted_code(t.tree, t.root); }

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i)
      all[i] = i;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1)
      layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex x : layer)
      for (Vertex y : t.neighbors(x))
        if (--deg[y] == 1)
          next.push_back(y);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalCode canonical_code(const Tree& t) {
  const auto c = centers(t);
  std::string best = parens_at(t, c[0]);
  if (c.size() == 2) {
    std::string other = parens_at(t, c[1]);
    if (other < best)
      best = std::move(other);
  }
  return CanonicalCode(std::move(best));
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

namespace {

Tree tree_from_parens(const std::string& parens) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  int next = 0;
  for (char c : parens) {
    if (c == '(') {
      if (!stack.empty())
        edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else {
      if (stack.empty())
        throw InvalidArgument("unbalanced code");
      stack.pop_back();
    }
  }
  if (!stack.empty() || next == 0)
    throw InvalidArgument("unbalanced code");
  return Tree(next, edges);
}

} // namespace

Tree tree_from_code(const CanonicalCode& code) { return tree_from_parens(code.parens()); }
Tree tree_from_code(const RootedCode& code) { return tree_from_parens(code.parens()); }

bool forests_strongly_isomorphic(std::span<const RootedTree> a,
                                 std::span<const RootedTree> b) {
  if (a.size() != b.size())
    return false;
  auto codes = [](std::span<const RootedTree> f) {
    std::vector<RootedCode> out;
    out.reserve(f.size());
    for (const auto& r : f)
      out.push_back(rooted_code(r));
    std::sort(out.begin(), out.end());
    return out;
  };
  return codes(a) == codes(b);
}

// An automorphism exchanging u and v reverses the u-v path, so it exists
// exactly when the piece hanging at the i-th path vertex is strongly
// isomorphic to the piece hanging at the mirrored position.
bool are_similar(const Tree& t, Vertex u, Vertex v) {
  if (!t.contains(u) || !t.contains(v))
    throw InvalidArgument("vertex out of range");
  if (u == v)
    throw InvalidArgument("similarity needs two distinct vertices");
  const auto path = path_between(t, u, v);
  std::vector<char> on_path(t.order(), 0);
  for (Vertex p : path)
    on_path[p] = 1;
  const std::size_t k = path.size();
  for (std::size_t i = 0; i < k / 2; ++i) {
    auto blocked_for = [&](std::size_t idx) {
      std::vector<char> blocked = on_path;
      blocked[path[idx]] = 0;
      return blocked;
    };
    const auto bi = blocked_for(i);
    const auto bj = blocked_for(k - 1 - i);
    if (parens_at(t, path[i], &bi) != parens_at(t, path[k - 1 - i], &bj))
      return false;
  }
  return true;
}

} // namespace edvlab
