#include "edvlab/tree.hpp"

#include "edvlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include <sstream>

namespace edvlab {

namespace {

std::string edge_str(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

Tree::Tree() : adj_(1) {}

Tree::Tree(int n, std::initializer_list<Edge> edges)
    : Tree(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Tree::Tree(int n, std::span<const Edge> edges) {
  if (n < 1)
    throw InvalidTree("tree order must be positive, got " + std::to_string(n));
  if (static_cast<int>(edges.size()) != n - 1)
    throw InvalidTree("tree of order " + std::to_string(n) + " needs " +
                      std::to_string(n - 1) + " edges, got " +
                      std::to_string(edges.size()));
  adj_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw InvalidTree("edge " + edge_str(e.u, e.v) + " out of range");
    if (e.u == e.v)
      throw InvalidTree("self-loop at " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InvalidTree("parallel edges");
  }
  // n-1 edges and connected implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  if (count != n)
    throw InvalidTree("graph is not connected");
}

bool Tree::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b))
    return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(adj_.size() > 0 ? adj_.size() - 1 : 0);
  for (Vertex a = 0; a < order(); ++a)
    for (Vertex b : adj_[a])
      if (a < b)
        out.emplace_back(a, b);
  return out;
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (degree(v) == 1)
      out.push_back(v);
  return out;
}

bool Tree::is_path() const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [](const auto& nb) { return nb.size() <= 2; });
}

bool Tree::is_star() const {
  const int n = order();
  if (n <= 2)
    return true;
  return std::any_of(adj_.begin(), adj_.end(), [n](const auto& nb) {
    return static_cast<int>(nb.size()) == n - 1;
  });
}

RootedTree make_rooted(Tree tree, Vertex root) {
  if (!tree.contains(root))
    throw InvalidArgument("root " + std::to_string(root) + " not in tree");
  std::vector<Vertex> labels(tree.order());
  std::iota(labels.begin(), labels.end(), 0);
  return RootedTree{std::move(tree), root, std::move(labels)};
}

SplitTable::SplitTable(const Tree& t)
    : n_(t.order()), parent_(n_, -1), size_(n_, 1) {
  std::vector<Vertex> order;
  order.reserve(n_);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex x = order[i];
    for (Vertex y : t.neighbors(x))
      if (y != parent_[x]) {
        parent_[y] = x;
        order.push_back(y);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent_[*it] >= 0)
      size_[parent_[*it]] += size_[*it];
}

int SplitTable::branch_size(Vertex u, Vertex x) const {
  if (u >= 0 && u < n_ && x >= 0 && x < n_) {
    if (parent_[x] == u)
      return size_[x];
    if (parent_[u] == x)
      return n_ - size_[u];
  }
  throw InvalidEdge("edge " + edge_str(u, x) + " is not in the tree");
}

SplitSizes SplitTable::split(Edge e) const {
  const int nv = branch_size(e.u, e.v);
  return {n_ - nv, nv};
}

int SplitTable::mu(Edge e) const {
  const auto s = split(e);
  return std::min(s.n_u, s.n_v);
}

SplitSizes split_sizes(const Tree& t, Edge e) {
  if (!t.has_edge(e.u, e.v))
    throw InvalidEdge("edge " + edge_str(e.u, e.v) + " is not in the tree");
  return SplitTable(t).split(e);
}

int mu(const Tree& t, Edge e) {
  const auto s = split_sizes(t, e);
  return std::min(s.n_u, s.n_v);
}

int branch_size(const Tree& t, Vertex u, Vertex x) {
  if (!t.has_edge(u, x))
    throw InvalidEdge("edge " + edge_str(u, x) + " is not in the tree");
  return SplitTable(t).branch_size(u, x);
}

std::vector<Vertex> reachable(const Tree& t, Vertex start,
                              std::span<const Edge> cut) {
  std::vector<char> seen(t.order(), 0);
  std::vector<Vertex> out{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Vertex x = out[i];
    for (Vertex y : t.neighbors(x)) {
      if (seen[y])
        continue;
      if (std::find(cut.begin(), cut.end(), Edge(x, y)) != cut.end())
        continue;
      seen[y] = 1;
      out.push_back(y);
    }
  }
  return out;
}

RootedTree induced(const Tree& t, std::span<const Vertex> vertices,
                   Vertex root) {
  std::vector<Vertex> local(t.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<Vertex>(i);
  if (local.at(root) < 0)
    throw InvalidArgument("root not among the induced vertices");
  std::vector<Edge> edges;
  for (Vertex a : vertices)
    for (Vertex b : t.neighbors(a))
      if (a < b && local[b] >= 0)
        edges.emplace_back(local[a], local[b]);
  Tree sub(static_cast<int>(vertices.size()), edges);
  return RootedTree{std::move(sub), local[root],
                    std::vector<Vertex>(vertices.begin(), vertices.end())};
}

RootedTree component_of(const Tree& t, Edge e, Vertex side) {
  if (!t.has_edge(e.u, e.v))
    throw InvalidEdge("edge " + edge_str(e.u, e.v) + " is not in the tree");
  if (side != e.u && side != e.v)
    throw InvalidArgument("vertex " + std::to_string(side) +
                          " is not an endpoint of " + edge_str(e.u, e.v));
  const Edge cut[] = {e};
  auto verts = reachable(t, side, cut);
  std::sort(verts.begin(), verts.end());
  return induced(t, verts, side);
}

std::vector<int> maximal_pendent_paths(const Tree& t) {
  const int n = t.order();
  if (n < 2)
    throw InvalidTree("pendent paths need at least two vertices");
  if (t.is_path())
    return {n};
  std::vector<int> out;
  for (Vertex leaf : t.leaves()) {
    int len = 0;
    Vertex prev = -1;
    Vertex cur = leaf;
    while (t.degree(cur) <= 2) {
      ++len;
      Vertex next = -1;
      for (Vertex y : t.neighbors(cur))
        if (y != prev)
          next = y;
      prev = cur;
      cur = next;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
  if (!t.contains(u) || !t.contains(v))
    throw InvalidArgument("path endpoints out of range");
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<Vertex> queue{u};
  parent[u] = u;
  for (std::size_t i = 0; i < queue.size() && parent[v] < 0; ++i)
    for (Vertex y : t.neighbors(queue[i]))
      if (parent[y] < 0) {
        parent[y] = queue[i];
        queue.push_back(y);
      }
  std::vector<Vertex> path{v};
  while (path.back() != u)
    path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != t.order())
    throw InvalidArgument("permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : t.edges())
    edges.emplace_back(perm[e.u], perm[e.v]);
  return Tree(t.order(), edges);
}

Tree attach(const Tree& base, Vertex anchor, const RootedTree& branch) {
  if (!base.contains(anchor))
    throw InvalidArgument("anchor " + std::to_string(anchor) + " not in tree");
  const int offset = base.order();
  auto edges = base.edges();
  for (const Edge& e : branch.tree.edges())
    edges.emplace_back(e.u + offset, e.v + offset);
  edges.emplace_back(anchor, branch.root + offset);
  return Tree(offset + branch.order(), edges);
}

Tree make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Tree(n, edges);
}

Tree make_star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(0, i);
  return Tree(n, edges);
}

std::string to_text(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const Edge& e : t.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace {

// Whitespace-separated integer reader used by the text parser.
class IntReader {
public:
  explicit IntReader(std::string_view s) : s_(s) {}

  bool done() {
    skip();
    return pos_ >= s_.size();
  }

  int next(const char* what) {
    skip();
    int value = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
      throw InvalidTree(std::string("expected integer for ") + what);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

private:
  void skip() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\n' || s_[pos_] == '\t' ||
            s_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Tree parse_tree(std::string_view text) {
  IntReader in(text);
  if (in.done())
    throw InvalidTree("empty tree text");
  const int n = in.next("order");
  if (n < 1)
    throw InvalidTree("tree order must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    const int a = in.next("edge endpoint");
    const int b = in.next("edge endpoint");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw InvalidTree("edge " + edge_str(a, b) + " out of range");
    edges.emplace_back(a, b);
  }
  if (!in.done())
    throw InvalidTree("trailing data after tree");
  return Tree(n, edges);
}

Tree read_tree(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_tree(text);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open tree file '" + path + "'");
  return read_tree(in);
}

std::vector<Tree> parse_tree_stream(std::string_view text) {
  std::vector<Tree> out;
  std::string chunk;
  std::size_t pos = 0;
  auto flush = [&] {
    bool blank = std::all_of(chunk.begin(), chunk.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank)
      out.push_back(parse_tree(chunk));
    chunk.clear();
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (line == "--" || line == "--\r")
      flush();
    else {
      chunk.append(line);
      chunk.push_back('\n');
    }
    pos = end + 1;
  }
  flush();
  return out;
}

std::string to_text_stream(std::span<const Tree> trees) {
  std::string out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0)
      out += "--\n";
    out += to_text(trees[i]);
  }
  return out;
}

} // namespace edvlab
