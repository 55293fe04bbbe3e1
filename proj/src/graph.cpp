#include "unc/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace unc {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Color>> coloring)
    : n_(n), edges_(std::move(edges)), coloring_(std::move(coloring)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    e = Edge::make(e.u, e.v);
    if (e.u < 0 || e.v >= n_) throw GraphError("edge " + to_string(e) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw GraphError("duplicate edge " + to_string(*dup));

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  if (coloring_) {
    if (coloring_->size() != static_cast<std::size_t>(n_)) throw GraphError("coloring size mismatch");
    for (const auto& e : edges_)
      if ((*coloring_)[static_cast<std::size_t>(e.u)] == (*coloring_)[static_cast<std::size_t>(e.v)])
        throw GraphError("edge " + to_string(e) + " joins vertices of equal color");
  }
}

std::optional<std::size_t> Graph::edge_index(int a, int b) const {
  const Edge key = Edge::make(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::edge_index_or_throw(int a, int b) const {
  if (auto i = edge_index(a, b)) return *i;
  throw GraphError("edge " + to_string(Edge::make(a, b)) + " is not in the host graph");
}

std::optional<int> Graph::black_prefix() const {
  if (!coloring_) return std::nullopt;
  int blacks = 0;
  while (blacks < n_ && (*coloring_)[static_cast<std::size_t>(blacks)] == Color::black) ++blacks;
  for (int v = blacks; v < n_; ++v)
    if ((*coloring_)[static_cast<std::size_t>(v)] == Color::black) return std::nullopt;
  return blacks;
}

EdgeSet EdgeSet::full(std::size_t universe) {
  EdgeSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.set(i);
  return s;
}

EdgeSet EdgeSet::of(std::size_t universe, std::span<const std::size_t> indices) {
  EdgeSet s(universe);
  for (auto i : indices) s.set(i);
  return s;
}

std::size_t EdgeSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("EdgeSet universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("EdgeSet universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EdgeSet EdgeSet::operator~() const {
  EdgeSet r(universe_);
  for (std::size_t i = 0; i < universe_; ++i)
    if (!test(i)) r.set(i);
  return r;
}

std::vector<std::size_t> EdgeSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

Graph complete_graph(int n) {
  if (n < 1) throw GraphError("complete_graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw GraphError("complete_bipartite needs both parts non-empty");
  std::vector<Edge> edges;
  for (int b = 0; b < m; ++b)
    for (int w = 0; w < n; ++w) edges.push_back({b, m + w});
  std::vector<Color> coloring(static_cast<std::size_t>(m + n), Color::white);
  std::fill_n(coloring.begin(), m, Color::black);
  return Graph(m + n, std::move(edges), std::move(coloring));
}

std::vector<int> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph edge_subgraph(const Graph& host, const EdgeSet& subset) {
  std::vector<Edge> edges;
  for (auto i : subset.indices()) edges.push_back(host.edge(i));
  return Graph(host.vertex_count(), std::move(edges), host.coloring());
}

EdgeSet edge_set_of(const Graph& host, std::span<const Edge> edges) {
  EdgeSet s(host.edge_count());
  for (const auto& e : edges) s.set(host.edge_index_or_throw(e.u, e.v));
  return s;
}

std::optional<std::vector<Color>> bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Color> colors(n);
  for (std::size_t v = 0; v < n; ++v) colors[v] = side[v] == 0 ? Color::black : Color::white;
  return colors;
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace unc
