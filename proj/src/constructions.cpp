#include "unc/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "unc/formulas.hpp"

namespace unc {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<Color> bipartite_colors(int m, int n) {
  std::vector<Color> colors(static_cast<std::size_t>(m + n), Color::white);
  std::fill_n(colors.begin(), m, Color::black);
  return colors;
}

// Union-find over vertices; roots are the smallest member.
struct Components {
  std::vector<int> parent;
  explicit Components(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

}  // namespace

PlaneDrawing wheel(int n, int hub, std::span<const int> rim) {
  const auto k = rim.size();
  require(k >= 3, "wheel: rim needs at least 3 vertices");
  require(k + 1 == static_cast<std::size_t>(n), "wheel: hub and rim must use every vertex");
  Rotation rot(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const int prev = rim[(i + k - 1) % k];
    const int next = rim[(i + 1) % k];
    rot[static_cast<std::size_t>(rim[i])] = {prev, hub, next};
    rot[static_cast<std::size_t>(hub)].push_back(rim[k - 1 - i]);
    edges.push_back(Edge::make(hub, rim[i]));
    edges.push_back(Edge::make(rim[i], next));
  }
  return PlaneDrawing(n, std::move(edges), std::move(rot), Dart{rim[1], rim[0]});
}

PlaneDrawing wheel_drawing(int n) {
  require(n >= 4, "wheel_drawing: n must be at least 4");
  std::vector<int> rim(static_cast<std::size_t>(n - 1));
  std::iota(rim.begin(), rim.end(), 1);
  return wheel(n, 0, rim);
}

UncrossedCertificate k5_two_wheel_certificate() {
  const std::vector<int> rim1{0, 1, 2, 3};
  const std::vector<int> rim2{1, 2, 4, 3};
  return {complete_graph(5), {wheel(5, 4, rim1), wheel(5, 0, rim2)}};
}

std::vector<Edge> ladder_with_leaves_edges(int m, int n) {
  require(m >= 1 && m <= n, "ladder_with_leaves: need 1 <= m <= n");
  std::vector<Edge> edges;
  if (m == 1) {
    for (int w = 0; w < n; ++w) edges.push_back({0, 1 + w});
    return edges;
  }
  // Black i sees whites [s_i, s_i + d_i) with degrees 2,3,...,3,2 and
  // consecutive blocks overlapping in two whites.
  int s = 0;
  for (int i = 0; i < m; ++i) {
    const int d = (i == 0 || i == m - 1) ? 2 : 3;
    for (int j = s; j < s + d; ++j) edges.push_back({i, m + j});
    s += d - 2;
  }
  for (int j = m; j < n; ++j) edges.push_back({(j - m) % m, m + j});
  return edges;
}

PlaneDrawing ladder_with_leaves(int m, int n) {
  Graph g(m + n, ladder_with_leaves_edges(m, n), bipartite_colors(m, n));
  auto emb = outerplanar_embedding(g);
  if (!emb) throw DecompositionNotFound("ladder_with_leaves: graph is not outerplanar");
  return std::move(emb->drawing);
}

std::vector<Edge> DoubleCycle::edges() const {
  std::vector<Edge> out;
  const auto k = blacks.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int a = blacks[i];
    const int b = blacks[(i + 1) % k];
    out.push_back(Edge::make(a, quads[i].inner));
    out.push_back(Edge::make(b, quads[i].inner));
    if (quads[i].outer) {
      out.push_back(Edge::make(a, *quads[i].outer));
      out.push_back(Edge::make(b, *quads[i].outer));
    }
    for (int leaf : leaves[i]) out.push_back(Edge::make(a, leaf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> double_cycle_degrees(int m, int n) {
  require(m >= 1, "double_cycle_degrees: m must be positive");
  const long long a = 2LL * m + n;
  std::vector<int> d;
  for (long long i = 1; i <= m; ++i) d.push_back(static_cast<int>(i * a / m - (i - 1) * a / m));
  return d;
}

DoubleCycleCover double_cycle_cover(int m, int n) {
  require(m >= 3, "double_cycle_cover: m must be at least 3 (m <= 2 is planar)");
  if (n == 2 * m - 1) throw std::invalid_argument("double_cycle_cover: n = 2m-1, use double_cycle_cover_minus_one");
  if (n < 2 * m)
    throw std::invalid_argument("double_cycle_cover: n <= 2m-2 is covered by outerplanar parts, not double cycles");

  DoubleCycleCover cover{m, n, {}, {}, {}};
  const auto d = double_cycle_degrees(m, n);
  const auto cycles = ceil_div(static_cast<std::int64_t>(m) * n, 2LL * m + n);
  auto white = [&](long long j) { return m + static_cast<int>(((j % n) + n) % n); };

  long long s = 0;
  for (std::int64_t c = 0; c < cycles; ++c) {
    std::vector<int> dc(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) dc[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>((i + c) % m)];

    std::vector<long long> start(static_cast<std::size_t>(m) + 1, s);
    for (int i = 0; i < m; ++i) start[static_cast<std::size_t>(i) + 1] = start[static_cast<std::size_t>(i)] + dc[static_cast<std::size_t>(i)] - 2;

    DoubleCycle cyc;
    cyc.leaves.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      cyc.blacks.push_back(i);
      cyc.quads.push_back({white(start[ui + 1]), white(start[ui + 1] + 1)});
      for (long long j = start[ui] + 2; j < start[ui] + dc[ui] - 2; ++j) cyc.leaves[ui].push_back(white(j));
    }
    cover.degree_sequences.push_back(dc);
    cover.start_indices.push_back(static_cast<int>(s % n));
    cover.cycles.push_back(std::move(cyc));
    s += dc[0];
  }
  return cover;
}

DoubleCycleCover double_cycle_cover_minus_one(int m) {
  require(m >= 3, "double_cycle_cover_minus_one: m must be at least 3");
  const int n = 2 * m - 1;
  DoubleCycleCover cover{m, n, {}, {}, {}};
  const int cycles = (m + 1) / 2;
  for (int c = 0; c < cycles; ++c) {
    DoubleCycle cyc;
    cyc.leaves.resize(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
      cyc.blacks.push_back((p + 2 * c) % m);
      if (p < m - 1)
        cyc.quads.push_back({m + 2 * p, m + 2 * p + 1});
      else
        cyc.quads.push_back({m + 2 * p, std::nullopt});
    }
    cyc.removed_slot = static_cast<std::size_t>(m - 1);
    std::vector<int> degrees(static_cast<std::size_t>(m), 4);
    degrees.front() = 3;
    degrees.back() = 3;
    cover.degree_sequences.push_back(std::move(degrees));
    cover.start_indices.push_back(2 * c);
    cover.cycles.push_back(std::move(cyc));
  }
  return cover;
}

PlaneDrawing embed_double_cycle(const DoubleCycle& c, int vertex_count) {
  const auto k = c.blacks.size();
  require(k >= 2, "embed_double_cycle: need at least two blacks");
  require(c.quads.size() == k && c.leaves.size() == k, "embed_double_cycle: one quad and leaf list per black");
  Rotation rot(static_cast<std::size_t>(vertex_count));
  auto at = [&](int v) -> std::vector<int>& { return rot.at(static_cast<std::size_t>(v)); };

  for (std::size_t i = 0; i < k; ++i) {
    const int b = c.blacks[i];
    const auto& here = c.quads[i];
    const auto& before = c.quads[(i + k - 1) % k];
    auto& r = at(b);
    if (here.outer) r.push_back(*here.outer);
    r.push_back(here.inner);
    for (int leaf : c.leaves[i]) {
      r.push_back(leaf);
      at(leaf).push_back(b);
    }
    r.push_back(before.inner);
    if (before.outer) r.push_back(*before.outer);

    const int next = c.blacks[(i + 1) % k];
    at(here.inner) = {b, next};
    if (here.outer) at(*here.outer) = {b, next};
  }
  return PlaneDrawing(vertex_count, c.edges(), std::move(rot));
}

UncrossedCertificate collection_from_outerplanar_decomposition(const Graph& g, std::span<const EdgeSet> parts) {
  require(is_connected(g), "collection_from_outerplanar_decomposition: host must be connected");
  EdgeSet all(g.edge_count());
  for (const auto& p : parts) {
    require(p.universe() == g.edge_count(), "collection_from_outerplanar_decomposition: part over a different host");
    all |= p;
  }
  require(all == EdgeSet::full(g.edge_count()), "collection_from_outerplanar_decomposition: parts do not cover E(g)");

  UncrossedCertificate cert{g, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Graph part = edge_subgraph(g, parts[k]);
    if (!is_outerplanar(part)) {
      std::string msg = "part " + std::to_string(k) + " is not outerplanar; obstruction edges:";
      for (const auto& e : outerplanarity_witness(part)) msg += " " + to_string(e);
      throw std::invalid_argument(msg);
    }
    // Bridges between components keep the part outerplanar.
    Components comps(g.vertex_count());
    std::vector<Edge> edges(part.edges().begin(), part.edges().end());
    for (const auto& e : edges) comps.unite(e.u, e.v);
    for (const auto& e : g.edges())
      if (comps.unite(e.u, e.v)) edges.push_back(e);

    auto emb = outerplanar_embedding(Graph(g.vertex_count(), std::move(edges), g.coloring()));
    if (!emb) throw DecompositionNotFound("joined part " + std::to_string(k) + " lost outerplanarity");
    cert.drawings.push_back(std::move(emb->drawing));
  }
  return cert;
}

UncrossedCertificate bipartite_uncrossed_collection(int m, int n) {
  require(m >= 1 && m <= n, "bipartite_uncrossed_collection: need 1 <= m <= n");
  const Graph host = complete_bipartite(m, n);
  if (m <= 2) {
    auto d = planar_embedding(host);
    if (!d) throw DecompositionNotFound("K_{m,n} with m <= 2 reported non-planar");
    return {host, {std::move(*d)}};
  }
  if (n <= 2 * m - 2) {
    const auto parts = bipartite_outerplanar_cover(m, n);
    return collection_from_outerplanar_decomposition(host, parts);
  }
  const auto cover = n == 2 * m - 1 ? double_cycle_cover_minus_one(m) : double_cycle_cover(m, n);
  UncrossedCertificate cert{host, {}};
  for (const auto& c : cover.cycles) cert.drawings.push_back(embed_double_cycle(c, m + n));
  return cert;
}

}  // namespace unc
