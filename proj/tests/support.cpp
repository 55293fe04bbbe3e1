#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace testing {
namespace {

using Adj = std::vector<std::vector<char>>;

Adj matrix(const unc::Graph& g) {
  Adj a(static_cast<std::size_t>(g.vertex_count()), std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Path a -> via... -> b over the adjacency matrix.
bool path(const Adj& a, int from, const std::vector<int>& via, int to) {
  int cur = from;
  for (int v : via) {
    if (!a[cur][v]) return false;
    cur = v;
  }
  return a[cur][to];
}

// pairs: branch pairs to connect; spare: vertices that may subdivide.
bool realizable(const Adj& a, const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& spare) {
  const std::size_t slots = pairs.size() + 1;  // last slot: unused
  std::vector<std::size_t> assign(spare.size(), 0);
  while (true) {
    std::vector<std::vector<int>> on(pairs.size());
    for (std::size_t i = 0; i < spare.size(); ++i)
      if (assign[i] < pairs.size()) on[assign[i]].push_back(spare[i]);
    bool ok = true;
    for (std::size_t p = 0; p < pairs.size() && ok; ++p) {
      auto via = on[p];
      std::sort(via.begin(), via.end());
      bool any = false;
      do {
        any = any || path(a, pairs[p].first, via, pairs[p].second);
      } while (!any && std::next_permutation(via.begin(), via.end()));
      ok = any;
    }
    if (ok) return true;
    std::size_t i = 0;
    for (; i < assign.size(); ++i) {
      if (++assign[i] < slots) break;
      assign[i] = 0;
    }
    if (i == assign.size()) return false;
  }
}

}  // namespace

bool kuratowski_planar(const unc::Graph& g) {
  const int n = g.vertex_count();
  if (n < 5) return true;
  const Adj a = matrix(g);
  const auto all = [&] {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
  }();

  for (int mask = 0; mask < (1 << n); ++mask) {
    const int bits = __builtin_popcount(static_cast<unsigned>(mask));
    if (bits != 5 && bits != 6) continue;
    std::vector<int> branch;
    std::vector<int> spare;
    for (int v : all) ((mask >> v) & 1 ? branch : spare).push_back(v);
    if (bits == 5) {
      if (spare.size() > 2) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(branch[i], branch[j]);
      if (realizable(a, pairs, spare)) return false;
    } else {
      if (spare.size() > 1) continue;
      // sides {branch[0], x, y} and the rest
      for (int x = 1; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) {
          std::vector<int> left{branch[0], branch[x], branch[y]};
          std::vector<int> right;
          for (int i = 1; i < 6; ++i)
            if (i != x && i != y) right.push_back(branch[i]);
          std::vector<std::pair<int, int>> pairs;
          for (int l : left)
            for (int r : right) pairs.emplace_back(l, r);
          if (realizable(a, pairs, spare)) return false;
        }
    }
  }
  return true;
}

bool kuratowski_outerplanar(const unc::Graph& g) {
  const int n = g.vertex_count();
  std::vector<unc::Edge> edges(g.edges().begin(), g.edges().end());
  for (int v = 0; v < n; ++v) edges.push_back({v, n});
  return kuratowski_planar(unc::Graph(n + 1, edges));
}

namespace {

std::vector<std::vector<std::pair<int, int>>> orbits(const unc::Rotation& rot) {
  std::map<std::pair<int, int>, std::pair<int, int>> next;
  for (std::size_t v = 0; v < rot.size(); ++v) {
    const auto& r = rot[v];
    for (int w : r) {
      const auto& rw = rot[static_cast<std::size_t>(w)];
      const auto pos = static_cast<std::size_t>(std::find(rw.begin(), rw.end(), static_cast<int>(v)) - rw.begin());
      next[{static_cast<int>(v), w}] = {w, rw[(pos + 1) % rw.size()]};
    }
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& [dart, _] : next) {
    if (seen.count(dart)) continue;
    std::vector<std::pair<int, int>> walk;
    for (auto d = dart; !seen.count(d); d = next[d]) {
      seen.insert(d);
      walk.push_back(d);
    }
    out.push_back(walk);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> face_lengths(const unc::Rotation& rot) {
  std::vector<std::size_t> out;
  for (const auto& w : orbits(rot)) out.push_back(w.size());
  if (out.empty() && rot.size() == 1) out.push_back(0);
  return out;
}

std::vector<std::set<int>> face_vertex_sets(const unc::Rotation& rot) {
  std::vector<std::set<int>> out;
  for (const auto& w : orbits(rot)) {
    std::set<int> s;
    for (auto [a, b] : w) s.insert(a);
    out.push_back(s);
  }
  if (out.empty() && rot.size() == 1) out.push_back({0});
  return out;
}

std::int64_t slow_ceil(std::int64_t num, std::int64_t den) {
  std::int64_t k = 0;
  while (k * den < num) ++k;
  return k;
}

unc::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<unc::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return unc::Graph(n, edges);
}

unc::Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::set<unc::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.insert(unc::Edge::make(pick(rng), v));
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.insert({u, v});
  return unc::Graph(n, std::vector<unc::Edge>(edges.begin(), edges.end()));
}

unc::Rotation random_rotation(std::mt19937_64& rng, const unc::Graph& g) {
  unc::Rotation rot(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    rot[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
    std::shuffle(rot[static_cast<std::size_t>(v)].begin(), rot[static_cast<std::size_t>(v)].end(), rng);
  }
  return rot;
}

unc::Rotation rotate_starts(std::mt19937_64& rng, const unc::Rotation& rot) {
  unc::Rotation out = rot;
  for (auto& r : out) {
    if (r.empty()) continue;
    std::uniform_int_distribution<std::size_t> off(0, r.size() - 1);
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(off(rng)), r.end());
  }
  return out;
}

}  // namespace testing

namespace testing {

bool brute_admissible(const unc::Graph& host, const std::vector<unc::Edge>& drawn) {
  const int n = host.vertex_count();
  const unc::Graph g(n, drawn);
  if (!unc::is_connected(g)) return false;
  unc::Rotation rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    rot[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
    std::sort(rot[static_cast<std::size_t>(v)].begin(), rot[static_cast<std::size_t>(v)].end());
  }
  const auto e = static_cast<long>(drawn.size());
  while (true) {
    const auto faces = face_vertex_sets(rot);
    if (n - e + static_cast<long>(faces.size()) == 2) {
      bool ok = true;
      for (const auto& he : host.edges()) {
        if (g.has_edge(he.u, he.v)) continue;
        bool shared = false;
        for (const auto& f : faces) shared = shared || (f.count(he.u) && f.count(he.v));
        if (!shared) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    std::size_t v = 0;
    for (; v < rot.size(); ++v)
      if (rot[v].size() > 2 && std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
    if (v == rot.size()) return false;
  }
}

}  // namespace testing

namespace testing {

std::vector<unc::Edge> random_spanning_tree(std::mt19937_64& rng, const unc::Graph& g) {
  std::vector<unc::Edge> edges(g.edges().begin(), g.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  std::vector<unc::Edge> tree;
  for (const auto& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) continue;
    parent[static_cast<std::size_t>(a)] = b;
    tree.push_back(e);
  }
  return tree;
}

}  // namespace testing
