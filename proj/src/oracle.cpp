#include "unc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "unc/formulas.hpp"

namespace unc {
namespace {

bool connected_spanning(int n, const Graph& host, const std::vector<std::size_t>& subset) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  int components = n;
  for (auto i : subset) {
    const int a = find(host.edge(i).u);
    const int b = find(host.edge(i).v);
    if (a != b) {
      parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      --components;
    }
  }
  return components == 1;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void check_host(const Graph& host, const OracleOptions& options) {
  if (host.vertex_count() == 0) throw OracleRefusal("oracle: host has no vertices");
  if (!is_connected(host)) throw OracleRefusal("oracle: host is disconnected; only connected hosts are supported");
  if (host.edge_count() > options.cap) {
    const auto n = static_cast<std::size_t>(host.vertex_count());
    const std::size_t top = std::min(host.edge_count(), n >= 3 ? 3 * n - 6 : host.edge_count());
    double subsets = 0;
    for (std::size_t s = n - 1; s <= top; ++s) subsets += binomial(host.edge_count(), s);
    std::ostringstream msg;
    msg << "oracle: host has " << host.edge_count() << " edges, above the cap of " << options.cap
        << "; the search would examine up to " << subsets << " edge subsets, each with its own rotation search";
    throw OracleRefusal(msg.str());
  }
}

}  // namespace

std::size_t AdmissibleFamily::max_size() const {
  std::size_t best = 0;
  for (const auto& m : members) best = std::max(best, m.edges.count());
  return best;
}

std::optional<PlaneDrawing> find_admissible_rotation(const Graph& host, const EdgeSet& subset) {
  const int n = host.vertex_count();
  const auto idx = subset.indices();
  if (!connected_spanning(n, host, idx)) return std::nullopt;

  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto i : idx) {
    const auto& e = host.edge(i);
    edges.push_back(e);
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  if (n >= 3 && edges.size() > 3 * static_cast<std::size_t>(n) - 6) return std::nullopt;
  if (!is_planar_graph(Graph(n, edges))) return std::nullopt;

  std::vector<Edge> undrawn;
  for (std::size_t i = 0; i < host.edge_count(); ++i)
    if (!subset.test(i)) undrawn.push_back(host.edge(i));

  // Odometer over the orders of adj[v][1..] at every vertex of degree >= 3;
  // each wheel starts sorted and ends when next_permutation wraps around.
  std::vector<std::size_t> spinning;
  for (int v = 0; v < n; ++v)
    if (adj[static_cast<std::size_t>(v)].size() >= 3) spinning.push_back(static_cast<std::size_t>(v));

  const auto faces_needed = static_cast<std::size_t>(2 - n + static_cast<long long>(edges.size()));
  Rotation rot = adj;
  while (true) {
    PlaneDrawing d(n, edges, rot);
    auto faces = trace_faces(d);
    if (faces.size() == faces_needed) {
      const FaceIncidence inc(n, faces);
      const bool ok =
          std::all_of(undrawn.begin(), undrawn.end(), [&](const Edge& e) { return inc.cofacial(e.u, e.v); });
      if (ok) return d;
    }
    std::size_t k = 0;
    for (; k < spinning.size(); ++k) {
      auto& r = rot[spinning[k]];
      if (std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (k == spinning.size()) return std::nullopt;
  }
}

AdmissibleFamily enumerate_admissible(const Graph& host, const OracleOptions& options) {
  check_host(host, options);
  const auto n = static_cast<std::size_t>(host.vertex_count());
  const std::size_t e = host.edge_count();
  std::size_t top = n >= 3 ? std::min(e, 3 * n - 6) : e;
  if (options.max_edges) top = std::min(top, *options.max_edges);

  AdmissibleFamily family{host, {}, true};
  if (n == 1) {
    family.members.push_back({EdgeSet(0), PlaneDrawing(1, {}, Rotation(1))});
    return family;
  }
  for (std::size_t s = top + 1; s-- > n - 1;) {
    // Lexicographic combinations of s edge indices.
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      const EdgeSet set = EdgeSet::of(e, pick);
      const bool dominated = std::any_of(family.members.begin(), family.members.end(),
                                         [&](const auto& m) { return set.is_subset_of(m.edges); });
      if (!dominated)
        if (auto d = find_admissible_rotation(host, set)) family.members.push_back({set, std::move(*d)});

      std::size_t i = s;
      while (i > 0 && pick[i - 1] == e - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return family;
}

std::size_t exact_h(const Graph& host, const OracleOptions& options) {
  return enumerate_admissible(host, options).max_size();
}

std::size_t exact_ecr(const Graph& host, const OracleOptions& options) {
  return host.edge_count() - exact_h(host, options);
}

namespace {

bool cover_search(const AdmissibleFamily& f, const EdgeSet& covered, std::size_t left, std::vector<std::size_t>& chosen) {
  const auto full = f.host.edge_count();
  if (covered.count() == full) return true;
  if (left == 0) return false;
  std::size_t edge = 0;
  while (covered.test(edge)) ++edge;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (!f.members[i].edges.test(edge)) continue;
    chosen.push_back(i);
    if (cover_search(f, covered | f.members[i].edges, left - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

UncResult exact_unc(const AdmissibleFamily& family) {
  const auto e = family.host.edge_count();
  const auto h = family.max_size();
  if (family.members.empty()) throw OracleRefusal("oracle: no admissible drawings were enumerated");
  if (e == 0) return {1, {family.host, {family.members.front().witness}}};

  const auto lower = static_cast<std::size_t>(std::max<std::int64_t>(1, unc_lower_bound_h(static_cast<std::int64_t>(e), static_cast<std::int64_t>(h))));
  for (std::size_t k = lower; k <= e; ++k) {
    std::vector<std::size_t> chosen;
    if (cover_search(family, EdgeSet(e), k, chosen)) {
      UncResult r{chosen.size(), {family.host, {}}};
      for (auto i : chosen) r.certificate.drawings.push_back(family.members[i].witness);
      return r;
    }
  }
  throw OracleRefusal("oracle: admissible sets do not cover the host (max_edges too small?)");
}

UncResult exact_unc(const Graph& host, const OracleOptions& options) {
  return exact_unc(enumerate_admissible(host, options));
}

bool max_uncrossed_subgraph(const Graph& host, std::size_t k, const OracleOptions& options) {
  return exact_h(host, options) >= k;
}

}  // namespace unc
