#include "unc/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unc/embedding.hpp"

namespace unc {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::int64_t isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// k * f(n,m) >= m  <=>  k*sqrt(D) >= 2m - kA, with A = 3n-5 and D = A^2 - 4m.
bool covers(std::int64_t k, std::int64_t a, std::int64_t d, std::int64_t m) {
  const __int128 rhs = static_cast<__int128>(2) * m - static_cast<__int128>(k) * a;
  if (rhs <= 0) return true;
  return static_cast<__int128>(k) * k * d >= rhs * rhs;
}

}  // namespace

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  require(b > 0, "ceil_div: divisor must be positive");
  if (a <= 0) return -((-a) / b);
  return (a + b - 1) / b;
}

std::int64_t unc_complete(std::int64_t n) {
  require(n >= 1, "unc_complete: n must be positive");
  if (n == 4) return 1;
  if (n == 7) return 3;
  return ceil_div(n + 1, 4);
}

std::int64_t unc_complete_bipartite(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "unc_complete_bipartite: parts must be positive");
  if (m > n) std::swap(m, n);
  if (m <= 2) return 1;
  if (n <= 2 * m - 2) return ceil_div(m * n, 2 * m + n - 2);
  if (n == 2 * m - 1) return ceil_div(m * n, 2 * m + n - 1);
  return ceil_div(m * n, 2 * m + n);
}

std::int64_t h_complete(std::int64_t n) {
  require(n >= 4, "h_complete: n must be at least 4");
  return 2 * n - 2;
}

std::int64_t h_complete_bipartite(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "h_complete_bipartite: parts must be positive");
  if (m > n) std::swap(m, n);
  // A star has only n edges; the general cases would give n + 2.
  if (m == 1) return n;
  if (m == n) return 2 * m + n - 2;
  if (n < 2 * m) return 2 * m + n - 1;
  return 2 * m + n;
}

std::int64_t outerthickness_complete(std::int64_t n) {
  require(n >= 1, "outerthickness_complete: n must be positive");
  if (n == 7) return 3;
  return ceil_div(n + 1, 4);
}

std::int64_t outerthickness_complete_bipartite(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "outerthickness_complete_bipartite: parts must be positive");
  if (m > n) std::swap(m, n);
  return ceil_div(m * n, 2 * m + n - 2);
}

double density_f(std::int64_t n, std::int64_t m) {
  require(n >= 3, "density_f: n must be at least 3");
  const double a = static_cast<double>(3 * n - 5);
  const double d = a * a - 4.0 * static_cast<double>(m);
  require(d >= 0, "density_f: negative discriminant");
  return (a + std::sqrt(d)) / 2.0;
}

std::optional<std::int64_t> density_f_exact(std::int64_t n, std::int64_t m) {
  require(n >= 3, "density_f_exact: n must be at least 3");
  const std::int64_t a = 3 * n - 5;
  const std::int64_t d = a * a - 4 * m;
  require(d >= 0, "density_f_exact: negative discriminant");
  const std::int64_t s = isqrt(d);
  if (s * s != d || (a + s) % 2 != 0) return std::nullopt;
  return (a + s) / 2;
}

std::int64_t unc_lower_bound_density(std::int64_t n, std::int64_t m) {
  require(n >= 3, "unc_lower_bound_density: n must be at least 3");
  require(m >= 0, "unc_lower_bound_density: m must be non-negative");
  const std::int64_t a = 3 * n - 5;
  const std::int64_t d = a * a - 4 * m;
  require(d >= 0, "unc_lower_bound_density: negative discriminant");
  if (m == 0) return 0;
  // f >= A/2, so m/f <= 2m/A; start just below the float estimate and walk up.
  std::int64_t k = std::max<std::int64_t>(1, static_cast<std::int64_t>(static_cast<double>(m) / density_f(n, m)) - 2);
  while (k > 1 && covers(k - 1, a, d, m)) --k;
  while (!covers(k, a, d, m)) ++k;
  return k;
}

std::int64_t unc_lower_bound_h(std::int64_t m_edges, std::int64_t h) {
  require(h >= 1, "unc_lower_bound_h: h must be positive");
  require(m_edges >= 0, "unc_lower_bound_h: edge count must be non-negative");
  return ceil_div(m_edges, h);
}

std::int64_t unc_lower_bound_euler(std::int64_t n, std::int64_t m) {
  require(n >= 3, "unc_lower_bound_euler: n must be at least 3");
  return ceil_div(m, 3 * n - 6);
}

std::optional<CompleteShape> recognize_complete(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  const auto m = static_cast<std::int64_t>(g.edge_count());
  if (n >= 1 && m == n * (n - 1) / 2) return CompleteShape{CompleteShape::Kind::complete, 0, n};
  if (!is_connected(g)) return std::nullopt;
  auto colors = bipartition(g);
  if (!colors) return std::nullopt;
  const auto blacks = std::count(colors->begin(), colors->end(), Color::black);
  std::int64_t a = blacks;
  std::int64_t b = n - blacks;
  if (a > b) std::swap(a, b);
  if (a >= 1 && a * b == m) return CompleteShape{CompleteShape::Kind::complete_bipartite, a, b};
  return std::nullopt;
}

BoundReport bound_report(const Graph& g, std::span<const EdgeSet> outerplanar_cover) {
  BoundReport r;
  const std::int64_t n = g.vertex_count();
  const auto m = static_cast<std::int64_t>(g.edge_count());

  if (!outerplanar_cover.empty()) {
    EdgeSet all(g.edge_count());
    for (const auto& part : outerplanar_cover) {
      if (part.universe() != g.edge_count())
        throw std::invalid_argument("bound_report: cover part is over a different edge set");
      if (!is_outerplanar(edge_subgraph(g, part)))
        throw std::invalid_argument("bound_report: cover part is not outerplanar");
      all |= part;
    }
    if (all != EdgeSet::full(g.edge_count()))
      throw std::invalid_argument("bound_report: cover does not contain every edge");
    r.upper = static_cast<std::int64_t>(outerplanar_cover.size());
    r.provenance.push_back("upper: outerplanar cover of size " + std::to_string(outerplanar_cover.size()));
  }

  if (auto shape = recognize_complete(g)) {
    std::int64_t v = 0;
    if (shape->kind == CompleteShape::Kind::complete) {
      v = unc_complete(shape->n);
      r.provenance.push_back("exact: complete-graph formula, K_" + std::to_string(shape->n));
    } else {
      v = unc_complete_bipartite(shape->m, shape->n);
      r.provenance.push_back("exact: complete-bipartite formula, K_" + std::to_string(shape->m) + "," +
                             std::to_string(shape->n));
    }
    r.lower = v;
    r.exact = v;
    if (!r.upper || *r.upper > v) r.upper = v;
    return r;
  }

  if (n >= 1 && is_planar_graph(g)) {
    r.lower = 1;
    r.exact = 1;
    r.upper = 1;
    r.provenance.push_back("exact: planar");
    return r;
  }

  // Non-planar, so n >= 5.
  r.lower = unc_lower_bound_euler(n, m);
  r.provenance.push_back("lower: euler edge bound " + std::to_string(r.lower));
  if (is_connected(g)) {
    const auto d = unc_lower_bound_density(n, m);
    r.provenance.push_back("lower: density bound " + std::to_string(d));
    r.lower = std::max(r.lower, d);
  } else {
    const auto comp = connected_components(g);
    const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::int64_t> verts(static_cast<std::size_t>(count), 0);
    std::vector<std::int64_t> edges(static_cast<std::size_t>(count), 0);
    for (int c : comp) ++verts[static_cast<std::size_t>(c)];
    for (const auto& e : g.edges()) ++edges[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])];
    std::int64_t best = 0;
    for (std::size_t c = 0; c < verts.size(); ++c)
      if (verts[c] >= 3) best = std::max(best, unc_lower_bound_density(verts[c], edges[c]));
    r.provenance.push_back("lower: per-component density bound " + std::to_string(best) +
                           " (derived; host is disconnected)");
    r.lower = std::max(r.lower, best);
  }
  if (r.upper && *r.upper == r.lower) r.exact = r.lower;
  return r;
}

}  // namespace unc
