#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unc/graph.hpp"

namespace unc {

// Closed-form values for the uncrossed number unc, the outerthickness, and
// h (the maximum number of edges left uncrossed by a single drawing).
// All functions are pure and throw std::invalid_argument on domain errors.

std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// unc(K_n): ceil((n+1)/4), except 3 for n = 7 and 1 for n = 4.
std::int64_t unc_complete(std::int64_t n);
// unc(K_{m,n}); arguments are swapped so that m <= n.
std::int64_t unc_complete_bipartite(std::int64_t m, std::int64_t n);

// h(K_n) = 2n - 2 for n >= 4.
std::int64_t h_complete(std::int64_t n);
// h(K_{m,n}) for m <= n.
std::int64_t h_complete_bipartite(std::int64_t m, std::int64_t n);

// Outerthickness of K_n and K_{m,n} (m, n swapped when m > n).
std::int64_t outerthickness_complete(std::int64_t n);
std::int64_t outerthickness_complete_bipartite(std::int64_t m, std::int64_t n);

// f(n, m) = (3n - 5 + sqrt((3n-5)^2 - 4m)) / 2, the most edges one uncrossed
// subdrawing of a connected n-vertex, m-edge graph can hold.
double density_f(std::int64_t n, std::int64_t m);
// f(n, m) when it is an integer (perfect-square discriminant of matching parity).
std::optional<std::int64_t> density_f_exact(std::int64_t n, std::int64_t m);
// ceil(m / f(n, m)), evaluated in exact integer arithmetic. Requires n >= 3.
std::int64_t unc_lower_bound_density(std::int64_t n, std::int64_t m);

// ceil(m / h).
std::int64_t unc_lower_bound_h(std::int64_t m_edges, std::int64_t h);

// ceil(m / (3n - 6)) for n >= 3; the Euler bound on planar edge counts.
std::int64_t unc_lower_bound_euler(std::int64_t n, std::int64_t m);

struct BoundReport {
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> exact;
  std::vector<std::string> provenance;

  bool optimal() const { return upper && *upper == lower; }
};

// Recognized complete graph shape, if any.
struct CompleteShape {
  enum class Kind { complete, complete_bipartite } kind;
  std::int64_t m = 0;  // part sizes (m <= n) for bipartite, m unused for K_n
  std::int64_t n = 0;
};
std::optional<CompleteShape> recognize_complete(const Graph& g);

// Bounds on unc(g). Exact values for K_n / K_{m,n} and planar graphs; otherwise
// the density and Euler lower bounds. An upper bound is reported only when
// an outerplanar cover of E(g) is supplied.
BoundReport bound_report(const Graph& g, std::span<const EdgeSet> outerplanar_cover = {});

}  // namespace unc
