#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "unc/certify.hpp"
#include "unc/embedding.hpp"
#include "unc/graph.hpp"

namespace unc {

// A construction that could not be completed; no certificate is emitted.
class DecompositionNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wheel over n vertices: hub joined to the rim cycle, rim in the given cyclic
// order. Vertices outside {hub} + rim are not allowed.
PlaneDrawing wheel(int n, int hub, std::span<const int> rim);
// Hub 0, rim 1..n-1; every pair of K_n vertices ends up cofacial.
PlaneDrawing wheel_drawing(int n);
// Two wheels covering K_5: hub 4 with rim 0 1 2 3, and hub 0 with rim 1 2 4 3.
UncrossedCertificate k5_two_wheel_certificate();

// Ladder on blacks 0..m-1 and whites m..2m-1 plus n-m white leaves, as an
// outerplanar drawing over the vertex set of K_{m,n}. 2m+n-2 edges.
std::vector<Edge> ladder_with_leaves_edges(int m, int n);
PlaneDrawing ladder_with_leaves(int m, int n);

struct QuadWhites {
  int inner = 0;
  std::optional<int> outer;  // absent only at the removed slot
  bool operator==(const QuadWhites&) const = default;
};

// Black cycle b_0..b_{k-1}; cycle edge i joins b_i and b_{i+1} through the two
// whites quads[i]. leaves[i] are pendant whites on b_i.
struct DoubleCycle {
  std::vector<int> blacks;
  std::vector<QuadWhites> quads;
  std::vector<std::vector<int>> leaves;
  std::optional<std::size_t> removed_slot;  // cycle edge whose outer white is missing

  std::vector<Edge> edges() const;
  bool operator==(const DoubleCycle&) const = default;
};

struct DoubleCycleCover {
  int m = 0;
  int n = 0;
  std::vector<std::vector<int>> degree_sequences;  // black degrees per cycle
  std::vector<int> start_indices;                   // 0-based white index s per cycle
  std::vector<DoubleCycle> cycles;

  Graph host() const { return complete_bipartite(m, n); }
  bool operator==(const DoubleCycleCover&) const = default;
};

// Initial black degrees floor(i(2m+n)/m) - floor((i-1)(2m+n)/m), i = 1..m.
std::vector<int> double_cycle_degrees(int m, int n);
// K_{m,n} with n >= 2m by ceil(mn/(2m+n)) double cycles with leaves.
DoubleCycleCover double_cycle_cover(int m, int n);
// K_{m,2m-1} by ceil(m/2) double cycles with one white removed.
DoubleCycleCover double_cycle_cover_minus_one(int m);

// Blacks and inner whites bound one face (leaves go there too), blacks and
// outer whites the other; each white shares a face with every black.
PlaneDrawing embed_double_cycle(const DoubleCycle& c, int vertex_count);

// Outerplanar parts of K_{m,n}, 3 <= m <= n <= 2m-2, one per drawing:
// ceil(mn/(2m+n-2)) of them. Throws DecompositionNotFound.
std::vector<EdgeSet> bipartite_outerplanar_cover(int m, int n);

// One drawing per part: the part, joined up by host edges where it is
// disconnected, embedded with all vertices on the outer face.
UncrossedCertificate collection_from_outerplanar_decomposition(const Graph& g, std::span<const EdgeSet> parts);

// Collection for K_{m,n}, m <= n, of size unc(K_{m,n}).
UncrossedCertificate bipartite_uncrossed_collection(int m, int n);

}  // namespace unc
