#pragma once

// Test-side reference implementations. They share no code with the library
// beyond the Graph container.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "unc/embedding.hpp"
#include "unc/graph.hpp"

namespace testing {

// Kuratowski search: a K5 or K3,3 subdivision. Exact for n <= 7, where a K5
// subdivision has at most two subdividing vertices and a K3,3 one at most one.
bool kuratowski_planar(const unc::Graph& g);
// g plus an apex is planar; exact for n <= 6.
bool kuratowski_outerplanar(const unc::Graph& g);

// Face walks of a rotation system, traced with its own dart table.
// Returns walk lengths.
std::vector<std::size_t> face_lengths(const unc::Rotation& rot);

// Vertex sets of the faces, same convention as above.
std::vector<std::set<int>> face_vertex_sets(const unc::Rotation& rot);

// Least k >= 0 with k * den >= num (den > 0), by counting.
std::int64_t slow_ceil(std::int64_t num, std::int64_t den);

unc::Graph random_graph(std::mt19937_64& rng, int n, double p);
unc::Graph random_connected_graph(std::mt19937_64& rng, int n, double p);

// Each vertex's neighbors in a random order.
unc::Rotation random_rotation(std::mt19937_64& rng, const unc::Graph& g);
// Each cyclic list rotated by a random offset (same embedding).
unc::Rotation rotate_starts(std::mt19937_64& rng, const unc::Rotation& rot);

}  // namespace testing

namespace testing {

// Some rotation of the drawn edges is a connected spanning plane drawing in
// which every other host edge has cofacial endpoints. Exhaustive; tiny inputs.
bool brute_admissible(const unc::Graph& host, const std::vector<unc::Edge>& drawn);

}  // namespace testing

namespace testing {

// Spanning tree of a connected graph, grown from random edges (Kruskal order).
std::vector<unc::Edge> random_spanning_tree(std::mt19937_64& rng, const unc::Graph& g);

}  // namespace testing
