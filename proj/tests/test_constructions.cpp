#include <doctest.h>

#include <set>

#include "support.hpp"
#include "unc/certify.hpp"
#include "unc/constructions.hpp"
#include "unc/formulas.hpp"

using namespace unc;

namespace {

// Union of black/white pairs over every cycle, as a plain m x n table.
bool covers_all(const DoubleCycleCover& c) {
  std::vector<std::vector<char>> hit(static_cast<std::size_t>(c.m), std::vector<char>(static_cast<std::size_t>(c.n), 0));
  for (const auto& cyc : c.cycles)
    for (const auto& e : cyc.edges()) {
      REQUIRE(e.u < c.m);
      REQUIRE(e.v >= c.m);
      REQUIRE(e.v < c.m + c.n);
      hit[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v - c.m)] = 1;
    }
  for (const auto& row : hit)
    for (char x : row)
      if (!x) return false;
  return true;
}

// Each white sees every black of its cycle on some face, traced independently.
bool whites_see_blacks(const DoubleCycle& c, const PlaneDrawing& d) {
  const auto faces = testing::face_vertex_sets(d.rotation());
  std::set<int> whites;
  for (const auto& q : c.quads) {
    whites.insert(q.inner);
    if (q.outer) whites.insert(*q.outer);
  }
  for (const auto& l : c.leaves) whites.insert(l.begin(), l.end());
  for (int w : whites)
    for (int b : c.blacks) {
      bool ok = false;
      for (const auto& f : faces) ok = ok || (f.count(w) && f.count(b));
      if (!ok) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("wheel drawings") {
  CHECK(wheel_drawing(5).edge_count() == 8);
  CHECK(wheel_drawing(4).edge_count() == 6);
  CHECK(wheel_drawing(16).edge_count() == 30);
  for (int n = 4; n <= 30; ++n) {
    const auto w = wheel_drawing(n);
    REQUIRE(w.edge_count() == static_cast<std::size_t>(2 * n - 2));
    REQUIRE(verify_drawing(complete_graph(n), w).admissible());
    const auto faces = testing::face_vertex_sets(w.rotation());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool shared = false;
        for (const auto& f : faces) shared = shared || (f.count(u) && f.count(v));
        REQUIRE(shared);
      }
  }
  CHECK_THROWS(wheel_drawing(3));
}

TEST_CASE("ladder with leaves") {
  CHECK(ladder_with_leaves(7, 9).edge_count() == 21);
  CHECK(ladder_with_leaves(3, 3).edge_count() == 7);
  CHECK(ladder_with_leaves(1, 5).edge_count() == 5);
  // the reference search is exact up to 6 vertices
  for (int m = 1; m <= 3; ++m)
    for (int n = m; m + n <= 6; ++n) {
      const auto edges = ladder_with_leaves_edges(m, n);
      REQUIRE(edges.size() == static_cast<std::size_t>(2 * m + n - 2));
      REQUIRE(testing::kuratowski_outerplanar(Graph(m + n, edges)));
      for (const auto& e : edges) REQUIRE((e.u < m && e.v >= m));
    }
  for (int m = 1; m <= 30; ++m)
    for (int n = m; n <= 30; ++n) {
      const auto d = ladder_with_leaves(m, n);
      REQUIRE(d.edge_count() == static_cast<std::size_t>(2 * m + n - 2));
      REQUIRE(is_outerplanar(d.as_graph()));
      REQUIRE(verify_drawing(complete_bipartite(m, n), d).admissible());
    }
}

TEST_CASE("double cycle degrees and windows") {
  const auto c = double_cycle_cover(9, 24);
  CHECK(c.cycles.size() == 6);
  CHECK(c.degree_sequences.front() == std::vector<int>{4, 5, 5, 4, 5, 5, 4, 5, 5});
  CHECK(double_cycle_degrees(3, 6) == std::vector<int>{4, 4, 4});
  CHECK(double_cycle_degrees(4, 8) == std::vector<int>{4, 4, 4, 4});
  CHECK(double_cycle_cover(3, 6).cycles.size() == 2);
  CHECK(double_cycle_cover(4, 8).cycles.size() == 2);

  for (int m = 3; m <= 8; ++m)
    for (int n = 2 * m; n <= 40; ++n) {
      const auto cover = double_cycle_cover(m, n);
      const auto l = static_cast<std::size_t>(testing::slow_ceil(m * n, 2 * m + n));
      REQUIRE(cover.cycles.size() == l);
      REQUIRE(covers_all(cover));
      const auto& d = cover.degree_sequences.front();
      int total = 0;
      for (int x : d) {
        REQUIRE(x >= 4);
        total += x;
      }
      REQUIRE(total == 2 * m + n);
      for (std::size_t start = 0; start < d.size(); ++start) {
        int sum = 0;
        for (std::size_t j = 0; j < l; ++j) sum += d[(start + j) % d.size()];
        REQUIRE(sum >= n);
      }
      for (const auto& cyc : cover.cycles) {
        REQUIRE(cyc.blacks.size() == static_cast<std::size_t>(m));
        REQUIRE(cyc.edges().size() == static_cast<std::size_t>(2 * m + n));
      }
    }
  CHECK_THROWS(double_cycle_cover(4, 7));
  CHECK_THROWS(double_cycle_cover(2, 8));
}

TEST_CASE("double cycle cover with a removed white") {
  CHECK(double_cycle_cover_minus_one(4).cycles.size() == 2);
  CHECK(double_cycle_cover_minus_one(3).cycles.size() == 2);
  CHECK(double_cycle_cover_minus_one(5).cycles.size() == 3);
  for (int m = 3; m <= 20; ++m) {
    const auto c = double_cycle_cover_minus_one(m);
    REQUIRE(c.n == 2 * m - 1);
    REQUIRE(c.cycles.size() == static_cast<std::size_t>((m + 1) / 2));
    REQUIRE(covers_all(c));
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
      const auto& cyc = c.cycles[i];
      REQUIRE(cyc.removed_slot);
      REQUIRE(cyc.edges().size() == static_cast<std::size_t>(4 * m - 2));
      // shift by two per cycle
      for (int p = 0; p < m; ++p) REQUIRE(cyc.blacks[static_cast<std::size_t>(p)] == (p + 2 * static_cast<int>(i)) % m);
    }
  }
}

TEST_CASE("double cycles embed with every white beside every black") {
  for (int m = 3; m <= 7; ++m)
    for (int n = 2 * m; n <= 24; n += 3) {
      const auto cover = double_cycle_cover(m, n);
      for (const auto& cyc : cover.cycles) {
        const auto d = embed_double_cycle(cyc, m + n);
        REQUIRE(is_planar_embedding(d));
        REQUIRE(whites_see_blacks(cyc, d));
        REQUIRE(verify_drawing(cover.host(), d).admissible());
      }
    }
  for (int m = 3; m <= 9; ++m) {
    const auto cover = double_cycle_cover_minus_one(m);
    for (const auto& cyc : cover.cycles) {
      const auto d = embed_double_cycle(cyc, 3 * m - 1);
      REQUIRE(whites_see_blacks(cyc, d));
      REQUIRE(verify_drawing(cover.host(), d).admissible());
    }
  }
  // two blacks
  DoubleCycle two{{0, 1}, {{2, 3}, {4, 5}}, {{6}, {}}, std::nullopt};
  const auto d = embed_double_cycle(two, 7);
  CHECK(is_planar_embedding(d));
  CHECK(whites_see_blacks(two, d));
}

TEST_CASE("collections from outerplanar parts") {
  const Graph k4 = complete_graph(4);
  EdgeSet p1(6), p2(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}) p1.set(*k4.edge_index(a, b));
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 0}, {0, 3}, {3, 1}}) p2.set(*k4.edge_index(a, b));
  const std::vector<EdgeSet> parts{p1, p2};
  const auto cert = collection_from_outerplanar_decomposition(k4, parts);
  CHECK(cert.size() == 2);
  CHECK(verify_certificate(cert).passed());

  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const std::vector<EdgeSet> one{EdgeSet::full(6)};
  CHECK(verify_certificate(collection_from_outerplanar_decomposition(c6, one)).passed());

  const std::vector<EdgeSet> bad{EdgeSet::full(6)};
  CHECK_THROWS(collection_from_outerplanar_decomposition(k4, bad));

  const Graph k46 = complete_bipartite(4, 6);
  const auto parts46 = bipartite_outerplanar_cover(4, 6);
  CHECK(parts46.size() == 2);
  CHECK(verify_certificate(collection_from_outerplanar_decomposition(k46, parts46)).passed());
}

TEST_CASE("bipartite collections") {
  CHECK(bipartite_uncrossed_collection(4, 7).size() == 2);
  CHECK(bipartite_uncrossed_collection(9, 24).size() == 6);
  CHECK(bipartite_uncrossed_collection(2, 9).size() == 1);
  for (int m = 1; m <= 6; ++m)
    for (int n = m; n <= 30; ++n) {
      const auto c = bipartite_uncrossed_collection(m, n);
      REQUIRE(c.size() == static_cast<std::size_t>(unc_complete_bipartite(m, n)));
      REQUIRE(verify_certificate(c).passed());
    }
}

TEST_CASE("outerplanar covers in the dense regime") {
  for (int m = 3; m <= 8; ++m)
    for (int n = m; n <= 2 * m - 2; ++n) {
      const auto parts = bipartite_outerplanar_cover(m, n);
      REQUIRE(parts.size() == static_cast<std::size_t>(testing::slow_ceil(m * n, 2 * m + n - 2)));
      const Graph host = complete_bipartite(m, n);
      EdgeSet all(host.edge_count());
      for (const auto& p : parts) {
        REQUIRE(is_outerplanar(edge_subgraph(host, p)));
        all = all | p;
      }
      REQUIRE(all.count() == host.edge_count());
    }
}

TEST_CASE("K5 two-wheel certificate") {
  const auto c = k5_two_wheel_certificate();
  CHECK(c.size() == 2);
  CHECK(verify_certificate(c).passed());
  for (const auto& d : c.drawings) CHECK(d.edge_count() == 8);
}

TEST_CASE("bipartite collections over the wider range") {
  for (int m = 7; m <= 8; ++m)
    for (int n = m; n <= 40; ++n) {
      const auto c = bipartite_uncrossed_collection(m, n);
      REQUIRE(c.size() == static_cast<std::size_t>(unc_complete_bipartite(m, n)));
      REQUIRE(verify_certificate(c).passed());
    }
  for (int m = 1; m <= 6; ++m)
    for (int n = 31; n <= 40; ++n) REQUIRE(verify_certificate(bipartite_uncrossed_collection(m, n)).passed());
}
