#include <doctest.h>

#include "support.hpp"
#include "unc/reductions.hpp"

using namespace unc;

namespace {

Graph eight_vertex_graph() {
  // 1-based pairs shifted to 0-based ids
  const std::vector<std::pair<int, int>> raw{{1, 2}, {1, 8}, {2, 3}, {3, 4}, {3, 5}, {3, 8}, {5, 6}, {5, 7},
                                             {5, 8}, {6, 7}, {7, 8}, {1, 4}, {1, 7}, {2, 6}, {3, 7}, {4, 6}};
  std::vector<Edge> edges;
  for (auto [a, b] : raw) edges.push_back(Edge::make(a - 1, b - 1));
  return Graph(8, edges);
}

EdgeSet pick(const Graph& g, const std::vector<std::pair<int, int>>& one_based) {
  EdgeSet s(g.edge_count());
  for (auto [a, b] : one_based) s.set(g.edge_index_or_throw(a - 1, b - 1));
  return s;
}

std::vector<EdgeSet> eight_vertex_parts(const Graph& g) {
  return {pick(g, {{1, 2}, {1, 8}, {2, 3}, {3, 4}, {3, 5}, {3, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {7, 8}}),
          pick(g, {{1, 4}, {1, 7}, {2, 6}, {3, 7}, {4, 6}, {1, 2}, {1, 8}, {3, 4}, {3, 5}, {7, 8}})};
}

void check_ecr(const Graph& g, const EdgeSet& h) {
  const auto k = static_cast<std::int64_t>(h.count());
  const auto inst = reduce_mos_to_ecr(g, k);
  const auto d = ecr_forward_witness(inst, h);
  REQUIRE(verify_drawing(inst.target, d).admissible());
  const auto crossed = crossed_edges(inst, d);
  REQUIRE(crossed == static_cast<std::int64_t>(inst.target.edge_count() - d.edge_count()));
  REQUIRE(crossed <= inst.budget);
}

}  // namespace

TEST_CASE("ecr instance sizes") {
  const Graph tri = complete_graph(3);
  const auto a = reduce_mos_to_ecr(tri, 3);
  CHECK(a.target.vertex_count() == 22);
  CHECK(a.target.edge_count() == 39);
  CHECK(a.budget == 3);
  CHECK(reduce_mos_to_ecr(tri, 2).budget == 9);
  const auto b = reduce_mos_to_ecr(complete_graph(2), 1);
  CHECK(b.target.vertex_count() == 7);
  CHECK(b.target.edge_count() == 10);
  CHECK(b.budget == 2);
  CHECK_THROWS(reduce_mos_to_ecr(tri, 4));
  CHECK_THROWS(reduce_mos_to_ecr(tri, -1));
  CHECK(a.gadget_comments().find('#') == 0);
}

TEST_CASE("unc instance sizes") {
  const Graph g = eight_vertex_graph();
  const auto a = reduce_ot_to_unc(g, 2);
  CHECK(a.target.vertex_count() == 17);
  CHECK(a.target.edge_count() == 32);
  const auto one = reduce_ot_to_unc(Graph(1, {}), 3);
  CHECK(one.target.vertex_count() == 3);
  CHECK(one.target.edge_count() == 2);
  CHECK(one.budget == 3);
  const auto k4 = reduce_ot_to_unc(complete_graph(4), 2);
  CHECK(k4.target.vertex_count() == 9);
  CHECK(k4.target.edge_count() == 14);
  CHECK_THROWS(reduce_ot_to_unc(g, 0));
}

TEST_CASE("instance arithmetic on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_graph(rng, n, 0.4);
    const auto e = static_cast<std::int64_t>(g.edge_count());
    const std::int64_t k = e == 0 ? 0 : static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(e + 1));
    const auto inst = reduce_mos_to_ecr(g, k);
    const std::int64_t M = 2 * n;
    REQUIRE(std::get<EcrGadgets>(inst.gadgets).bundle_size == M);
    REQUIRE(M > n);
    REQUIRE(inst.target.vertex_count() == n + 1 + M * e);
    REQUIRE(static_cast<std::int64_t>(inst.target.edge_count()) == n + 2 * M * e);
    REQUIRE(inst.budget == M * (e - k) + n);
    // each bundle path is a length-2 path between the source endpoints
    const auto& gad = std::get<EcrGadgets>(inst.gadgets);
    for (std::size_t j = 0; j < g.edge_count(); ++j)
      for (int mid : gad.bundle_mids[j]) {
        REQUIRE(inst.target.degree(mid) == 2);
        REQUIRE(inst.target.has_edge(mid, g.edge(j).u));
        REQUIRE(inst.target.has_edge(mid, g.edge(j).v));
      }

    const auto u = reduce_ot_to_unc(g, 2);
    REQUIRE(u.target.vertex_count() == 2 * n + 1);
    REQUIRE(static_cast<std::int64_t>(u.target.edge_count()) == e + 2 * n);
    REQUIRE(u.budget == 2);
  }
}

TEST_CASE("ecr forward witnesses") {
  const Graph tri = complete_graph(3);
  check_ecr(tri, EdgeSet::full(3));
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  check_ecr(c4, EdgeSet::full(4));
  const Graph k4 = complete_graph(4);
  EdgeSet minus = EdgeSet::full(6);
  minus.reset(*k4.edge_index(0, 2));
  check_ecr(k4, minus);
  CHECK_THROWS(ecr_forward_witness(reduce_mos_to_ecr(k4, 6), EdgeSet::full(6)));

  const Graph k23 = complete_bipartite(2, 3);
  EdgeSet five = EdgeSet::full(6);
  five.reset(0);
  check_ecr(k23, five);

  const Graph g = eight_vertex_graph();
  for (const auto& p : eight_vertex_parts(g)) check_ecr(g, p);
}

TEST_CASE("unc forward witnesses") {
  const Graph g = eight_vertex_graph();
  const auto parts = eight_vertex_parts(g);
  for (const auto& p : parts) REQUIRE(is_outerplanar(edge_subgraph(g, p)));
  const auto inst = reduce_ot_to_unc(g, 2);
  const auto cert = unc_forward_witness(inst, parts);
  CHECK(cert.size() == 2);
  CHECK(verify_certificate(cert).passed());

  const Graph k4 = complete_graph(4);
  EdgeSet a(6), b(6);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}) a.set(*k4.edge_index(x, y));
  for (auto [x, y] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}}) b.set(*k4.edge_index(x, y));
  const auto k4cert = unc_forward_witness(reduce_ot_to_unc(k4, 2), {a, b});
  CHECK(verify_certificate(k4cert).passed());

  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK_THROWS(unc_forward_witness(reduce_ot_to_unc(path, 1), {EdgeSet::full(2)}));

  for (const Graph& small : {complete_graph(3), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), complete_bipartite(2, 3)}) {
    const auto all = EdgeSet::full(small.edge_count());
    EdgeSet none(small.edge_count());
    std::vector<EdgeSet> two{all, none};
    if (!is_outerplanar(small)) {
      // K23: split off one edge
      two[0].reset(0);
      two[1].set(0);
    }
    REQUIRE(verify_certificate(unc_forward_witness(reduce_ot_to_unc(small, 2), two)).passed());
  }
}

TEST_CASE("small validation") {
  const auto tri = validate_reduction_small(complete_graph(3));
  CHECK(tri.ok());
  CHECK(tri.max_outerplanar == 3);
  CHECK(tri.ecr_steps.size() == 4);

  const auto k4 = validate_reduction_small(complete_graph(4));
  CHECK(k4.ok());
  CHECK(k4.max_outerplanar == 5);
  CHECK(k4.outerthickness == 2);

  const auto k23 = validate_reduction_small(complete_bipartite(2, 3));
  CHECK(k23.ok());
  CHECK(k23.max_outerplanar == 5);
  CHECK(k23.outerthickness == 2);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const int n = 3 + i % 4;
    const Graph g = testing::random_connected_graph(rng, n, 0.5);
    const auto r = validate_reduction_small(g);
    REQUIRE(r.ok());
    for (const auto& s : r.ecr_steps) {
      REQUIRE(s.admissible);
      REQUIRE(s.crossed <= s.budget);
    }
    REQUIRE(is_outerplanar(edge_subgraph(g, r.best)));
    REQUIRE(r.best.count() == r.max_outerplanar);
    if (n <= 5) {
      std::size_t best = 0;
      const auto e = g.edge_count();
      for (std::uint64_t mask = 0; mask < (1ULL << e); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t j = 0; j < e; ++j)
          if ((mask >> j) & 1) sub.push_back(g.edge(j));
        if (sub.size() > best && testing::kuratowski_outerplanar(Graph(n, sub))) best = sub.size();
      }
      REQUIRE(r.max_outerplanar == best);
    }
  }
}
