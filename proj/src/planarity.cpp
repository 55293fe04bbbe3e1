#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <iterator>

#include "unc/embedding.hpp"

namespace unc {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(int n, std::span<const Edge> edges, bool with_apex) {
  BoostGraph bg(static_cast<std::size_t>(n + (with_apex ? 1 : 0)));
  for (const auto& e : edges) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  if (with_apex)
    for (int v = 0; v < n; ++v) boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(n), bg);
  int index = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, index++);
  return bg;
}

struct BoostResult {
  bool planar = false;
  Rotation rotation;  // includes the apex when one was added
  std::vector<Edge> kuratowski;
};

BoostResult run_boyer_myrvold(int n, std::span<const Edge> edges, bool with_apex) {
  BoostGraph bg = to_boost(n, edges, with_apex);
  const auto vertices = boost::num_vertices(bg);
  std::vector<std::vector<BoostEdge>> storage(vertices);
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> kuratowski_edges;

  BoostResult result;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski_edges));

  if (result.planar) {
    result.rotation.resize(vertices);
    for (std::size_t v = 0; v < vertices; ++v) {
      for (const auto& e : storage[v]) {
        const auto s = boost::source(e, bg);
        const auto t = boost::target(e, bg);
        result.rotation[v].push_back(static_cast<int>(s == v ? t : s));
      }
    }
  } else {
    for (const auto& e : kuratowski_edges)
      result.kuratowski.push_back(
          Edge::make(static_cast<int>(boost::source(e, bg)), static_cast<int>(boost::target(e, bg))));
    std::sort(result.kuratowski.begin(), result.kuratowski.end());
  }
  return result;
}

}  // namespace

std::optional<PlaneDrawing> planar_embedding(const Graph& g) {
  auto r = run_boyer_myrvold(g.vertex_count(), g.edges(), false);
  if (!r.planar) return std::nullopt;
  return PlaneDrawing(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()), std::move(r.rotation));
}

bool is_planar_graph(const Graph& g) { return run_boyer_myrvold(g.vertex_count(), g.edges(), false).planar; }

std::vector<Edge> kuratowski_witness(const Graph& g) {
  return run_boyer_myrvold(g.vertex_count(), g.edges(), false).kuratowski;
}

std::optional<OuterplanarEmbedding> outerplanar_embedding(const Graph& g) {
  const int n = g.vertex_count();
  auto r = run_boyer_myrvold(n, g.edges(), true);
  if (!r.planar) return std::nullopt;

  Rotation rotation(static_cast<std::size_t>(n));
  std::vector<std::size_t> corner(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    const auto& full = r.rotation[static_cast<std::size_t>(v)];
    auto apex = std::find(full.begin(), full.end(), n);
    corner[static_cast<std::size_t>(v)] = static_cast<std::size_t>(apex - full.begin());
    for (int w : full)
      if (w != n) rotation[static_cast<std::size_t>(v)].push_back(w);
  }

  // The corner left by the apex at v lies on the outer face; the dart leaving
  // v right after that corner therefore bounds the outer face.
  std::optional<Dart> outer;
  for (int v = 0; v < n && !outer; ++v) {
    const auto& rot = rotation[static_cast<std::size_t>(v)];
    if (rot.empty()) continue;
    outer = Dart{v, rot[corner[static_cast<std::size_t>(v)] % rot.size()]};
  }
  PlaneDrawing drawing(n, std::vector<Edge>(g.edges().begin(), g.edges().end()), std::move(rotation), outer);
  return OuterplanarEmbedding{std::move(drawing), std::move(corner)};
}

bool is_outerplanar(const Graph& g) { return run_boyer_myrvold(g.vertex_count(), g.edges(), true).planar; }

std::vector<Edge> outerplanarity_witness(const Graph& g) {
  const int apex = g.vertex_count();
  auto r = run_boyer_myrvold(apex, g.edges(), true);
  std::vector<Edge> out;
  for (const auto& e : r.kuratowski)
    if (e.v != apex) out.push_back(e);
  return out;
}

}  // namespace unc
