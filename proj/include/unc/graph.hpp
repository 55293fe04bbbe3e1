#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unc {

enum class Color : std::uint8_t { black, white };

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Edges are kept in lexicographic
// order; the position of an edge in that order is its index, which is the
// index space of EdgeSet.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Color>> coloring = std::nullopt);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(int v) const { return neighbors(v).size(); }

  bool has_edge(int a, int b) const { return edge_index(a, b).has_value(); }
  std::optional<std::size_t> edge_index(int a, int b) const;
  std::size_t edge_index_or_throw(int a, int b) const;

  const std::optional<std::vector<Color>>& coloring() const { return coloring_; }
  // For K_{b,w}-style colorings (blacks 0..b-1): the black count, otherwise nullopt.
  std::optional<int> black_prefix() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && coloring_ == other.coloring_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<std::vector<Color>> coloring_;
};

// Fixed-size bitset over the edge index space of a host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  static EdgeSet full(std::size_t universe);
  static EdgeSet of(std::size_t universe, std::span<const std::size_t> indices);

  std::size_t universe() const { return universe_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet operator~() const;
  std::vector<std::size_t> indices() const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

EdgeSet operator|(EdgeSet a, const EdgeSet& b);
EdgeSet operator&(EdgeSet a, const EdgeSet& b);

Graph complete_graph(int n);
// Blacks are 0..m-1, whites m..m+n-1.
Graph complete_bipartite(int m, int n);

bool is_connected(const Graph& g);
// Component id per vertex, numbered in order of smallest member.
std::vector<int> connected_components(const Graph& g);

// Spanning subgraph of host on the edges in `subset`.
Graph edge_subgraph(const Graph& host, const EdgeSet& subset);
EdgeSet edge_set_of(const Graph& host, std::span<const Edge> edges);

// Two-coloring if g is bipartite.
std::optional<std::vector<Color>> bipartition(const Graph& g);

std::string to_string(const Edge& e);

}  // namespace unc
