#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unc/graph.hpp"

namespace unc {

struct Dart {
  int from = 0;
  int to = 0;
  auto operator<=>(const Dart&) const = default;
};

// Per-vertex cyclic order of neighbors.
using Rotation = std::vector<std::vector<int>>;

// A rotation that does not describe the drawn edge set. `vertex` is the first
// offending vertex, or -1 when the problem is not local to one vertex.
class MalformedRotation : public std::runtime_error {
 public:
  MalformedRotation(int vertex, const std::string& what) : std::runtime_error(what), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// Combinatorial plane drawing of a spanning subgraph: the drawn edges plus a
// rotation system over them. Structural consistency is checked by
// check_rotation(), not by the constructor, so that malformed certificate
// input can be represented and reported.
class PlaneDrawing {
 public:
  PlaneDrawing() = default;
  PlaneDrawing(int n, std::vector<Edge> edges, Rotation rotation, std::optional<Dart> outer = std::nullopt);
  // Drawn edges are read off the rotation.
  static PlaneDrawing from_rotation(Rotation rotation, std::optional<Dart> outer = std::nullopt);

  int vertex_count() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Rotation& rotation() const { return rotation_; }
  const std::optional<Dart>& outer() const { return outer_; }
  void set_outer(std::optional<Dart> outer) { outer_ = outer; }

  EdgeSet drawn_edges(const Graph& host) const { return edge_set_of(host, edges_); }
  Graph as_graph() const { return Graph(n_, edges_); }

  bool operator==(const PlaneDrawing&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  Rotation rotation_;
  std::optional<Dart> outer_;
};

struct Face {
  int id = 0;
  std::vector<Dart> walk;     // boundary darts in traversal order
  std::vector<int> vertices;  // sorted, distinct
  std::size_t length() const { return walk.size(); }
};

// Throws MalformedRotation unless every vertex lists exactly its drawn
// neighbors, each once.
void check_rotation(const PlaneDrawing& d);

// Dart (u,v) is followed by (v,w) where w comes right after u in the
// rotation at v. A drawing without edges on a single vertex has one empty
// face containing that vertex.
std::vector<Face> trace_faces(const PlaneDrawing& d);

// Connected, spanning, and n - e + f = 2 for the traced faces.
bool is_planar_embedding(const PlaneDrawing& d);

// Vertex-to-face incidence of a traced drawing, for repeated cofaciality
// queries.
class FaceIncidence {
 public:
  explicit FaceIncidence(const PlaneDrawing& d);
  FaceIncidence(int n, const std::vector<Face>& faces);

  const std::vector<Face>& faces() const { return faces_; }
  std::span<const int> faces_at(int v) const { return at_[static_cast<std::size_t>(v)]; }
  bool cofacial(int u, int v) const;
  // Id of a face containing both u and v, if any.
  std::optional<int> common_face(int u, int v) const;
  std::optional<int> face_of_dart(Dart d) const;

 private:
  std::vector<Face> faces_;
  std::vector<std::vector<int>> at_;
};

bool cofacial(const PlaneDrawing& d, int u, int v);

// Rotation of a straight-line drawing: neighbors sorted counterclockwise by
// angle. Only meaningful when the straight-line drawing is crossing-free.
Rotation rotation_from_coordinates(int n, std::span<const Edge> edges,
                                   std::span<const std::pair<double, double>> xy);

// Planarity of an abstract graph with a witness rotation.
std::optional<PlaneDrawing> planar_embedding(const Graph& g);
bool is_planar_graph(const Graph& g);

// Edges of a Kuratowski subdivision when g is not planar.
std::vector<Edge> kuratowski_witness(const Graph& g);

struct OuterplanarEmbedding {
  PlaneDrawing drawing;
  // outer_corner[v]: position in rotation[v] at which an edge into the outer
  // face may be inserted (0 for isolated vertices).
  std::vector<std::size_t> outer_corner;
};

// Embedding with every vertex on the outer face, obtained from a planar
// embedding of g plus an apex adjacent to every vertex. For connected g the
// drawing's outer() dart lies on the face that contains all vertices.
std::optional<OuterplanarEmbedding> outerplanar_embedding(const Graph& g);
bool is_outerplanar(const Graph& g);
// Edges of g inside a Kuratowski subdivision of g plus apex, when g is not
// outerplanar.
std::vector<Edge> outerplanarity_witness(const Graph& g);

std::string format_rotation(const PlaneDrawing& d);

}  // namespace unc
