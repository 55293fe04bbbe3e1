#include "unc/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace unc {

PlaneDrawing::PlaneDrawing(int n, std::vector<Edge> edges, Rotation rotation, std::optional<Dart> outer)
    : n_(n), edges_(std::move(edges)), rotation_(std::move(rotation)), outer_(outer) {
  for (auto& e : edges_) e = Edge::make(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  rotation_.resize(static_cast<std::size_t>(n_));
}

PlaneDrawing PlaneDrawing::from_rotation(Rotation rotation, std::optional<Dart> outer) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < rotation.size(); ++v)
    for (int w : rotation[v])
      if (static_cast<int>(v) < w) edges.push_back({static_cast<int>(v), w});
  const int n = static_cast<int>(rotation.size());
  return PlaneDrawing(n, std::move(edges), std::move(rotation), outer);
}

void check_rotation(const PlaneDrawing& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> expected(static_cast<std::size_t>(n));
  for (const auto& e : d.edges()) {
    if (e.u < 0 || e.v >= n || e.u == e.v)
      throw MalformedRotation(-1, "drawn edge " + to_string(e) + " is out of range");
    expected[static_cast<std::size_t>(e.u)].push_back(e.v);
    expected[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  if (std::adjacent_find(d.edges().begin(), d.edges().end()) != d.edges().end())
    throw MalformedRotation(-1, "duplicate drawn edge");
  if (d.rotation().size() != static_cast<std::size_t>(n))
    throw MalformedRotation(-1, "rotation does not cover every vertex");
  for (int v = 0; v < n; ++v) {
    auto listed = d.rotation()[static_cast<std::size_t>(v)];
    auto want = expected[static_cast<std::size_t>(v)];
    std::sort(listed.begin(), listed.end());
    std::sort(want.begin(), want.end());
    if (listed != want)
      throw MalformedRotation(v, "rotation at vertex " + std::to_string(v) + " does not match its drawn neighbors");
  }
  if (const auto& o = d.outer()) {
    const auto& rot = d.rotation();
    if (o->from < 0 || o->from >= n ||
        std::find(rot[static_cast<std::size_t>(o->from)].begin(), rot[static_cast<std::size_t>(o->from)].end(),
                  o->to) == rot[static_cast<std::size_t>(o->from)].end())
      throw MalformedRotation(o->from, "outer dart is not a drawn edge");
  }
}

namespace {

// Position of w in the rotation of v.
std::size_t position_in(const std::vector<int>& rot, int w) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
}

}  // namespace

std::vector<Face> trace_faces(const PlaneDrawing& d) {
  check_rotation(d);
  const auto& rot = d.rotation();
  const auto n = static_cast<std::size_t>(d.vertex_count());

  if (d.edge_count() == 0) {
    if (n == 1) return {Face{0, {}, {0}}};
    return {};
  }

  // Dart (v, rot[v][i]) gets id offset[v] + i.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + rot[v].size();
  std::vector<char> seen(offset[n], 0);

  std::vector<Face> faces;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      if (seen[offset[v] + i]) continue;
      Face face;
      face.id = static_cast<int>(faces.size());
      std::size_t cv = v;
      std::size_t ci = i;
      while (!seen[offset[cv] + ci]) {
        seen[offset[cv] + ci] = 1;
        const int to = rot[cv][ci];
        face.walk.push_back({static_cast<int>(cv), to});
        const auto& next_rot = rot[static_cast<std::size_t>(to)];
        const std::size_t back = position_in(next_rot, static_cast<int>(cv));
        ci = (back + 1) % next_rot.size();
        cv = static_cast<std::size_t>(to);
      }
      for (const auto& dart : face.walk) face.vertices.push_back(dart.from);
      std::sort(face.vertices.begin(), face.vertices.end());
      face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()), face.vertices.end());
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool is_planar_embedding(const PlaneDrawing& d) {
  const Graph g = d.as_graph();
  if (!is_connected(g)) return false;
  const auto faces = trace_faces(d);
  const long long euler = static_cast<long long>(d.vertex_count()) - static_cast<long long>(d.edge_count()) +
                          static_cast<long long>(faces.size());
  return euler == 2;
}

FaceIncidence::FaceIncidence(const PlaneDrawing& d) : FaceIncidence(d.vertex_count(), trace_faces(d)) {}

FaceIncidence::FaceIncidence(int n, const std::vector<Face>& faces)
    : faces_(faces), at_(static_cast<std::size_t>(n)) {
  for (const auto& f : faces_)
    for (int v : f.vertices) at_[static_cast<std::size_t>(v)].push_back(f.id);
}

std::optional<int> FaceIncidence::common_face(int u, int v) const {
  const auto& a = at_[static_cast<std::size_t>(u)];
  const auto& b = at_[static_cast<std::size_t>(v)];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return std::nullopt;
}

bool FaceIncidence::cofacial(int u, int v) const { return common_face(u, v).has_value(); }

std::optional<int> FaceIncidence::face_of_dart(Dart d) const {
  for (const auto& f : faces_)
    if (std::find(f.walk.begin(), f.walk.end(), d) != f.walk.end()) return f.id;
  return std::nullopt;
}

bool cofacial(const PlaneDrawing& d, int u, int v) { return FaceIncidence(d).cofacial(u, v); }

Rotation rotation_from_coordinates(int n, std::span<const Edge> edges,
                                   std::span<const std::pair<double, double>> xy) {
  Rotation rot(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    rot[static_cast<std::size_t>(e.u)].push_back(e.v);
    rot[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& r = rot[static_cast<std::size_t>(v)];
    const auto [x0, y0] = xy[static_cast<std::size_t>(v)];
    auto angle = [&](int w) {
      const auto [x, y] = xy[static_cast<std::size_t>(w)];
      return std::atan2(y - y0, x - x0);
    };
    std::stable_sort(r.begin(), r.end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return rot;
}

std::string format_rotation(const PlaneDrawing& d) {
  std::ostringstream out;
  for (int v = 0; v < d.vertex_count(); ++v) {
    out << v << ':';
    for (int w : d.rotation()[static_cast<std::size_t>(v)]) out << ' ' << w;
    out << '\n';
  }
  if (d.outer()) out << "outer: " << d.outer()->from << "->" << d.outer()->to << '\n';
  return out.str();
}

}  // namespace unc
