#include "unc/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace unc {
namespace {

constexpr double kPanel = 400.0;
constexpr double kMargin = 30.0;

void on_circle(Positions& pos, const std::vector<int>& order, double radius) {
  const auto k = order.size();
  for (std::size_t i = 0; i < k; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k) - std::numbers::pi / 2;
    pos[static_cast<std::size_t>(order[i])] = {0.5 + radius * std::cos(a), 0.5 + radius * std::sin(a)};
  }
}

Positions radial(const PlaneDrawing& d) {
  const int n = d.vertex_count();
  Positions pos(static_cast<std::size_t>(n), {0.5, 0.5});
  int hub = 0;
  for (int v = 0; v < n; ++v)
    if (d.rotation()[static_cast<std::size_t>(v)].size() > d.rotation()[static_cast<std::size_t>(hub)].size()) hub = v;
  std::vector<int> order(d.rotation()[static_cast<std::size_t>(hub)]);
  for (int v = 0; v < n; ++v)
    if (v != hub && std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  on_circle(pos, order, 0.45);
  return pos;
}

Positions bipartite(const Graph& host, const PlaneDrawing& d) {
  const int n = host.vertex_count();
  Positions pos(static_cast<std::size_t>(n));
  std::vector<int> blacks;
  std::vector<int> whites;
  const auto colors = host.coloring() ? host.coloring() : bipartition(host);
  for (int v = 0; v < n; ++v) {
    if (colors && (*colors)[static_cast<std::size_t>(v)] == Color::black)
      blacks.push_back(v);
    else
      whites.push_back(v);
  }
  if (blacks.empty()) return radial(d);
  on_circle(pos, blacks, 0.22);
  on_circle(pos, whites, 0.45);
  return pos;
}

Positions tutte(const PlaneDrawing& d) {
  const int n = d.vertex_count();
  Positions pos(static_cast<std::size_t>(n), {0.5, 0.5});
  if (d.edge_count() == 0) return pos;
  const auto faces = trace_faces(d);
  const Face* outer = &faces.front();
  if (d.outer()) {
    for (const auto& f : faces)
      if (std::find(f.walk.begin(), f.walk.end(), *d.outer()) != f.walk.end()) outer = &f;
  } else {
    for (const auto& f : faces)
      if (f.length() > outer->length()) outer = &f;
  }
  std::vector<int> ring;
  for (const auto& dart : outer->walk)
    if (std::find(ring.begin(), ring.end(), dart.from) == ring.end()) ring.push_back(dart.from);
  on_circle(pos, ring, 0.45);
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  for (int v : ring) fixed[static_cast<std::size_t>(v)] = 1;
  for (int it = 0; it < 500; ++it) {
    for (int v = 0; v < n; ++v) {
      const auto& nb = d.rotation()[static_cast<std::size_t>(v)];
      if (fixed[static_cast<std::size_t>(v)] || nb.empty()) continue;
      double x = 0;
      double y = 0;
      for (int w : nb) {
        x += pos[static_cast<std::size_t>(w)].first;
        y += pos[static_cast<std::size_t>(w)].second;
      }
      pos[static_cast<std::size_t>(v)] = {x / static_cast<double>(nb.size()), y / static_cast<double>(nb.size())};
    }
  }
  return pos;
}

Layout pick(const Graph& host, const PlaneDrawing& d, Layout layout) {
  if (layout != Layout::automatic) return layout;
  if (host.coloring()) return Layout::bipartite_circular;
  for (const auto& r : d.rotation())
    if (static_cast<int>(r.size()) == d.vertex_count() - 1 && d.vertex_count() > 2) return Layout::radial_wheel;
  return Layout::tutte_barycentric;
}

struct Point {
  double x;
  double y;
};

Point at(const Positions& pos, int v, double dx) {
  const auto& p = pos[static_cast<std::size_t>(v)];
  return {dx + kMargin + p.first * (kPanel - 2 * kMargin), kMargin + p.second * (kPanel - 2 * kMargin)};
}

// Control point for an undrawn edge: centroid of a face both endpoints share,
// or the segment midpoint when the drawing is not admissible there.
Point bend(const Positions& pos, const FaceIncidence& inc, const Edge& e, double dx) {
  const Point a = at(pos, e.u, dx);
  const Point b = at(pos, e.v, dx);
  if (auto f = inc.common_face(e.u, e.v)) {
    const auto& verts = inc.faces()[static_cast<std::size_t>(*f)].vertices;
    Point c{0, 0};
    for (int v : verts) {
      const Point p = at(pos, v, dx);
      c.x += p.x;
      c.y += p.y;
    }
    c.x /= static_cast<double>(verts.size());
    c.y /= static_cast<double>(verts.size());
    return {(c.x * 2 + (a.x + b.x) / 2) / 3, (c.y * 2 + (a.y + b.y) / 2) / 3};
  }
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

std::string render_svg(const UncrossedCertificate& c, Layout layout) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  const auto panels = std::max<std::size_t>(1, c.drawings.size());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kPanel * static_cast<double>(panels) << "\" height=\""
      << kPanel << "\" viewBox=\"0 0 " << kPanel * static_cast<double>(panels) << ' ' << kPanel << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < c.drawings.size(); ++k) {
    const auto& d = c.drawings[k];
    const double dx = kPanel * static_cast<double>(k);
    const auto pos = layout_drawing(c.host, d, layout);
    const FaceIncidence inc(d);
    const EdgeSet drawn = d.drawn_edges(c.host);
    out << "<g id=\"drawing-" << k << "\">\n";
    for (std::size_t i = 0; i < c.host.edge_count(); ++i) {
      if (drawn.test(i)) continue;
      const auto& e = c.host.edge(i);
      const Point a = at(pos, e.u, dx);
      const Point b = at(pos, e.v, dx);
      const Point q = bend(pos, inc, e, dx);
      out << "<path d=\"M " << a.x << ' ' << a.y << " Q " << q.x << ' ' << q.y << ' ' << b.x << ' ' << b.y
          << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.8\"/>\n";
    }
    for (const auto& e : d.edges()) {
      const Point a = at(pos, e.u, dx);
      const Point b = at(pos, e.v, dx);
      out << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
          << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }
    const auto& colors = c.host.coloring();
    for (int v = 0; v < c.host.vertex_count(); ++v) {
      const Point p = at(pos, v, dx);
      const bool white = colors && (*colors)[static_cast<std::size_t>(v)] == Color::white;
      out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"6\" fill=\"" << (white ? "white" : "black")
          << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << p.x + 8 << "\" y=\"" << p.y - 8 << "\" font-size=\"10\">" << v << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const UncrossedCertificate& c, Layout layout) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "graph uncrossed {\n  node [shape=circle, width=0.2, fixedsize=true, fontsize=8];\n";
  for (std::size_t k = 0; k < c.drawings.size(); ++k) {
    const auto& d = c.drawings[k];
    const auto pos = layout_drawing(c.host, d, layout);
    const EdgeSet drawn = d.drawn_edges(c.host);
    const double dx = 6.0 * static_cast<double>(k);
    out << "  subgraph cluster_" << k << " {\n    label=\"drawing " << k << "\";\n";
    const auto& colors = c.host.coloring();
    for (int v = 0; v < c.host.vertex_count(); ++v) {
      const auto& p = pos[static_cast<std::size_t>(v)];
      const bool white = colors && (*colors)[static_cast<std::size_t>(v)] == Color::white;
      out << "    d" << k << "_" << v << " [label=\"" << v << "\", pos=\"" << dx + 5 * p.first << ',' << 5 * (1 - p.second)
          << "!\", style=filled, fillcolor=" << (white ? "white" : "black") << ", fontcolor=" << (white ? "black" : "white")
          << "];\n";
    }
    for (std::size_t i = 0; i < c.host.edge_count(); ++i) {
      const auto& e = c.host.edge(i);
      out << "    d" << k << "_" << e.u << " -- d" << k << "_" << e.v;
      if (drawn.test(i))
        out << " [penwidth=3];\n";
      else
        out << " [penwidth=0.5, color=gray];\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::optional<Layout> parse_layout(const std::string& name) {
  if (name == "auto") return Layout::automatic;
  if (name == "radial-wheel") return Layout::radial_wheel;
  if (name == "bipartite-circular") return Layout::bipartite_circular;
  if (name == "tutte-barycentric") return Layout::tutte_barycentric;
  return std::nullopt;
}

std::string layout_name(Layout layout) {
  switch (layout) {
    case Layout::automatic:
      return "auto";
    case Layout::radial_wheel:
      return "radial-wheel";
    case Layout::bipartite_circular:
      return "bipartite-circular";
    case Layout::tutte_barycentric:
      return "tutte-barycentric";
  }
  return "auto";
}

Positions layout_drawing(const Graph& host, const PlaneDrawing& d, Layout layout) {
  switch (pick(host, d, layout)) {
    case Layout::radial_wheel:
      return radial(d);
    case Layout::bipartite_circular:
      return bipartite(host, d);
    default:
      return tutte(d);
  }
}

std::string render(const UncrossedCertificate& c, const RenderSpec& spec) {
  for (const auto& d : c.drawings) check_rotation(d);
  return spec.format == RenderFormat::svg ? render_svg(c, spec.layout) : render_dot(c, spec.layout);
}

}  // namespace unc
