#include "unc/certificate_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "text_reader.hpp"

namespace unc {
namespace {

using detail::TextReader;

void expect_keyword(TextReader& r, const std::vector<std::string>& t, const char* word, std::size_t arity) {
  if (t.empty() || t[0] != word) r.fail(std::string("expected '") + word + "'");
  if (t.size() != arity + 1)
    r.fail(std::string("'") + word + "' takes " + std::to_string(arity) + " argument(s)");
}

int to_vertex(TextReader& r, const std::string& token, int n) {
  const auto v = r.to_int(token);
  if (v < 0 || v >= n) r.fail("vertex " + token + " out of range");
  return static_cast<int>(v);
}

PlaneDrawing read_drawing(TextReader& r, int n) {
  auto t = r.expect("'edges c'");
  expect_keyword(r, t, "edges", 1);
  const auto count = r.to_int(t[1]);
  if (count < 0) r.fail("negative edge count");
  std::vector<Edge> edges;
  for (long long i = 0; i < count; ++i) {
    auto e = r.expect("edge line");
    if (e.size() != 2) r.fail("edge line must be 'u v'");
    const int u = to_vertex(r, e[0], n);
    const int v = to_vertex(r, e[1], n);
    if (u == v) r.fail("drawn edge is a loop");
    edges.push_back(Edge::make(u, v));
  }

  t = r.expect("'rotation'");
  expect_keyword(r, t, "rotation", 0);
  Rotation rot(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    auto line = r.expect("rotation line 'v: ...'");
    std::string head = line[0];
    if (head.size() < 2 || head.back() != ':') r.fail("rotation line must start with 'v:'");
    head.pop_back();
    const int v = to_vertex(r, head, n);
    if (seen[static_cast<std::size_t>(v)]) r.fail("vertex " + head + " has two rotation lines");
    seen[static_cast<std::size_t>(v)] = 1;
    for (std::size_t k = 1; k < line.size(); ++k) rot[static_cast<std::size_t>(v)].push_back(to_vertex(r, line[k], n));
  }

  std::optional<Dart> outer;
  if (auto o = r.next()) {
    if ((*o)[0] == "outer:") {
      if (o->size() != 2) r.fail("outer line must be 'outer: u->v'");
      const auto& d = (*o)[1];
      const auto arrow = d.find("->");
      if (arrow == std::string::npos) r.fail("outer line must be 'outer: u->v'");
      outer = Dart{to_vertex(r, d.substr(0, arrow), n), to_vertex(r, d.substr(arrow + 2), n)};
    } else {
      r.push_back(std::move(*o));
    }
  }
  return PlaneDrawing(n, std::move(edges), std::move(rot), outer);
}

}  // namespace

void write_certificate(std::ostream& out, const UncrossedCertificate& c) {
  out << "graph\n";
  write_edge_list(out, c.host);
  for (std::size_t k = 0; k < c.drawings.size(); ++k) {
    const auto& d = c.drawings[k];
    out << "drawing " << k << '\n' << "edges " << d.edge_count() << '\n';
    for (const auto& e : d.edges()) out << e.u << ' ' << e.v << '\n';
    out << "rotation\n" << format_rotation(d);
  }
}

std::string format_certificate(const UncrossedCertificate& c) {
  std::ostringstream out;
  write_certificate(out, c);
  return out.str();
}

UncrossedCertificate read_certificate(std::istream& in) {
  TextReader r(in);
  auto t = r.expect("'graph'");
  expect_keyword(r, t, "graph", 0);
  UncrossedCertificate c{detail::read_edge_list_block(r), {}};
  while (auto line = r.next()) {
    expect_keyword(r, *line, "drawing", 1);
    if (r.to_int((*line)[1]) != static_cast<long long>(c.drawings.size())) r.fail("drawings must be numbered 0, 1, ...");
    c.drawings.push_back(read_drawing(r, c.host.vertex_count()));
  }
  return c;
}

UncrossedCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

UncrossedCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_certificate(in);
}

void write_cover(std::ostream& out, const DoubleCycleCover& c) {
  out << "cover " << c.m << ' ' << c.n << ' ' << c.cycles.size() << '\n';
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const auto& cyc = c.cycles[i];
    out << "cycle " << i << '\n' << "degrees";
    for (int d : c.degree_sequences[i]) out << ' ' << d;
    out << '\n' << "start " << c.start_indices[i] << '\n' << "blacks";
    for (int b : cyc.blacks) out << ' ' << b;
    out << '\n';
    for (std::size_t k = 0; k < cyc.quads.size(); ++k) {
      out << "quad " << k << ' ' << cyc.quads[k].inner << ' ';
      if (cyc.quads[k].outer)
        out << *cyc.quads[k].outer;
      else
        out << '-';
      out << '\n';
    }
    for (std::size_t k = 0; k < cyc.leaves.size(); ++k) {
      out << "leaves " << k;
      for (int w : cyc.leaves[k]) out << ' ' << w;
      out << '\n';
    }
  }
}

std::string format_cover(const DoubleCycleCover& c) {
  std::ostringstream out;
  write_cover(out, c);
  return out.str();
}

DoubleCycleCover read_cover(std::istream& in) {
  TextReader r(in);
  auto t = r.expect("'cover m n cycles'");
  expect_keyword(r, t, "cover", 3);
  DoubleCycleCover c;
  c.m = static_cast<int>(r.to_int(t[1]));
  c.n = static_cast<int>(r.to_int(t[2]));
  const auto cycles = r.to_int(t[3]);
  if (c.m < 1 || c.n < 1 || cycles < 0) r.fail("cover sizes must be positive");
  const int total = c.m + c.n;

  for (long long i = 0; i < cycles; ++i) {
    t = r.expect("'cycle i'");
    expect_keyword(r, t, "cycle", 1);
    if (r.to_int(t[1]) != i) r.fail("cycles must be numbered 0, 1, ...");

    t = r.expect("'degrees ...'");
    if (t[0] != "degrees") r.fail("expected 'degrees'");
    std::vector<int> degrees;
    for (std::size_t k = 1; k < t.size(); ++k) degrees.push_back(static_cast<int>(r.to_int(t[k])));
    c.degree_sequences.push_back(std::move(degrees));

    t = r.expect("'start s'");
    expect_keyword(r, t, "start", 1);
    c.start_indices.push_back(static_cast<int>(r.to_int(t[1])));

    t = r.expect("'blacks ...'");
    if (t[0] != "blacks" || t.size() < 3) r.fail("expected 'blacks' with at least two vertices");
    DoubleCycle cyc;
    for (std::size_t k = 1; k < t.size(); ++k) cyc.blacks.push_back(to_vertex(r, t[k], total));
    const auto len = cyc.blacks.size();

    for (std::size_t k = 0; k < len; ++k) {
      t = r.expect("'quad i inner outer'");
      expect_keyword(r, t, "quad", 3);
      if (r.to_int(t[1]) != static_cast<long long>(k)) r.fail("quads must be numbered 0, 1, ...");
      QuadWhites q{to_vertex(r, t[2], total), std::nullopt};
      if (t[3] == "-") {
        if (cyc.removed_slot) r.fail("at most one removed slot per cycle");
        cyc.removed_slot = k;
      } else {
        q.outer = to_vertex(r, t[3], total);
      }
      cyc.quads.push_back(q);
    }
    for (std::size_t k = 0; k < len; ++k) {
      t = r.expect("'leaves i ...'");
      if (t[0] != "leaves" || t.size() < 2) r.fail("expected 'leaves i ...'");
      if (r.to_int(t[1]) != static_cast<long long>(k)) r.fail("leaves must be numbered 0, 1, ...");
      std::vector<int> leaves;
      for (std::size_t j = 2; j < t.size(); ++j) leaves.push_back(to_vertex(r, t[j], total));
      cyc.leaves.push_back(std::move(leaves));
    }
    c.cycles.push_back(std::move(cyc));
  }
  if (r.next()) r.fail("trailing content after cover");
  return c;
}

DoubleCycleCover parse_cover(const std::string& text) {
  std::istringstream in(text);
  return read_cover(in);
}

void write_parts(std::ostream& out, const Graph& host, const std::vector<EdgeSet>& parts) {
  out << "parts " << parts.size() << '\n';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto idx = parts[i].indices();
    out << "part " << i << ' ' << idx.size() << '\n';
    for (auto k : idx) out << host.edge(k).u << ' ' << host.edge(k).v << '\n';
  }
}

std::string format_parts(const Graph& host, const std::vector<EdgeSet>& parts) {
  std::ostringstream out;
  write_parts(out, host, parts);
  return out.str();
}

std::vector<EdgeSet> read_parts(std::istream& in, const Graph& host) {
  TextReader r(in);
  auto t = r.expect("'parts k'");
  expect_keyword(r, t, "parts", 1);
  const auto k = r.to_int(t[1]);
  if (k < 0) r.fail("negative part count");
  std::vector<EdgeSet> parts;
  for (long long i = 0; i < k; ++i) {
    t = r.expect("'part i c'");
    expect_keyword(r, t, "part", 2);
    if (r.to_int(t[1]) != i) r.fail("parts must be numbered 0, 1, ...");
    const auto count = r.to_int(t[2]);
    EdgeSet part(host.edge_count());
    for (long long j = 0; j < count; ++j) {
      auto e = r.expect("edge line");
      if (e.size() != 2) r.fail("edge line must be 'u v'");
      const int u = to_vertex(r, e[0], host.vertex_count());
      const int v = to_vertex(r, e[1], host.vertex_count());
      auto idx = host.edge_index(u, v);
      if (!idx) r.fail("edge " + e[0] + "-" + e[1] + " is not in the graph");
      part.set(*idx);
    }
    parts.push_back(std::move(part));
  }
  if (r.next()) r.fail("trailing content after parts");
  return parts;
}

std::vector<EdgeSet> parse_parts(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  return read_parts(in, host);
}

std::vector<EdgeSet> load_parts(const std::string& path, const Graph& host) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_parts(in, host);
}

}  // namespace unc
