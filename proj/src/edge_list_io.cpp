#include "unc/edge_list_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "text_reader.hpp"

namespace unc {
namespace detail {

Graph read_edge_list_block(TextReader& reader) {
  auto header = reader.expect("'n m' header");
  if (header.size() != 2) reader.fail("edge-list header must be 'n m'");
  const long long n = reader.to_int(header[0]);
  const long long m = reader.to_int(header[1]);
  if (n < 0 || m < 0) reader.fail("negative size in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    auto t = reader.expect("edge line");
    if (t.size() != 2) reader.fail("edge line must be 'u v'");
    const long long u = reader.to_int(t[0]);
    const long long v = reader.to_int(t[1]);
    if (u < 0 || v < 0 || u >= n || v >= n) reader.fail("edge endpoint out of range");
    if (u >= v) reader.fail("edge must be written with u < v");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }

  std::optional<std::vector<Color>> coloring;
  if (auto t = reader.next()) {
    if ((*t)[0] == "colors") {
      if (t->size() != 3) reader.fail("colors line must be 'colors b w'");
      const long long b = reader.to_int((*t)[1]);
      const long long w = reader.to_int((*t)[2]);
      if (b < 0 || w < 0 || b + w != n) reader.fail("colors must split all n vertices");
      coloring = std::vector<Color>(static_cast<std::size_t>(n), Color::white);
      std::fill_n(coloring->begin(), b, Color::black);
    } else {
      reader.push_back(std::move(*t));
    }
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(coloring));
  } catch (const GraphError& e) {
    reader.fail(e.what());
  }
}

}  // namespace detail

Graph read_edge_list(std::istream& in) {
  detail::TextReader reader(in);
  Graph g = detail::read_edge_list_block(reader);
  if (reader.next()) reader.fail("trailing content after edge list");
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (auto blacks = g.black_prefix())
    out << "colors " << *blacks << ' ' << g.vertex_count() - *blacks << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace unc
