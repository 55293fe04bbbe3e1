#include "unc/certify.hpp"

#include <algorithm>
#include <sstream>

namespace unc {

DrawingReport verify_drawing(const Graph& host, const PlaneDrawing& d) {
  DrawingReport r;
  if (d.vertex_count() != host.vertex_count()) {
    r.malformed = "drawing has " + std::to_string(d.vertex_count()) + " vertices, host has " +
                  std::to_string(host.vertex_count());
    return r;
  }
  try {
    check_rotation(d);
  } catch (const MalformedRotation& e) {
    r.malformed = e.what();
    return r;
  }
  for (const auto& e : d.edges()) {
    if (!host.has_edge(e.u, e.v)) {
      r.malformed = "drawn edge " + to_string(e) + " is not a host edge";
      return r;
    }
  }

  r.connected = is_connected(d.as_graph());
  const FaceIncidence faces(d);
  r.faces = faces.faces().size();
  const long long euler = static_cast<long long>(d.vertex_count()) - static_cast<long long>(d.edge_count()) +
                          static_cast<long long>(r.faces);
  r.planar = r.connected && euler == 2;

  const EdgeSet drawn = d.drawn_edges(host);
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    if (drawn.test(i)) continue;
    const auto& e = host.edge(i);
    if (!faces.cofacial(e.u, e.v)) r.not_cofacial.push_back(e);
  }
  return r;
}

bool CertificateReport::malformed() const {
  return std::any_of(drawings.begin(), drawings.end(), [](const auto& d) { return d.malformed.has_value(); });
}

bool CertificateReport::passed() const {
  if (unsupported || malformed() || !uncovered.empty()) return false;
  return std::all_of(drawings.begin(), drawings.end(), [](const auto& d) { return d.admissible(); });
}

CertificateReport verify_certificate(const UncrossedCertificate& c) {
  CertificateReport r;
  if (!is_connected(c.host)) {
    r.unsupported = "host graph is disconnected; certificates are only checked for connected hosts";
    return r;
  }
  r.witness.assign(c.host.edge_count(), std::nullopt);
  for (std::size_t k = 0; k < c.drawings.size(); ++k) {
    r.drawings.push_back(verify_drawing(c.host, c.drawings[k]));
    if (r.drawings.back().malformed) continue;
    for (const auto& e : c.drawings[k].edges()) {
      auto& w = r.witness[c.host.edge_index_or_throw(e.u, e.v)];
      if (!w) w = k;
    }
  }
  for (std::size_t i = 0; i < c.host.edge_count(); ++i)
    if (!r.witness[i]) r.uncovered.push_back(c.host.edge(i));
  return r;
}

BoundReport certificate_size_vs_bounds(const UncrossedCertificate& c) {
  BoundReport r = bound_report(c.host);
  const auto k = static_cast<std::int64_t>(c.size());
  r.upper = k;
  r.provenance.push_back("upper: verified certificate of size " + std::to_string(k));
  if (r.optimal()) r.exact = r.lower;
  return r;
}

std::string format_report_text(const UncrossedCertificate& c, const CertificateReport& r) {
  std::ostringstream out;
  if (r.unsupported) {
    out << "unsupported: " << *r.unsupported << '\n';
    return out.str();
  }
  for (std::size_t k = 0; k < r.drawings.size(); ++k) {
    const auto& d = r.drawings[k];
    out << "drawing " << k << ": ";
    if (d.malformed) {
      out << "malformed (" << *d.malformed << ")\n";
      continue;
    }
    out << (d.admissible() ? "admissible" : "not admissible") << ", " << c.drawings[k].edge_count()
        << " edges, " << d.faces << " faces";
    if (!d.connected) out << ", disconnected";
    if (d.connected && !d.planar) out << ", fails Euler count";
    out << '\n';
    if (!d.not_cofacial.empty()) {
      out << "  not cofacial:";
      for (const auto& e : d.not_cofacial) out << ' ' << to_string(e);
      out << '\n';
    }
  }
  if (!r.uncovered.empty()) {
    out << "uncovered:";
    for (const auto& e : r.uncovered) out << ' ' << to_string(e);
    out << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << ": " << c.size() << " drawings over " << c.host.vertex_count()
      << " vertices, " << c.host.edge_count() << " edges\n";
  return out.str();
}

}  // namespace unc
