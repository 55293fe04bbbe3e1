#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unc/embedding.hpp"
#include "unc/formulas.hpp"
#include "unc/graph.hpp"

namespace unc {

// Claimed uncrossed collection: drawings over the same host, each drawing's
// edges being the ones it leaves uncrossed.
struct UncrossedCertificate {
  Graph host;
  std::vector<PlaneDrawing> drawings;

  std::size_t size() const { return drawings.size(); }
  bool operator==(const UncrossedCertificate&) const = default;
};

struct DrawingReport {
  // Structural problems: wrong vertex count, rotation/edge mismatch, drawn
  // edges missing from the host. When set, the fields below are not computed.
  std::optional<std::string> malformed;
  bool connected = false;
  bool planar = false;  // Euler count over traced faces
  std::size_t faces = 0;
  std::vector<Edge> not_cofacial;  // undrawn host edges without a shared face

  bool admissible() const { return !malformed && connected && planar && not_cofacial.empty(); }
};

// A drawing is admissible for host when it is a connected spanning plane
// drawing and every undrawn host edge joins two cofacial vertices.
DrawingReport verify_drawing(const Graph& host, const PlaneDrawing& d);

struct CertificateReport {
  std::optional<std::string> unsupported;  // disconnected host
  std::vector<DrawingReport> drawings;
  // Per host edge (in edge index order): first drawing that draws it.
  std::vector<std::optional<std::size_t>> witness;
  std::vector<Edge> uncovered;

  bool malformed() const;
  bool passed() const;
};

CertificateReport verify_certificate(const UncrossedCertificate& c);

// Sandwich |c| between the formula lower bounds and itself.
BoundReport certificate_size_vs_bounds(const UncrossedCertificate& c);

std::string format_report_text(const UncrossedCertificate& c, const CertificateReport& r);

}  // namespace unc
