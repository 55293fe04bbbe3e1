#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unc/certify.hpp"

namespace unc {

enum class Layout { automatic, radial_wheel, bipartite_circular, tutte_barycentric };
enum class RenderFormat { svg, dot };

struct RenderSpec {
  Layout layout = Layout::automatic;
  RenderFormat format = RenderFormat::svg;
};

std::optional<Layout> parse_layout(const std::string& name);
std::string layout_name(Layout layout);

using Positions = std::vector<std::pair<double, double>>;  // unit square

// Vertex positions for one drawing of host.
Positions layout_drawing(const Graph& host, const PlaneDrawing& d, Layout layout);

// One panel per drawing; drawn edges thick, undrawn host edges thin and
// bent through a face the endpoints share.
std::string render(const UncrossedCertificate& c, const RenderSpec& spec = {});

}  // namespace unc
