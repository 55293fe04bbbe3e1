#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "unc/certify.hpp"
#include "unc/embedding.hpp"
#include "unc/graph.hpp"

namespace unc {

// Edge crossing number instance: source vertices keep their ids, the star
// center is n, and source edge e (in edge index order) becomes M paths
// through mids n + 1 + e*M + j.
struct EcrGadgets {
  int bundle_size = 0;  // M = 2n
  int center = 0;
  std::vector<std::vector<int>> bundle_mids;  // per source edge
};

// Uncrossed number instance: source vertices keep their ids, v reaches the
// center 2n through the subdivision vertex n + v.
struct UncGadgets {
  int center = 0;
  std::vector<int> subdivision;  // per source vertex
};

struct ReductionInstance {
  enum class Kind { ecr, unc } kind = Kind::ecr;
  Graph source;
  Graph target;
  std::int64_t k = 0;
  std::int64_t budget = 0;
  std::variant<EcrGadgets, UncGadgets> gadgets;

  // Target element -> source element, as '# ...' comment lines.
  std::string gadget_comments() const;
};

// Maximum outerplanar subgraph with >= k edges  <=>  a drawing of the target
// with at most M(|E|-k) + |V| crossed edges.
ReductionInstance reduce_mos_to_ecr(const Graph& g, std::int64_t k);
// Outerthickness <= k  <=>  uncrossed number of the target <= k.
ReductionInstance reduce_ot_to_unc(const Graph& g, std::int64_t k);

// Admissible drawing of the ecr target from an outerplanar h of the source.
PlaneDrawing ecr_forward_witness(const ReductionInstance& inst, const EdgeSet& h);
// Crossed edges of an admissible drawing: target edges it leaves undrawn.
std::int64_t crossed_edges(const ReductionInstance& inst, const PlaneDrawing& d);
// Uncrossed collection of the unc target from k >= 2 outerplanar parts.
UncrossedCertificate unc_forward_witness(const ReductionInstance& inst, const std::vector<EdgeSet>& parts);

struct ReductionValidation {
  std::size_t max_outerplanar = 0;  // k*
  EdgeSet best;
  struct Step {
    std::int64_t k = 0;
    std::int64_t crossed = 0;
    std::int64_t budget = 0;
    bool admissible = false;
  };
  std::vector<Step> ecr_steps;  // k = 0..k*
  std::size_t outerthickness = 0;
  std::vector<EdgeSet> outerplanar_parts;
  bool unc_certificate_ok = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Exhaustive forward check on a small source (at most edge_cap edges).
ReductionValidation validate_reduction_small(const Graph& g, std::size_t edge_cap = 16);

}  // namespace unc
