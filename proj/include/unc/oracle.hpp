#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unc/certify.hpp"
#include "unc/embedding.hpp"
#include "unc/graph.hpp"

namespace unc {

// The oracle declines hosts that are disconnected or above the edge cap.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  std::size_t cap = 12;                  // refuse hosts with more edges
  std::optional<std::size_t> max_edges;  // largest subset size examined
};

struct AdmissibleMember {
  EdgeSet edges;
  PlaneDrawing witness;
};

// Inclusion-maximal admissible edge sets of a host, each with a witness
// drawing. Members come in decreasing size, then in combination order.
struct AdmissibleFamily {
  Graph host;
  std::vector<AdmissibleMember> members;
  bool maximal_only = true;

  std::size_t max_size() const;
};

// Rotation system on `subset` that makes it an admissible drawing of host,
// searching all cyclic orders (smallest neighbor fixed first at each vertex).
// Requires the subset to be connected and spanning.
std::optional<PlaneDrawing> find_admissible_rotation(const Graph& host, const EdgeSet& subset);

AdmissibleFamily enumerate_admissible(const Graph& host, const OracleOptions& options = {});

std::size_t exact_h(const Graph& host, const OracleOptions& options = {});
std::size_t exact_ecr(const Graph& host, const OracleOptions& options = {});

struct UncResult {
  std::size_t value = 0;
  UncrossedCertificate certificate;
};
// Minimum cover of E(host) by maximal admissible sets, by iterative deepening
// from ceil(|E| / h).
UncResult exact_unc(const Graph& host, const OracleOptions& options = {});
UncResult exact_unc(const AdmissibleFamily& family);

bool max_uncrossed_subgraph(const Graph& host, std::size_t k, const OracleOptions& options = {});

}  // namespace unc
