#include "unc/reductions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace unc {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Rotation built from an outerplanar embedding of the source part: each
// source neighbor expands to a list of target neighbors, and extra target
// neighbors are inserted at the vertex's outer corner.
struct RotationBuilder {
  Rotation rot;

  RotationBuilder(int target_vertices) : rot(static_cast<std::size_t>(target_vertices)) {}

  template <class Expand>
  void lay_out(const OuterplanarEmbedding& emb, const std::map<int, std::vector<int>>& at_corner, Expand expand) {
    const int n = emb.drawing.vertex_count();
    for (int v = 0; v < n; ++v) {
      const auto& src = emb.drawing.rotation()[static_cast<std::size_t>(v)];
      const auto corner = emb.outer_corner[static_cast<std::size_t>(v)];
      auto& out = rot[static_cast<std::size_t>(v)];
      auto extra = at_corner.find(v);
      for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i == corner && extra != at_corner.end()) out.insert(out.end(), extra->second.begin(), extra->second.end());
        if (i < src.size()) expand(v, src[i], out);
      }
    }
  }

  PlaneDrawing finish() {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < rot.size(); ++v)
      for (int w : rot[v])
        if (static_cast<int>(v) < w) edges.push_back({static_cast<int>(v), w});
    const int n = static_cast<int>(rot.size());
    return PlaneDrawing(n, std::move(edges), std::move(rot));
  }
};

OuterplanarEmbedding embed_part(const Graph& source, const EdgeSet& part, const char* who) {
  auto emb = outerplanar_embedding(edge_subgraph(source, part));
  if (!emb) {
    std::string msg = std::string(who) + ": part is not outerplanar; obstruction edges:";
    for (const auto& e : outerplanarity_witness(edge_subgraph(source, part))) msg += " " + to_string(e);
    throw std::invalid_argument(msg);
  }
  return std::move(*emb);
}

// Smallest vertex of every component of the part.
std::vector<int> representatives(const Graph& part) {
  const auto comp = connected_components(part);
  std::vector<int> reps;
  for (int v = 0; v < part.vertex_count(); ++v)
    if (comp[static_cast<std::size_t>(v)] == static_cast<int>(reps.size())) reps.push_back(v);
  return reps;
}

}  // namespace

std::string ReductionInstance::gadget_comments() const {
  std::ostringstream out;
  if (const auto* g = std::get_if<EcrGadgets>(&gadgets)) {
    out << "# kind ecr, M = " << g->bundle_size << ", k = " << k << '\n';
    out << "# center " << g->center << ": star edges " << g->center << "-v for source vertex v\n";
    for (std::size_t e = 0; e < g->bundle_mids.size(); ++e) {
      const auto& mids = g->bundle_mids[e];
      out << "# bundle " << e << " for source edge " << to_string(source.edge(e)) << ": mids " << mids.front() << ".."
          << mids.back() << '\n';
    }
  } else {
    const auto& u = std::get<UncGadgets>(gadgets);
    out << "# kind unc, k = " << k << '\n';
    out << "# center " << u.center << '\n';
    for (std::size_t v = 0; v < u.subdivision.size(); ++v)
      out << "# star path " << v << "-" << u.subdivision[v] << "-" << u.center << " for source vertex " << v << '\n';
  }
  return out.str();
}

ReductionInstance reduce_mos_to_ecr(const Graph& g, std::int64_t k) {
  const auto edges = static_cast<std::int64_t>(g.edge_count());
  require(k >= 0 && k <= edges, "reduce_mos_to_ecr: need 0 <= k <= |E|");
  const int n = g.vertex_count();
  const int M = 2 * n;
  EcrGadgets gad{M, n, {}};
  std::vector<Edge> target;
  for (int v = 0; v < n; ++v) target.push_back({v, n});
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::vector<int> mids;
    for (int j = 0; j < M; ++j) {
      const int mid = n + 1 + static_cast<int>(e) * M + j;
      mids.push_back(mid);
      target.push_back({g.edge(e).u, mid});
      target.push_back({g.edge(e).v, mid});
    }
    gad.bundle_mids.push_back(std::move(mids));
  }
  const int vertices = n + 1 + M * static_cast<int>(g.edge_count());
  ReductionInstance inst;
  inst.kind = ReductionInstance::Kind::ecr;
  inst.source = g;
  inst.target = Graph(vertices, std::move(target));
  inst.k = k;
  inst.budget = static_cast<std::int64_t>(M) * (edges - k) + n;
  inst.gadgets = std::move(gad);
  return inst;
}

ReductionInstance reduce_ot_to_unc(const Graph& g, std::int64_t k) {
  require(k >= 1, "reduce_ot_to_unc: need k >= 1");
  const int n = g.vertex_count();
  UncGadgets gad{2 * n, {}};
  std::vector<Edge> target(g.edges().begin(), g.edges().end());
  for (int v = 0; v < n; ++v) {
    gad.subdivision.push_back(n + v);
    target.push_back({v, n + v});
    target.push_back({n + v, 2 * n});
  }
  ReductionInstance inst;
  inst.kind = ReductionInstance::Kind::unc;
  inst.source = g;
  inst.target = Graph(2 * n + 1, std::move(target));
  inst.k = k;
  inst.budget = k;
  inst.gadgets = std::move(gad);
  return inst;
}

PlaneDrawing ecr_forward_witness(const ReductionInstance& inst, const EdgeSet& h) {
  const auto* gad = std::get_if<EcrGadgets>(&inst.gadgets);
  require(gad != nullptr, "ecr_forward_witness: instance is not an ecr reduction");
  require(h.universe() == inst.source.edge_count(), "ecr_forward_witness: h is over a different edge set");
  require(static_cast<std::int64_t>(h.count()) >= inst.k, "ecr_forward_witness: |h| < k");
  const auto emb = embed_part(inst.source, h, "ecr_forward_witness");
  const Graph& src = inst.source;

  // Star edge at each component's smallest vertex; the bundle paths of
  // edges outside h hang off their smaller endpoint as pendant mids.
  std::map<int, std::vector<int>> corner;
  for (int r : representatives(edge_subgraph(src, h))) corner[r].push_back(gad->center);
  RotationBuilder b(inst.target.vertex_count());
  for (std::size_t e = 0; e < src.edge_count(); ++e) {
    const auto& mids = gad->bundle_mids[e];
    if (h.test(e)) {
      for (int mid : mids) b.rot[static_cast<std::size_t>(mid)] = {src.edge(e).u, src.edge(e).v};
    } else {
      auto& list = corner[src.edge(e).u];
      list.insert(list.end(), mids.begin(), mids.end());
      for (int mid : mids) b.rot[static_cast<std::size_t>(mid)] = {src.edge(e).u};
    }
  }
  b.lay_out(emb, corner, [&](int v, int w, std::vector<int>& out) {
    const auto& mids = gad->bundle_mids[src.edge_index_or_throw(v, w)];
    if (v < w)
      out.insert(out.end(), mids.begin(), mids.end());
    else
      out.insert(out.end(), mids.rbegin(), mids.rend());
  });
  for (const auto& [v, list] : corner)
    if (std::find(list.begin(), list.end(), gad->center) != list.end())
      b.rot[static_cast<std::size_t>(gad->center)].push_back(v);
  return b.finish();
}

std::int64_t crossed_edges(const ReductionInstance& inst, const PlaneDrawing& d) {
  return static_cast<std::int64_t>(inst.target.edge_count()) - static_cast<std::int64_t>(d.edge_count());
}

UncrossedCertificate unc_forward_witness(const ReductionInstance& inst, const std::vector<EdgeSet>& parts) {
  const auto* gad = std::get_if<UncGadgets>(&inst.gadgets);
  require(gad != nullptr, "unc_forward_witness: instance is not an unc reduction");
  require(parts.size() >= 2, "unc_forward_witness: need at least two parts to cover both halves of the star");
  const Graph& src = inst.source;
  EdgeSet all(src.edge_count());
  for (const auto& p : parts) {
    require(p.universe() == src.edge_count(), "unc_forward_witness: part over a different edge set");
    all |= p;
  }
  require(all == EdgeSet::full(src.edge_count()), "unc_forward_witness: parts do not cover the source");

  const int n = src.vertex_count();
  const int c = gad->center;
  UncrossedCertificate cert{inst.target, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto emb = embed_part(src, parts[i], "unc_forward_witness");
    const auto reps = representatives(edge_subgraph(src, parts[i]));
    auto is_rep = [&](int v) { return std::binary_search(reps.begin(), reps.end(), v); };

    RotationBuilder b(inst.target.vertex_count());
    std::map<int, std::vector<int>> corner;
    for (int v = 0; v < n; ++v) {
      const int s = gad->subdivision[static_cast<std::size_t>(v)];
      auto& rs = b.rot[static_cast<std::size_t>(s)];
      // The first drawing keeps every center-side star edge, the others
      // every vertex-side one; one of the other kind per component keeps
      // the drawing connected.
      const bool vertex_side = i > 0 || is_rep(v);
      const bool center_side = i == 0 || is_rep(v);
      if (vertex_side) {
        corner[v].push_back(s);
        rs.push_back(v);
      }
      if (center_side) {
        rs.push_back(c);
        b.rot[static_cast<std::size_t>(c)].push_back(s);
      }
    }
    b.lay_out(emb, corner, [](int, int w, std::vector<int>& out) { out.push_back(w); });
    cert.drawings.push_back(b.finish());
  }
  return cert;
}

ReductionValidation validate_reduction_small(const Graph& g, std::size_t edge_cap) {
  const std::size_t e = g.edge_count();
  require(e <= edge_cap && e < 63, "validate_reduction_small: source has too many edges for subset enumeration");
  require(is_connected(g), "validate_reduction_small: source must be connected");
  ReductionValidation r;

  // All outerplanar edge subsets, as masks.
  std::vector<std::uint64_t> outerplanar;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    EdgeSet s(e);
    for (std::size_t i = 0; i < e; ++i)
      if ((mask >> i) & 1U) s.set(i);
    if (is_outerplanar(edge_subgraph(g, s))) outerplanar.push_back(mask);
  }
  std::uint64_t best = 0;
  for (auto m : outerplanar)
    if (std::popcount(m) > std::popcount(best)) best = m;
  auto to_set = [&](std::uint64_t mask) {
    EdgeSet s(e);
    for (std::size_t i = 0; i < e; ++i)
      if ((mask >> i) & 1U) s.set(i);
    return s;
  };
  r.max_outerplanar = static_cast<std::size_t>(std::popcount(best));
  r.best = to_set(best);

  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(r.max_outerplanar); ++k) {
    const auto inst = reduce_mos_to_ecr(g, k);
    const auto d = ecr_forward_witness(inst, r.best);
    ReductionValidation::Step step{k, crossed_edges(inst, d), inst.budget, verify_drawing(inst.target, d).admissible()};
    if (!step.admissible) r.failures.push_back("ecr witness for k = " + std::to_string(k) + " is not admissible");
    if (step.crossed > step.budget)
      r.failures.push_back("ecr witness for k = " + std::to_string(k) + " crosses " + std::to_string(step.crossed) +
                           " edges, budget " + std::to_string(step.budget));
    r.ecr_steps.push_back(step);
  }

  // Outerthickness: fewest maximal outerplanar subsets covering E.
  std::vector<std::uint64_t> maximal;
  const std::uint64_t full = e == 0 ? 0 : (std::uint64_t{1} << e) - 1;
  for (auto m : outerplanar) {
    bool is_max = true;
    for (std::size_t i = 0; i < e && is_max; ++i)
      if (!((m >> i) & 1U) && std::binary_search(outerplanar.begin(), outerplanar.end(), m | (std::uint64_t{1} << i)))
        is_max = false;
    if (is_max) maximal.push_back(m);
  }
  std::vector<std::uint64_t> chosen;
  auto search = [&](auto&& self, std::uint64_t covered, std::size_t left) -> bool {
    if (covered == full) return true;
    if (left == 0) return false;
    const auto edge = std::countr_one(covered);
    for (auto m : maximal) {
      if (!((m >> edge) & 1U)) continue;
      chosen.push_back(m);
      if (self(self, covered | m, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::size_t k = 1;
  while (!search(search, 0, k)) ++k;
  r.outerthickness = e == 0 ? 0 : k;
  for (auto m : chosen) r.outerplanar_parts.push_back(to_set(m));
  while (r.outerplanar_parts.size() < 2) r.outerplanar_parts.push_back(EdgeSet(e));

  const auto inst = reduce_ot_to_unc(g, static_cast<std::int64_t>(r.outerplanar_parts.size()));
  const auto cert = unc_forward_witness(inst, r.outerplanar_parts);
  r.unc_certificate_ok = verify_certificate(cert).passed() && cert.size() == r.outerplanar_parts.size();
  if (!r.unc_certificate_ok) r.failures.push_back("unc witness certificate does not verify");
  return r;
}

}  // namespace unc
