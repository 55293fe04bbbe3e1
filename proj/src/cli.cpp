#include "unc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "unc/certificate_io.hpp"
#include "unc/certify.hpp"
#include "unc/constructions.hpp"
#include "unc/edge_list_io.hpp"
#include "unc/formulas.hpp"
#include "unc/oracle.hpp"
#include "unc/reductions.hpp"
#include "unc/render.hpp"

namespace unc {
namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Raised for bad input that the library itself does not reject.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool quiet = false;
  bool json = false;
};

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json bound_json(const BoundReport& r) {
  json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["optimal"] = r.optimal();
  j["provenance"] = r.provenance;
  return j;
}

std::string bound_text(const BoundReport& r) {
  std::ostringstream out;
  out << "lower = " << r.lower << '\n';
  out << "upper = " << (r.upper ? std::to_string(*r.upper) : "none") << '\n';
  out << "exact = " << (r.exact ? std::to_string(*r.exact) : "none") << '\n';
  for (const auto& p : r.provenance) out << "# " << p << '\n';
  return out.str();
}

// key = value [tag] lines, or a JSON object of the values.
struct Table {
  std::vector<std::tuple<std::string, std::int64_t, std::string>> rows;
  std::vector<std::string> notes;

  void add(std::string key, std::int64_t value, std::string tag) { rows.emplace_back(std::move(key), value, std::move(tag)); }

  void print(std::ostream& out, const Globals& g) const {
    if (g.json) {
      json j;
      for (const auto& [k, v, t] : rows) j[k] = {{"value", v}, {"source", t}};
      if (!notes.empty()) j["notes"] = notes;
      out << j.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v, t] : rows) {
      out << k << " = " << v;
      if (!g.quiet) out << " [" << t << ']';
      out << '\n';
      if (g.quiet) return;
    }
    for (const auto& n : notes) out << "# " << n << '\n';
  }
};

int formula_complete(std::int64_t n, std::ostream& out, const Globals& g) {
  Table t;
  const std::string k = "K_" + std::to_string(n);
  t.add("unc(" + k + ")", unc_complete(n), "complete-graph formula");
  t.add("outerthickness(" + k + ")", outerthickness_complete(n), "outerthickness of complete graphs");
  if (n >= 4) {
    const auto m = n * (n - 1) / 2;
    t.add("h(" + k + ")", h_complete(n), "maximum uncrossed edges, wheel");
    t.add("lower_bound_h(" + k + ")", unc_lower_bound_h(m, h_complete(n)), "ceil(m/h)");
  }
  if (n >= 3) t.add("lower_bound_density(" + k + ")", unc_lower_bound_density(n, n * (n - 1) / 2), "density bound");
  t.print(out, g);
  return kOk;
}

int formula_bipartite(std::int64_t m, std::int64_t n, std::ostream& out, const Globals& g) {
  Table t;
  if (m > n) {
    std::swap(m, n);
    t.notes.push_back("arguments swapped so that m <= n");
  }
  const std::string k = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  t.add("unc(" + k + ")", unc_complete_bipartite(m, n), "complete-bipartite formula");
  t.add("outerthickness(" + k + ")", outerthickness_complete_bipartite(m, n), "outerthickness of complete bipartite graphs");
  t.add("h(" + k + ")", h_complete_bipartite(m, n), "maximum uncrossed edges, bipartite");
  t.add("lower_bound_h(" + k + ")", unc_lower_bound_h(m * n, h_complete_bipartite(m, n)), "ceil(m/h)");
  if (m + n >= 3) t.add("lower_bound_density(" + k + ")", unc_lower_bound_density(m + n, m * n), "density bound");
  t.print(out, g);
  return kOk;
}

int bound(const std::string& graph_path, const std::string& parts_path, std::ostream& out, const Globals& g) {
  const Graph host = load_edge_list(graph_path);
  std::vector<EdgeSet> parts;
  if (!parts_path.empty()) parts = load_parts(parts_path, host);
  const auto r = bound_report(host, parts);
  if (g.json) {
    json j = bound_json(r);
    j["vertices"] = host.vertex_count();
    j["edges"] = host.edge_count();
    j["connected"] = is_connected(host);
    out << j.dump(2) << '\n';
  } else if (g.quiet) {
    out << r.lower << '\n';
  } else {
    out << "vertices = " << host.vertex_count() << '\n' << "edges = " << host.edge_count() << '\n';
    out << "connected = " << (is_connected(host) ? "yes" : "no") << '\n' << bound_text(r);
  }
  return kOk;
}

UncrossedCertificate cover_certificate(const DoubleCycleCover& c) {
  UncrossedCertificate cert{c.host(), {}};
  for (const auto& cyc : c.cycles) cert.drawings.push_back(embed_double_cycle(cyc, c.m + c.n));
  return cert;
}

std::string emit_certificate(const UncrossedCertificate& c, const std::string& emit, const std::string& layout) {
  if (emit.empty()) return format_certificate(c);
  RenderSpec spec;
  spec.format = emit == "dot" ? RenderFormat::dot : RenderFormat::svg;
  spec.layout = *parse_layout(layout);
  return render(c, spec);
}

json report_json(const UncrossedCertificate& c, const CertificateReport& r) {
  json j;
  j["passed"] = r.passed();
  j["malformed"] = r.malformed();
  j["unsupported"] = r.unsupported ? json(*r.unsupported) : json(nullptr);
  j["size"] = c.size();
  j["drawings"] = json::array();
  for (std::size_t k = 0; k < r.drawings.size(); ++k) {
    const auto& d = r.drawings[k];
    json dj{{"index", k}, {"admissible", d.admissible()}, {"connected", d.connected}, {"planar", d.planar},
            {"faces", d.faces}};
    dj["malformed"] = d.malformed ? json(*d.malformed) : json(nullptr);
    dj["not_cofacial"] = json::array();
    for (const auto& e : d.not_cofacial) dj["not_cofacial"].push_back(edge_json(e));
    j["drawings"].push_back(dj);
  }
  j["uncovered"] = json::array();
  for (const auto& e : r.uncovered) j["uncovered"].push_back(edge_json(e));
  j["witness"] = json::array();
  for (const auto& w : r.witness) j["witness"].push_back(w ? json(*w) : json(nullptr));
  return j;
}

int verify(const std::string& graph_path, const std::string& cert_path, const std::string& report, std::ostream& out,
           const Globals& g) {
  const Graph host = load_edge_list(graph_path);
  const UncrossedCertificate cert = load_certificate(cert_path);
  if (cert.host.vertex_count() != host.vertex_count() ||
      !std::equal(cert.host.edges().begin(), cert.host.edges().end(), host.edges().begin(), host.edges().end()))
    throw FormatError("certificate is for a different graph than " + graph_path);
  const auto r = verify_certificate(cert);
  if (g.json || report == "json")
    out << report_json(cert, r).dump(2) << '\n';
  else if (!g.quiet)
    out << format_report_text(cert, r);
  else
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
  if (r.malformed()) return kUsage;
  return r.passed() ? kOk : kNegative;
}

int oracle(const std::string& mode, const std::string& graph_path, std::size_t cap, std::optional<std::size_t> k,
           const std::string& cert_path, std::ostream& out, const Globals& g) {
  const Graph host = load_edge_list(graph_path);
  OracleOptions opt;
  opt.cap = cap;
  const auto family = enumerate_admissible(host, opt);
  const auto h = family.max_size();
  json j;
  int code = kOk;
  std::optional<UncrossedCertificate> cert;
  if (mode == "h" || mode == "ecr") {
    const auto value = mode == "h" ? h : host.edge_count() - h;
    j[mode] = value;
    for (const auto& m : family.members)
      if (m.edges.count() == h) {
        cert = UncrossedCertificate{host, {m.witness}};
        break;
      }
  } else if (mode == "unc") {
    auto r = exact_unc(family);
    j["unc"] = r.value;
    cert = std::move(r.certificate);
  } else {
    if (!k) throw UsageError("oracle mus needs -k");
    const bool yes = h >= *k;
    j["mus"] = yes;
    j["k"] = *k;
    j["h"] = h;
    code = yes ? kOk : kNegative;
  }
  j["maximal_members"] = family.members.size();

  if (g.json) {
    out << j.dump(2) << '\n';
  } else if (mode == "mus") {
    out << "mus(k = " << *k << ") = " << (j["mus"].get<bool>() ? "true" : "false");
    if (!g.quiet) out << " [h = " << h << ']';
    out << '\n';
  } else {
    out << mode << " = " << j[mode].get<std::size_t>();
    if (!g.quiet) out << " [exhaustive, " << family.members.size() << " maximal admissible sets]";
    out << '\n';
  }
  if (!cert_path.empty()) {
    if (!cert) throw UsageError("--emit-cert is not available for oracle mus");
    write_to(cert_path, format_certificate(*cert), out);
  }
  return code;
}

int reduce(const std::string& kind, const std::string& graph_path, std::int64_t k, const std::string& witness_path,
           const std::string& target_path, const std::string& cert_path, std::ostream& out, const Globals& g) {
  const Graph source = load_edge_list(graph_path);
  const auto inst = kind == "ecr" ? reduce_mos_to_ecr(source, k) : reduce_ot_to_unc(source, k);
  std::ostringstream text;
  if (!g.quiet) text << inst.gadget_comments();
  write_edge_list(text, inst.target);
  text << "budget: " << inst.budget << '\n';
  if (!target_path.empty()) write_to(target_path, format_edge_list(inst.target), out);

  int code = kOk;
  if (!witness_path.empty()) {
    const auto parts = load_parts(witness_path, source);
    UncrossedCertificate cert{inst.target, {}};
    if (kind == "ecr") {
      if (parts.size() != 1) throw UsageError("ecr witness file must hold exactly one part (the outerplanar subgraph)");
      cert.drawings.push_back(ecr_forward_witness(inst, parts.front()));
      const auto report = verify_drawing(inst.target, cert.drawings.front());
      const auto crossed = crossed_edges(inst, cert.drawings.front());
      const bool ok = report.admissible() && crossed <= inst.budget;
      text << "# witness: " << (report.admissible() ? "admissible" : "not admissible") << ", " << crossed
           << " crossed edges, budget " << inst.budget << (ok ? ", ok" : ", FAIL") << '\n';
      if (!ok) code = kNegative;
    } else {
      cert = unc_forward_witness(inst, parts);
      const auto report = verify_certificate(cert);
      const bool ok = report.passed() && static_cast<std::int64_t>(cert.size()) <= inst.budget;
      text << "# witness: " << cert.size() << " drawings, " << (report.passed() ? "verified" : "not verified")
           << ", budget " << inst.budget << (ok ? ", ok" : ", FAIL") << '\n';
      if (!ok) code = kNegative;
    }
    if (!cert_path.empty()) write_to(cert_path, format_certificate(cert), out);
  }
  out << text.str();
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncrossed number toolkit", "unc"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--quiet", g.quiet, "print only the headline result");
  app.add_flag("--json", g.json, "machine-readable output");

  auto* formula = app.add_subcommand("formula", "closed-form values for K_n and K_{m,n}");
  formula->require_subcommand(1);
  std::int64_t fn = 0;
  std::int64_t fm = 0;
  auto* f_complete = formula->add_subcommand("complete", "values for K_N");
  f_complete->add_option("N", fn)->required()->check(CLI::PositiveNumber);
  auto* f_bipartite = formula->add_subcommand("bipartite", "values for K_{M,N}");
  f_bipartite->add_option("M", fm)->required()->check(CLI::PositiveNumber);
  f_bipartite->add_option("N", fn)->required()->check(CLI::PositiveNumber);

  std::string graph_path;
  std::string parts_path;
  auto* bound_cmd = app.add_subcommand("bound", "lower and upper bounds for a graph");
  bound_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  bound_cmd->add_option("--parts", parts_path, "outerplanar cover for an upper bound");

  std::string emit;
  std::string layout = "auto";
  std::string output;
  auto* construct = app.add_subcommand("construct", "build drawings, covers and collections");
  construct->require_subcommand(1);
  int cm = 0;
  int cn = 0;
  auto add_emit = [&](CLI::App* c) {
    c->add_option("--emit", emit, "render instead of writing the certificate")->check(CLI::IsMember({"dot", "svg"}));
    c->add_option("--layout", layout)->check(CLI::IsMember({"auto", "radial-wheel", "bipartite-circular", "tutte-barycentric"}));
    c->add_option("-o,--output", output, "output file (default stdout)");
  };
  auto* c_wheel = construct->add_subcommand("wheel", "wheel drawing of K_N");
  c_wheel->add_option("N", cn)->required()->check(CLI::Range(4, 100000));
  add_emit(c_wheel);
  auto* c_ladder = construct->add_subcommand("ladder", "ladder with leaves in K_{M,N}");
  c_ladder->add_option("M", cm)->required()->check(CLI::PositiveNumber);
  c_ladder->add_option("N", cn)->required()->check(CLI::PositiveNumber);
  add_emit(c_ladder);
  auto* c_cover = construct->add_subcommand("cover", "double cycle cover of K_{M,N}");
  c_cover->add_option("M", cm)->required()->check(CLI::PositiveNumber);
  c_cover->add_option("N", cn)->required()->check(CLI::PositiveNumber);
  add_emit(c_cover);
  auto* c_collection = construct->add_subcommand("collection", "uncrossed collection of K_{M,N}");
  c_collection->add_option("M", cm)->required()->check(CLI::PositiveNumber);
  c_collection->add_option("N", cn)->required()->check(CLI::PositiveNumber);
  add_emit(c_collection);
  auto* c_k5 = construct->add_subcommand("k5", "two-wheel collection of K_5");
  add_emit(c_k5);

  std::string cert_path;
  std::string report = "text";
  auto* verify_cmd = app.add_subcommand("verify", "check an uncrossed collection");
  verify_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  verify_cmd->add_option("--cert", cert_path, "certificate file")->required();
  verify_cmd->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));

  std::string mode;
  std::size_t cap = 12;
  std::optional<std::size_t> mus_k;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive values for tiny graphs");
  oracle_cmd->add_option("MODE", mode, "h | ecr | unc | mus")->required()->check(CLI::IsMember({"h", "ecr", "unc", "mus"}));
  oracle_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  oracle_cmd->add_option("--cap", cap, "refuse hosts with more edges");
  oracle_cmd->add_option("-k", mus_k, "threshold for mus");
  oracle_cmd->add_option("--emit-cert", cert_path, "write the witness certificate");

  std::string kind;
  std::int64_t rk = 0;
  std::string witness_path;
  std::string target_path;
  auto* reduce_cmd = app.add_subcommand("reduce", "hardness reduction instances");
  reduce_cmd->add_option("KIND", kind, "ecr | unc")->required()->check(CLI::IsMember({"ecr", "unc"}));
  reduce_cmd->add_option("--graph", graph_path, "source edge-list file")->required();
  reduce_cmd->add_option("-k", rk)->required();
  reduce_cmd->add_option("--witness", witness_path, "parts file: one outerplanar part (ecr) or a cover (unc)");
  reduce_cmd->add_option("--target", target_path, "also write the bare target edge list here");
  reduce_cmd->add_option("--emit-cert", cert_path, "write the witness certificate");

  RenderSpec spec;
  std::string format = "svg";
  auto* render_cmd = app.add_subcommand("render", "draw a certificate");
  render_cmd->add_option("--cert", cert_path, "certificate file")->required();
  render_cmd->add_option("--layout", layout)->check(CLI::IsMember({"auto", "radial-wheel", "bipartite-circular", "tutte-barycentric"}));
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "dot"}));
  render_cmd->add_option("-o,--output", output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*f_complete) return formula_complete(fn, out, g);
    if (*f_bipartite) return formula_bipartite(fm, fn, out, g);
    if (*bound_cmd) return bound(graph_path, parts_path, out, g);
    if (*c_wheel) {
      write_to(output, emit_certificate({complete_graph(cn), {wheel_drawing(cn)}}, emit, layout), out);
      return kOk;
    }
    if (*c_ladder) {
      if (cm > cn) std::swap(cm, cn);
      write_to(output, emit_certificate({complete_bipartite(cm, cn), {ladder_with_leaves(cm, cn)}}, emit, layout), out);
      return kOk;
    }
    if (*c_cover) {
      if (cm > cn) std::swap(cm, cn);
      const auto cover = cn == 2 * cm - 1 ? double_cycle_cover_minus_one(cm) : double_cycle_cover(cm, cn);
      write_to(output, emit.empty() ? format_cover(cover) : emit_certificate(cover_certificate(cover), emit, layout), out);
      return kOk;
    }
    if (*c_collection) {
      if (cm > cn) std::swap(cm, cn);
      write_to(output, emit_certificate(bipartite_uncrossed_collection(cm, cn), emit, layout), out);
      return kOk;
    }
    if (*c_k5) {
      write_to(output, emit_certificate(k5_two_wheel_certificate(), emit, layout), out);
      return kOk;
    }
    if (*verify_cmd) return verify(graph_path, cert_path, report, out, g);
    if (*oracle_cmd) return oracle(mode, graph_path, cap, mus_k, cert_path, out, g);
    if (*reduce_cmd) return reduce(kind, graph_path, rk, witness_path, target_path, cert_path, out, g);
    if (*render_cmd) {
      const auto cert = load_certificate(cert_path);
      spec.format = format == "dot" ? RenderFormat::dot : RenderFormat::svg;
      spec.layout = *parse_layout(layout);
      write_to(output, render(cert, spec), out);
      return kOk;
    }
  } catch (const DecompositionNotFound& e) {
    err << "decomposition not found: " << e.what() << '\n';
    return kNegative;
  } catch (const OracleRefusal& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedRotation& e) {
    err << "malformed rotation: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace unc
