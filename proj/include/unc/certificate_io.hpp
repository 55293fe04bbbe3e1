#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unc/certify.hpp"
#include "unc/constructions.hpp"
#include "unc/edge_list_io.hpp"

namespace unc {

// Certificate text:
//   graph
//   <edge list>
//   drawing 0
//   edges c
//   u v           (c lines)
//   rotation
//   v: a b c ...  (one line per vertex)
//   outer: u->v   (optional)
//   drawing 1
//   ...
// Rotation lines are taken as written; a rotation that disagrees with the
// edge list parses fine and is reported by the verifier.
void write_certificate(std::ostream& out, const UncrossedCertificate& c);
std::string format_certificate(const UncrossedCertificate& c);
UncrossedCertificate read_certificate(std::istream& in);
UncrossedCertificate parse_certificate(const std::string& text);
UncrossedCertificate load_certificate(const std::string& path);

// Double cycle cover text:
//   cover m n cycles
//   cycle i
//   degrees d_1 ... d_m
//   start s
//   blacks b_0 ... b_{k-1}
//   quad i inner outer   (k lines; outer is '-' at the removed slot)
//   leaves i w ...       (k lines)
void write_cover(std::ostream& out, const DoubleCycleCover& c);
std::string format_cover(const DoubleCycleCover& c);
DoubleCycleCover read_cover(std::istream& in);
DoubleCycleCover parse_cover(const std::string& text);

// Edge partition / cover text, over a given host:
//   parts k
//   part i c
//   u v           (c lines)
void write_parts(std::ostream& out, const Graph& host, const std::vector<EdgeSet>& parts);
std::string format_parts(const Graph& host, const std::vector<EdgeSet>& parts);
std::vector<EdgeSet> read_parts(std::istream& in, const Graph& host);
std::vector<EdgeSet> parse_parts(const std::string& text, const Graph& host);
std::vector<EdgeSet> load_parts(const std::string& path, const Graph& host);

}  // namespace unc
