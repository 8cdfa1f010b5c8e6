#pragma once

#include <iosfwd>
#include <string>

#include "plansat/props.hpp"
#include "plansat/saturation.hpp"
#include "plansat/solver.hpp"

namespace plansat {

// Line-oriented embedding interchange format, 0-indexed:
//   pse 1
//   n <count>
//   e <u> <v>          one per edge, u < v
//   r <v>: <w1> ...    full counter-clockwise rotation, non-isolated v
//   a <rep>: <x> <y>   component anchored left of x->y
//   a <rep>: root      base component
//   # comment
std::string serialize_embedding(const PlaneEmbedding& e);
PlaneEmbedding parse_embedding(std::istream& in);
PlaneEmbedding parse_embedding_string(const std::string& text);

PlaneEmbedding load_embedding_file(const std::string& path);
void save_embedding_file(const PlaneEmbedding& e, const std::string& path);

std::string to_dot(const Graph& g);

// Structured report documents; all numerics are integers or exact "p/q".
std::string report_certificates(const std::vector<BoundCertificate>& certs, bool json);
std::string report_saturation(const SaturationReport& rep, bool json);
std::string report_construction(const ConstructionTrace& trace, bool json);
std::string report_solver(const SolverResult& result, bool json);
std::string report_structure(const StructureReport& rep, const BoundCertificate& deg3,
                             bool json);

const char* method_name(ConstructionMethod m);

}  // namespace plansat
