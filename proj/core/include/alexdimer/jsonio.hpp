#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "alexdimer/diagram.hpp"
#include "alexdimer/dimer.hpp"
#include "alexdimer/laurent.hpp"
#include "alexdimer/murasugi.hpp"

namespace alexdimer {

using json = nlohmann::ordered_json;

// Diagram schema: {"name": str, "crossings": [{"darts": [{"edge": int,
// "dir": "in"|"out", "strand": "over"|"under"} x4 ccw]}]}.  A crossing may
// carry an explicit "id" (summand diagrams keep their parent's ids);
// otherwise the array index is used.  ParseError on malformed input,
// ValidationError (from the constructor) on structurally bad diagrams.
LinkDiagram diagram_from_json(const json& j);
json diagram_to_json(const LinkDiagram& d);
LinkDiagram read_diagram(const std::string& path);
void write_diagram(const LinkDiagram& d, const std::string& path);

// Polynomials serialize as [[doubled_exponent, coefficient], ...] sorted by
// exponent.  Coefficients that fit in 64 bits are numbers, larger ones
// decimal strings; parsing accepts both.
json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const json& j);

json graph_to_json(const FCGraph& g);
json certificate_to_json(const TrapezoidCertificate& c);
json split_to_json(const MurasugiSplit& s);

// Parse a JSON text (object with diagram schema) from a string.
LinkDiagram diagram_from_string(const std::string& text);

}  // namespace alexdimer
