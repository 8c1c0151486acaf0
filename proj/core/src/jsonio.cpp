#include "alexdimer/jsonio.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "alexdimer/errors.hpp"

namespace alexdimer {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Dir parse_dir(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "in") return Dir::In;
    if (s == "out") return Dir::Out;
  }
  throw ParseError("\"dir\" must be \"in\" or \"out\"");
}

Strand parse_strand(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "over") return Strand::Over;
    if (s == "under") return Strand::Under;
  }
  throw ParseError("\"strand\" must be \"over\" or \"under\"");
}

json coeff_to_json(const Int& c) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (c >= lo && c <= hi) return json(static_cast<std::int64_t>(c));
  return json(c.str());
}

Int coeff_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("coefficient string is not a decimal integer");
    }
  }
  throw ParseError("coefficient must be an integer or a decimal string");
}

}  // namespace

LinkDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("diagram must be a JSON object");
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("\"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  const json& cs = require(j, "crossings");
  if (!cs.is_array()) throw ParseError("\"crossings\" must be an array");

  std::map<int, Crossing> crossings;
  int index = 0;
  for (const json& cj : cs) {
    int id = index++;
    if (cj.is_object() && cj.contains("id")) id = require_int(cj.at("id"), "\"id\"");
    const json& darts = require(cj, "darts");
    if (!darts.is_array() || darts.size() != 4)
      throw ParseError("\"darts\" must be an array of 4 entries");
    Crossing c;
    for (int p = 0; p < 4; ++p) {
      const json& dj = darts.at(p);
      const int edge = require_int(require(dj, "edge"), "\"edge\"");
      if (edge <= 0) throw ParseError("edge ids must be positive");
      c.darts[p] = Dart{edge, parse_dir(require(dj, "dir")),
                        parse_strand(require(dj, "strand"))};
    }
    if (!crossings.emplace(id, c).second)
      throw ParseError("duplicate crossing id " + std::to_string(id));
  }
  return LinkDiagram(std::move(name), std::move(crossings));
}

json diagram_to_json(const LinkDiagram& d) {
  json cs = json::array();
  for (const auto& [id, c] : d.crossings()) {
    json darts = json::array();
    for (const Dart& dart : c.darts)
      darts.push_back({{"edge", dart.edge},
                       {"dir", dart.dir == Dir::In ? "in" : "out"},
                       {"strand", dart.strand == Strand::Over ? "over" : "under"}});
    cs.push_back({{"id", id}, {"darts", std::move(darts)}});
  }
  return {{"name", d.name()}, {"crossings", std::move(cs)}};
}

LinkDiagram diagram_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

LinkDiagram read_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return diagram_from_string(buf.str());
}

void write_diagram(const LinkDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << diagram_to_json(d).dump(2) << "\n";
}

json poly_to_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [dexp, c] : f.terms())
    terms.push_back(json::array({json(dexp), coeff_to_json(c)}));
  return terms;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of pairs");
  LaurentPoly f;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw ParseError("polynomial term must be [exponent, coefficient]");
    f.add_term(require_int(term.at(0), "exponent"), coeff_from_json(term.at(1)));
  }
  return f;
}

json graph_to_json(const FCGraph& g) {
  json edges = json::array();
  for (const GraphEdge& e : g.edges)
    edges.push_back({{"crossing", e.crossing},
                     {"region", e.region},
                     {"quadrant", e.quadrant},
                     {"sign", e.sign},
                     {"dexp", e.dexp}});
  return {{"blacks", g.blacks},
          {"whites", g.whites},
          {"absent_regions", g.absent_regions},
          {"distinguished_segment", g.distinguished_segment},
          {"edges", std::move(edges)}};
}

namespace {

const char* kind_name(TrapezoidCertificate::Kind k) {
  switch (k) {
    case TrapezoidCertificate::Kind::Zero: return "zero";
    case TrapezoidCertificate::Kind::OneSided: return "one-sided";
    case TrapezoidCertificate::Kind::Product: return "product";
    case TrapezoidCertificate::Kind::TwoTerm: return "two-term";
    case TrapezoidCertificate::Kind::GraphLeaf: return "graph-leaf";
  }
  return "?";
}

}  // namespace

json certificate_to_json(const TrapezoidCertificate& c) {
  json out{{"kind", kind_name(c.kind)},
           {"diagram", c.diagram},
           {"poly", poly_to_json(c.poly)},
           {"poly_text", to_string(c.poly)},
           {"trapezoidal", c.trapezoidal},
           {"centered", c.centered}};
  if (c.circle >= 0) {
    out["circle"] = c.circle;
    out["length"] = c.length;
  }
  if (!c.parts.empty()) {
    json parts = json::array();
    for (const LaurentPoly& p : c.parts) parts.push_back(poly_to_json(p));
    out["parts"] = std::move(parts);
  }
  if (!c.children.empty()) {
    json kids = json::array();
    for (const TrapezoidCertificate& k : c.children)
      kids.push_back(certificate_to_json(k));
    out["children"] = std::move(kids);
  }
  return out;
}

json split_to_json(const MurasugiSplit& s) {
  json flock = json::array();
  for (const FlockEdge& f : s.flock)
    flock.push_back({{"number", f.number},
                     {"crossing", f.crossing},
                     {"region", f.region},
                     {"quadrant", f.quadrant},
                     {"family", f.region_side == Side::RPrime ? "prime" : "dprime"}});
  json sides = json::object();
  for (const auto& [c, side] : s.sides)
    sides[std::to_string(c)] = side == Side::RPrime ? "prime" : "dprime";
  auto runs = [](const std::vector<std::vector<int>>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(r);
    return out;
  };
  return {{"circle", s.circle},
          {"length", s.length},
          {"segment", s.segment},
          {"trace", s.trace},
          {"x_runs", runs(s.x_runs)},
          {"y_runs", runs(s.y_runs)},
          {"bridge_prime", s.bridge_prime},
          {"bridge_dprime", s.bridge_dprime},
          {"flock", std::move(flock)},
          {"sides", std::move(sides)},
          {"segment_prime", s.segment_prime},
          {"segment_dprime", s.segment_dprime}};
}

}  // namespace alexdimer
