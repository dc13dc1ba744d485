#include "thetapos/json_io.hpp"

#include <stdexcept>

namespace thetapos {

json rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected rational as string \"p/q\"");
}

json vec_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

QVec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
  QVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json mat_json(const QMat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

QMat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected matrix as array of rows");
  int rows = static_cast<int>(j.size());
  QVec first = vec_from_json(j[0]);
  QMat m(rows, static_cast<int>(first.size()));
  for (int i = 0; i < rows; ++i) {
    QVec r = vec_from_json(j[i]);
    if (r.size() != first.size()) throw std::invalid_argument("ragged matrix rows");
    for (size_t k = 0; k < r.size(); ++k) m.at(i, static_cast<int>(k)) = r[k];
  }
  return m;
}

json diagram_json(const DynkinDiagram& d) {
  json out;
  out["name"] = d.name;
  out["nodes"] = json::array();
  for (size_t i = 0; i < d.nodes.size(); ++i)
    out["nodes"].push_back({{"label", d.nodes[i]}, {"mult", d.mult[i]}});
  out["edges"] = json::array();
  for (const auto& e : d.edges) {
    json je = {{"from", d.nodes[e.from]}, {"to", d.nodes[e.to]}, {"bond", e.bond}};
    if (e.arrow_toward >= 0) je["arrowToward"] = d.nodes[e.arrow_toward];
    out["edges"].push_back(je);
  }
  if (d.non_reduced) out["nonReduced"] = true;
  return out;
}

DynkinDiagram diagram_from_json(const json& j) {
  DynkinDiagram d;
  d.name = j.value("name", "");
  if (!j.contains("nodes") || !j["nodes"].is_array()) throw std::invalid_argument("diagram needs nodes");
  for (const auto& n : j["nodes"]) {
    d.nodes.push_back(n.at("label").get<std::string>());
    d.mult.push_back(n.value("mult", 1));
  }
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      DynkinEdge de;
      de.from = d.index_of(e.at("from").get<std::string>());
      de.to = d.index_of(e.at("to").get<std::string>());
      if (de.from < 0 || de.to < 0) throw std::invalid_argument("edge references unknown node");
      de.bond = e.value("bond", 1);
      if (e.contains("arrowToward")) {
        de.arrow_toward = d.index_of(e["arrowToward"].get<std::string>());
        if (de.arrow_toward < 0) throw std::invalid_argument("arrowToward references unknown node");
      }
      d.edges.push_back(de);
    }
  d.non_reduced = j.value("nonReduced", false);
  d.validate();
  return d;
}

std::vector<std::pair<std::string, DynkinDiagram>> parse_catalog_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("catalog must be a JSON array");
  std::vector<std::pair<std::string, DynkinDiagram>> out;
  for (const auto& entry : j) {
    DynkinDiagram d = diagram_from_json(entry);
    out.emplace_back(d.name, std::move(d));
  }
  return out;
}

}  // namespace thetapos
