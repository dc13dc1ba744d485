#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "thetapos/dynkin.hpp"
#include "thetapos/linalg.hpp"

namespace thetapos {

using json = nlohmann::json;

// Rationals cross every interface as strings "p/q".
json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

json vec_json(const QVec& v);
QVec vec_from_json(const json& j);

json mat_json(const QMat& m);
QMat mat_from_json(const json& j);

json diagram_json(const DynkinDiagram& d);
DynkinDiagram diagram_from_json(const json& j);

std::vector<std::pair<std::string, DynkinDiagram>> parse_catalog_json(const std::string& text);

}  // namespace thetapos
