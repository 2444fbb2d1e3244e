#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tri3d4/supercharacters.hpp"

namespace tri3d4 {

using Json = nlohmann::ordered_json;

// Field elements are written as their canonical indices.
Json field_meta(const FieldTower& F);

Json to_json(const UElem& u);
UElem uelem_from_json(const FieldTower& F, const Json& j);
Json to_json(const Pattern& A);
Pattern pattern_from_json(const FieldTower& F, const Json& j);
// Coefficients over 1, zeta, ..., zeta^{p-2}.
Json to_json(const CycInt& c);

std::string label(const SuperclassId& id);
std::string label(const SupercharId& id);
Json to_json(const FieldTower& F, const SuperclassId& id);
Json to_json(const FieldTower& F, const SupercharId& id);

Json table_to_json(const FieldTower& F, const SupercharTable& t);
std::string table_to_csv(const SupercharTable& t);
std::string table_to_latex(const FieldTower& F);

}  // namespace tri3d4
