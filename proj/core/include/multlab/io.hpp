#pragma once

// JSON interchange formats. Complex data is always split into parallel
// "re" and "im" arrays in row-major order; a missing "im" means real data.
// Malformed documents raise InvalidInput.

#include "multlab/central.hpp"
#include "multlab/convolution.hpp"
#include "multlab/groups.hpp"
#include "multlab/herz_schur.hpp"
#include "multlab/idempotent.hpp"
#include "multlab/schur.hpp"

#include <nlohmann/json.hpp>

namespace multlab::io {

using json = nlohmann::json;

// {"rows":r,"cols":c,"re":[...],"im":[...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json vector_to_json(const Vector& v);  // {"re":[...],"im":[...]}
Vector vector_from_json(const json& j);

// {"x":m,"y":n,"re":[...],"im":[...]}
json multiplier_to_json(const schur::ScalarMultiplier& phi);
schur::ScalarMultiplier multiplier_from_json(const json& j);

// {"x":m,"y":n,"z":p,"re":[...],"im":[...]}, z-major.
json central_to_json(const central::CentralMultiplier& phi);
central::CentralMultiplier central_from_json(const json& j);

// {"type":"cyclic","n":4}, {"type":"product","factors":[...]},
// {"type":"dihedral","n":3}, {"type":"symmetric","n":3},
// {"type":"table","mul":[[...]]}
json group_to_json(const groups::FiniteGroup& g);
groups::FiniteGroup group_from_json(const json& j);

// {"group":..., "space":k, "act":[[...]]} or {"group":..., "space":"translation"}.
// `group` overrides a missing "group" field.
json action_to_json(const groups::GroupAction& a);
groups::GroupAction action_from_json(const json& j, const groups::FiniteGroup* group = nullptr);

// Herz-Schur multiplier F(r, z): a matrix document with |G| rows and |Z| columns.
herz_schur::CentralHSMultiplier hs_multiplier_from_json(const json& j, const groups::GroupAction& action);

// {"group":..., "re":[...], "im":[...]}
json measure_to_json(const convolution::Measure& mu);
convolution::Measure measure_from_json(const json& j, const groups::FiniteGroup* group = nullptr);

// {"group":..., "family":[{"re":..,"im":..}, ...]} indexed by G, or a bare list.
convolution::ConvolutionFamily family_from_json(const json& j, const groups::FiniteGroup* group = nullptr);

// {"group":..., "re":[...], "im":[...]} over G x Gamma, |G| x |Gamma| row-major.
convolution::AdmissiblePair admissible_from_json(const json& j, const groups::FiniteGroup* group = nullptr);

// {"x":m,"y":n,"members":[[x,y],...]}
json pattern_to_json(const idempotent::Pattern& e);
idempotent::Pattern pattern_from_json(const json& j);

// {"action":..., "members":[[z,t],...]}
json groupoid_to_json(const idempotent::GroupoidSubset& v);
idempotent::GroupoidSubset groupoid_from_json(const json& j, const groups::GroupAction* action = nullptr);

}  // namespace multlab::io
