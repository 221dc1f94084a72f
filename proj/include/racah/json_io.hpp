#pragma once

#include "racah/algebra.hpp"
#include "racah/lattice.hpp"

#include <json.hpp>

namespace racah {

using nlohmann::json;

/// Matrices serialize as arrays of arrays of canonical "p/q" strings
/// ("p" alone when q = 1).
json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json hrep_to_json(const HRep& h);
HRep hrep_from_json(const json& j);

json racahrep_to_json(const RacahRep& r);
RacahRep racahrep_from_json(const json& j);

/// Distinguishes the two module document kinds by their matrix keys.
bool json_is_hrep(const json& j);

json relation_report_to_json(const RelationReport& rep);

json lattice_report_to_json(const LatticeReport& rep);

} // namespace racah
