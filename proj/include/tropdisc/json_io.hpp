#pragma once
// Stable serialization for the CLI and fixtures (schema version 1).
//
//   matrix text   first line "d n", then d whitespace-separated rows
//   matrix JSON   { "d": 3, "n": 6, "rows": [[...], ...] }
//   Cayley JSON   { "r": 2, "blocks": [ [[0,0],[1,0]], ... ] }
//   fan JSON      { "ambient": n, "lineality": [[...]],
//                   "cones": [ { "rays": [[...]], "mult": k } ] }
//   Newton JSON   { "degree": D, "monomials": [ { "exp": [...],
//                   "witness_w": [...] } ], "fvector": [...],
//                   "coefficients": [ { "exp": [...], "coeff": "p/q" } ] }
//
// Subdivision cells are listed as sorted 1-based label arrays together with
// their block-wise decomposition.  Integers that fit in a machine long are
// emitted as JSON numbers, larger ones as decimal strings; readers accept
// both.  Serialization uses ordered JSON objects so that identical data
// yields identical bytes.

#include "tropdisc/cayley.hpp"
#include "tropdisc/config.hpp"
#include "tropdisc/fan.hpp"
#include "tropdisc/newton.hpp"

#include "json.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tropdisc {

using OrderedJson = nlohmann::ordered_json;

// ---- scalars --------------------------------------------------------------

OrderedJson int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);
OrderedJson rat_to_json(const Rat& v); // integral values collapse to int form
Rat rat_from_json(const nlohmann::json& j); // accepts numbers, "p", "p/q"

// ---- matrices ---------------------------------------------------------------

IntMatrix matrix_from_text(std::istream& in);
std::string matrix_to_text(const IntMatrix& a);
IntMatrix matrix_from_json(const nlohmann::json& j);
OrderedJson matrix_to_json(const IntMatrix& a);

// ---- Cayley configurations --------------------------------------------------

CayleyConfig cayley_from_json(const nlohmann::json& j);
OrderedJson cayley_to_json(const CayleyConfig& cfg);

// ---- weighted fans ----------------------------------------------------------

OrderedJson fan_to_json(const WeightedFan& fan);
WeightedFan fan_from_json(const nlohmann::json& j);

// ---- reports ----------------------------------------------------------------

// Newton-polytope report; pass coefficients to append the recovery section.
OrderedJson newton_to_json(const MonomialSet& monomials, const PolytopeSummary& hull,
                           const std::map<IntVec, Int>* coefficients = nullptr);

OrderedJson subdivision_to_json(const Subdivision& sub);
OrderedJson mixed_cells_to_json(const RatVec& w, const std::vector<MixedCell>& cells);
OrderedJson delta_classes_to_json(const std::vector<DeltaClass>& classes);

// ---- files ------------------------------------------------------------------

// Reads a matrix file, accepting either format: content starting with '{'
// parses as JSON, anything else as the text format.
IntMatrix load_matrix_file(const std::string& path);
CayleyConfig load_cayley_file(const std::string& path);
WeightedFan load_fan_file(const std::string& path);

} // namespace tropdisc
