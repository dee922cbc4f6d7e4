#pragma once

#include <json.hpp>

#include "hulldim/avgdim.hpp"
#include "hulldim/codes.hpp"
#include "hulldim/sweep.hpp"

namespace hulldim {

// Stable-key-order JSON documents for the serializable types.  Field elements
// and polynomials appear in their canonical text forms.
using json = nlohmann::ordered_json;

json to_json(const FieldSpec& spec);
json to_json(const Rational& value);
json to_json(const FactorizationReport& report);
json to_json(const ConstacyclicCode& code, const Poly& dual, const Poly& hull);
json to_json(const AvgDimReport& report);
json to_json(const SweepRow& row);
json to_json(const std::vector<SweepRow>& rows);

} // namespace hulldim
