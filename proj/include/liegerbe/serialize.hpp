#pragma once

// JSON records for levels, obstruction queries, corollary tables and numeric
// reports. Rationals are strings "p/q" (denominator 1 omitted).

#include <json.hpp>

#include "liegerbe/forms_numeric.hpp"
#include "liegerbe/obstruction.hpp"

namespace liegerbe {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const QVec& v);
Json to_json(const FiniteAbelianGroup& g);

/// {group, type, center_invariants, subgroup, subgroup_order, ell_b, ell_f?, provenance}
Json levels_record(const RootSystem& rs, const Center& c, const CenterSubgroup& z, const FundamentalLevelTable* ell_f);
/// levels_record plus {level, admits, obstruction_order}
Json obstruction_record(const RootSystem& rs, const Center& c, const CenterSubgroup& z, const Integer& level,
                        const FundamentalLevelTable* ell_f);
Json to_json(const CorollaryTable& t);
/// {group, samples, h, tolerances, sign, max_residuals, integral_eta?, passed, witness?}
Json to_json(const CocycleReport& r, std::optional<double> integral_eta = std::nullopt);

}  // namespace liegerbe
