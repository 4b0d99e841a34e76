#pragma once

// JSON and CSV forms of the reports. Rationals are always "p/q" strings.

#include "abshift/cantor.hpp"
#include "abshift/paramlab.hpp"
#include "abshift/shiftspace.hpp"

#include <json.hpp>

#include <string>

namespace abshift {

using Json = nlohmann::ordered_json;

/// {found:[{n,j}], depth, offsets, verdict[, certified_max]}
Json to_json(const KReport& r);
/// {alpha: "p/q" | [["p/q","p/q"], ...], beta, ell, omega_r, omega_s, u, v, k_u, k_v, certified, ...}
Json to_json(const WitnessReport& r);
Json to_json(const ThicknessReport& r);
Json to_json(const SpecReport& r);

/// One row "lo_num,lo_den,hi_num,hi_den" per part, preceded by a header row.
std::string interval_union_csv(const IntervalUnion& u);

}  // namespace abshift
