#pragma once

#include <string>

#include "json.hpp"
#include "pairbound/interval.hpp"
#include "pairbound/quad.hpp"
#include "pairbound/special.hpp"
#include "pairbound/strichartz.hpp"
#include "pairbound/symmetry_checks.hpp"

namespace pairbound {

using Json = nlohmann::ordered_json;

// ["lo", "hi"] with lo rounded down and hi rounded up in decimal.
Json to_json(const Interval& x);
// Decimal string of an upper bound, rounded up ("inf" when unbounded).
std::string upper_string(double x);
std::string lower_string(double x);

// Certificates omit wall time; see add_timing.
Json to_json(const QuadCertificate& cert);
Json to_json(const Verdict& v);
Json to_json(const MeanIdentityReport& r);
Json to_json(const MonotoneReport& r);
Json to_json(const SymmetryCheckReport& r);

// Wall times live under "timing", outside the deterministic part of a report.
void add_timing(Json& report, const std::string& key, double wall_time_ms);

// The report serialized without its "timing" section.
std::string deterministic_dump(const Json& report);

}  // namespace pairbound
