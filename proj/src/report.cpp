#include "pairbound/report.hpp"

#include <cmath>

namespace pairbound {

Json to_json(const Interval& x) {
    return Json::array({decimal_bound(x.lo(), true), decimal_bound(x.hi(), false)});
}

std::string upper_string(double x) { return decimal_bound(x, false); }
std::string lower_string(double x) { return decimal_bound(x, true); }

Json to_json(const QuadCertificate& cert) {
    Json box = Json::array();
    for (const Interval& axis : cert.box.axes()) box.push_back(to_json(axis));
    return {{"integrand", cert.integrand_id},
            {"box", box},
            {"steps", cert.steps},
            {"main", to_json(cert.main)},
            {"tail", upper_string(cert.tail)},
            {"total", to_json(cert.total())}};
}

Json to_json(const Verdict& v) {
    return {{"dim", v.dim},
            {"J0", to_json(v.j0)},
            {"J_half_pi", to_json(v.j_half_pi)},
            {"tail", upper_string(v.tail)},
            {"tail_corner_region", upper_string(v.tail_corner)},
            {"margin", lower_string(v.margin)},
            {"status", to_string(v.status)}};
}

Json to_json(const MeanIdentityReport& r) {
    return {{"theta_steps", r.theta_steps},
            {"mean_J", to_json(r.mean_j)},
            {"mean_J_tail", upper_string(r.mean_tail)},
            {"kappa", to_json(r.kappa)},
            {"M", to_json(r.mass)},
            {"kappa_M", to_json(r.kappa_m)},
            {"kappa_M_tail", upper_string(r.kappa_m_tail)},
            {"kappa_M_closed_form", to_json(r.closed_form)},
            {"consistent", r.consistent}};
}

Json to_json(const MonotoneReport& r) {
    Json values = Json::array();
    for (const Interval& v : r.values) values.push_back(to_json(v));
    return {{"certified", r.certified}, {"steps_used", r.steps_used}, {"values", values}};
}

Json to_json(const SymmetryCheckReport& r) {
    Json results = Json::array();
    for (const PropertyResult& p : r.results) {
        results.push_back({{"name", p.name},
                           {"cases", p.cases},
                           {"max_error", p.max_error},
                           {"tolerance", p.tolerance},
                           {"passed", p.passed()}});
    }
    return {{"seed", r.seed}, {"results", results}, {"all_passed", r.all_passed()}};
}

void add_timing(Json& report, const std::string& key, double wall_time_ms) {
    report["timing"][key + "_wall_time_ms"] = wall_time_ms;
}

std::string deterministic_dump(const Json& report) {
    Json copy = report;
    copy.erase("timing");
    return copy.dump(2);
}

}  // namespace pairbound
