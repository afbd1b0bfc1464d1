// One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "containment.hpp"
#include "pairbound/cli.hpp"
#include "pairbound/report.hpp"
#include "pairbound/special.hpp"
#include "pairbound/strichartz.hpp"
#include "pairbound/symmetry_checks.hpp"

using pairbound::Interval;
using pairbound::Json;
using pairbound::Rational;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << what << std::endl;
    if (!ok) ++failures;
}

void info(const std::string& what) { std::cout << "      " << what << std::endl; }

struct CliResult {
    int code = pairbound::cli::kError;
    Json report;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.push_back("--json");
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = pairbound::cli::run(args, out, err);
    r.err = err.str();
    if (r.code != pairbound::cli::kError) r.report = Json::parse(out.str());
    return r;
}

double lo(const Json& x) { return std::stod(x[0].get<std::string>()); }
double hi(const Json& x) { return std::stod(x[1].get<std::string>()); }
double num(const Json& x) { return std::stod(x.get<std::string>()); }

std::string show(const Json& x) { return "[" + x[0].get<std::string>() + ", " + x[1].get<std::string>() + "]"; }

const std::vector<std::string> kCriterion1 = {"verify", "--dim", "1", "--t-max", "50", "--r-max", "5", "--step", "0.1"};

void criterion1() {
    const CliResult r = run_cli(kCriterion1);
    if (r.code == pairbound::cli::kError) {
        verdict(1, false, "d=1 verify failed to run: " + r.err);
        return;
    }
    const Json& v = r.report["result"];
    const bool j0 = lo(v["J0"]["total"]) > 23 && hi(v["J0"]["total"]) < 37;
    const bool jh = lo(v["J_half_pi"]["total"]) > 0 && hi(v["J_half_pi"]["total"]) < 0.1;
    const bool tail = num(v["tail_corner_region"]) <= 1e-19;
    const bool certified = r.code == pairbound::cli::kCertified && r.report["status"] == "certified";
    verdict(1, j0 && jh && tail && certified,
            "d=1 verify: J(0) " + show(v["J0"]["total"]) + " in (23, 37), J(pi/2) " + show(v["J_half_pi"]["total"]) +
                " in (0, 0.1), tail on {|t|>49} x {r>4} " + v["tail_corner_region"].get<std::string>() +
                " <= 1e-19, status " + r.report["status"].get<std::string>());
    info("tail over the whole complement of the box (used in the verdict): " + v["tail"].get<std::string>() +
         ", margin " + v["margin"].get<std::string>());
}

void criterion2() {
    const CliResult r = run_cli({"verify", "--dim", "2"});
    const bool ok = r.code == pairbound::cli::kCertified && r.report["status"] == "certified";
    if (r.code == pairbound::cli::kError) {
        verdict(2, false, "d=2 verify failed to run: " + r.err);
        return;
    }
    const Json& v = r.report["result"];
    verdict(2, ok,
            "d=2 verify (|t|<=50, r<=5, step 0.1): J(0) " + show(v["J0"]["total"]) + ", J(pi/2) " + show(v["J_half_pi"]["total"]) +
                ", tail " + v["tail"].get<std::string>() + ", status " + r.report["status"].get<std::string>());
}

void criterion3() {
    const Interval k6 = pairbound::gamma_ratio_constant(Rational(6));
    const Interval k4 = pairbound::gamma_ratio_constant(Rational(4));
    const bool kappa = k6.contains(5.0 / 16.0) && k6.width() < 1e-12 && k4.contains(3.0 / 8.0);

    bool phi_ok = true;
    std::ostringstream detail;
    for (const auto& [q, value] : {std::pair{Rational(6), 2.5}, std::pair{Rational(4), 1.5}}) {
        const Interval quad = pairbound::phi(Interval(1.0), q, 10000);
        const Interval closed = pairbound::phi_one_closed_form(q);
        phi_ok = phi_ok && quad.intersects(closed) && quad.contains(value) && closed.contains(value);
        detail << "phi_" << q.str() << "(1) " << pairbound::to_string(quad, 8) << " ";
    }
    const bool phi0 = pairbound::phi(Interval(0.0), Rational(6), 10000).contains(1.0) &&
                      pairbound::phi(Interval(0.0), Rational(4), 10000).contains(1.0);
    char width[32];
    std::snprintf(width, sizeof width, "%.1e", k6.width());
    verdict(3, kappa && phi_ok && phi0,
            "kappa_6 " + pairbound::to_string(k6, 15) + " (width " + width + "), kappa_4 " +
                pairbound::to_string(k4, 15) + ", " + detail.str() + "phi(0) contains 1");
}

void criterion4() {
    bool ok = true;
    for (int d : {1, 2}) {
        const CliResult r = run_cli({"mean-check", "--dim", std::to_string(d)});
        if (r.code == pairbound::cli::kError) {
            verdict(4, false, "mean-check failed to run: " + r.err);
            return;
        }
        const Json& v = r.report["result"];
        const double mean_tail = num(v["mean_J_tail"]);
        const double km_tail = num(v["kappa_M_tail"]);
        // Widened by the tails, both enclosures must hold the closed-form value kappa_q M.
        const double target_lo = lo(v["kappa_M_closed_form"]);
        const double target_hi = hi(v["kappa_M_closed_form"]);
        const bool holds = lo(v["mean_J"]) <= target_lo && hi(v["mean_J"]) + mean_tail >= target_hi &&
                           lo(v["kappa_M"]) <= target_lo && hi(v["kappa_M"]) + km_tail >= target_hi;
        const bool consistent = r.report["status"] == "consistent";
        ok = ok && holds && consistent;
        info("d=" + std::to_string(d) + ": mean J " + show(v["mean_J"]) + " + " + v["mean_J_tail"].get<std::string>() +
             ", kappa M " + show(v["kappa_M"]) + " + " + v["kappa_M_tail"].get<std::string>() + ", closed form " +
             show(v["kappa_M_closed_form"]));
        if (d == 1) {
            const bool slip = lo(v["mean_J"]) <= 9.78 && hi(v["mean_J"]) + mean_tail >= 9.78;
            info(std::string("the value 9.78 is ") + (slip ? "inside" : "outside") +
                 " the d=1 mean enclosure; the closed form gives kappa_6 M = 9.3484");
        }
    }
    verdict(4, ok, "theta-average of J intersects kappa_q M and both hold the closed form kappa_q M (d=1, d=2)");
}

void criterion5() {
    constexpr std::int64_t kSamples = 100000;
    bool ok = true;
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    std::size_t ops = 0;
    for (const suite::Outcome& o : suite::run_containment(kSamples, 2025)) {
        ok = ok && o.violations == 0 && o.samples >= kSamples;
        checked += o.samples;
        violations += o.violations;
        ++ops;
        if (o.violations != 0) info(o.op + ": " + std::to_string(o.violations) + " violations");
    }
    std::int64_t mono_violations = 0;
    for (const suite::Outcome& o : suite::run_monotonicity(20000, 2026)) {
        mono_violations += o.violations;
        if (o.violations != 0) info(o.op + " (monotonicity): " + std::to_string(o.violations) + " violations");
    }
    ok = ok && mono_violations == 0;
    verdict(5, ok,
            std::to_string(ops) + " operations x " + std::to_string(kSamples) + " containment checks against MPFR: " +
                std::to_string(violations) + " violations; inclusion monotonicity: " +
                std::to_string(mono_violations) + " violations");
}

void criterion6() {
    const pairbound::SymmetryCheckReport r = pairbound::run_symmetry_checks(1, 100);
    for (const pairbound::PropertyResult& p : r.results) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %lld cases, max error %.2e (tol %.0e)%s", p.name.c_str(),
                      static_cast<long long>(p.cases), p.max_error, p.tolerance, p.passed() ? "" : "  FAILED");
        info(buf);
    }
    verdict(6, r.all_passed(), "symmetry property suites, seed 1, 100 cases each");
}

void criterion7() {
    const pairbound::Exponents e = pairbound::Exponents::stein_tomas(1);
    const pairbound::GeneralizedGaussian g = pairbound::GeneralizedGaussian::standard(1);
    const pairbound::SpacetimeGrid grid = pairbound::equidistribution_default_grid();
    std::vector<double> gaps;
    std::ostringstream detail;
    for (double eta : {2.0, 8.0, 32.0}) {
        const double x[] = {eta};
        gaps.push_back(pairbound::equidistribution_gap(g, x, e, grid));
        detail << "|eta|=" << eta << ": " << gaps.back() << "  ";
    }
    const bool ok = gaps[2] < gaps[0] && gaps[1] < gaps[0] && gaps[2] < gaps[1];
    verdict(7, ok, "equidistribution gap (d=1, float): " + detail.str());
}

void criterion8() {
    const pairbound::SuperadditivitySearch s = pairbound::superadditivity_search(5, Rational(6), 100000, 8);
    const pairbound::Complex ones[] = {1.0, 1.0};
    const pairbound::SuperadditivityDefect hand = pairbound::superadditivity_defect(ones, Rational(6));
    bool finite = s.finite;
    std::ostringstream detail;
    for (std::size_t i = 0; i < s.max_ratio.size(); ++i) {
        finite = finite && std::isfinite(s.max_ratio[i]);
        detail << "n=" << i + 2 << ": " << s.max_ratio[i] << "  ";
    }
    const bool ok = finite && hand.defect == 62.0 && hand.pairsup == 1.0;
    verdict(8, ok,
            "superadditivity (q=6, 1e5 samples) max ratios " + detail.str() + "; (1,1): defect " +
                std::to_string(hand.defect) + ", pairsup " + std::to_string(hand.pairsup));
}

void criterion9() {
    const CliResult a = run_cli(kCriterion1);
    const CliResult b = run_cli(kCriterion1);
    const bool ran = a.code != pairbound::cli::kError && b.code != pairbound::cli::kError;
    const bool same = ran && pairbound::deterministic_dump(a.report) == pairbound::deterministic_dump(b.report);
    const bool has_timing = ran && a.report.contains("timing") && b.report.contains("timing");
    verdict(9, same && has_timing, "two d=1 verify reports are byte-identical outside the timing section");
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
    } catch (const std::exception& e) {
        std::cout << "FAIL  unexpected exception: " << e.what() << std::endl;
        return 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
