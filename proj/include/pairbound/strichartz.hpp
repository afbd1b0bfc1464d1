#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pairbound/exponents.hpp"
#include "pairbound/interval.hpp"
#include "pairbound/quad.hpp"
#include "pairbound/symmetry.hpp"

namespace pairbound {

// The (t, r) quadrature box [-t_max, t_max] x [0, r_max] with a uniform grid.
struct JBox {
    double t_max = 50.0;
    double r_max = 5.0;
    std::int64_t t_steps = 1000;
    std::int64_t r_steps = 50;

    // Step counts that give cells of (at most) `step` on both axes.
    static JBox from_step(double t_max, double r_max, double step);
    Box box() const;
    std::vector<std::int64_t> steps() const { return {t_steps, r_steps}; }
};

// c_d (1+t^2)^(d(1-q)/2) r^(d-1) e^(-q r^2) |cos(theta + t r^2/4)|^q on a
// (t, r) cell. Without the cosine factor this is the envelope used for the
// mass M and the tail bounds.
class JIntegrand {
public:
    JIntegrand(const Exponents& e, Interval theta, bool with_cosine = true);
    Interval operator()(Cell cell) const;
    // Same integrand on a (u, t, r) cell with theta = pi u.
    Interval with_phase_cell(Cell cell) const;
    double point(double theta, double t, double r) const;

private:
    Exponents e_;
    Interval theta_;
    bool with_cosine_;
    Interval c_d_;
    Rational t_power_;
};

// Tail over the complement of the box, or +inf when the box is too small
// for the analytic envelopes (T < 1 or R < 1).
double j_tail(const Exponents& e, const JBox& box);
// Tail over {|t| > T - 1} x {r > R - 1} only, or +inf if T < 2 or R < 2.
double j_tail_corner(const Exponents& e, const JBox& box);

QuadCertificate j_integral(const Exponents& e, const Interval& theta, const JBox& box);
// Bisection-refined variant; falls back to the best enclosure reached if
// the target width is not met.
QuadCertificate j_integral_adaptive(const Exponents& e, const Interval& theta, const JBox& box,
                                    double target_width, int max_depth);
QuadCertificate mass_integral(const Exponents& e, const JBox& box);
// c_d * sqrt(pi) Gamma(alpha - 1/2) / Gamma(alpha) * Gamma(d/2) / (2 q^(d/2)),
// 2 alpha = d(q-1). Needs 2 alpha to be an integer.
Interval mass_closed_form(const Exponents& e);

struct MeanIdentityReport {
    std::int64_t theta_steps = 0;
    Interval mean_j;       // average of J(theta) over a period, main box only
    double mean_tail = 0.0;
    Interval kappa;
    QuadCertificate mass;
    Interval kappa_m;      // kappa * M over the main box
    double kappa_m_tail = 0.0;
    Interval closed_form;  // kappa * M from the closed forms
    bool consistent = false;
};

MeanIdentityReport mean_identity_check(const Exponents& e, std::int64_t theta_steps, const JBox& box);

enum class VerdictStatus { certified, inconclusive };
std::string to_string(VerdictStatus s);

struct Verdict {
    int dim = 1;
    QuadCertificate j0;
    QuadCertificate j_half_pi;
    double tail = 0.0;
    double tail_corner = 0.0;
    double margin = 0.0;
    VerdictStatus status = VerdictStatus::inconclusive;
};

struct SeparationOptions {
    bool adaptive = false;
    double target_width = 0.5;
    int max_depth = 12;
};

Verdict verify_separation(const Exponents& e, const JBox& box, const SeparationOptions& opts = {});

// Plain floating-point midpoint rule for J(theta) on the box; any d.
double j_float(const Exponents& e, double theta, const JBox& box);

// Non-rigorous Cartesian oracle for int |Re e^(i theta) E f|^q dt dx with
// f = exp(-|xi|^2), d = 1 or 2.
enum class ExtensionModel {
    closed_form,  // E f from the complex Gaussian integral
    printed,      // amplitude pi^(d/2) (1+t^2)^(-d/2), phase t|x|^2 / (4(1+t^2))
};
std::string to_string(ExtensionModel m);

struct SpacetimeGrid {
    double t_max = 60.0;
    double x_max = 200.0;
    std::int64_t t_steps = 2400;
    std::int64_t x_steps = 8000;
};

// Value of |Re e^(i theta) E f(t, x)|^q under the chosen model.
double cartesian_integrand(const Exponents& e, ExtensionModel model, double theta, double t,
                           std::span<const double> x);
double gaussian_extension_norm_float(const Exponents& e, double theta, const SpacetimeGrid& grid,
                                     ExtensionModel model = ExtensionModel::closed_form);

// |int |Im e^(i(-t|eta|^2 + x.eta)) G|^q - kappa_q int |G|^q| with G = E g,
// by the midpoint rule on the grid. d = 1 or 2.
double equidistribution_gap(const GeneralizedGaussian& g, std::span<const double> eta, const Exponents& e,
                            const SpacetimeGrid& grid);
SpacetimeGrid equidistribution_default_grid();

struct SuperadditivityDefect {
    double defect = 0.0;
    double pairsup = 0.0;
};

// defect = | |sum a_j|^q - sum |a_j|^q |, pairsup = max_{j != k} |a_j| |a_k|^(q-1).
SuperadditivityDefect superadditivity_defect(std::span<const Complex> values, Rational q);

struct SuperadditivitySearch {
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    // max defect / pairsup for n = 2 .. max_n (index n - 2).
    std::vector<double> max_ratio;
    bool finite = true;
};

SuperadditivitySearch superadditivity_search(int max_n, Rational q, std::int64_t samples, std::uint64_t seed);

}  // namespace pairbound
