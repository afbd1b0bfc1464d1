#include "pairbound/strichartz.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pairbound/special.hpp"

namespace pairbound {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_certified(const Exponents& e) {
    e.validate();
    if (!e.certified_dimension()) {
        throw UnsupportedArgument("certified mode supports d = 1, 2 only, got d = " + std::to_string(e.dim));
    }
}

std::int64_t steps_for(double length, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    if (!(length >= 0.0)) throw std::invalid_argument("box extent must be nonnegative");
    // Tolerate binary noise such as 100 / 0.1 = 1000.0000000000001.
    const double n = std::ceil(length / step - 1e-9);
    if (n > 1e9) throw std::invalid_argument("grid too fine");
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
}

std::string theta_id(const Interval& theta) { return to_string(theta, 17); }

}  // namespace

JBox JBox::from_step(double t_max, double r_max, double step) {
    JBox b;
    b.t_max = t_max;
    b.r_max = r_max;
    b.t_steps = steps_for(2.0 * t_max, step);
    b.r_steps = steps_for(r_max, step);
    return b;
}

Box JBox::box() const {
    if (!(t_max >= 0.0) || !(r_max >= 0.0)) throw std::invalid_argument("t_max and r_max must be nonnegative");
    return Box({Interval(-t_max, t_max), Interval(0.0, r_max)});
}

JIntegrand::JIntegrand(const Exponents& e, Interval theta, bool with_cosine)
    : e_(e),
      theta_(theta),
      with_cosine_(with_cosine),
      c_d_(polar_constant(e)),
      t_power_(Rational(e.dim) * (Rational(1) - e.q) / Rational(2)) {}

namespace {

Interval envelope(const Exponents& e, const Interval& c_d, Rational t_power, const Interval& t, const Interval& r,
                  Interval& r_squared) {
    r_squared = sqr(r);
    const Interval amp = pow_real(Interval(1.0) + sqr(t), t_power);
    const Interval radial = e.dim == 1 ? Interval(1.0) : pow_int(r, e.dim - 1);
    const Interval gauss = exp(-(enclose(e.q) * r_squared));
    return c_d * amp * radial * gauss;
}

}  // namespace

Interval JIntegrand::operator()(Cell cell) const {
    Interval rr;
    Interval v = envelope(e_, c_d_, t_power_, cell[0], cell[1], rr);
    if (with_cosine_) {
        const Interval arg = theta_ + cell[0] * rr * Interval(0.25);
        v = v * pow_real(abs(cos(arg)), e_.q);
    }
    return clip_nonnegative(v);
}

Interval JIntegrand::with_phase_cell(Cell cell) const {
    Interval rr;
    Interval v = envelope(e_, c_d_, t_power_, cell[1], cell[2], rr);
    const Interval arg = pi() * cell[0] + cell[1] * rr * Interval(0.25);
    v = v * pow_real(abs(cos(arg)), e_.q);
    return clip_nonnegative(v);
}

double JIntegrand::point(double theta, double t, double r) const {
    const double q = e_.q.value();
    const double d = static_cast<double>(e_.dim);
    double v = c_d_.mid() * std::pow(1.0 + t * t, t_power_.value()) * std::pow(r, d - 1.0) * std::exp(-q * r * r);
    if (with_cosine_) v *= std::pow(std::fabs(std::cos(theta + t * r * r / 4.0)), q);
    return v;
}

double j_tail(const Exponents& e, const JBox& box) {
    if (box.t_max < 1.0 || box.r_max < 1.0) return rounding::kInf;
    return tail_bound_j(e, box.t_max, box.r_max);
}

double j_tail_corner(const Exponents& e, const JBox& box) {
    if (box.t_max < 2.0 || box.r_max < 2.0) return rounding::kInf;
    return tail_bound_j_corner(e, box.t_max - 1.0, box.r_max - 1.0);
}

QuadCertificate j_integral(const Exponents& e, const Interval& theta, const JBox& box) {
    require_certified(e);
    const auto start = Clock::now();
    QuadCertificate cert;
    cert.integrand_id = "J(theta=" + theta_id(theta) + ")";
    cert.box = box.box();
    cert.steps = box.steps();
    const JIntegrand f(e, theta);
    cert.main = riemann_enclosure([&f](Cell c) { return f(c); }, cert.box, cert.steps);
    cert.tail = j_tail(e, box);
    cert.wall_time_ms = elapsed_ms(start);
    return cert;
}

QuadCertificate j_integral_adaptive(const Exponents& e, const Interval& theta, const JBox& box,
                                    double target_width, int max_depth) {
    require_certified(e);
    const auto start = Clock::now();
    QuadCertificate cert;
    cert.integrand_id = "J(theta=" + theta_id(theta) + ",adaptive)";
    cert.box = box.box();
    cert.steps = box.steps();
    const JIntegrand f(e, theta);
    const Integrand integrand = [&f](Cell c) { return f(c); };
    try {
        cert.main = bisect_refine(integrand, cert.box, target_width, max_depth, cert.steps);
    } catch (const TargetNotReached& err) {
        cert.main = err.achieved();
    }
    cert.tail = j_tail(e, box);
    cert.wall_time_ms = elapsed_ms(start);
    return cert;
}

QuadCertificate mass_integral(const Exponents& e, const JBox& box) {
    require_certified(e);
    const auto start = Clock::now();
    QuadCertificate cert;
    cert.integrand_id = "M";
    cert.box = box.box();
    cert.steps = box.steps();
    const JIntegrand f(e, Interval(0.0), false);
    cert.main = riemann_enclosure([&f](Cell c) { return f(c); }, cert.box, cert.steps);
    cert.tail = j_tail(e, box);
    cert.wall_time_ms = elapsed_ms(start);
    return cert;
}

Interval mass_closed_form(const Exponents& e) {
    const Rational two_alpha = Rational(e.dim) * (e.q - Rational(1));
    if (!two_alpha.is_integer()) throw UnsupportedArgument("closed form needs d(q-1) to be an integer");
    const EnvelopeParts parts = envelope_parts(e, 1.0, 1.0);
    return polar_constant(e) * parts.t_full * parts.r_full;
}

MeanIdentityReport mean_identity_check(const Exponents& e, std::int64_t theta_steps, const JBox& box) {
    require_certified(e);
    MeanIdentityReport report;
    report.theta_steps = theta_steps;
    const JIntegrand f(e, Interval(0.0));
    // theta = pi u, u in [0, 1] covers one period of |cos|^q; the average is the integral in u.
    const Box cube({Interval(0.0, 1.0), Interval(-box.t_max, box.t_max), Interval(0.0, box.r_max)});
    const std::int64_t steps[] = {theta_steps, box.t_steps, box.r_steps};
    report.mean_j = riemann_enclosure([&f](Cell c) { return f.with_phase_cell(c); }, cube, steps);
    report.mean_tail = j_tail(e, box);

    report.kappa = gamma_ratio_constant(e);
    report.mass = mass_integral(e, box);
    report.kappa_m = report.kappa * report.mass.main;
    report.kappa_m_tail = (report.kappa * Interval(report.mass.tail)).hi();
    report.closed_form = report.kappa * mass_closed_form(e);

    const Interval lhs(report.mean_j.lo(), rounding::add_up(report.mean_j.hi(), report.mean_tail));
    const Interval rhs(report.kappa_m.lo(), rounding::add_up(report.kappa_m.hi(), report.kappa_m_tail));
    report.consistent = lhs.intersects(rhs);
    return report;
}

std::string to_string(VerdictStatus s) { return s == VerdictStatus::certified ? "certified" : "inconclusive"; }

Verdict verify_separation(const Exponents& e, const JBox& box, const SeparationOptions& opts) {
    require_certified(e);
    Verdict v;
    v.dim = e.dim;
    const Interval zero(0.0);
    const Interval half_pi = pi() * Interval(0.5);
    if (opts.adaptive) {
        v.j0 = j_integral_adaptive(e, zero, box, opts.target_width, opts.max_depth);
        v.j_half_pi = j_integral_adaptive(e, half_pi, box, opts.target_width, opts.max_depth);
    } else {
        v.j0 = j_integral(e, zero, box);
        v.j_half_pi = j_integral(e, half_pi, box);
    }
    v.tail = j_tail(e, box);
    v.tail_corner = j_tail_corner(e, box);
    // Both integrands are nonnegative, so only J(0) loses the tail from below
    // and only J(pi/2) gains it above.
    const double lower = rounding::add_down(v.j0.main.lo(), -v.tail);
    const double upper = rounding::add_up(v.j_half_pi.main.hi(), v.tail);
    v.margin = rounding::add_down(lower, -upper);
    v.status = (std::isfinite(v.tail) && v.margin > 0.0) ? VerdictStatus::certified : VerdictStatus::inconclusive;
    return v;
}

double j_float(const Exponents& e, double theta, const JBox& box) {
    e.validate();
    const JIntegrand f(e, Interval(theta));
    const double ht = 2.0 * box.t_max / static_cast<double>(box.t_steps);
    const double hr = box.r_max / static_cast<double>(box.r_steps);
    double sum = 0.0;
    for (std::int64_t i = 0; i < box.t_steps; ++i) {
        const double t = -box.t_max + (static_cast<double>(i) + 0.5) * ht;
        double row = 0.0;
        for (std::int64_t j = 0; j < box.r_steps; ++j) {
            row += f.point(theta, t, (static_cast<double>(j) + 0.5) * hr);
        }
        sum += row;
    }
    return sum * ht * hr;
}

std::string to_string(ExtensionModel m) { return m == ExtensionModel::closed_form ? "closed_form" : "printed"; }

double cartesian_integrand(const Exponents& e, ExtensionModel model, double theta, double t,
                           std::span<const double> x) {
    const double q = e.q.value();
    const double d = static_cast<double>(e.dim);
    double x2 = 0.0;
    for (double v : x) x2 += v * v;
    if (model == ExtensionModel::closed_form) {
        const Complex ef = extension_of_gaussian(GeneralizedGaussian::standard(x.size()), Family::plus, t, x);
        return std::pow(std::fabs((std::exp(Complex(0.0, theta)) * ef).real()), q);
    }
    const double s = 1.0 + t * t;
    const double amp = std::pow(std::numbers::pi / s, d / 2.0) * std::exp(-x2 / (4.0 * s));
    return std::pow(amp * std::fabs(std::cos(theta + t * x2 / (4.0 * s))), q);
}

double gaussian_extension_norm_float(const Exponents& e, double theta, const SpacetimeGrid& grid,
                                     ExtensionModel model) {
    e.validate();
    // Both models depend on |x| only: integrate radially with the sphere area.
    const double d = static_cast<double>(e.dim);
    const double sphere = 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
    const double ht = 2.0 * grid.t_max / static_cast<double>(grid.t_steps);
    const double hx = grid.x_max / static_cast<double>(grid.x_steps);
    std::vector<double> x(static_cast<std::size_t>(e.dim), 0.0);
    double sum = 0.0;
    for (std::int64_t i = 0; i < grid.t_steps; ++i) {
        const double t = -grid.t_max + (static_cast<double>(i) + 0.5) * ht;
        double row = 0.0;
        for (std::int64_t j = 0; j < grid.x_steps; ++j) {
            const double rho = (static_cast<double>(j) + 0.5) * hx;
            x[0] = rho;
            row += std::pow(rho, d - 1.0) * cartesian_integrand(e, model, theta, t, x);
        }
        sum += row;
    }
    return sphere * sum * ht * hx;
}

SpacetimeGrid equidistribution_default_grid() {
    // Resolves the phase t|eta|^2 for |eta| up to 32 with about 12 points per period.
    return {4.0, 12.0, 16384, 1200};
}

double equidistribution_gap(const GeneralizedGaussian& g, std::span<const double> eta, const Exponents& e,
                            const SpacetimeGrid& grid) {
    const std::size_t dim = g.dim();
    if (dim != 1 && dim != 2) throw std::invalid_argument("equidistribution_gap supports d = 1, 2");
    if (eta.size() != dim) throw std::invalid_argument("dimension mismatch: eta and Gaussian");
    if (!(g.a.real() > 0.0)) throw std::domain_error("Gaussian needs Re a > 0");
    const double q = e.q.value();
    const double kappa = std::tgamma((q + 1.0) / 2.0) / (std::sqrt(std::numbers::pi) * std::tgamma((q + 2.0) / 2.0));
    double eta2 = 0.0;
    for (double v : eta) eta2 += v * v;

    const double ht = 2.0 * grid.t_max / static_cast<double>(grid.t_steps);
    const double hx = 2.0 * grid.x_max / static_cast<double>(grid.x_steps);
    const std::int64_t inner = dim == 1 ? 1 : grid.x_steps;
    double lhs = 0.0;
    double rhs = 0.0;
    std::vector<double> x(dim);
    for (std::int64_t i = 0; i < grid.t_steps; ++i) {
        const double t = -grid.t_max + (static_cast<double>(i) + 0.5) * ht;
        double row_l = 0.0;
        double row_r = 0.0;
        for (std::int64_t j = 0; j < grid.x_steps; ++j) {
            x[0] = -grid.x_max + (static_cast<double>(j) + 0.5) * hx;
            for (std::int64_t k = 0; k < inner; ++k) {
                if (dim == 2) x[1] = -grid.x_max + (static_cast<double>(k) + 0.5) * hx;
                const Complex big_g = extension_of_gaussian(g, Family::plus, t, x);
                double phase = -t * eta2;
                for (std::size_t m = 0; m < dim; ++m) phase += x[m] * eta[m];
                row_l += std::pow(std::fabs((std::exp(Complex(0.0, phase)) * big_g).imag()), q);
                row_r += std::pow(std::abs(big_g), q);
            }
        }
        lhs += row_l;
        rhs += row_r;
    }
    const double cell = ht * std::pow(hx, static_cast<double>(dim));
    return std::fabs(lhs - kappa * rhs) * cell;
}

SuperadditivityDefect superadditivity_defect(std::span<const Complex> values, Rational q) {
    if (values.size() < 2) throw std::invalid_argument("superadditivity needs at least two values");
    const double qq = q.value();
    if (!(qq > 2.0)) throw std::invalid_argument("superadditivity needs q > 2");
    Complex total{};
    double separate = 0.0;
    for (const Complex& a : values) {
        total += a;
        separate += std::pow(std::abs(a), qq);
    }
    SuperadditivityDefect out;
    out.defect = std::fabs(std::pow(std::abs(total), qq) - separate);
    for (std::size_t j = 0; j < values.size(); ++j) {
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (j == k) continue;
            out.pairsup = std::max(out.pairsup, std::abs(values[j]) * std::pow(std::abs(values[k]), qq - 1.0));
        }
    }
    return out;
}

SuperadditivitySearch superadditivity_search(int max_n, Rational q, std::int64_t samples, std::uint64_t seed) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    SuperadditivitySearch out;
    out.seed = seed;
    out.samples = samples;
    out.max_ratio.assign(static_cast<std::size_t>(max_n - 1), 0.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_mag(-4.0, 4.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<Complex> values;
    for (std::int64_t s = 0; s < samples; ++s) {
        const int n = 2 + static_cast<int>(s % (max_n - 1));
        values.resize(static_cast<std::size_t>(n));
        for (Complex& v : values) v = std::polar(std::exp(log_mag(rng)), angle(rng));
        const SuperadditivityDefect d = superadditivity_defect(values, q);
        if (d.pairsup == 0.0) continue;
        const double ratio = d.defect / d.pairsup;
        if (!std::isfinite(ratio)) out.finite = false;
        double& best = out.max_ratio[static_cast<std::size_t>(n - 2)];
        best = std::max(best, ratio);
    }
    return out;
}

}  // namespace pairbound
