#include "pairbound/symmetry_checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pairbound/symmetry.hpp"

namespace pairbound {

bool SymmetryCheckReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed(); });
}

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    RealVec vec(std::size_t d, double lo, double hi) {
        RealVec v(d);
        for (double& x : v) x = uniform(lo, hi);
        return v;
    }

    SymmetryParams symmetry(std::size_t d, Family f) {
        SymmetryParams s = SymmetryParams::identity(d, f);
        s.lambda = std::exp(uniform(-0.7, 0.7));
        s.t0 = uniform(-1.0, 1.0);
        s.x0 = vec(d, -1.0, 1.0);
        s.xi_shift = vec(d, -1.0, 1.0);
        return s;
    }

    GeneralizedGaussian gaussian(std::size_t d) {
        GeneralizedGaussian g;
        g.a = {uniform(0.5, 2.0), uniform(-1.0, 1.0)};
        g.b.resize(d);
        for (Complex& b : g.b) b = {uniform(-0.5, 0.5), uniform(-0.5, 0.5)};
        g.c = {uniform(-0.3, 0.3), uniform(-3.0, 3.0)};
        return g;
    }

    Family family() { return uniform(0.0, 1.0) < 0.5 ? Family::plus : Family::minus; }

private:
    std::mt19937_64 rng_;
};

double rel_error(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// int exp(-A u^2 + B u) du over the real line by the trapezoidal rule.
Complex gaussian_integral_1d(Complex a, Complex b) {
    constexpr double kHalf = 12.0;
    constexpr int kPoints = 12001;
    const double h = 2.0 * kHalf / (kPoints - 1);
    Complex sum{};
    for (int i = 0; i < kPoints; ++i) {
        const double u = -kHalf + h * i;
        const double w = (i == 0 || i == kPoints - 1) ? 0.5 : 1.0;
        sum += w * std::exp(-a * u * u + b * u);
    }
    return sum * h;
}

// E_+- g(t, x) from the defining integral; isotropic Gaussians factor over coordinates.
Complex extension_by_quadrature(const GeneralizedGaussian& g, Family f, double t, std::span<const double> x) {
    const Complex big_a = g.a - Complex(0.0, family_sign(f) * t);
    Complex v = std::exp(g.c);
    for (std::size_t i = 0; i < x.size(); ++i) v *= gaussian_integral_1d(big_a, g.b[i] + Complex(0.0, x[i]));
    return v;
}

SpacetimeFunction extension_function(const GeneralizedGaussian& g, Family f) {
    return [g, f](double t, std::span<const double> x) { return extension_of_gaussian(g, f, t, x); };
}

}  // namespace

SymmetryCheckReport run_symmetry_checks(std::uint64_t seed, int cases) {
    Sampler rng(seed);
    SymmetryCheckReport report;
    report.seed = seed;

    PropertyResult apply_r{"apply_closed_form", 0, 0.0, 1e-12};
    PropertyResult quad_r{"extension_quadrature", 0, 0.0, 1e-6};
    PropertyResult inter_r{"intertwining", 0, 0.0, 1e-10};
    PropertyResult conj_r{"conjugation_identity", 0, 0.0, 1e-12};
    PropertyResult comp_r{"compose", 0, 0.0, 1e-12};
    PropertyResult assoc_r{"associativity", 0, 0.0, 1e-12};
    PropertyResult inv_r{"inverse", 0, 0.0, 1e-12};
    PropertyResult cross_r{"cross_composition", 0, 0.0, 1e-10};
    PropertyResult iso_r{"isometry", 0, 0.0, 1e-6};

    auto bump = [](PropertyResult& r, double err) {
        r.max_error = std::max(r.max_error, std::isfinite(err) ? err : INFINITY);
    };

    for (int k = 0; k < cases; ++k) {
        const std::size_t d = (k % 2 == 0) ? 1 : 2;
        const Family fam = rng.family();
        const GeneralizedGaussian g = rng.gaussian(d);
        const SymmetryParams s1 = rng.symmetry(d, fam);
        const SymmetryParams s2 = rng.symmetry(d, fam);
        const SymmetryParams s3 = rng.symmetry(d, fam);
        const RealVec xi = rng.vec(d, -2.0, 2.0);
        const double t = rng.uniform(-2.0, 2.0);
        const RealVec x = rng.vec(d, -3.0, 3.0);

        bump(apply_r, rel_error(apply(s1, g)(xi), apply_pointwise(s1, g, xi)));
        ++apply_r.cases;

        if (k < 20) {
            bump(quad_r, rel_error(extension_of_gaussian(g, fam, t, x), extension_by_quadrature(g, fam, t, x)));
            ++quad_r.cases;
        }

        const Complex lhs = extension_of_gaussian(apply(s1, g), fam, t, x);
        const Complex rhs = transform_spacetime(s1, extension_function(g, fam), t, x);
        bump(inter_r, rel_error(lhs, rhs));
        ++inter_r.cases;

        bump(conj_r, rel_error(extension_of_gaussian(g, Family::minus, t, x),
                               std::conj(extension_of_gaussian(reflect(g), Family::plus, t, x))));
        ++conj_r.cases;

        const PhasedSymmetry c12 = compose(s1, s2);
        bump(comp_r, rel_error(c12.phase * apply(c12.params, g)(xi), apply(s1, apply(s2, g))(xi)));
        ++comp_r.cases;

        // (S1 S2) S3 against S1 (S2 S3), both including their phases.
        const PhasedSymmetry left = compose(c12.params, s3);
        const PhasedSymmetry c23 = compose(s2, s3);
        const PhasedSymmetry right = compose(s1, c23.params);
        bump(assoc_r, rel_error(c12.phase * left.phase * apply(left.params, g)(xi),
                                c23.phase * right.phase * apply(right.params, g)(xi)));
        ++assoc_r.cases;

        const PhasedSymmetry inv = inverse(s1);
        const PhasedSymmetry round = compose(s1, inv.params);
        bump(inv_r, rel_error(inv.phase * round.phase * apply(round.params, g)(xi), g(xi)));
        ++inv_r.cases;

        const SymmetryParams sp = rng.symmetry(d, Family::plus);
        const SymmetryParams rm = rng.symmetry(d, Family::minus);
        const SpacetimeFunction f = extension_function(g, Family::plus);
        const SpacetimeFunction tf = [&](double tt, std::span<const double> xx) {
            return transform_spacetime(sp, f, tt, xx);
        };
        const Complex direct = inverse_transform_spacetime(rm, tf, t, x);
        bump(cross_r, rel_error(evaluate_cross(cross_phase(sp, rm), f, t, x), direct));
        ++cross_r.cases;

        const double before = lp_norm_numeric(g, 2.0);
        const double after = lp_norm_numeric(apply(s1, g), 2.0);
        bump(iso_r, std::abs(after - before));
        ++iso_r.cases;
    }

    report.results = {apply_r, quad_r, inter_r, conj_r, comp_r, assoc_r, inv_r, cross_r, iso_r};
    return report;
}

}  // namespace pairbound
