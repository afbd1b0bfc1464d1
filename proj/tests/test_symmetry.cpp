#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "pairbound/symmetry.hpp"
#include "pairbound/symmetry_checks.hpp"

using pairbound::Complex;
using pairbound::Family;
using pairbound::GeneralizedGaussian;
using pairbound::OrthogonalityCondition;
using pairbound::SymmetryParams;

namespace {

SymmetryParams make(Family f, double lambda, double t0, std::vector<double> x0, std::vector<double> xi) {
    SymmetryParams s = SymmetryParams::identity(x0.size(), f);
    s.lambda = lambda;
    s.t0 = t0;
    s.x0 = std::move(x0);
    s.xi_shift = std::move(xi);
    return s;
}

GeneralizedGaussian sample_gaussian() {
    GeneralizedGaussian g;
    g.a = {1.3, -0.4};
    g.b = {{0.2, 0.1}, {-0.3, 0.5}};
    g.c = {0.1, 0.7};
    return g;
}

bool same(const GeneralizedGaussian& x, const GeneralizedGaussian& y, double tol = 1e-14) {
    if (std::abs(x.a - y.a) > tol || std::abs(x.c - y.c) > tol || x.b.size() != y.b.size()) return false;
    for (std::size_t i = 0; i < x.b.size(); ++i) {
        if (std::abs(x.b[i] - y.b[i]) > tol) return false;
    }
    return true;
}

pairbound::ParamSequencePair sequences(std::size_t n, auto&& first, auto&& second) {
    pairbound::ParamSequencePair p;
    for (std::size_t k = 1; k <= n; ++k) {
        p.first.push_back(first(static_cast<double>(k)));
        p.second.push_back(second(static_cast<double>(k)));
    }
    return p;
}

}  // namespace

TEST_CASE("apply: identity and scaling") {
    const GeneralizedGaussian g = sample_gaussian();
    CHECK(same(pairbound::apply(SymmetryParams::identity(2), g), g));

    const GeneralizedGaussian s = GeneralizedGaussian::standard(2);
    const double lambda = 1.7;
    const GeneralizedGaussian scaled = pairbound::apply(make(Family::plus, lambda, 0, {0, 0}, {0, 0}), s);
    CHECK(std::abs(scaled.a - Complex(lambda * lambda)) < 1e-14);
    CHECK(std::abs(scaled.c - Complex((2.0 / 2.0) * std::log(lambda))) < 1e-14);
    CHECK(scaled.a.real() > 0.0);
}

TEST_CASE("apply matches the pointwise definition") {
    const GeneralizedGaussian g = sample_gaussian();
    const SymmetryParams s = make(Family::minus, 0.8, 0.6, {0.3, -1.1}, {0.9, 0.2});
    for (double u : {-1.5, -0.2, 0.0, 0.7, 1.9}) {
        const double xi[] = {u, 0.5 - u};
        const Complex want = pairbound::apply_pointwise(s, g, xi);
        CHECK(std::abs(pairbound::apply(s, g)(xi) - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("extension of the standard Gaussian") {
    for (std::size_t d : {1U, 2U}) {
        const std::vector<double> origin(d, 0.0);
        const Complex e = pairbound::extension_of_gaussian(GeneralizedGaussian::standard(d), Family::plus, 0.0, origin);
        CHECK(e.real() == doctest::Approx(std::pow(std::numbers::pi, d / 2.0)).epsilon(1e-15));
        CHECK(std::abs(e.imag()) < 1e-15);
    }
    const GeneralizedGaussian s = GeneralizedGaussian::standard(1);
    for (double t : {-3.0, -0.5, 0.0, 1.0, 10.0}) {
        for (double x : {-4.0, 0.0, 0.3, 2.0}) {
            const double xs[] = {x};
            const double modulus = std::abs(pairbound::extension_of_gaussian(s, Family::plus, t, xs));
            const double want = std::sqrt(std::numbers::pi) * std::pow(1 + t * t, -0.25) * std::exp(-x * x / (4 * (1 + t * t)));
            CHECK(modulus == doctest::Approx(want).epsilon(1e-13));
        }
    }
    GeneralizedGaussian bad = s;
    bad.a = {-1.0, 0.0};
    const double x0[] = {0.0};
    CHECK_THROWS_AS(pairbound::extension_of_gaussian(bad, Family::plus, 0.0, x0), std::domain_error);
}

TEST_CASE("reflection") {
    const GeneralizedGaussian s = GeneralizedGaussian::standard(2);
    CHECK(same(pairbound::reflect(s), s));
    const GeneralizedGaussian g = sample_gaussian();
    CHECK(same(pairbound::reflect(pairbound::reflect(g)), g));
    const double xi[] = {0.4, -1.2};
    const double minus_xi[] = {-0.4, 1.2};
    CHECK(std::abs(pairbound::reflect(g)(xi) - std::conj(g(minus_xi))) < 1e-14);
}

TEST_CASE("composition") {
    const SymmetryParams s = make(Family::plus, 1.4, -0.3, {0.5}, {0.8});
    const pairbound::PhasedSymmetry with_id = pairbound::compose(s, SymmetryParams::identity(1));
    CHECK(with_id.params.lambda == doctest::Approx(s.lambda));
    CHECK(with_id.params.t0 == doctest::Approx(s.t0));
    CHECK(with_id.params.x0[0] == doctest::Approx(s.x0[0]));
    CHECK(with_id.params.xi_shift[0] == doctest::Approx(s.xi_shift[0]));
    CHECK(std::abs(with_id.phase - Complex(1.0)) < 1e-15);

    const pairbound::PhasedSymmetry scalings =
        pairbound::compose(make(Family::minus, 2.0, 0, {0}, {0}), make(Family::minus, 3.0, 0, {0}, {0}));
    CHECK(scalings.params.lambda == 6.0);
    CHECK(std::abs(scalings.phase - Complex(1.0)) < 1e-15);

    CHECK_THROWS_AS(pairbound::compose(s, SymmetryParams::identity(1, Family::minus)), std::invalid_argument);
    CHECK_THROWS_AS(pairbound::compose(s, SymmetryParams::identity(2)), std::invalid_argument);
}

TEST_CASE("T inverts") {
    const SymmetryParams s = make(Family::minus, 0.7, 0.4, {-0.2, 0.9}, {1.1, -0.5});
    const GeneralizedGaussian g = sample_gaussian();
    const pairbound::SpacetimeFunction f = [&](double t, std::span<const double> x) {
        return pairbound::extension_of_gaussian(g, Family::minus, t, x);
    };
    const pairbound::SpacetimeFunction tf = [&](double t, std::span<const double> x) {
        return pairbound::transform_spacetime(s, f, t, x);
    };
    const double x[] = {0.3, -0.8};
    const Complex back = pairbound::inverse_transform_spacetime(s, tf, 0.25, x);
    CHECK(std::abs(back - f(0.25, x)) < 1e-13);
}

TEST_CASE("cross phase") {
    const SymmetryParams plain_plus = make(Family::plus, 1.5, 0, {0}, {0.7});
    const SymmetryParams plain_minus = make(Family::minus, 0.5, 0, {0}, {-0.3});
    CHECK(pairbound::cross_phase(plain_plus, plain_minus).theta == 0.0);

    const SymmetryParams no_freq_plus = make(Family::plus, 1.5, 0.4, {1.0}, {0});
    const SymmetryParams no_freq_minus = make(Family::minus, 0.5, -0.2, {0.3}, {0});
    CHECK(pairbound::cross_phase(no_freq_plus, no_freq_minus).theta == 0.0);

    const pairbound::CrossAction a = pairbound::cross_phase(no_freq_plus, no_freq_minus);
    CHECK(a.r == doctest::Approx(1.0 / 3.0));
    CHECK(a.amplitude_exponent == doctest::Approx(0.5));
    CHECK_THROWS_AS(pairbound::cross_phase(no_freq_minus, no_freq_plus), std::invalid_argument);
}

TEST_CASE("property suite") {
    const pairbound::SymmetryCheckReport r = pairbound::run_symmetry_checks(2024, 100);
    for (const pairbound::PropertyResult& p : r.results) {
        INFO(p.name << " max error " << p.max_error);
        CHECK(p.passed());
        CHECK(p.cases > 0);
    }
    CHECK(r.all_passed());
    CHECK(r.results.size() == 9);
}

TEST_CASE("isometry of the L^2 normalization") {
    const GeneralizedGaussian g = sample_gaussian();
    const SymmetryParams s = make(Family::plus, 2.3, 1.0, {0.5, 0.5}, {-1.0, 0.3});
    CHECK(pairbound::lp_norm_numeric(pairbound::apply(s, g), 2.0) ==
          doctest::Approx(pairbound::lp_norm_numeric(g, 2.0)).epsilon(1e-9));
    // Closed form for the standard Gaussian in d = 1: (pi/2)^(1/4).
    CHECK(pairbound::lp_norm_numeric(GeneralizedGaussian::standard(1), 2.0) ==
          doctest::Approx(std::pow(std::numbers::pi / 2, 0.25)).epsilon(1e-12));
}

TEST_CASE("orthogonality: diverging scale ratio") {
    const auto p = sequences(
        20, [](double n) { return make(Family::plus, std::pow(2.0, n), 0, {0}, {0}); },
        [](double) { return make(Family::minus, 1.0, 0, {0}, {0}); });
    const pairbound::OrthogonalityReport r = pairbound::classify_orthogonality(p, 1e3);
    CHECK(r.condition == OrthogonalityCondition::cond1);
    CHECK(r.heuristic);
    CHECK(r.witnesses[0] == std::pow(2.0, 20));

    const auto shrinking = sequences(
        20, [](double n) { return make(Family::plus, std::pow(2.0, -n), 0, {0}, {0}); },
        [](double) { return make(Family::plus, 1.0, 0, {0}, {0}); });
    CHECK(pairbound::classify_orthogonality(shrinking, 1e3).condition == OrthogonalityCondition::cond1);
}

TEST_CASE("orthogonality: identical sequences") {
    const auto p = sequences(
        10, [](double) { return make(Family::plus, 1.3, 0.2, {0.1}, {0.4}); },
        [](double) { return make(Family::plus, 1.3, 0.2, {0.1}, {0.4}); });
    CHECK(pairbound::classify_orthogonality(p, 10).condition == OrthogonalityCondition::none);
}

TEST_CASE("orthogonality: diverging frequency") {
    const auto p = sequences(
        20, [](double n) { return make(Family::plus, 1.0, 0, {0, 0}, {n, 0}); },
        [](double) { return make(Family::minus, 1.0, 0, {0, 0}, {0, 0}); });
    const pairbound::OrthogonalityReport r = pairbound::classify_orthogonality(p, 10);
    CHECK(r.condition == OrthogonalityCondition::cond2);
    CHECK(r.witnesses[1] == doctest::Approx(20.0));
}

TEST_CASE("orthogonality: diverging translation") {
    const auto p = sequences(
        20, [](double n) { return make(Family::minus, 1.0, n * n, {0}, {0}); },
        [](double) { return make(Family::minus, 1.0, 0, {0}, {0}); });
    CHECK(pairbound::classify_orthogonality(p, 100).condition == OrthogonalityCondition::cond3);
}

TEST_CASE("orthogonality is symmetric for same-sign pairs") {
    auto a = [](double n) { return make(Family::plus, std::pow(3.0, n), 0, {0}, {0}); };
    auto b = [](double) { return make(Family::plus, 1.0, 0, {0}, {0}); };
    CHECK(pairbound::classify_orthogonality(sequences(12, a, b), 1e3).condition ==
          pairbound::classify_orthogonality(sequences(12, b, a), 1e3).condition);

    auto c = [](double n) { return make(Family::minus, 1.0, 0, {0}, {n}); };
    auto d = [](double) { return make(Family::minus, 1.0, 0, {0}, {0}); };
    CHECK(pairbound::classify_orthogonality(sequences(30, c, d), 10).condition == OrthogonalityCondition::cond2);
    CHECK(pairbound::classify_orthogonality(sequences(30, d, c), 10).condition == OrthogonalityCondition::cond2);
}

TEST_CASE("orthogonality input validation") {
    auto one = [](double) { return make(Family::plus, 1.0, 0, {0}, {0}); };
    auto two = [](double) { return make(Family::plus, 1.0, 0, {0, 0}, {0, 0}); };
    CHECK_THROWS_AS(pairbound::classify_orthogonality(sequences(5, one, two), 10), std::invalid_argument);
    CHECK_THROWS_AS(pairbound::classify_orthogonality(sequences(2, one, one), 10), std::invalid_argument);
    pairbound::ParamSequencePair uneven = sequences(5, one, one);
    uneven.second.pop_back();
    CHECK_THROWS_AS(pairbound::classify_orthogonality(uneven, 10), std::invalid_argument);
}
