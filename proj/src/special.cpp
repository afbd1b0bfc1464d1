#include "pairbound/special.hpp"

#include <stdexcept>

#include "pairbound/quad.hpp"

namespace pairbound {

Exponents Exponents::stein_tomas(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    Exponents e;
    e.dim = d;
    e.p = 2;
    e.q = Rational(2 * (d + 2), d);
    return e;
}

void Exponents::validate() const {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    if (p <= Rational(1)) throw std::invalid_argument("p must exceed 1");
    if (q <= p) throw std::invalid_argument("q must exceed p");
    if (q != Rational(dim + 2, dim) * p_conjugate()) {
        throw std::invalid_argument("exponents violate q = (d+2)/d * p'");
    }
}

Interval HalfIntegerGamma::value() const {
    Interval v = coefficient;
    if (sqrt_pi_power != 0) v = v * pow_int(sqrt(pi()), sqrt_pi_power);
    return v;
}

HalfIntegerGamma gamma_half_integer_parts(Rational z) {
    if (z <= Rational(0) || !(z * Rational(2)).is_integer()) {
        throw UnsupportedArgument("Gamma is only evaluated at positive (half-)integers, got " + z.str());
    }
    HalfIntegerGamma g{Interval(1.0), z.is_integer() ? 0 : 1};
    // Gamma(z) = (z-1)(z-2)...(base) Gamma(base), base in {1, 1/2}.
    const Rational base = z.is_integer() ? Rational(1) : Rational(1, 2);
    for (Rational k = base; k < z; k = k + Rational(1)) g.coefficient = g.coefficient * enclose(k);
    return g;
}

Interval gamma_half_integer(Rational z) { return gamma_half_integer_parts(z).value(); }

Interval gamma_ratio_constant(Rational q) {
    const HalfIntegerGamma num = gamma_half_integer_parts((q + Rational(1)) / Rational(2));
    const HalfIntegerGamma den = gamma_half_integer_parts((q + Rational(2)) / Rational(2));
    HalfIntegerGamma ratio{num.coefficient / den.coefficient, num.sqrt_pi_power - den.sqrt_pi_power - 1};
    // The power is 0 for even q and -2 for odd q.
    if (ratio.sqrt_pi_power % 2 == 0) {
        Interval v = ratio.coefficient;
        if (ratio.sqrt_pi_power != 0) v = v * pow_int(pi(), ratio.sqrt_pi_power / 2);
        return v;
    }
    return ratio.value();
}

Interval gamma_ratio_constant(const Exponents& e) { return gamma_ratio_constant(e.q); }

Interval lower_bound_factor(const Exponents& e) {
    const Interval kappa = gamma_ratio_constant(e);
    return pow_real(kappa, Rational(1) / e.q) * pow_real(Interval(2.0), Rational(1) / e.p_conjugate());
}

Interval polar_constant(const Exponents& e) {
    const Rational d = e.dim;
    const Interval numerator = Interval(2.0) * pow_real(pi(), d * (Rational(1) + e.q) / Rational(2));
    return numerator / gamma_half_integer(Rational(e.dim, 2));
}

Interval phi(const Interval& t, Rational q, std::int64_t steps) {
    if (t.lo() < 0.0 || t.hi() > 1.0) throw DomainError("phi needs t within [0, 1]");
    if (q < Rational(2)) throw DomainError("phi needs q/2 >= 1");
    if (steps < 1) throw std::invalid_argument("phi needs a positive step count");
    const Rational half_q = q / Rational(2);
    const Interval pi_enc = pi();
    // theta = pi u with u in [0, 1]; the 1/pi prefactor cancels the Jacobian.
    const Integrand integrand = [&](Cell cell) {
        const Interval base = clip_nonnegative(Interval(1.0) + t * cos(pi_enc * cell[0]));
        return pow_real(base, half_q);
    };
    const Box box({Interval(0.0, 1.0)});
    const std::int64_t grid[] = {steps};
    return riemann_enclosure(integrand, box, grid);
}

Interval phi_one_closed_form(Rational q) {
    return pow_real(Interval(2.0), q / Rational(2)) * gamma_ratio_constant(q);
}

MonotoneReport phi_monotone_check(Rational q, std::span<const double> grid, std::int64_t steps,
                                  int refinements) {
    MonotoneReport report;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] < grid[i - 1]) throw std::invalid_argument("phi grid must be sorted");
    }
    std::int64_t n = steps;
    for (int round = 0; round <= refinements; ++round, n *= 2) {
        report.values.clear();
        for (double t : grid) report.values.push_back(phi(Interval(t), q, n));
        report.steps_used = n;
        bool increasing = true;
        for (std::size_t i = 1; i < report.values.size(); ++i) {
            if (!(report.values[i - 1].hi() < report.values[i].lo())) {
                increasing = false;
                break;
            }
        }
        if (increasing) {
            report.certified = true;
            return report;
        }
    }
    return report;
}

}  // namespace pairbound
