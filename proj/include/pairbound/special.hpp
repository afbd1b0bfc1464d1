#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pairbound/exponents.hpp"
#include "pairbound/interval.hpp"

namespace pairbound {

// Gamma at a positive integer or half-integer, kept as
// coefficient * sqrt(pi)^sqrt_pi_power so that ratios can cancel the
// sqrt(pi) factors exactly.
struct HalfIntegerGamma {
    Interval coefficient;
    int sqrt_pi_power = 0;

    Interval value() const;
};

// Throws UnsupportedArgument unless z > 0 and 2z is an integer.
HalfIntegerGamma gamma_half_integer_parts(Rational z);
Interval gamma_half_integer(Rational z);

// kappa_q = Gamma((q+1)/2) / (sqrt(pi) Gamma((q+2)/2)), the mean of
// |cos|^q over a period. Needs integer q (true for d = 1, 2).
Interval gamma_ratio_constant(Rational q);
Interval gamma_ratio_constant(const Exponents& e);

// kappa_q^(1/q) * 2^(1/p').
Interval lower_bound_factor(const Exponents& e);

// c_d = 2 pi^(d(1+q)/2) / Gamma(d/2), the constant in front of the polar
// form of the Gaussian extension integral.
Interval polar_constant(const Exponents& e);

// phi(t) = (1/pi) int_0^pi (1 + t cos th)^(q/2) dth as a rigorous Riemann
// enclosure over `steps` cells. Requires t within [0, 1] and q/2 >= 1.
Interval phi(const Interval& t, Rational q, std::int64_t steps);

// 2^(q/2) / sqrt(pi) * Gamma((q+1)/2) / Gamma((q+2)/2).
Interval phi_one_closed_form(Rational q);

struct MonotoneReport {
    bool certified = false;
    std::int64_t steps_used = 0;
    std::vector<Interval> values;
};

// Certifies phi strictly increasing along a sorted grid in [0, 1]: each
// enclosure must lie strictly below the next. The step count is doubled up
// to `refinements` times before giving up.
MonotoneReport phi_monotone_check(Rational q, std::span<const double> grid, std::int64_t steps,
                                  int refinements = 6);

}  // namespace pairbound
