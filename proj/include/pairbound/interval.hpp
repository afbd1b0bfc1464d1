#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "pairbound/errors.hpp"
#include "pairbound/rational.hpp"

namespace pairbound {

// Directed rounding without touching the FPU mode.
//
// Every basic operation is computed in round-to-nearest and its exact
// rounding error is recovered with an error-free transformation (TwoSum,
// fma residuals). The nearest result is then stepped by one ulp only when
// it lies on the wrong side of the exact value, which reproduces true
// round-down / round-up. Results near the underflow range, where the
// residuals stop being exact, fall back to an unconditional one-ulp step.
namespace rounding {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude fma residuals may be inexact (subnormal range).
inline constexpr double kTiny = 0x1p-900;

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

// s + e == a + b exactly (both finite, no overflow).
inline double two_sum_err(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

inline double add_down(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) {
        if (std::isnan(s)) return -kInf;
        return (s == kInf && std::isfinite(a) && std::isfinite(b)) ? std::numeric_limits<double>::max() : s;
    }
    return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) {
        if (std::isnan(s)) return kInf;
        return (s == -kInf && std::isfinite(a) && std::isfinite(b)) ? std::numeric_limits<double>::lowest() : s;
    }
    return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}

// Endpoint products follow the interval convention 0 * inf = 0.
inline double mul_down(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (!std::isfinite(p)) {
        return (p == kInf && std::isfinite(a) && std::isfinite(b)) ? std::numeric_limits<double>::max() : p;
    }
    if (std::fabs(p) < kTiny) return next_down(p);
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (!std::isfinite(p)) {
        return (p == -kInf && std::isfinite(a) && std::isfinite(b)) ? std::numeric_limits<double>::lowest() : p;
    }
    if (std::fabs(p) < kTiny) return next_up(p);
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double x);
double sqrt_up(double x);

}  // namespace rounding

// A closed interval [lo, hi] of reals with lo <= hi. Endpoints may be
// infinite (half-infinite tail envelopes); NaN endpoints are rejected.
class Interval {
public:
    constexpr Interval() = default;
    constexpr Interval(double x) : lo_(x), hi_(x) {  // NOLINT: a point is an interval
        if (x != x) throw DomainError("NaN interval endpoint");
    }
    constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (lo != lo || hi != hi) throw DomainError("NaN interval endpoint");
        if (lo > hi) throw DomainError("interval with lo > hi");
    }

    static Interval hull(double a, double b) { return {std::min(a, b), std::max(a, b)}; }
    static constexpr Interval entire() { return {-rounding::kInf, rounding::kInf}; }

    constexpr double lo() const { return lo_; }
    constexpr double hi() const { return hi_; }
    double mid() const;
    // Upper bound on hi - lo.
    double width() const { return rounding::add_up(hi_, -lo_); }
    // Magnitude max |x| and mignitude min |x|.
    double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
    double mig() const {
        if (lo_ <= 0.0 && hi_ >= 0.0) return 0.0;
        return std::min(std::fabs(lo_), std::fabs(hi_));
    }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool subset_of(const Interval& o) const { return o.contains(*this); }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return {rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi())};
}

inline Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

inline Interval operator-(const Interval& a, const Interval& b) {
    return {rounding::add_down(a.lo(), -b.hi()), rounding::add_up(a.hi(), -b.lo())};
}

Interval operator*(const Interval& a, const Interval& b);
// Throws DivisionByZeroInterval when 0 is in b.
Interval operator/(const Interval& a, const Interval& b);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

Interval hull(const Interval& a, const Interval& b);
// Throws DomainError when the intervals are disjoint.
Interval intersect(const Interval& a, const Interval& b);

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval cos(const Interval& x);
Interval sin(const Interval& x);
// x^n for integer n; n < 0 requires 0 not in x.
Interval pow_int(const Interval& x, std::int64_t n);
// x^q. Integer q goes through pow_int; otherwise x.lo >= 0 is required and
// the enclosure is exp(q ln x) with 0^q = 0 (q > 0) handled exactly.
Interval pow_real(const Interval& x, Rational q);
// [max(lo, 0), max(hi, 0)].
Interval clip_nonnegative(const Interval& x);

// Enclosure of the exact rational num/den.
Interval enclose(Rational r);

// Rigorous enclosure of pi (one ulp wide).
Interval pi();

// "[lo, hi]" with lo rounded down and hi rounded up in decimal, so the
// printed interval still encloses the stored one.
std::string to_string(const Interval& x, int significant_digits = 17);
// Decimal string rounded toward -inf (down = true) or +inf.
std::string decimal_bound(double x, bool down, int significant_digits = 17);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace pairbound
