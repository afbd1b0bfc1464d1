#include "pairbound/interval.hpp"

#include <array>
#include <cfenv>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace pairbound {

namespace rounding {

double div_down(double a, double b) {
    const double q = a / b;
    if (std::isnan(q)) return -kInf;
    if (!std::isfinite(q)) {
        return (std::isfinite(a) && std::isfinite(b) && q == kInf) ? std::numeric_limits<double>::max() : q;
    }
    if (!std::isfinite(a) || !std::isfinite(b)) return q;
    if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_down(q);
    const double r = std::fma(-q, b, a);  // a - q*b exactly
    if (r == 0.0) return q;
    return ((r < 0) != (b < 0)) ? next_down(q) : q;
}

double div_up(double a, double b) {
    const double q = a / b;
    if (std::isnan(q)) return kInf;
    if (!std::isfinite(q)) {
        return (std::isfinite(a) && std::isfinite(b) && q == -kInf) ? std::numeric_limits<double>::lowest() : q;
    }
    if (!std::isfinite(a) || !std::isfinite(b)) return q;
    if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_up(q);
    const double r = std::fma(-q, b, a);
    if (r == 0.0) return q;
    return ((r < 0) == (b < 0)) ? next_up(q) : q;
}

double sqrt_down(double x) {
    const double s = std::sqrt(x);
    if (!std::isfinite(s) || s == 0.0) return s;
    if (x < kTiny) return next_down(s);
    return std::fma(-s, s, x) < 0 ? next_down(s) : s;
}

double sqrt_up(double x) {
    const double s = std::sqrt(x);
    if (!std::isfinite(s) || s == 0.0) return s;
    if (x < kTiny) return next_up(s);
    return std::fma(-s, s, x) > 0 ? next_up(s) : s;
}

}  // namespace rounding

namespace {

using rounding::kInf;
using rounding::next_down;
using rounding::next_up;

// glibc documents at most 1 ulp error for exp, log, sin and cos on x86-64;
// library results are stepped outward by this many ulps.
constexpr int kLibmUlps = 2;

double widen_down(double x) {
    for (int i = 0; i < kLibmUlps; ++i) x = next_down(x);
    return x;
}

double widen_up(double x) {
    for (int i = 0; i < kLibmUlps; ++i) x = next_up(x);
    return x;
}

double exp_down(double x) {
    if (x == -kInf) return 0.0;
    if (x == 0.0) return 1.0;
    const double e = std::exp(x);
    if (e == kInf) return std::numeric_limits<double>::max();
    return std::max(0.0, widen_down(e));
}

double exp_up(double x) {
    if (x == -kInf) return 0.0;
    if (x == 0.0) return 1.0;
    const double e = std::exp(x);
    if (e == kInf) return kInf;
    return widen_up(e);
}

double log_down(double x) {
    if (x == 0.0) return -kInf;
    if (x == 1.0) return 0.0;
    if (x == kInf) return std::numeric_limits<double>::max();
    return widen_down(std::log(x));
}

double log_up(double x) {
    if (x == 0.0) return std::numeric_limits<double>::lowest();
    if (x == 1.0) return 0.0;
    if (x == kInf) return kInf;
    return widen_up(std::log(x));
}

// Range of cos (phase = 0) or sin (phase = 1/2) over x. Extrema sit at
// (k + phase) * pi; k even gives +1, k odd gives -1. A critical point is
// counted whenever its pi-enclosure touches x, so ambiguity only widens.
Interval trig_range(const Interval& x, double phase) {
    const double a = x.lo();
    const double b = x.hi();
    if (!std::isfinite(a) || !std::isfinite(b)) return {-1.0, 1.0};
    if (std::max(std::fabs(a), std::fabs(b)) > 0x1p40 || b - a >= 7.0) return {-1.0, 1.0};

    auto f = [phase](double v) { return phase == 0.0 ? std::cos(v) : std::sin(v); };
    const double fa = f(a);
    const double fb = f(b);
    double lo = std::max(-1.0, widen_down(std::min(fa, fb)));
    double hi = std::min(1.0, widen_up(std::max(fa, fb)));

    const Interval p = pi();
    const double k_first = std::floor(a / std::numbers::pi - phase) - 1.0;
    const double k_last = std::ceil(b / std::numbers::pi - phase) + 1.0;
    for (double k = k_first; k <= k_last; k += 1.0) {
        const Interval crit = Interval(k + phase) * p;
        if (crit.hi() < a || crit.lo() > b) continue;
        if (std::fmod(std::fabs(k), 2.0) == 0.0) {
            hi = 1.0;
        } else {
            lo = -1.0;
        }
    }
    return {lo, hi};
}

// Bounds on v^q for a single nonnegative v and non-integer q.
std::pair<double, double> point_pow(double v, Rational q) {
    if (v == 0.0) return q > Rational(0) ? std::pair{0.0, 0.0} : std::pair{kInf, kInf};
    if (v == kInf) return q > Rational(0) ? std::pair{kInf, kInf} : std::pair{0.0, 0.0};
    const Interval r = exp(enclose(q) * log(Interval(v)));
    return {r.lo(), r.hi()};
}

}  // namespace

double Interval::mid() const {
    if (lo_ == -kInf && hi_ == kInf) return 0.0;
    if (lo_ == -kInf) return std::numeric_limits<double>::lowest();
    if (hi_ == kInf) return std::numeric_limits<double>::max();
    const double m = 0.5 * lo_ + 0.5 * hi_;
    return std::clamp(m, lo_, hi_);
}

Interval operator*(const Interval& a, const Interval& b) {
    const std::array<double, 4> down = {
        rounding::mul_down(a.lo(), b.lo()), rounding::mul_down(a.lo(), b.hi()),
        rounding::mul_down(a.hi(), b.lo()), rounding::mul_down(a.hi(), b.hi())};
    const std::array<double, 4> up = {
        rounding::mul_up(a.lo(), b.lo()), rounding::mul_up(a.lo(), b.hi()),
        rounding::mul_up(a.hi(), b.lo()), rounding::mul_up(a.hi(), b.hi())};
    return {*std::min_element(down.begin(), down.end()), *std::max_element(up.begin(), up.end())};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0.0)) throw DivisionByZeroInterval();
    const std::array<double, 4> down = {
        rounding::div_down(a.lo(), b.lo()), rounding::div_down(a.lo(), b.hi()),
        rounding::div_down(a.hi(), b.lo()), rounding::div_down(a.hi(), b.hi())};
    const std::array<double, 4> up = {
        rounding::div_up(a.lo(), b.lo()), rounding::div_up(a.lo(), b.hi()),
        rounding::div_up(a.hi(), b.lo()), rounding::div_up(a.hi(), b.hi())};
    return {*std::min_element(down.begin(), down.end()), *std::max_element(up.begin(), up.end())};
}

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval intersect(const Interval& a, const Interval& b) {
    if (!a.intersects(b)) throw DomainError("intersection of disjoint intervals");
    return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

Interval abs(const Interval& x) { return {x.mig(), x.mag()}; }

Interval sqr(const Interval& x) {
    const double m = x.mig();
    const double big = x.mag();
    return {rounding::mul_down(m, m), rounding::mul_up(big, big)};
}

Interval sqrt(const Interval& x) {
    if (x.lo() < 0.0) throw DomainError("sqrt of interval with negative part");
    return {rounding::sqrt_down(x.lo()), rounding::sqrt_up(x.hi())};
}

Interval exp(const Interval& x) { return {exp_down(x.lo()), exp_up(x.hi())}; }

Interval log(const Interval& x) {
    if (x.lo() < 0.0) throw DomainError("log of interval with negative part");
    if (x.hi() == 0.0) throw DomainError("log of [0, 0]");
    return {log_down(x.lo()), log_up(x.hi())};
}

Interval cos(const Interval& x) { return trig_range(x, 0.0); }

Interval sin(const Interval& x) { return trig_range(x, 0.5); }

Interval pow_int(const Interval& x, std::int64_t n) {
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / pow_int(x, -n);

    auto power = [n](double v) {
        Interval acc(1.0);
        Interval base(v);
        for (std::int64_t e = n; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        return acc;
    };
    if (n % 2 == 1) return {power(x.lo()).lo(), power(x.hi()).hi()};
    return {power(x.mig()).lo(), power(x.mag()).hi()};
}

Interval pow_real(const Interval& x, Rational q) {
    if (q.is_integer()) return pow_int(x, q.num());
    if (x.lo() < 0.0) throw DomainError("non-integer power of interval with negative part");
    const auto [lo_down, lo_up] = point_pow(x.lo(), q);
    const auto [hi_down, hi_up] = point_pow(x.hi(), q);
    if (q > Rational(0)) return {lo_down, hi_up};
    return {hi_down, lo_up};
}

Interval clip_nonnegative(const Interval& x) {
    return {std::max(x.lo(), 0.0), std::max(x.hi(), 0.0)};
}

Interval enclose(Rational r) {
    constexpr std::int64_t kExact = std::int64_t{1} << 53;
    auto exact = [](std::int64_t v) {
        if (v > kExact || v < -kExact) {
            const double d = static_cast<double>(v);
            return Interval(next_down(d), next_up(d));
        }
        return Interval(static_cast<double>(v));
    };
    if (r.is_integer()) return exact(r.num());
    return exact(r.num()) / exact(r.den());
}

Interval pi() {
    // std::numbers::pi is the double just below pi.
    return {std::numbers::pi, next_up(std::numbers::pi)};
}

namespace {

class RoundingModeGuard {
public:
    explicit RoundingModeGuard(int mode) : saved_(std::fegetround()) { std::fesetround(mode); }
    ~RoundingModeGuard() { std::fesetround(saved_); }
    RoundingModeGuard(const RoundingModeGuard&) = delete;
    RoundingModeGuard& operator=(const RoundingModeGuard&) = delete;

private:
    int saved_;
};

std::string format_sci(double x, int digits, int mode) {
    RoundingModeGuard guard(mode);
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*e", digits - 1, x);
    return buf.data();
}

// Exact comparison of a decimal string with a double: the string is parsed
// rounding away from x's side, so the test holds only if it holds exactly.
bool decimal_le(const std::string& s, double x) {
    RoundingModeGuard guard(FE_UPWARD);
    return std::strtod(s.c_str(), nullptr) <= x;
}

bool decimal_ge(const std::string& s, double x) {
    RoundingModeGuard guard(FE_DOWNWARD);
    return std::strtod(s.c_str(), nullptr) >= x;
}

}  // namespace

std::string decimal_bound(double x, bool down, int significant_digits) {
    if (x == kInf) return "inf";
    if (x == -kInf) return "-inf";
    double y = x;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::string s = format_sci(y, significant_digits, down ? FE_DOWNWARD : FE_UPWARD);
        if (down ? decimal_le(s, x) : decimal_ge(s, x)) return s;
        y = down ? next_down(y) : next_up(y);
    }
    return down ? "-inf" : "inf";
}

std::string to_string(const Interval& x, int significant_digits) {
    return "[" + decimal_bound(x.lo(), true, significant_digits) + ", " +
           decimal_bound(x.hi(), false, significant_digits) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

}  // namespace pairbound
