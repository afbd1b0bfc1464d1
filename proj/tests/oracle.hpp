#pragma once

// High-precision reference values (MPFR, 256 bits) for containment checks.

#include <mpfr.h>

#include <functional>

#include "pairbound/interval.hpp"

namespace oracle {

class Big {
public:
    Big() { mpfr_init2(v_, 256); }
    explicit Big(double x) : Big() { mpfr_set_d(v_, x, MPFR_RNDN); }
    Big(const Big& o) : Big() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Big& operator=(const Big& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Big() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

inline Big unary(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), double x) {
    Big in(x), out;
    f(out.get(), in.get(), MPFR_RNDN);
    return out;
}

inline Big binary(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), double x, double y) {
    Big a(x), b(y), out;
    f(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

inline Big pi() {
    Big out;
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

// x^(num/den) for x >= 0.
inline Big pow_rational(double x, long num, long den) {
    Big base(x), e, out;
    mpfr_set_si(e.get(), num, MPFR_RNDN);
    mpfr_div_si(e.get(), e.get(), den, MPFR_RNDN);
    mpfr_pow(out.get(), base.get(), e.get(), MPFR_RNDN);
    return out;
}

inline bool inside(const pairbound::Interval& x, const Big& v) {
    return mpfr_cmp_d(v.get(), x.lo()) >= 0 && mpfr_cmp_d(v.get(), x.hi()) <= 0;
}

}  // namespace oracle
