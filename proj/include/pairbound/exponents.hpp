#pragma once

#include "pairbound/rational.hpp"

namespace pairbound {

// Lebesgue exponents (p, q) for the extension operator in dimension d,
// tied by the validity relation q = (d+2)/d * p'.
struct Exponents {
    int dim = 1;
    Rational p = 2;
    Rational q = 6;

    Rational p_conjugate() const { return p / (p - Rational(1)); }

    // p = 2, q = 2(d+2)/d.
    static Exponents stein_tomas(int d);

    // Throws std::invalid_argument when d < 1, p <= 1, q <= p or the
    // validity relation fails.
    void validate() const;

    // Certified computations are supported in d = 1, 2 only.
    bool certified_dimension() const { return dim == 1 || dim == 2; }
};

}  // namespace pairbound
