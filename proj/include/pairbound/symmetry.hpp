#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pairbound {

using Complex = std::complex<double>;
using RealVec = std::vector<double>;
using ComplexVec = std::vector<Complex>;

// Which paraboloid: + is tau = |xi|^2 (E), - is tau = -|xi|^2 (E_-).
enum class Family { plus, minus };

inline double family_sign(Family f) { return f == Family::plus ? 1.0 : -1.0; }

// One element of S+ or S- in canonical form
//   S g(xi) = lambda^(d/p) exp(i(+-t0 |u|^2 + x0.u)) g(u),  u = lambda xi - xi_shift.
struct SymmetryParams {
    Family family = Family::plus;
    double lambda = 1.0;
    double t0 = 0.0;
    RealVec x0;
    RealVec xi_shift;
    double p = 2.0;

    std::size_t dim() const { return x0.size(); }
    static SymmetryParams identity(std::size_t d, Family f = Family::plus, double p = 2.0);
    // Throws std::invalid_argument when lambda <= 0 or dimensions disagree.
    void validate() const;
};

// xi -> exp(-a |xi|^2 + b.xi + c) with Re a > 0.
struct GeneralizedGaussian {
    Complex a{1.0, 0.0};
    ComplexVec b;
    Complex c{0.0, 0.0};

    std::size_t dim() const { return b.size(); }
    Complex operator()(std::span<const double> xi) const;
    // exp(-|xi|^2) in dimension d.
    static GeneralizedGaussian standard(std::size_t d);
};

// Closed-form S g; the class of generalized Gaussians is closed under S.
GeneralizedGaussian apply(const SymmetryParams& s, const GeneralizedGaussian& g);

// Direct evaluation of (S g)(xi) from the canonical-form definition.
Complex apply_pointwise(const SymmetryParams& s, const GeneralizedGaussian& g, std::span<const double> xi);

// E_+- g(t, x) = int exp(i(+-t |xi|^2 + x.xi)) g(xi) dxi
//             = (pi / (a -+ i t))^(d/2) exp((b + i x).(b + i x) / (4 (a -+ i t)) + c),
// principal branch. Throws std::domain_error if Re(a -+ i t) <= 0.
Complex extension_of_gaussian(const GeneralizedGaussian& g, Family family, double t, std::span<const double> x);

// g~(xi) = conj(g(-xi)).
GeneralizedGaussian reflect(const GeneralizedGaussian& g);

using SpacetimeFunction = std::function<Complex(double, std::span<const double>)>;

// The L^q symmetry T paired with S (E o S = T o E):
//   T F(t,x) = lambda^(d/p - d) exp(i(+-lambda^-2 t |xi'|^2 + lambda^-1 x.xi'))
//              F(lambda^-2 t + t0, lambda^-1 x + x0 +- 2 lambda^-2 t xi').
Complex transform_spacetime(const SymmetryParams& s, const SpacetimeFunction& f, double t,
                            std::span<const double> x);
// T^-1 F, solved directly from the definition of T.
Complex inverse_transform_spacetime(const SymmetryParams& s, const SpacetimeFunction& f, double t,
                                    std::span<const double> x);

// A canonical symmetry times a unit-modulus scalar.
struct PhasedSymmetry {
    SymmetryParams params;
    Complex phase{1.0, 0.0};
};

// S1 o S2 for two symmetries of the same family.
PhasedSymmetry compose(const SymmetryParams& s1, const SymmetryParams& s2);
// S^-1, so that compose(s, inverse(s).params) * inverse(s).phase is the identity.
PhasedSymmetry inverse(const SymmetryParams& s);

// U^-1 T for T paired with S = (lambda, t, x, xi) in S+ and U paired with
// R = (kappa, s, y, eta) in S-, with r = kappa / lambda:
//   U^-1 T F(t,x) = r^((d+2)/q) exp(i (r^2 t, r x).(|zeta|^2, zeta) - 2i (t,x).(|eta|^2, eta) + i theta)
//                   F(r^2 t + t_shift, r x + x_shift + 2 r^2 zeta t),
// zeta = xi + eta / r.
struct CrossAction {
    double r = 1.0;
    double amplitude_exponent = 0.0;
    RealVec zeta;
    RealVec eta;
    double theta = 0.0;
    double t_shift = 0.0;
    RealVec x_shift;
};

CrossAction cross_phase(const SymmetryParams& s_plus, const SymmetryParams& r_minus);
Complex evaluate_cross(const CrossAction& action, const SpacetimeFunction& f, double t, std::span<const double> x);

struct ParamSequencePair {
    std::vector<SymmetryParams> first;
    std::vector<SymmetryParams> second;
    std::size_t horizon() const { return first.size(); }
};

enum class OrthogonalityCondition { cond1, cond2, cond3, none };

std::string to_string(OrthogonalityCondition c);

// Heuristic, not a proof: witnesses are evaluated on the final samples and a
// condition fires when its witness passes the threshold (or 1/threshold for
// the vanishing-ratio branch) while trending monotonically over the last
// three samples.
struct OrthogonalityReport {
    OrthogonalityCondition condition = OrthogonalityCondition::none;
    std::array<double, 3> witnesses{};
    bool heuristic = true;
};

// Throws std::invalid_argument for horizons below 3, unequal lengths or
// mismatched dimensions.
OrthogonalityReport classify_orthogonality(const ParamSequencePair& pair, double threshold);

// Numeric L^p norm of a generalized Gaussian (d = 1 or 2) by the
// trapezoidal rule on a box around its peak.
double lp_norm_numeric(const GeneralizedGaussian& g, double p, int points_per_axis = 801);

}  // namespace pairbound
