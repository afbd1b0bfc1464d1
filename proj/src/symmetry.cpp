#include "pairbound/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pairbound {

namespace {

constexpr Complex kI{0.0, 1.0};

double dot(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

double norm2(std::span<const double> u) { return dot(u, u); }

void require_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) throw std::invalid_argument(std::string("dimension mismatch: ") + what);
}

// Argument of F and the prefactor of T F at (t, x).
struct TArgs {
    double t;
    RealVec x;
    Complex factor;
};

TArgs t_arguments(const SymmetryParams& s, double t, std::span<const double> x) {
    const double sigma = family_sign(s.family);
    const double d = static_cast<double>(s.dim());
    const double inv_l = 1.0 / s.lambda;
    const double inv_l2 = inv_l * inv_l;
    TArgs out;
    out.t = inv_l2 * t + s.t0;
    out.x.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.x[i] = inv_l * x[i] + s.x0[i] + 2.0 * sigma * inv_l2 * t * s.xi_shift[i];
    }
    const double phase = sigma * inv_l2 * t * norm2(s.xi_shift) + inv_l * dot(x, s.xi_shift);
    out.factor = std::pow(s.lambda, d / s.p - d) * std::exp(kI * phase);
    return out;
}

}  // namespace

SymmetryParams SymmetryParams::identity(std::size_t d, Family f, double p) {
    SymmetryParams s;
    s.family = f;
    s.x0.assign(d, 0.0);
    s.xi_shift.assign(d, 0.0);
    s.p = p;
    return s;
}

void SymmetryParams::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
    if (!(p >= 1.0)) throw std::invalid_argument("p must be at least 1");
    require_dim(xi_shift.size(), x0.size(), "x0 and xi'");
}

Complex GeneralizedGaussian::operator()(std::span<const double> xi) const {
    require_dim(xi.size(), b.size(), "point and Gaussian");
    Complex e = -a * norm2(xi) + c;
    for (std::size_t i = 0; i < xi.size(); ++i) e += b[i] * xi[i];
    return std::exp(e);
}

GeneralizedGaussian GeneralizedGaussian::standard(std::size_t d) {
    GeneralizedGaussian g;
    g.b.assign(d, Complex{});
    return g;
}

GeneralizedGaussian apply(const SymmetryParams& s, const GeneralizedGaussian& g) {
    s.validate();
    require_dim(g.dim(), s.dim(), "symmetry and Gaussian");
    const double sigma = family_sign(s.family);
    const double d = static_cast<double>(s.dim());
    // Substituting u = lambda xi - xi' into exp(-A|u|^2 + B.u + c'):
    const Complex big_a = g.a - kI * (sigma * s.t0);
    ComplexVec big_b(g.b);
    for (std::size_t i = 0; i < big_b.size(); ++i) big_b[i] += kI * s.x0[i];

    GeneralizedGaussian out;
    out.a = s.lambda * s.lambda * big_a;
    out.b.resize(big_b.size());
    Complex c = g.c + (d / s.p) * std::log(s.lambda) - big_a * norm2(s.xi_shift);
    for (std::size_t i = 0; i < big_b.size(); ++i) {
        out.b[i] = s.lambda * (big_b[i] + 2.0 * big_a * s.xi_shift[i]);
        c -= big_b[i] * s.xi_shift[i];
    }
    out.c = c;
    return out;
}

Complex apply_pointwise(const SymmetryParams& s, const GeneralizedGaussian& g, std::span<const double> xi) {
    s.validate();
    const double sigma = family_sign(s.family);
    const double d = static_cast<double>(s.dim());
    RealVec u(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) u[i] = s.lambda * xi[i] - s.xi_shift[i];
    const double phase = sigma * s.t0 * norm2(u) + dot(s.x0, u);
    return std::pow(s.lambda, d / s.p) * std::exp(kI * phase) * g(u);
}

Complex extension_of_gaussian(const GeneralizedGaussian& g, Family family, double t, std::span<const double> x) {
    require_dim(x.size(), g.dim(), "point and Gaussian");
    const Complex big_a = g.a - kI * (family_sign(family) * t);
    if (!(big_a.real() > 0.0)) throw std::domain_error("extension needs Re(a -+ i t) > 0");
    Complex quad{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Complex v = g.b[i] + kI * x[i];
        quad += v * v;
    }
    // Principal square root is continuous on the right half-plane.
    const Complex root = std::sqrt(std::numbers::pi / big_a);
    Complex amplitude{1.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) amplitude *= root;
    return amplitude * std::exp(quad / (4.0 * big_a) + g.c);
}

GeneralizedGaussian reflect(const GeneralizedGaussian& g) {
    GeneralizedGaussian out;
    out.a = std::conj(g.a);
    out.b.resize(g.b.size());
    for (std::size_t i = 0; i < g.b.size(); ++i) out.b[i] = -std::conj(g.b[i]);
    out.c = std::conj(g.c);
    return out;
}

Complex transform_spacetime(const SymmetryParams& s, const SpacetimeFunction& f, double t,
                            std::span<const double> x) {
    s.validate();
    require_dim(x.size(), s.dim(), "point and symmetry");
    const TArgs args = t_arguments(s, t, x);
    return args.factor * f(args.t, args.x);
}

Complex inverse_transform_spacetime(const SymmetryParams& s, const SpacetimeFunction& f, double t,
                                    std::span<const double> x) {
    s.validate();
    require_dim(x.size(), s.dim(), "point and symmetry");
    // Invert (t, x) -> (lambda^-2 t + t0, lambda^-1 x + x0 +- 2 lambda^-2 t xi').
    const double sigma = family_sign(s.family);
    const double l = s.lambda;
    const double src_t = l * l * (t - s.t0);
    RealVec src_x(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        src_x[i] = l * (x[i] - s.x0[i] - 2.0 * sigma * src_t * s.xi_shift[i] / (l * l));
    }
    const TArgs args = t_arguments(s, src_t, src_x);
    return f(src_t, src_x) / args.factor;
}

PhasedSymmetry compose(const SymmetryParams& s1, const SymmetryParams& s2) {
    s1.validate();
    s2.validate();
    if (s1.family != s2.family) throw std::invalid_argument("compose needs symmetries of the same family");
    require_dim(s1.dim(), s2.dim(), "composed symmetries");
    if (s1.p != s2.p) throw std::invalid_argument("compose needs a common exponent p");
    const double sigma = family_sign(s1.family);
    const double l2 = s2.lambda;
    PhasedSymmetry out;
    out.params = SymmetryParams::identity(s1.dim(), s1.family, s1.p);
    out.params.lambda = s1.lambda * l2;
    out.params.t0 = s2.t0 + s1.t0 / (l2 * l2);
    for (std::size_t i = 0; i < s1.dim(); ++i) {
        out.params.xi_shift[i] = l2 * s1.xi_shift[i] + s2.xi_shift[i];
        out.params.x0[i] = s2.x0[i] + s1.x0[i] / l2 + 2.0 * sigma * s1.t0 * s2.xi_shift[i] / (l2 * l2);
    }
    const double phase = sigma * s1.t0 * norm2(s2.xi_shift) / (l2 * l2) + dot(s1.x0, s2.xi_shift) / l2;
    out.phase = std::exp(kI * phase);
    return out;
}

PhasedSymmetry inverse(const SymmetryParams& s) {
    s.validate();
    const double sigma = family_sign(s.family);
    const double l = s.lambda;
    PhasedSymmetry out;
    out.params = SymmetryParams::identity(s.dim(), s.family, s.p);
    out.params.lambda = 1.0 / l;
    out.params.t0 = -s.t0 * l * l;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out.params.xi_shift[i] = -s.xi_shift[i] / l;
        out.params.x0[i] = -l * s.x0[i] + 2.0 * sigma * s.t0 * l * s.xi_shift[i];
    }
    const double phase = dot(s.x0, s.xi_shift) - sigma * s.t0 * norm2(s.xi_shift);
    out.phase = std::exp(kI * phase);
    return out;
}

CrossAction cross_phase(const SymmetryParams& s_plus, const SymmetryParams& r_minus) {
    s_plus.validate();
    r_minus.validate();
    if (s_plus.family != Family::plus || r_minus.family != Family::minus) {
        throw std::invalid_argument("cross_phase needs an S+ symmetry and an S- symmetry");
    }
    require_dim(s_plus.dim(), r_minus.dim(), "cross symmetries");
    const std::size_t dim = s_plus.dim();
    const double d = static_cast<double>(dim);
    const double r = r_minus.lambda / s_plus.lambda;
    const double s = r_minus.t0;
    const RealVec& xi = s_plus.xi_shift;
    const RealVec& eta = r_minus.xi_shift;
    const RealVec& y = r_minus.x0;

    CrossAction out;
    out.r = r;
    out.amplitude_exponent = d - d / s_plus.p;
    out.eta = eta;
    out.zeta.resize(dim);
    out.x_shift.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) out.zeta[i] = xi[i] + eta[i] / r;
    out.theta = -r * r * norm2(xi) * s - r * dot(y, xi) - 2.0 * r * s * dot(eta, xi) + s * norm2(eta) + dot(y, eta);
    out.t_shift = s_plus.t0 - r * r * s;
    for (std::size_t i = 0; i < dim; ++i) {
        out.x_shift[i] = s_plus.x0[i] - r * y[i] - 2.0 * r * r * out.zeta[i] * s;
    }
    return out;
}

Complex evaluate_cross(const CrossAction& action, const SpacetimeFunction& f, double t, std::span<const double> x) {
    require_dim(x.size(), action.zeta.size(), "point and cross action");
    const double r = action.r;
    const double phase = r * r * t * norm2(action.zeta) + r * dot(x, action.zeta) -
                         2.0 * (t * norm2(action.eta) + dot(x, action.eta)) + action.theta;
    RealVec arg_x(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        arg_x[i] = r * x[i] + action.x_shift[i] + 2.0 * r * r * action.zeta[i] * t;
    }
    const double arg_t = r * r * t + action.t_shift;
    return std::pow(r, action.amplitude_exponent) * std::exp(kI * phase) * f(arg_t, arg_x);
}

std::string to_string(OrthogonalityCondition c) {
    switch (c) {
        case OrthogonalityCondition::cond1: return "cond1";
        case OrthogonalityCondition::cond2: return "cond2";
        case OrthogonalityCondition::cond3: return "cond3";
        case OrthogonalityCondition::none: return "none";
    }
    return "none";
}

namespace {

using Witnesses = std::array<double, 3>;

// First sequence (lambda, t, x, xi) against a second one of the other family (kappa, s, y, eta).
Witnesses cross_witnesses(const SymmetryParams& a, const SymmetryParams& b) {
    const double m = a.lambda / b.lambda;
    const std::size_t dim = a.dim();
    double w2 = 0.0;
    double w3x = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double v = m * b.xi_shift[i] + a.xi_shift[i];
        w2 += v * v;
        const double u = a.x0[i] - m * b.x0[i] - 2.0 * m * b.t0 * (b.xi_shift[i] + m * a.xi_shift[i]);
        w3x += u * u;
    }
    return {m, std::sqrt(w2), std::abs(a.t0 - m * m * b.t0) + std::sqrt(w3x)};
}

Witnesses same_witnesses(const SymmetryParams& a, const SymmetryParams& b) {
    const double m = a.lambda / b.lambda;
    const std::size_t dim = a.dim();
    double w2 = 0.0;
    double w3x = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double v = m * b.xi_shift[i] - a.xi_shift[i];
        w2 += v * v;
        const double u = a.x0[i] - m * b.x0[i] + 2.0 * m * b.t0 * (b.xi_shift[i] - m * a.xi_shift[i]);
        w3x += u * u;
    }
    return {m, std::sqrt(w2), std::abs(a.t0 - m * m * b.t0) + std::sqrt(w3x)};
}

bool increasing(double a, double b, double c) { return a < b && b < c; }
bool decreasing(double a, double b, double c) { return a > b && b > c; }

}  // namespace

OrthogonalityReport classify_orthogonality(const ParamSequencePair& pair, double threshold) {
    if (pair.first.size() != pair.second.size()) throw std::invalid_argument("sequences must have equal length");
    if (pair.first.size() < 3) throw std::invalid_argument("horizon must be at least 3");
    if (!(threshold > 1.0)) throw std::invalid_argument("threshold must exceed 1");
    const std::size_t dim = pair.first.front().dim();
    for (std::size_t n = 0; n < pair.horizon(); ++n) {
        pair.first[n].validate();
        pair.second[n].validate();
        require_dim(pair.first[n].dim(), dim, "first sequence");
        require_dim(pair.second[n].dim(), dim, "second sequence");
        if (pair.first[n].family != pair.first[0].family || pair.second[n].family != pair.second[0].family) {
            throw std::invalid_argument("each sequence must stay in one family");
        }
    }

    auto witnesses_at = [&](std::size_t n) {
        const SymmetryParams& a = pair.first[n];
        const SymmetryParams& b = pair.second[n];
        if (a.family == b.family) return same_witnesses(a, b);
        // The cross conditions are stated for the S+ sequence first.
        if (a.family == Family::plus) return cross_witnesses(a, b);
        Witnesses w = cross_witnesses(b, a);
        return w;
    };

    const std::size_t n = pair.horizon();
    const Witnesses w0 = witnesses_at(n - 3);
    const Witnesses w1 = witnesses_at(n - 2);
    const Witnesses w2 = witnesses_at(n - 1);

    OrthogonalityReport report;
    report.witnesses = w2;
    const bool ratio_large = w2[0] > threshold && increasing(w0[0], w1[0], w2[0]);
    const bool ratio_small = w2[0] < 1.0 / threshold && decreasing(w0[0], w1[0], w2[0]);
    if (ratio_large || ratio_small) {
        report.condition = OrthogonalityCondition::cond1;
    } else if (w2[1] > threshold && increasing(w0[1], w1[1], w2[1])) {
        report.condition = OrthogonalityCondition::cond2;
    } else if (w2[2] > threshold && increasing(w0[2], w1[2], w2[2])) {
        report.condition = OrthogonalityCondition::cond3;
    }
    return report;
}

double lp_norm_numeric(const GeneralizedGaussian& g, double p, int points_per_axis) {
    const std::size_t dim = g.dim();
    if (dim != 1 && dim != 2) throw std::invalid_argument("lp_norm_numeric supports d = 1, 2");
    if (!(g.a.real() > 0.0)) throw std::domain_error("Gaussian needs Re a > 0");
    if (points_per_axis < 3) throw std::invalid_argument("need at least 3 points per axis");
    // log|g| = -Re(a)|xi|^2 + Re(b).xi + Re(c), peaked at Re(b) / (2 Re a).
    const double ra = g.a.real();
    RealVec centre(dim);
    double peak = g.c.real();
    for (std::size_t i = 0; i < dim; ++i) {
        centre[i] = g.b[i].real() / (2.0 * ra);
        peak += ra * centre[i] * centre[i];
    }
    const double half = 12.0 / std::sqrt(p * ra);
    const int n = points_per_axis;
    const double h = 2.0 * half / (n - 1);
    auto log_ratio = [&](std::span<const double> xi) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) s += (xi[i] - centre[i]) * (xi[i] - centre[i]);
        return -ra * s;
    };
    auto weight = [&](int i) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; };

    double sum = 0.0;
    if (dim == 1) {
        for (int i = 0; i < n; ++i) {
            const double xi[] = {centre[0] - half + h * i};
            sum += weight(i) * std::exp(p * log_ratio(xi));
        }
        sum *= h;
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double xi[] = {centre[0] - half + h * i, centre[1] - half + h * j};
                sum += weight(i) * weight(j) * std::exp(p * log_ratio(xi));
            }
        }
        sum *= h * h;
    }
    return std::exp(peak) * std::pow(sum, 1.0 / p);
}

}  // namespace pairbound
