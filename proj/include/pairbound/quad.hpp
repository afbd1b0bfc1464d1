#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairbound/exponents.hpp"
#include "pairbound/interval.hpp"

namespace pairbound {

// Axis-aligned box with finite endpoints.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> axes);

    std::size_t dim() const { return axes_.size(); }
    const std::vector<Interval>& axes() const { return axes_; }
    const Interval& operator[](std::size_t i) const { return axes_[i]; }
    Interval volume() const;

private:
    std::vector<Interval> axes_;
};

using Cell = std::span<const Interval>;

// Interval extension of an integrand: must return an enclosure of the
// integrand's range over the cell.
using Integrand = std::function<Interval(Cell)>;

class IntegrandDomainError : public DomainError {
public:
    IntegrandDomainError(const std::string& cell, const std::string& cause)
        : DomainError("integrand failed on cell " + cell + ": " + cause), cell_(cell) {}
    const std::string& cell() const { return cell_; }

private:
    std::string cell_;
};

class TargetNotReached : public std::runtime_error {
public:
    explicit TargetNotReached(Interval achieved)
        : std::runtime_error("TargetNotReached: best enclosure " + to_string(achieved)), achieved_(achieved) {}
    const Interval& achieved() const { return achieved_; }

private:
    Interval achieved_;
};

// Grid nodes lo = x_0 <= x_1 <= ... <= x_n = hi. Adjacent cells share
// endpoints, so the cells tile the axis exactly even though the nodes are
// rounded.
std::vector<double> grid_nodes(const Interval& axis, std::int64_t steps);

// Sum over the uniform grid of f(cell) * vol(cell). Rows along axis 0 may be
// evaluated concurrently; row sums are merged in index order so the result
// is bit-identical for any thread count.
Interval riemann_enclosure(const Integrand& f, const Box& box, std::span<const std::int64_t> steps);

// Adaptive sharpening: starts from the uniform grid and repeatedly bisects
// the cell with the widest contribution until the total width is at most
// target_width. The result is intersected with the uniform-grid enclosure.
// Throws TargetNotReached (carrying the best enclosure) when max_depth or
// the cell budget is exhausted first.
Interval bisect_refine(const Integrand& f, const Box& box, double target_width, int max_depth,
                       std::span<const std::int64_t> initial_steps = {});

struct QuadCertificate {
    std::string integrand_id;
    Box box;
    std::vector<std::int64_t> steps;
    Interval main;
    // Upper bound on the integral over the complement of the box.
    double tail = 0.0;
    bool nonnegative = true;
    double wall_time_ms = 0.0;

    // Enclosure of the integral over the whole domain.
    Interval total() const;
};

// Upper bound on c_d * int over the complement of [-T, T] x [0, R] of
// (1+t^2)^(d(1-q)/2) r^(d-1) e^(-q r^2), covering {|t| > T, r >= 0} and
// {|t| <= T, r > R}. Requires T >= 1, R >= 1 and d(q-1) > 1.
double tail_bound_j(const Exponents& e, double t_cut, double r_cut);

// Same envelope over the product region {|t| > T} x {r > R} only. This
// region does not cover the complement of the box.
double tail_bound_j_corner(const Exponents& e, double t_cut, double r_cut);

// Envelope pieces, exposed for testing.
struct EnvelopeParts {
    Interval t_tail;  // int_T^inf (1+t^2)^(d(1-q)/2) dt
    Interval t_full;  // same over the whole real line
    Interval r_tail;  // int_R^inf r^(d-1) e^(-q r^2) dr
    Interval r_full;  // int_0^inf r^(d-1) e^(-q r^2) dr
};
EnvelopeParts envelope_parts(const Exponents& e, double t_cut, double r_cut);

}  // namespace pairbound
