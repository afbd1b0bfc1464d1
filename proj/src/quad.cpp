#include "pairbound/quad.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <queue>
#include <sstream>
#include <thread>

#include "pairbound/special.hpp"

namespace pairbound {

namespace {

std::string describe(Cell cell) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cell.size(); ++i) os << (i ? " x " : "") << to_string(cell[i], 10);
    return os.str();
}

Interval evaluate(const Integrand& f, Cell cell) {
    try {
        return f(cell);
    } catch (const IntegrandDomainError&) {
        throw;
    } catch (const std::domain_error& err) {
        throw IntegrandDomainError(describe(cell), err.what());
    }
}

Interval cell_volume(Cell cell) {
    Interval v(1.0);
    for (const Interval& side : cell) v = v * (Interval(side.hi()) - Interval(side.lo()));
    return v;
}

}  // namespace

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
    for (const Interval& a : axes_) {
        if (!std::isfinite(a.lo()) || !std::isfinite(a.hi())) throw DomainError("box endpoints must be finite");
    }
}

Interval Box::volume() const { return cell_volume(axes_); }

std::vector<double> grid_nodes(const Interval& axis, std::int64_t steps) {
    if (steps < 1) throw std::invalid_argument("grid needs at least one step");
    std::vector<double> nodes(static_cast<std::size_t>(steps) + 1);
    const double lo = axis.lo();
    const double hi = axis.hi();
    nodes.front() = lo;
    for (std::int64_t i = 1; i < steps; ++i) {
        const double x = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(steps));
        nodes[static_cast<std::size_t>(i)] = std::clamp(x, nodes[static_cast<std::size_t>(i - 1)], hi);
    }
    nodes.back() = hi;
    return nodes;
}

Interval riemann_enclosure(const Integrand& f, const Box& box, std::span<const std::int64_t> steps) {
    const std::size_t dim = box.dim();
    if (dim == 0) throw std::invalid_argument("riemann_enclosure needs a box of positive dimension");
    if (steps.size() != dim) throw std::invalid_argument("one step count per axis is required");

    std::vector<std::vector<Interval>> cells(dim);
    std::vector<std::vector<Interval>> widths(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const std::vector<double> nodes = grid_nodes(box[k], steps[k]);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            cells[k].emplace_back(nodes[i], nodes[i + 1]);
            widths[k].push_back(Interval(nodes[i + 1]) - Interval(nodes[i]));
        }
    }

    const std::size_t rows = cells[0].size();
    std::vector<Interval> row_sums(rows, Interval(0.0));

    auto do_row = [&](std::size_t row) {
        std::vector<std::size_t> idx(dim, 0);
        idx[0] = row;
        std::vector<Interval> cell(dim);
        Interval sum(0.0);
        while (true) {
            Interval vol(1.0);
            for (std::size_t k = 0; k < dim; ++k) {
                cell[k] = cells[k][idx[k]];
                vol = vol * widths[k][idx[k]];
            }
            sum += evaluate(f, cell) * vol;
            std::size_t k = dim - 1;
            while (k > 0) {
                if (++idx[k] < cells[k].size()) break;
                idx[k] = 0;
                --k;
            }
            if (k == 0) break;
        }
        row_sums[row] = sum;
    };

    const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), rows);
    if (workers <= 1) {
        for (std::size_t r = 0; r < rows; ++r) do_row(r);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t r = w; r < rows; r += workers) do_row(r);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    Interval total(0.0);
    for (const Interval& s : row_sums) total += s;
    return total;
}

Interval bisect_refine(const Integrand& f, const Box& box, double target_width, int max_depth,
                       std::span<const std::int64_t> initial_steps) {
    constexpr std::size_t kMaxLeaves = std::size_t{1} << 22;
    const std::size_t dim = box.dim();
    std::vector<std::int64_t> steps(initial_steps.begin(), initial_steps.end());
    if (steps.empty()) steps.assign(dim, 1);
    const Interval uniform = riemann_enclosure(f, box, steps);

    struct Leaf {
        std::vector<Interval> cell;
        Interval value;
        int depth;
    };
    std::vector<Leaf> leaves;
    {
        std::vector<std::vector<double>> nodes(dim);
        for (std::size_t k = 0; k < dim; ++k) nodes[k] = grid_nodes(box[k], steps[k]);
        std::vector<std::size_t> idx(dim, 0);
        bool done = false;
        while (!done) {
            std::vector<Interval> cell(dim);
            for (std::size_t k = 0; k < dim; ++k) cell[k] = Interval(nodes[k][idx[k]], nodes[k][idx[k] + 1]);
            const Interval value = evaluate(f, cell) * cell_volume(cell);
            leaves.push_back({std::move(cell), value, 0});
            std::size_t k = dim;
            while (true) {
                if (k == 0) {
                    done = true;
                    break;
                }
                --k;
                if (++idx[k] + 1 < nodes[k].size()) break;
                idx[k] = 0;
            }
        }
    }

    auto leaf_width = [](const Leaf& l) { return l.value.hi() - l.value.lo(); };
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry> queue;
    double total_width = 0.0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        queue.emplace(leaf_width(leaves[i]), i);
        total_width += leaf_width(leaves[i]);
    }

    auto rigorous_sum = [&] {
        Interval s(0.0);
        for (const Leaf& l : leaves) s += l.value;
        return s;
    };

    while (!queue.empty() && leaves.size() < kMaxLeaves) {
        if (total_width <= target_width) {
            const Interval s = rigorous_sum();
            if (s.width() <= target_width) break;
            // Rounding slack: keep splitting until the rigorous sum agrees.
            total_width = s.width();
        }
        const auto [w, index] = queue.top();
        queue.pop();
        if (leaves[index].depth >= max_depth) continue;

        const Leaf parent = leaves[index];
        std::vector<std::array<Interval, 2>> halves(dim);
        bool splittable = true;
        for (std::size_t k = 0; k < dim; ++k) {
            const Interval side = parent.cell[k];
            const double m = std::clamp(side.lo() + (side.hi() - side.lo()) / 2.0, side.lo(), side.hi());
            if (m == side.lo() || m == side.hi()) splittable = false;
            halves[k] = {Interval(side.lo(), m), Interval(m, side.hi())};
        }
        if (!splittable) continue;

        const std::size_t children = std::size_t{1} << dim;
        std::vector<Leaf> kids;
        kids.reserve(children);
        for (std::size_t mask = 0; mask < children; ++mask) {
            std::vector<Interval> cell(dim);
            for (std::size_t k = 0; k < dim; ++k) cell[k] = halves[k][(mask >> k) & 1U];
            const Interval value = evaluate(f, cell) * cell_volume(cell);
            kids.push_back({std::move(cell), value, parent.depth + 1});
        }
        total_width -= w;
        for (std::size_t c = 0; c < children; ++c) {
            const std::size_t slot = c == 0 ? index : leaves.size();
            if (c == 0) {
                leaves[index] = std::move(kids[0]);
            } else {
                leaves.push_back(std::move(kids[c]));
            }
            total_width += leaf_width(leaves[slot]);
            queue.emplace(leaf_width(leaves[slot]), slot);
        }
    }

    const Interval refined = rigorous_sum();
    const Interval result = refined.intersects(uniform) ? intersect(refined, uniform) : refined;
    if (!(result.width() <= target_width)) throw TargetNotReached(result);
    return result;
}

Interval QuadCertificate::total() const {
    const double lo = nonnegative ? main.lo() : rounding::add_down(main.lo(), -tail);
    return {lo, rounding::add_up(main.hi(), tail)};
}

EnvelopeParts envelope_parts(const Exponents& e, double t_cut, double r_cut) {
    if (!(t_cut >= 1.0) || !(r_cut >= 1.0)) throw DomainError("tail cut-offs must satisfy T >= 1 and R >= 1");
    const Rational d = e.dim;
    // (1+t^2)^(-alpha) with 2 alpha = d(q-1).
    const Rational two_alpha = d * (e.q - Rational(1));
    if (two_alpha <= Rational(1)) throw DivergentEnvelope("d(q-1) <= 1, the t-envelope is not integrable");
    const Interval q = enclose(e.q);

    EnvelopeParts parts;
    // int_T^inf (1+t^2)^(-alpha) <= int_T^inf t^(-2 alpha) = T^(1-2alpha) / (2alpha - 1).
    parts.t_tail = pow_real(Interval(t_cut), Rational(1) - two_alpha) / enclose(two_alpha - Rational(1));

    // Whole line: sqrt(pi) Gamma(alpha - 1/2) / Gamma(alpha) when 2 alpha is an
    // integer, otherwise 2 (1 + 1/(2 alpha - 1)).
    const Rational alpha = two_alpha / Rational(2);
    if (two_alpha.is_integer()) {
        parts.t_full = sqrt(pi()) * gamma_half_integer(alpha - Rational(1, 2)) / gamma_half_integer(alpha);
    } else {
        parts.t_full = Interval(2.0) * (Interval(1.0) + Interval(1.0) / enclose(two_alpha - Rational(1)));
    }

    // int_0^inf r^(d-1) e^(-q r^2) dr = Gamma(d/2) / (2 q^(d/2)).
    parts.r_full = gamma_half_integer(Rational(e.dim, 2)) / (Interval(2.0) * pow_real(q, Rational(e.dim, 2)));

    const Interval big_r(r_cut);
    const Interval gauss = exp(-(q * sqr(big_r)));
    if (e.dim == 1) {
        // r^0 <= r / R on [R, inf).
        parts.r_tail = gauss / (Interval(2.0) * q * big_r);
    } else if (e.dim == 2) {
        parts.r_tail = gauss / (Interval(2.0) * q);
    } else {
        // r^(d-2) e^(-q r^2 / 2) decreases once q r^2 >= d - 2.
        const Interval threshold = enclose(Rational(e.dim - 2)) / q;
        if (!(sqr(big_r).lo() >= threshold.hi())) {
            throw DomainError("r cut-off too small for the Gaussian tail envelope");
        }
        parts.r_tail = pow_int(big_r, e.dim - 2) * gauss / q;
    }
    return parts;
}

double tail_bound_j(const Exponents& e, double t_cut, double r_cut) {
    const EnvelopeParts parts = envelope_parts(e, t_cut, r_cut);
    const Interval c = polar_constant(e);
    const Interval bound = c * (Interval(2.0) * parts.t_tail * parts.r_full + parts.t_full * parts.r_tail);
    return bound.hi();
}

double tail_bound_j_corner(const Exponents& e, double t_cut, double r_cut) {
    const EnvelopeParts parts = envelope_parts(e, t_cut, r_cut);
    const Interval c = polar_constant(e);
    return (c * Interval(2.0) * parts.t_tail * parts.r_tail).hi();
}

}  // namespace pairbound
