#include "pairbound/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "pairbound/report.hpp"
#include "pairbound/special.hpp"
#include "pairbound/strichartz.hpp"
#include "pairbound/symmetry_checks.hpp"

namespace pairbound::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string short_interval(const Interval& x) { return to_string(x, 10); }

struct Output {
    bool json = false;
    std::string path;
    std::string config;
};

void add_output_options(CLI::App* sub, Output& o) {
    sub->add_flag("--json", o.json, "Print the JSON report instead of the summary");
    sub->add_option("--output,-o", o.path, "Write the JSON report to this file");
    sub->add_option("--config", o.config, "key = value configuration file; flags override it");
}

struct BoxOptions {
    double t_max = 50.0;
    double r_max = 5.0;
    double step = 0.1;
};

void add_box_options(CLI::App* sub, BoxOptions& b) {
    sub->add_option("--t-max", b.t_max, "Half-width of the t range")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--r-max", b.r_max, "Radius of the r range")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--step", b.step, "Grid step on both axes")->check(CLI::PositiveNumber)->capture_default_str();
}

Json box_json(const BoxOptions& b, const JBox& jb) {
    return {{"t_max", b.t_max}, {"r_max", b.r_max}, {"step", b.step}, {"t_steps", jb.t_steps}, {"r_steps", jb.r_steps}};
}

Exponents exponents_for(int dim, bool certified) {
    const Exponents e = Exponents::stein_tomas(dim);
    if (certified && !e.certified_dimension()) {
        throw UnsupportedArgument("certified mode supports --dim 1 or 2; use --mode float for d = " +
                                  std::to_string(dim));
    }
    return e;
}

Json base_report(const std::string& command) {
    Json r;
    r["tool"] = "pairbound";
    r["version"] = PAIRBOUND_VERSION;
    r["command"] = command;
    return r;
}

void emit(Json& report, const Output& o, const std::string& stem, const std::string& summary, std::ostream& out) {
    std::string path = o.path;
    if (path.empty()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            path = (std::filesystem::path(dir) / (stem + ".json")).string();
        }
    }
    if (!path.empty()) {
        const std::filesystem::path p(path);
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream file(p);
        if (!file) throw std::runtime_error("cannot write report to " + path);
        file << report.dump(2) << '\n';
    }
    if (o.json) {
        out << report.dump(2) << '\n';
    } else {
        out << summary;
        if (!path.empty()) out << "report    " << path << '\n';
    }
}

// Config-file entries are appended as flags unless already given on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    static const std::set<std::string> kFlags = {"adaptive", "json"};
    std::string config;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) config = args[i].substr(9);
    }
    if (config.empty()) return args;
    std::vector<std::string> merged = args;
    for (const auto& [key, value] : read_config_file(config)) {
        const std::string flag = "--" + key;
        bool given = false;
        for (const std::string& a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        }
        if (given) continue;
        if (kFlags.count(key) != 0) {
            if (value == "true" || value == "1" || value == "yes") merged.push_back(flag);
            continue;
        }
        merged.push_back(flag);
        merged.push_back(value);
    }
    return merged;
}

}  // namespace

Interval parse_theta(const std::string& text) {
    static const std::regex kPi(R"(^\s*([+-])?\s*(\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
    static const std::regex kNumber(R"(^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, kPi)) {
        const std::int64_t num = m[2].matched ? std::stoll(m[2].str()) : 1;
        const std::int64_t den = m[3].matched ? std::stoll(m[3].str()) : 1;
        if (den == 0) throw std::invalid_argument("theta: zero denominator in '" + text + "'");
        Rational k(num, den);
        if (m[1].matched && m[1].str() == "-") k = -k;
        return enclose(k) * pi();
    }
    if (std::regex_match(text, m, kNumber)) return Interval(std::stod(text));
    throw std::invalid_argument("cannot parse theta '" + text + "' (examples: 0, pi/2, 3pi/4, 0.25)");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::map<std::string, std::string> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(0, 1);
        std::replace(key.begin(), key.end(), '_', '-');
        if (key.empty()) throw std::runtime_error(path + ":" + std::to_string(line_no) + ": empty key");
        values[key] = trim(line.substr(eq + 1));
    }
    return values;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pairbound: certified interval numerics for the two-paraboloid extension inequality", "pairbound"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(PAIRBOUND_VERSION));

    Output o;
    std::string mode = "certified";
    int dim = 1;
    BoxOptions box;

    // verify
    bool adaptive = false;
    double target_width = 0.5;
    int max_depth = 12;
    auto* verify = app.add_subcommand("verify", "Certify J(0) != J(pi/2)");
    verify->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 64))->capture_default_str();
    verify->add_option("--mode", mode, "certified or float")->check(CLI::IsMember({"certified", "float"}));
    add_box_options(verify, box);
    verify->add_flag("--adaptive", adaptive, "Sharpen with adaptive bisection");
    verify->add_option("--target-width", target_width, "Adaptive target width")->check(CLI::PositiveNumber);
    verify->add_option("--max-depth", max_depth, "Adaptive bisection depth")->check(CLI::Range(0, 40));
    add_output_options(verify, o);

    // j
    std::vector<std::string> thetas = {"0"};
    auto* j = app.add_subcommand("j", "Enclose J(theta)");
    j->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 64));
    j->add_option("--mode", mode, "certified or float")->check(CLI::IsMember({"certified", "float"}));
    j->add_option("--theta", thetas, "Phase offsets, e.g. 0,pi/2")->delimiter(',');
    add_box_options(j, box);
    add_output_options(j, o);

    // mean-check
    std::int64_t theta_steps = 64;
    double r_step = 0.05;
    auto* mean = app.add_subcommand("mean-check", "Compare the theta-average of J with kappa_q M");
    mean->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 2));
    mean->add_option("--theta-steps", theta_steps, "Cells over one period in theta")->check(CLI::PositiveNumber);
    add_box_options(mean, box);
    mean->add_option("--r-step", r_step, "Grid step in r")->check(CLI::PositiveNumber)->capture_default_str();
    add_output_options(mean, o);

    // constants
    auto* constants = app.add_subcommand("constants", "Closed-form constants as enclosures");
    constants->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 2));
    add_output_options(constants, o);

    // phi
    double phi_t = 1.0;
    std::int64_t phi_steps = 10000;
    std::vector<double> phi_grid;
    auto* phi_cmd = app.add_subcommand("phi", "Enclose phi(t); optionally certify monotonicity on a grid");
    phi_cmd->add_option("--dim", dim, "Dimension d (sets q)")->check(CLI::Range(1, 2));
    phi_cmd->add_option("--t", phi_t, "Argument in [0, 1]");
    phi_cmd->add_option("--steps", phi_steps, "Riemann cells")->check(CLI::PositiveNumber);
    phi_cmd->add_option("--grid", phi_grid, "Sorted t values for the monotonicity check")->delimiter(',');
    add_output_options(phi_cmd, o);

    // tail
    double t_cut = 50.0;
    double r_cut = 5.0;
    auto* tail = app.add_subcommand("tail", "Certified tail bounds for J");
    tail->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 2));
    tail->add_option("--t-cut", t_cut, "T")->capture_default_str();
    tail->add_option("--r-cut", r_cut, "R")->capture_default_str();
    add_output_options(tail, o);

    // symmetry check
    std::uint64_t seed = 1;
    int cases = 100;
    auto* symmetry = app.add_subcommand("symmetry", "Symmetry group algebra");
    symmetry->require_subcommand(1);
    auto* check = symmetry->add_subcommand("check", "Run the randomized property suite");
    check->add_option("--seed", seed, "RNG seed")->capture_default_str();
    check->add_option("--cases", cases, "Random cases per property")->check(CLI::PositiveNumber);
    add_output_options(check, o);

    // equidistribution
    std::vector<double> etas;
    SpacetimeGrid grid = equidistribution_default_grid();
    auto* equi = app.add_subcommand("equidistribution", "Gap between the modulated and theta-averaged L^q norms");
    equi->add_option("--dim", dim, "Dimension d")->check(CLI::Range(1, 2));
    equi->add_option("--eta", etas, "Values of |eta|")->delimiter(',');
    equi->add_option("--t-max", grid.t_max, "Half-width of the t range");
    equi->add_option("--x-max", grid.x_max, "Half-width of each x range");
    equi->add_option("--t-steps", grid.t_steps, "Cells in t")->check(CLI::PositiveNumber);
    equi->add_option("--x-steps", grid.x_steps, "Cells per x axis")->check(CLI::PositiveNumber);
    add_output_options(equi, o);

    std::vector<std::string> args;
    try {
        args = merge_config(raw_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kCertified;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return kCertified;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kError;
    }

    try {
        const auto start = Clock::now();
        std::ostringstream summary;
        summary << std::setprecision(6);

        if (verify->parsed()) {
            const bool certified = mode == "certified";
            const Exponents e = exponents_for(dim, certified);
            const JBox jb = JBox::from_step(box.t_max, box.r_max, box.step);
            Json report = base_report("verify");
            report["config"] = {{"dim", dim}, {"mode", mode}, {"box", box_json(box, jb)}, {"adaptive", adaptive}};
            if (adaptive) report["config"]["adaptive_options"] = {{"target_width", target_width}, {"max_depth", max_depth}};
            summary << "verify    d=" << dim << " |t|<=" << box.t_max << " 0<=r<=" << box.r_max << " cells "
                    << jb.t_steps << "x" << jb.r_steps << (adaptive ? " adaptive" : "") << '\n';
            int code = kCertified;
            if (certified) {
                const Verdict v = verify_separation(e, jb, {adaptive, target_width, max_depth});
                report["result"] = to_json(v);
                report["status"] = to_string(v.status);
                add_timing(report, "J0", v.j0.wall_time_ms);
                add_timing(report, "J_half_pi", v.j_half_pi.wall_time_ms);
                summary << "J(0)      " << short_interval(v.j0.main) << '\n'
                        << "J(pi/2)   " << short_interval(v.j_half_pi.main) << '\n'
                        << "tail      " << upper_string(v.tail) << "  (complement of the box)\n"
                        << "tail      " << upper_string(v.tail_corner) << "  (|t|>" << box.t_max - 1 << ", r>"
                        << box.r_max - 1 << " only)\n"
                        << "margin    " << lower_string(v.margin) << '\n'
                        << "status    " << to_string(v.status) << '\n';
                code = v.status == VerdictStatus::certified ? kCertified : kInconclusive;
            } else {
                const double j0 = j_float(e, 0.0, jb);
                const double jh = j_float(e, std::numbers::pi / 2, jb);
                report["result"] = {{"J0_float", j0}, {"J_half_pi_float", jh}};
                report["status"] = "float";
                summary << "J(0)      ~ " << j0 << "  (float, not certified)\n"
                        << "J(pi/2)   ~ " << jh << "  (float, not certified)\n"
                        << "status    float\n";
            }
            add_timing(report, "total", elapsed_ms(start));
            emit(report, o, "verify-d" + std::to_string(dim), summary.str(), out);
            return code;
        }

        if (j->parsed()) {
            const bool certified = mode == "certified";
            const Exponents e = exponents_for(dim, certified);
            const JBox jb = JBox::from_step(box.t_max, box.r_max, box.step);
            Json report = base_report("j");
            report["config"] = {{"dim", dim}, {"mode", mode}, {"theta", thetas}, {"box", box_json(box, jb)}};
            Json results = Json::array();
            for (const std::string& text : thetas) {
                const Interval theta = parse_theta(text);
                if (certified) {
                    const QuadCertificate c = j_integral(e, theta, jb);
                    Json item = to_json(c);
                    item["theta"] = text;
                    results.push_back(item);
                    add_timing(report, "J(" + text + ")", c.wall_time_ms);
                    summary << "J(" << text << ")  " << short_interval(c.main) << "  tail " << upper_string(c.tail)
                            << '\n';
                } else {
                    const double th = theta.mid();
                    Json item = {{"theta", text}, {"polar_float", j_float(e, th, jb)}};
                    summary << "J(" << text << ")  polar ~ " << item["polar_float"].get<double>();
                    if (dim <= 2) {
                        const SpacetimeGrid g;
                        const double closed = gaussian_extension_norm_float(e, th, g, ExtensionModel::closed_form);
                        const double printed = gaussian_extension_norm_float(e, th, g, ExtensionModel::printed);
                        item["cartesian_closed_form_float"] = closed;
                        item["cartesian_printed_float"] = printed;
                        item["cartesian_grid"] = {{"t_max", g.t_max}, {"x_max", g.x_max}, {"t_steps", g.t_steps},
                                                  {"x_steps", g.x_steps}};
                        summary << "  cartesian(closed form) ~ " << closed << "  cartesian(printed) ~ " << printed;
                    }
                    summary << '\n';
                    results.push_back(item);
                }
            }
            report["result"] = results;
            report["status"] = certified ? "certified" : "float";
            add_timing(report, "total", elapsed_ms(start));
            emit(report, o, "j-d" + std::to_string(dim), summary.str(), out);
            return kCertified;
        }

        if (mean->parsed()) {
            const Exponents e = exponents_for(dim, true);
            JBox jb = JBox::from_step(box.t_max, box.r_max, box.step);
            jb.r_steps = JBox::from_step(box.t_max, box.r_max, r_step).r_steps;
            Json report = base_report("mean-check");
            Json bj = box_json(box, jb);
            bj["r_step"] = r_step;
            report["config"] = {{"dim", dim}, {"theta_steps", theta_steps}, {"box", bj}};
            const MeanIdentityReport r = mean_identity_check(e, theta_steps, jb);
            report["result"] = to_json(r);
            report["status"] = r.consistent ? "consistent" : "inconsistent";
            add_timing(report, "total", elapsed_ms(start));
            summary << "mean J    " << short_interval(r.mean_j) << "  tail " << upper_string(r.mean_tail) << '\n'
                    << "kappa M   " << short_interval(r.kappa_m) << "  tail " << upper_string(r.kappa_m_tail) << '\n'
                    << "closed    " << short_interval(r.closed_form) << '\n'
                    << "status    " << report["status"].get<std::string>() << '\n';
            emit(report, o, "mean-check-d" + std::to_string(dim), summary.str(), out);
            return r.consistent ? kCertified : kInconclusive;
        }

        if (constants->parsed()) {
            const Exponents e = exponents_for(dim, true);
            const Interval kappa = gamma_ratio_constant(e);
            const Interval factor = lower_bound_factor(e);
            const Interval two_pow = pow_real(Interval(2.0), Rational(1) / e.p_conjugate());
            const Interval mass = mass_closed_form(e);
            Json report = base_report("constants");
            report["config"] = {{"dim", dim}};
            report["result"] = {
                {"p", e.p.str()},
                {"q", e.q.str()},
                {"p_conjugate", e.p_conjugate().str()},
                {"gamma_q_plus_1_over_2", to_json(gamma_half_integer((e.q + Rational(1)) / Rational(2)))},
                {"gamma_q_plus_2_over_2", to_json(gamma_half_integer((e.q + Rational(2)) / Rational(2)))},
                {"kappa_q", to_json(kappa)},
                {"lower_bound_factor", to_json(factor)},
                {"two_pow_one_over_p_conjugate", to_json(two_pow)},
                {"factor_below_two_pow", factor.hi() < two_pow.lo()},
                {"c_d", to_json(polar_constant(e))},
                {"phi_one_closed_form", to_json(phi_one_closed_form(e.q))},
                {"M_closed_form", to_json(mass)},
                {"kappa_M_closed_form", to_json(kappa * mass)}};
            report["status"] = "certified";
            add_timing(report, "total", elapsed_ms(start));
            summary << "d=" << dim << "  p=" << e.p.str() << "  q=" << e.q.str() << '\n'
                    << "kappa_q              " << short_interval(kappa) << '\n'
                    << "lower bound factor   " << short_interval(factor) << "  (< " << short_interval(two_pow)
                    << ")\n"
                    << "c_d                  " << short_interval(polar_constant(e)) << '\n'
                    << "phi(1)               " << short_interval(phi_one_closed_form(e.q)) << '\n'
                    << "M                    " << short_interval(mass) << '\n'
                    << "kappa_q M            " << short_interval(kappa * mass) << '\n';
            emit(report, o, "constants-d" + std::to_string(dim), summary.str(), out);
            return kCertified;
        }

        if (phi_cmd->parsed()) {
            const Exponents e = exponents_for(dim, true);
            Json report = base_report("phi");
            report["config"] = {{"dim", dim}, {"q", e.q.str()}, {"t", phi_t}, {"steps", phi_steps}, {"grid", phi_grid}};
            const Interval value = phi(Interval(phi_t), e.q, phi_steps);
            Json result = {{"phi", to_json(value)}};
            summary << "phi(" << phi_t << ")  " << short_interval(value) << '\n';
            int code = kCertified;
            if (phi_t == 1.0) {
                const Interval closed = phi_one_closed_form(e.q);
                result["closed_form"] = to_json(closed);
                result["intersects_closed_form"] = value.intersects(closed);
                summary << "closed    " << short_interval(closed) << '\n';
            }
            if (!phi_grid.empty()) {
                const MonotoneReport m = phi_monotone_check(e.q, phi_grid, std::max<std::int64_t>(1, phi_steps / 64));
                result["monotone"] = to_json(m);
                summary << "monotone  " << (m.certified ? "certified" : "inconclusive") << " (" << m.steps_used
                        << " steps)\n";
                code = m.certified ? kCertified : kInconclusive;
            }
            report["result"] = result;
            report["status"] = code == kCertified ? "certified" : "inconclusive";
            add_timing(report, "total", elapsed_ms(start));
            emit(report, o, "phi-d" + std::to_string(dim), summary.str(), out);
            return code;
        }

        if (tail->parsed()) {
            const Exponents e = exponents_for(dim, true);
            const EnvelopeParts parts = envelope_parts(e, t_cut, r_cut);
            const double cover = tail_bound_j(e, t_cut, r_cut);
            const double corner = tail_bound_j_corner(e, t_cut, r_cut);
            Json report = base_report("tail");
            report["config"] = {{"dim", dim}, {"t_cut", t_cut}, {"r_cut", r_cut}};
            report["result"] = {{"complement_cover", upper_string(cover)},
                                {"corner_region_only", upper_string(corner)},
                                {"t_tail", to_json(parts.t_tail)},
                                {"t_full", to_json(parts.t_full)},
                                {"r_tail", to_json(parts.r_tail)},
                                {"r_full", to_json(parts.r_full)}};
            report["status"] = "certified";
            add_timing(report, "total", elapsed_ms(start));
            summary << "complement of [-T,T]x[0,R]   " << upper_string(cover) << '\n'
                    << "{|t|>T} x {r>R} only         " << upper_string(corner) << '\n';
            emit(report, o, "tail-d" + std::to_string(dim), summary.str(), out);
            return kCertified;
        }

        if (check->parsed()) {
            const SymmetryCheckReport r = run_symmetry_checks(seed, cases);
            Json report = base_report("symmetry check");
            report["config"] = {{"seed", seed}, {"cases", cases}};
            report["result"] = to_json(r);
            report["status"] = r.all_passed() ? "passed" : "failed";
            add_timing(report, "total", elapsed_ms(start));
            for (const PropertyResult& p : r.results) {
                summary << std::left << std::setw(22) << p.name << " max error " << std::setw(12) << p.max_error
                        << " tol " << std::setw(8) << p.tolerance << (p.passed() ? " ok" : " FAIL") << '\n';
            }
            emit(report, o, "symmetry-check", summary.str(), out);
            return r.all_passed() ? kCertified : kInconclusive;
        }

        if (equi->parsed()) {
            const Exponents e = exponents_for(dim, true);
            if (etas.empty()) etas = dim == 1 ? std::vector<double>{2.0, 8.0, 32.0} : std::vector<double>{2.0, 4.0, 8.0};
            if (dim == 2 && equi->count("--t-steps") == 0) grid = {2.0, 8.0, 2048, 160};
            const GeneralizedGaussian g = GeneralizedGaussian::standard(static_cast<std::size_t>(dim));
            Json report = base_report("equidistribution");
            report["config"] = {{"dim", dim},
                                {"eta", etas},
                                {"grid", {{"t_max", grid.t_max}, {"x_max", grid.x_max}, {"t_steps", grid.t_steps},
                                          {"x_steps", grid.x_steps}}}};
            Json gaps = Json::array();
            std::vector<double> values;
            for (double eta_norm : etas) {
                std::vector<double> eta(static_cast<std::size_t>(dim), 0.0);
                eta[0] = eta_norm;
                const double gap = equidistribution_gap(g, eta, e, grid);
                values.push_back(gap);
                gaps.push_back({{"eta", eta_norm}, {"gap", gap}});
                summary << "|eta|=" << std::setw(6) << eta_norm << "  gap " << gap << '\n';
            }
            bool decreasing = true;
            for (std::size_t i = 1; i < values.size(); ++i) decreasing = decreasing && values[i] < values[i - 1];
            report["result"] = {{"gaps", gaps}, {"trend_decreasing", decreasing}};
            report["status"] = decreasing ? "trend" : "no-trend";
            add_timing(report, "total", elapsed_ms(start));
            summary << "trend     " << (decreasing ? "decreasing" : "not monotone") << '\n';
            emit(report, o, "equidistribution-d" + std::to_string(dim), summary.str(), out);
            return decreasing ? kCertified : kInconclusive;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    err << app.help();
    return kError;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace pairbound::cli
