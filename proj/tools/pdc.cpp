// pdc: command-line front end for polyhedral DC analysis.
//
// Exit codes: 0 condition holds / success, 1 condition fails (witness
// printed), 2 usage or parse error, 3 internal invariant violation.

#include "pdc/approx.hpp"
#include "pdc/audit.hpp"
#include "pdc/conditions.hpp"
#include "pdc/dcfunc.hpp"
#include "pdc/error.hpp"
#include "pdc/instance_io.hpp"
#include "pdc/oracle.hpp"
#include "pdc/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace pdc;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct Options {
    std::string file;
    std::string delta;
    std::string direction;
    bool active = false;
    std::string representation;
    std::string which = "all";
    bool oracle = false;
    bool machine = false;
    std::string out;
    std::string range = "-5,5";
    std::string step = "1/4";
    std::size_t count = 0;
    std::string seed = "pdc";
};

class UsageError : public Error {
public:
    using Error::Error;
};

void emit(const Report& report, const Options& opt) {
    std::cout << (opt.machine ? report.machine() : report.human());
    if (!opt.out.empty()) {
        std::ofstream out(opt.out);
        if (!out) throw UsageError("cannot write " + opt.out);
        out << report.machine();
    }
}

std::string index_set(const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
    return s + "}";
}

Vec vector_arg(const std::string& text, std::size_t n, const char* what) {
    Vec v;
    try {
        v = parse_vector(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
    if (v.size() != n) throw DimensionMismatch(n, v.size(), what);
    return v;
}

int cmd_eval(const Options& opt) {
    const auto inst = load_instance(opt.file);
    const auto& h = inst.function;
    const Vec delta = vector_arg(opt.delta, h.dimension(), "--delta");
    std::cout << to_string(eval(h, delta)) << "\n";
    if (opt.active) {
        const auto sets = active_sets(h, delta);
        std::cout << "active.plus = " << index_set(sets.plus) << "\n";
        std::cout << "active.minus = " << index_set(sets.minus) << "\n";
    }
    if (!opt.direction.empty()) {
        const Vec dir = vector_arg(opt.direction, h.dimension(), "--direction");
        std::cout << "directional_derivative = " << to_string(directional_derivative(h, delta, dir)) << "\n";
    }
    return exit_holds;
}

int cmd_show(const Options& opt) {
    const auto inst = load_instance(opt.file);
    const auto h = normalize(inst.function);
    const auto cd = to_codifferential(h);
    Report r;
    r.add("instance.label", inst.label.value_or(""));
    r.add("normalization.offset", to_string(h.offset()));
    if (opt.representation == "codifferential")
        add_codifferential(r, cd);
    else if (opt.representation == "upper-coexhauster")
        add_coexhauster(r, upper_coexhauster(cd));
    else if (opt.representation == "lower-coexhauster")
        add_coexhauster(r, lower_coexhauster(cd));
    else
        throw UsageError("unknown representation \"" + opt.representation + "\"");
    emit(r, opt);
    return exit_holds;
}

int cmd_check(const Options& opt) {
    std::vector<CheckKind> checks;
    if (opt.which == "all")
        checks.assign(all_checks.begin(), all_checks.end());
    else if (opt.which == "bounded-below")
        checks = {CheckKind::bounded_below};
    else if (opt.which == "bounded-above")
        checks = {CheckKind::bounded_above};
    else if (opt.which == "min")
        checks = {CheckKind::min};
    else if (opt.which == "max")
        checks = {CheckKind::max};
    else
        throw UsageError("unknown check \"" + opt.which + "\"");

    const auto inst = load_instance(opt.file);
    const auto h = normalize(inst.function);
    Report r;
    add_instance(r, inst, h);

    bool all_hold = true;
    bool optimality = false;
    for (auto kind : checks) {
        const auto v = run_check(h, kind);
        add_verdict(r, v, h);
        if (opt.oracle)
            add_oracle(r, v, h, GridSpec{Rational(5), Rational(1, 4), h.function().dimension()}, 64);
        all_hold = all_hold && v.holds;
        optimality = optimality || kind == CheckKind::min || kind == CheckKind::max;
    }
    if (optimality) {
        if (h.offset() == 0)
            add_stationarity(r, stationarity_report(h));
        else
            r.add("stationarity.classification", "not-applicable (nonzero offset " + to_string(h.offset()) + ")");
    }
    r.add("result", all_hold ? "holds" : "fails");
    emit(r, opt);
    return all_hold ? exit_holds : exit_fails;
}

int cmd_plot(const Options& opt) {
    const auto inst = load_instance(opt.file);
    const auto& h = inst.function;
    const std::size_t n = h.dimension();
    if (n > 2) throw UnsupportedDimension("plot supports dimension 1 or 2, instance has " + std::to_string(n));

    Vec range;
    Rational step;
    try {
        range = parse_vector(opt.range);
        step = parse_rational(opt.step);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (range.size() != 2 || range[0] > range[1]) throw UsageError("--range must be lo,hi with lo <= hi");
    if (step <= 0) throw UsageError("--step must be positive");

    std::vector<Rational> axis;
    for (Rational x = range[0]; x <= range[1]; x += step) axis.push_back(x);

    std::ostringstream csv;
    csv << (n == 1 ? "d1,h\n" : "d1,d2,h\n");
    Vec delta(n);
    if (n == 1) {
        for (const auto& x : axis) {
            delta[0] = x;
            csv << to_plot_string(x) << "," << to_plot_string(eval(h, delta)) << "\n";
        }
    } else {
        for (const auto& x : axis)
            for (const auto& y : axis) {
                delta[0] = x;
                delta[1] = y;
                csv << to_plot_string(x) << "," << to_plot_string(y) << "," << to_plot_string(eval(h, delta)) << "\n";
            }
    }
    if (opt.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out);
        if (!out) throw UsageError("cannot write " + opt.out);
        out << csv.str();
    }
    return exit_holds;
}

int cmd_audit(const Options& opt) {
    if (opt.count == 0) throw UsageError("--count must be at least 1");
    const auto summary = run_audit(opt.count, opt.seed);

    auto yn = [](bool b) { return b ? "T" : "F"; };
    std::cout << std::left << std::setw(6) << "#" << std::setw(3) << "n" << std::setw(4) << "|I|" << std::setw(4)
              << "|J|" << "bb ba min max  agree witness oracle\n";
    for (const auto& row : summary.rows) {
        const auto& f = row.instance->function();
        const bool witness_ok = std::all_of(row.witness_ok.begin(), row.witness_ok.end(), [](bool b) { return b; });
        const bool oracle_ok = std::all_of(row.oracle_ok.begin(), row.oracle_ok.end(), [](bool b) { return b; });
        std::cout << std::setw(6) << row.index + 1 << std::setw(3) << f.dimension() << std::setw(4)
                  << f.plus().size() << std::setw(4) << f.minus().size() << std::setw(3) << yn(row.holds[0])
                  << std::setw(3) << yn(row.holds[1]) << std::setw(4) << yn(row.holds[2]) << std::setw(5)
                  << yn(row.holds[3]) << std::setw(6) << yn(row.routes.consistent()) << std::setw(8)
                  << yn(witness_ok) << yn(oracle_ok);
        if (!row.error.empty()) std::cout << "  error: " << row.error;
        std::cout << "\n";
    }
    std::cout << "\ninstances = " << summary.rows.size() << "\n"
              << "seed = " << opt.seed << "\n";
    for (auto kind : all_checks) std::cout << "holding." << to_string(kind) << " = " << summary.holding(kind) << "\n";
    std::cout << "disagreements = " << summary.disagreements() << "\n"
              << "witness_failures = " << summary.witness_failures() << "\n"
              << "oracle_contradictions = " << summary.oracle_contradictions() << "\n"
              << "implication_violations = " << summary.implication_violations() << "\n"
              << "internal_errors = " << summary.errors() << "\n";
    return summary.clean() ? exit_holds : exit_fails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pdc: boundedness and optimality checks for polyhedral DC functions"};
    app.require_subcommand(1);
    Options opt;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate h exactly at a point");
    eval_cmd->add_option("--file", opt.file, "Instance file")->required();
    eval_cmd->add_option("--delta", opt.delta, "Point, comma separated rationals")->required();
    eval_cmd->add_flag("--active", opt.active, "Also print the active piece sets (1-based)");
    eval_cmd->add_option("--direction", opt.direction, "Also print the directional derivative along this direction");

    auto* show_cmd = app.add_subcommand("show", "Print a codifferential or coexhauster");
    show_cmd->add_option("representation", opt.representation,
                         "codifferential | upper-coexhauster | lower-coexhauster")
        ->required();
    show_cmd->add_option("--file", opt.file, "Instance file")->required();
    show_cmd->add_flag("--machine", opt.machine, "Key-value output");
    show_cmd->add_option("--out", opt.out, "Also write the key-value report here");

    auto* check_cmd = app.add_subcommand("check", "Decide boundedness / optimality conditions");
    check_cmd->add_option("--file", opt.file, "Instance file")->required();
    check_cmd->add_option("--which", opt.which, "bounded-below | bounded-above | min | max | all");
    check_cmd->add_flag("--oracle", opt.oracle, "Cross-check with the lattice and recession oracles");
    check_cmd->add_flag("--machine", opt.machine, "Key-value output");
    check_cmd->add_option("--out", opt.out, "Also write the key-value report here");

    auto* plot_cmd = app.add_subcommand("plot", "Write h sampled on a lattice as CSV");
    plot_cmd->add_option("--file", opt.file, "Instance file")->required();
    plot_cmd->add_option("--range", opt.range, "lo,hi (default -5,5)");
    plot_cmd->add_option("--step", opt.step, "Lattice step (default 1/4)");
    plot_cmd->add_option("--out", opt.out, "Output CSV (default stdout)");

    auto* audit_cmd = app.add_subcommand("audit", "Randomized route-equivalence and oracle audit");
    audit_cmd->add_option("--count", opt.count, "Number of random instances")->required();
    audit_cmd->add_option("--seed", opt.seed, "Seed label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*eval_cmd) return cmd_eval(opt);
        if (*show_cmd) return cmd_show(opt);
        if (*check_cmd) return cmd_check(opt);
        if (*plot_cmd) return cmd_plot(opt);
        if (*audit_cmd) return cmd_audit(opt);
    } catch (const RouteDisagreement& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const CertificateError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
