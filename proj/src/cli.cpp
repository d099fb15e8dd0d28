#include "ogb/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ogb/classical.hpp"
#include "ogb/core.hpp"
#include "ogb/majorant.hpp"
#include "ogb/verify.hpp"
#include "ogb/weight.hpp"

namespace ogb {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace {

std::string opt_float(const std::optional<double>& v) {
    return v ? format_float(*v) : std::string();
}

std::vector<double> parse_csv_doubles(const std::string& s,
                                      const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw CLI::ValidationError(what, "bad number '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

Interval parse_interval(const std::string& s) {
    auto v = parse_csv_doubles(s, "--interval");
    if (v.size() != 2)
        throw CLI::ValidationError("--interval", "expected a,b");
    return Interval(v[0], v[1]);
}

Weight parse_weight(const std::string& spec, const Interval& iv,
                    double tol) {
    QuadConfig cfg;
    cfg.abs_tol = cfg.rel_tol = tol;
    if (spec == "uniform") {
        Weight w = Weight::uniform(iv);
        w.set_quad_config(cfg);
        return w;
    }
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "beta") {
        auto v = parse_csv_doubles(tail, "--weight");
        if (v.size() != 2)
            throw CLI::ValidationError("--weight", "beta:<p>,<q>");
        Weight w = Weight::beta(v[0], v[1]);
        w.set_quad_config(cfg);
        return w;
    }
    if (head == "normal") {
        auto v = parse_csv_doubles(tail, "--weight");
        if (v.size() != 2)
            throw CLI::ValidationError("--weight", "normal:<mu>,<s>");
        Weight w = Weight::truncated_normal(v[0], v[1], iv);
        w.set_quad_config(cfg);
        return w;
    }
    throw CLI::ValidationError("--weight",
                               "expected uniform, beta:<p>,<q> or "
                               "normal:<mu>,<s>");
}

FunctionSpec parse_function(const std::string& spec, const Weight& w,
                            double gamma, double Gamma) {
    if (spec == "witness") return sharpness_witness(w, gamma, Gamma);
    if (spec.rfind("poly:", 0) == 0)
        return make_poly(parse_csv_doubles(spec.substr(5), "--f"),
                         w.interval());
    throw CLI::ValidationError("--f", "expected poly:<c0>,<c1>,... or witness");
}

std::vector<double> parse_x_values(const std::string& s, const Interval& iv) {
    // either one real or a grid lo:hi:n
    auto c1 = s.find(':');
    if (c1 == std::string::npos) return {std::stod(s)};
    auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw CLI::ValidationError("--x", "expected <x> or lo:hi:n");
    double lo = std::stod(s.substr(0, c1));
    double hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    int n = std::stoi(s.substr(c2 + 1));
    if (n < 1 || lo > hi)
        throw CLI::ValidationError("--x", "grid needs lo <= hi, n >= 1");
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    (void)iv;
    return out;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = nullptr;
    int open(const std::string& path, std::ostream& fallback,
             std::ostream& err) {
        if (path.empty() || path == "-") {
            os = &fallback;
            return 0;
        }
        file.open(path);
        if (!file) {
            err << "cannot open output file: " << path << "\n";
            return 3;
        }
        os = &file;
        return 0;
    }
};

void emit_row(std::ostream& os, const std::vector<std::string>& cells,
              bool csv) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? (csv ? "," : "  ") : "") << cells[i];
    os << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Certified two-sided error bounds for one-point weighted "
                 "quadrature rules"};
    app.require_subcommand(1);

    std::string weight_spec = "uniform", interval_spec = "0,1";
    std::string f_spec, x_spec = "0.5", out_path, format = "csv";
    double c = 1.0, tol = 1e-10, gamma = 0.0, Gamma = 1.0, step = 0.1;
    std::uint64_t seed = 42;
    int trials = 1000, n_grid = 1025;

    auto add_common = [&](CLI::App* sub, bool with_weight) {
        sub->add_option("--interval", interval_spec, "interval a,b");
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--format", format, "csv or text")
            ->check(CLI::IsMember({"csv", "text"}));
        sub->add_option("--tol", tol, "quadrature tolerance");
        if (with_weight)
            sub->add_option("--weight", weight_spec,
                            "uniform | beta:<p>,<q> | normal:<mu>,<s>");
    };

    auto* sub_bounds = app.add_subcommand(
        "bounds", "bound report for one function at given x, c");
    add_common(sub_bounds, true);
    sub_bounds->add_option("--f", f_spec, "poly:<c0>,<c1>,... or witness")
        ->required();
    sub_bounds->add_option("--x", x_spec, "evaluation point or grid lo:hi:n");
    sub_bounds->add_option("--c", c, "functional parameter in [0,1]");
    sub_bounds->add_option("--gamma", gamma, "witness lower slope");
    sub_bounds->add_option("--Gamma", Gamma, "witness upper slope");

    auto* sub_table = app.add_subcommand(
        "table1", "reproduce the published beta-weight table with "
                  "corrected values and discrepancies");
    add_common(sub_table, false);
    sub_table->add_option("--step", step, "x grid step (must divide 1)");

    auto* sub_verify = app.add_subcommand(
        "verify", "run the randomized verification battery");
    add_common(sub_verify, false);
    sub_verify->add_option("--seed", seed, "battery seed");
    sub_verify->add_option("--trials", trials, "number of random functions");

    auto* sub_majorant = app.add_subcommand(
        "majorant", "sampled modulus of continuity and its least concave "
                    "majorant");
    add_common(sub_majorant, false);
    sub_majorant->add_option("--f", f_spec, "poly:<c0>,<c1>,...")->required();
    sub_majorant->add_option("--n-grid", n_grid, "sampling grid size");

    auto* sub_classical = app.add_subcommand(
        "classical", "unweighted functional and closed-form bounds "
                     "(c in [0,2])");
    add_common(sub_classical, false);
    sub_classical->add_option("--f", f_spec, "poly:<c0>,<c1>,...")->required();
    sub_classical->add_option("--x", x_spec, "evaluation point or grid");
    sub_classical->add_option("--c", c, "functional parameter in [0,2]");

    auto* sub_erratum = app.add_subcommand(
        "erratum", "structured findings where computed values disagree "
                   "with the printed ones");
    add_common(sub_erratum, false);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool csv = format == "csv";
    OutputSink sink;
    if (int rc = sink.open(out_path, out, err)) return rc;
    std::ostream& os = *sink.os;

    try {
        if (sub_bounds->parsed()) {
            Interval iv = parse_interval(interval_spec);
            Weight w = parse_weight(weight_spec, iv, tol);
            if (c < 0.0 || c > 1.0) {
                err << "error: weighted bounds require c in [0,1]; use the "
                       "'classical' subcommand for c in [0,2]\n";
                return 2;
            }
            FunctionSpec f = parse_function(f_spec, w, gamma, Gamma);
            emit_row(os,
                     {"x", "c", "L_value", "lower", "upper", "t_star", "nu",
                      "kernel_l1", "majorant_bound", "l2_bound"},
                     csv);
            for (double x : parse_x_values(x_spec, w.interval())) {
                BoundReport r = evaluate_bounds(f, x, c, w);
                r.majorant_bound = bound_majorant(f, x, c, w);
                emit_row(os,
                         {format_float(r.x), format_float(r.c),
                          format_float(r.L_value), format_float(r.lower),
                          format_float(r.upper), format_float(r.t_star),
                          format_float(r.nu), format_float(r.kernel_l1),
                          opt_float(r.majorant_bound),
                          opt_float(r.l2_bound)},
                         csv);
            }
            return 0;
        }
        if (sub_table->parsed()) {
            std::vector<ErratumFinding> errata;
            auto rows = table1(step, &errata);
            emit_row(os,
                     {"x", "nu_corrected", "nu_table_convention", "lhs",
                      "rhs", "actual", "paper_nu", "paper_lhs", "paper_rhs",
                      "paper_actual"},
                     csv);
            for (const auto& r : rows)
                emit_row(os,
                         {format_float(r.x), format_float(r.nu_corrected),
                          format_float(r.nu_table_convention),
                          format_float(r.lhs), format_float(r.rhs),
                          format_float(r.actual), opt_float(r.paper_nu),
                          opt_float(r.paper_lhs), opt_float(r.paper_rhs),
                          opt_float(r.paper_actual)},
                         csv);
            os << "\n";
            emit_row(os, {"id", "location", "computed", "paper"}, csv);
            for (const auto& e : errata)
                emit_row(os,
                         {e.id, "\"" + e.location + "\"",
                          opt_float(e.computed_value),
                          opt_float(e.paper_value)},
                         csv);
            return 0;
        }
        if (sub_verify->parsed()) {
            BatterySummary s = run_battery(seed, trials);
            emit_row(os, {"suite", "checks", "failures", "worst_slack"}, csv);
            for (const auto& cs : s.suites)
                emit_row(os,
                         {cs.name, std::to_string(cs.checks),
                          std::to_string(cs.failures),
                          format_float(cs.worst_slack)},
                         csv);
            return s.all_passed() ? 0 : 1;
        }
        if (sub_majorant->parsed()) {
            Interval iv = parse_interval(interval_spec);
            Weight w = Weight::uniform(iv);
            FunctionSpec f = parse_function(f_spec, w, gamma, Gamma);
            ModulusProfile prof(f, iv, n_grid);
            emit_row(os, {"kind", "s", "value"}, csv);
            for (const auto& [s, v] : prof.samples())
                emit_row(os, {"omega", format_float(s), format_float(v)},
                         csv);
            for (const auto& [s, v] : prof.hull().knots)
                emit_row(os, {"hull", format_float(s), format_float(v)}, csv);
            return 0;
        }
        if (sub_classical->parsed()) {
            Interval iv = parse_interval(interval_spec);
            if (c < 0.0 || c > 2.0) {
                err << "error: classical bounds require c in [0,2]\n";
                return 2;
            }
            FunctionSpec f = make_poly(
                parse_csv_doubles(f_spec.substr(f_spec.rfind("poly:", 0) == 0
                                                    ? 5
                                                    : 0),
                                  "--f"),
                iv);
            emit_row(os,
                     {"x", "c", "L_value", "e33_lower", "e33_upper", "cheng",
                      "matic", "dragomir_wang", "anastassiou"},
                     csv);
            for (double x : parse_x_values(x_spec, iv)) {
                ClassicalReport r = evaluate_classical(f, x, c, iv);
                emit_row(os,
                         {format_float(r.x), format_float(r.c),
                          format_float(r.L_value), format_float(r.e33_lower),
                          format_float(r.e33_upper), format_float(r.cheng),
                          format_float(r.matic),
                          format_float(r.dragomir_wang),
                          format_float(r.anastassiou)},
                         csv);
            }
            return 0;
        }
        if (sub_erratum->parsed()) {
            emit_row(os, {"id", "location", "computed", "paper"}, csv);
            for (const auto& e : erratum_report())
                emit_row(os,
                         {e.id, "\"" + e.location + "\"",
                          opt_float(e.computed_value),
                          opt_float(e.paper_value)},
                         csv);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace ogb
