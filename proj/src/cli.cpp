#include "gpe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gpe/experiments.hpp"

namespace gpe::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

// Writes to the destination path, or to stdout when the path is empty.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    file << text;
}

struct CommonArgs {
    std::string method = "tssp";
    std::string problem = "single";
    double half_width = 40.0;
    int intervals = 512;
    double final_time = 10.0;
    int steps = 2000;
    double g = -1.0;
    double sigma = 1.0;
    double tol = 1e-5;
    int max_iter = 5;
    std::string out_path;
    std::string format = "csv";
    bool symmetric_widths = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_method) {
    if (with_method) {
        cmd->add_option("--method", a.method, "scheme name (kebab-case)")->required();
    }
    cmd->add_option("--problem", a.problem, "single | two")
        ->check(CLI::IsMember({"single", "two"}));
    cmd->add_option("--L", a.half_width, "domain half-width");
    cmd->add_option("--M", a.intervals, "spatial interval count (even)");
    cmd->add_option("--T", a.final_time, "final time");
    cmd->add_option("--N", a.steps, "time step count");
    cmd->add_option("--g", a.g, "interaction strength");
    cmd->add_option("--sigma", a.sigma, "nonlinearity exponent");
    cmd->add_option("--tol", a.tol, "Picard tolerance");
    cmd->add_option("--max-iter", a.max_iter, "Picard iteration cap");
    cmd->add_option("--out", a.out_path, "output file (default: stdout)");
    cmd->add_option("--format", a.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--symmetric-widths", a.symmetric_widths,
                  "give both two-soliton pulses the 1/sqrt(2) width");
}

int require_method(const std::string& name, SchemeKind* kind) {
    const auto parsed = parse_scheme(name);
    if (!parsed) {
        std::cerr << "unknown method '" << name << "'; valid names are:";
        for (SchemeKind k : all_schemes()) std::cerr << ' ' << scheme_name(k);
        std::cerr << '\n';
        return kExitUsage;
    }
    *kind = *parsed;
    return kExitOk;
}

RunSpec to_run_spec(const CommonArgs& a, SchemeKind kind, int record_every) {
    RunSpec spec;
    spec.scheme.kind = kind;
    spec.scheme.picard_tol = a.tol;
    spec.scheme.picard_max = a.max_iter;
    spec.model.g = a.g;
    spec.model.sigma = a.sigma;
    spec.problem = a.problem == "two" ? Problem::TwoSolitons : Problem::SingleSoliton;
    spec.half_width = a.half_width;
    spec.intervals = a.intervals;
    spec.final_time = a.final_time;
    spec.steps = a.steps;
    spec.record_every = record_every;
    spec.symmetric_two_soliton_widths = a.symmetric_widths;
    return spec;
}

constexpr const char* kDiagnosticsHeader =
    "t,mass,impulse_re,impulse_im,energy_paper,energy_std,l2err_sq";

int cmd_simulate(const CommonArgs& args, int record_every) {
    SchemeKind kind{};
    if (int rc = require_method(args.method, &kind); rc != kExitOk) return rc;
    RunResult result = run_simulation(to_run_spec(args, kind, record_every));

    std::ostringstream text;
    if (args.format == "csv") {
        text << kDiagnosticsHeader << '\n';
        for (const DiagnosticsRecord& r : result.series) {
            text << fmt(r.t) << ',' << fmt(r.mass) << ',' << fmt(r.impulse_re) << ','
                 << fmt(r.impulse_im) << ',' << fmt(r.energy_paper) << ','
                 << fmt(r.energy_std) << ',' << fmt(r.l2err_sq_accum) << '\n';
        }
        if (result.aborted) {
            text << "# aborted at step " << result.abort_step << '\n';
        }
    } else {
        ordered_json doc;
        doc["schema"] = "diagnostics";
        doc["columns"] = ordered_json::array(
            {"t", "mass", "impulse_re", "impulse_im", "energy_paper", "energy_std", "l2err_sq"});
        ordered_json rows = ordered_json::array();
        for (const DiagnosticsRecord& r : result.series) {
            rows.push_back({r.t, r.mass, r.impulse_re, r.impulse_im, r.energy_paper,
                            r.energy_std, r.l2err_sq_accum});
        }
        doc["rows"] = std::move(rows);
        doc["aborted"] = result.aborted;
        if (result.aborted) doc["abort_step"] = result.abort_step;
        text << doc.dump(2) << '\n';
    }
    emit(args.out_path, text.str());
    return result.aborted ? kExitInstability : kExitOk;
}

int cmd_converge(const CommonArgs& args, int base_m, int base_n,
                 const std::vector<int>& dt_factors, const std::vector<int>& dx_divisors) {
    SchemeKind kind{};
    if (int rc = require_method(args.method, &kind); rc != kExitOk) return rc;

    TableauSpec spec;
    spec.scheme.kind = kind;
    spec.scheme.picard_tol = args.tol;
    spec.scheme.picard_max = args.max_iter;
    spec.model.g = args.g;
    spec.model.sigma = args.sigma;
    spec.problem = args.problem == "two" ? Problem::TwoSolitons : Problem::SingleSoliton;
    spec.half_width = args.half_width;
    spec.final_time = args.final_time;
    spec.base_intervals = base_m;
    spec.base_steps = base_n;
    spec.dt_factors = dt_factors;
    spec.dx_divisors = dx_divisors;
    spec.symmetric_two_soliton_widths = args.symmetric_widths;

    const ConvergenceTableau t = convergence_tableau(spec);
    const auto order_t = observed_temporal_orders(t);
    const auto order_x = observed_spatial_orders(t);
    const auto cell_text = [](const std::optional<double>& c) {
        return c ? fmt(*c) : std::string("nan");
    };

    std::ostringstream text;
    if (args.format == "csv") {
        text << "label";
        for (int d : t.dx_divisors) text << ",dx/" << d;
        text << '\n';
        for (std::size_t i = 0; i < t.dt_factors.size(); ++i) {
            text << "dt*" << t.dt_factors[i];
            for (std::size_t j = 0; j < t.dx_divisors.size(); ++j) {
                text << ',' << cell_text(t.cells[i][j]);
            }
            text << '\n';
        }
        for (std::size_t i = 0; i < order_t.size(); ++i) {
            text << "order_t(dt*" << t.dt_factors[i] << "->dt*" << t.dt_factors[i + 1] << ")";
            for (const auto& v : order_t[i]) text << ',' << cell_text(v);
            text << '\n';
        }
        for (std::size_t i = 0; i < order_x.size(); ++i) {
            text << "order_x(dt*" << t.dt_factors[i] << ")";
            for (const auto& v : order_x[i]) text << ',' << cell_text(v);
            for (std::size_t pad = order_x[i].size(); pad < t.dx_divisors.size(); ++pad) text << ',';
            text << '\n';
        }
    } else {
        ordered_json doc;
        doc["schema"] = "convergence_tableau";
        doc["base_dt"] = t.base_dt;
        doc["base_dx"] = t.base_dx;
        doc["dt_factors"] = t.dt_factors;
        doc["dx_divisors"] = t.dx_divisors;
        ordered_json cells = ordered_json::array();
        for (const auto& row : t.cells) {
            ordered_json r = ordered_json::array();
            for (const auto& c : row) {
                if (c) r.push_back(*c); else r.push_back(nullptr);
            }
            cells.push_back(std::move(r));
        }
        doc["cells_l2err_sq"] = std::move(cells);
        const auto order_block = [](const auto& block) {
            ordered_json out = ordered_json::array();
            for (const auto& row : block) {
                ordered_json r = ordered_json::array();
                for (const auto& v : row) {
                    if (v) r.push_back(*v); else r.push_back(nullptr);
                }
                out.push_back(std::move(r));
            }
            return out;
        };
        doc["observed_temporal_orders"] = order_block(order_t);
        doc["observed_spatial_orders"] = order_block(order_x);
        text << doc.dump(2) << '\n';
    }
    emit(args.out_path, text.str());
    return kExitOk;
}

// The benchmark row set mirrors the splitting-comparison tables: every
// scheme except the purely auxiliary FD splittings and the Picard CN.
std::vector<std::string> default_bench_methods() {
    return {"implicit-euler", "crank-nicolson", "tssp",     "ab-spec-spec",
            "ab-spec-fd",     "ab-fd-spec",     "ab-fd-fd", "aba-spec",
            "bab-spec",       "aba-cn",         "aba-icn"};
}

int cmd_bench(const CommonArgs& args, const std::vector<std::string>& methods,
              const std::vector<double>& horizons, int repeats) {
    BenchSpec spec;
    for (const std::string& name : methods) {
        SchemeKind kind{};
        if (int rc = require_method(name, &kind); rc != kExitOk) return rc;
        spec.schemes.push_back(kind);
    }
    spec.model.g = args.g;
    spec.model.sigma = args.sigma;
    spec.problem = args.problem == "two" ? Problem::TwoSolitons : Problem::SingleSoliton;
    spec.half_width = args.half_width;
    spec.intervals = args.intervals;
    spec.horizons = horizons;
    spec.steps_at_last_horizon = args.steps;
    spec.repeats = repeats;
    spec.symmetric_two_soliton_widths = args.symmetric_widths;

    const std::vector<BenchRow> rows = benchmark(spec);

    std::ostringstream text;
    if (args.format == "csv") {
        text << "method";
        for (double t : spec.horizons) text << ",time_T" << t;
        for (double t : spec.horizons) text << ",err_T" << t;
        text << '\n';
        for (const BenchRow& row : rows) {
            text << scheme_name(row.scheme);
            for (double s : row.seconds) text << ',' << fmt(s);
            for (double e : row.errors) text << ',' << fmt(e);
            text << '\n';
        }
    } else {
        ordered_json doc;
        doc["schema"] = "benchmark";
        doc["horizons"] = spec.horizons;
        ordered_json out_rows = ordered_json::array();
        for (const BenchRow& row : rows) {
            ordered_json r;
            r["method"] = scheme_name(row.scheme);
            r["seconds"] = row.seconds;
            r["errors_l2err_sq"] = row.errors;
            out_rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(out_rows);
        text << doc.dump(2) << '\n';
    }
    emit(args.out_path, text.str());
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& argv) {
    CLI::App app{"1D Gross-Pitaevskii / nonlinear Schroedinger splitting-scheme benchmark"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key = value file");

    CommonArgs sim_args;
    int record_every = 1;
    CLI::App* simulate = app.add_subcommand("simulate", "run one scheme and write diagnostics");
    add_common(simulate, sim_args, true);
    simulate->add_option("--record-every", record_every, "record every k-th step");

    CommonArgs conv_args;
    conv_args.final_time = 1.0;
    int base_m = 256;
    int base_n = 256;
    std::vector<int> dt_factors = {4, 8, 16};
    std::vector<int> dx_divisors = {4, 8, 16};
    CLI::App* converge = app.add_subcommand("converge", "build a convergence tableau");
    add_common(converge, conv_args, true);
    converge->add_option("--base-M", base_m, "intervals at dx divisor 1");
    converge->add_option("--base-N", base_n, "steps at dt factor 1");
    converge->add_option("--dt-factors", dt_factors, "dt multipliers (rows)")->delimiter(',');
    converge->add_option("--dx-divisors", dx_divisors, "dx divisors (columns)")->delimiter(',');

    CommonArgs bench_args;
    std::vector<std::string> methods = default_bench_methods();
    std::vector<double> horizons = {2.5, 5.0, 7.5, 10.0};
    int repeats = 3;
    CLI::App* bench = app.add_subcommand("bench", "time schemes across horizons");
    add_common(bench, bench_args, false);
    bench->add_option("--methods", methods, "schemes to time")->delimiter(',');
    bench->add_option("--horizons", horizons, "final times")->delimiter(',');
    bench->add_option("--repeats", repeats, "timing repeats (median)");

    std::vector<std::string> args_reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(args_reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim_args, record_every);
        if (converge->parsed()) {
            return cmd_converge(conv_args, base_m, base_n, dt_factors, dx_divisors);
        }
        return cmd_bench(bench_args, methods, horizons, repeats);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace gpe::cli
