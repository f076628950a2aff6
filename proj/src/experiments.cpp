#include "gpe/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "gpe/solitons.hpp"

namespace gpe {

namespace {

void validate(const RunSpec& spec) {
    if (spec.record_every < 1 || spec.steps % spec.record_every != 0) {
        throw std::invalid_argument("RunSpec: record_every must divide the step count");
    }
}

WaveField initial_condition(const RunSpec& spec, const SpaceGrid& grid, GridTag tag) {
    if (spec.problem == Problem::SingleSoliton) {
        return initial_single_soliton(grid, tag);
    }
    return initial_two_solitons(grid, tag, spec.symmetric_two_soliton_widths);
}

// Squared spatial l2 distance to the exact soliton at time t, dx-weighted.
double exact_mismatch_sq(const WaveField& f, const SpaceGrid& grid, double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Complex d = f.values[i] - exact_single_soliton(sample_point(f, grid, i), t);
        s += d.real() * d.real() + d.imag() * d.imag();
    }
    return grid.dx * s;
}

struct StepLoopCallbacks {
    // called after each accepted step (1-based step index)
    std::function<void(int, const WaveField&)> on_step;
};

// Core stepping loop shared by the drivers. Returns false (with *bad_step set)
// as soon as the state stops being finite.
bool step_loop(const RunSpec& spec, const SpaceGrid& grid, const TimeMesh& mesh,
               WaveField& u, long* picard_total, int* bad_step,
               const StepLoopCallbacks& cb) {
    for (int n = 1; n <= mesh.steps; ++n) {
        StepResult r = advance(u, mesh.dt, grid, spec.model, spec.scheme);
        u = std::move(r.field);
        if (picard_total != nullptr) *picard_total += r.iterations;
        if (!all_finite(u)) {
            *bad_step = n;
            return false;
        }
        if (cb.on_step) cb.on_step(n, u);
    }
    return true;
}

DiagnosticsRecord make_record(const WaveField& u, const SpaceGrid& grid,
                              const ModelParams& model, double t, double err_accum) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.mass = mass(u, grid);
    const Complex p = impulse(u, grid);
    rec.impulse_re = p.real();
    rec.impulse_im = p.imag();
    rec.energy_paper = energy_paper(u, grid, model);
    rec.energy_std = energy_std(u, grid, model);
    rec.l2err_sq_accum = err_accum;
    return rec;
}

}  // namespace

int tableau_worker_count() {
    if (const char* env = std::getenv("GPE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

RunResult run_simulation(const RunSpec& spec) {
    validate(spec);
    const SpaceGrid grid = build_grid(spec.half_width, spec.intervals);
    const TimeMesh mesh = build_time_mesh(spec.final_time, spec.steps);
    const GridTag tag = required_tag(spec.scheme.kind);
    WaveField u = initial_condition(spec, grid, tag);

    RunResult result;
    double err_accum = 0.0;
    const bool track_error = spec.problem == Problem::SingleSoliton;
    result.series.push_back(make_record(u, grid, spec.model, 0.0, 0.0));

    StepLoopCallbacks cb;
    cb.on_step = [&](int n, const WaveField& v) {
        if (track_error) {
            err_accum += mesh.dt * exact_mismatch_sq(v, grid, mesh.time_at(n));
        }
        if (n % spec.record_every == 0) {
            result.series.push_back(make_record(v, grid, spec.model, mesh.time_at(n), err_accum));
        }
    };
    int bad_step = -1;
    const bool ok = step_loop(spec, grid, mesh, u, &result.total_picard_iterations,
                              &bad_step, cb);
    result.final_field = std::move(u);
    result.aborted = !ok;
    result.abort_step = bad_step;
    return result;
}

FieldSeries run_recording_fields(const RunSpec& spec) {
    validate(spec);
    const SpaceGrid grid = build_grid(spec.half_width, spec.intervals);
    const TimeMesh mesh = build_time_mesh(spec.final_time, spec.steps);
    const GridTag tag = required_tag(spec.scheme.kind);
    WaveField u = initial_condition(spec, grid, tag);

    FieldSeries series;
    series.times.push_back(0.0);
    series.fields.push_back(u);
    StepLoopCallbacks cb;
    cb.on_step = [&](int n, const WaveField& v) {
        if (n % spec.record_every == 0) {
            series.times.push_back(mesh.time_at(n));
            series.fields.push_back(v);
        }
    };
    int bad_step = -1;
    long picard = 0;
    if (!step_loop(spec, grid, mesh, u, &picard, &bad_step, cb)) {
        throw std::runtime_error("run_recording_fields: instability at step " +
                                 std::to_string(bad_step));
    }
    return series;
}

FieldSeries build_reference(Problem problem, const SpaceGrid& grid, const TimeMesh& mesh,
                            const ModelParams& model, int space_refine, int time_refine,
                            bool symmetric_widths) {
    if (space_refine < 1 || time_refine < 1) {
        throw std::invalid_argument("build_reference: refinements must be >= 1");
    }
    const long fine_m = static_cast<long>(grid.intervals) * space_refine;
    const long fine_n = static_cast<long>(mesh.steps) * time_refine;
    if (fine_m > (1L << 22) || fine_m * fine_n > (1L << 34)) {
        throw std::length_error("build_reference: refinement product exceeds the memory guard");
    }

    RunSpec fine;
    fine.scheme.kind = SchemeKind::ABA_spec;
    fine.model = model;
    fine.problem = problem;
    fine.half_width = grid.half_width;
    fine.intervals = static_cast<int>(fine_m);
    fine.final_time = mesh.final_time;
    fine.steps = static_cast<int>(fine_n);
    fine.record_every = time_refine;
    fine.symmetric_two_soliton_widths = symmetric_widths;

    FieldSeries fine_series = run_recording_fields(fine);
    FieldSeries coarse;
    coarse.times = fine_series.times;
    coarse.fields.reserve(fine_series.fields.size());
    for (const WaveField& ff : fine_series.fields) {
        WaveField cf;
        cf.tag = GridTag::Periodic;
        cf.values.resize(static_cast<std::size_t>(grid.intervals));
        for (int j = 0; j < grid.intervals; ++j) {
            cf.values[static_cast<std::size_t>(j)] =
                ff.values[static_cast<std::size_t>(j) * static_cast<std::size_t>(space_refine)];
        }
        coarse.fields.push_back(std::move(cf));
    }
    return coarse;
}

namespace {

std::optional<double> tableau_cell(const TableauSpec& spec, int factor, int divisor) {
    RunSpec cell;
    cell.scheme = spec.scheme;
    cell.model = spec.model;
    cell.problem = spec.problem;
    cell.half_width = spec.half_width;
    cell.intervals = spec.base_intervals * divisor;
    cell.final_time = spec.final_time;
    cell.steps = spec.base_steps / factor;
    cell.symmetric_two_soliton_widths = spec.symmetric_two_soliton_widths;
    try {
        if (spec.problem == Problem::SingleSoliton) {
            cell.record_every = cell.steps;  // error accumulates every step anyway
            RunResult r = run_simulation(cell);
            if (r.aborted) return std::nullopt;
            return r.series.back().l2err_sq_accum;
        }
        cell.record_every = 1;
        const SpaceGrid grid = build_grid(cell.half_width, cell.intervals);
        const TimeMesh mesh = build_time_mesh(cell.final_time, cell.steps);
        FieldSeries num = run_recording_fields(cell);
        FieldSeries ref = build_reference(spec.problem, grid, mesh, spec.model, 8, 16,
                                          spec.symmetric_two_soliton_widths);
        if (required_tag(spec.scheme.kind) == GridTag::InteriorDirichlet) {
            for (WaveField& f : ref.fields) f = to_interior(f, grid);
        }
        return spacetime_error_sq(num, ref, grid, mesh);
    } catch (const std::runtime_error&) {
        return std::nullopt;  // instability: cell left unavailable
    }
}

}  // namespace

ConvergenceTableau convergence_tableau(const TableauSpec& spec) {
    for (int factor : spec.dt_factors) {
        if (factor < 1 || spec.base_steps % factor != 0) {
            throw std::invalid_argument("convergence_tableau: dt factor must divide base_steps");
        }
    }
    for (int divisor : spec.dx_divisors) {
        if (divisor < 1) {
            throw std::invalid_argument("convergence_tableau: dx divisors must be >= 1");
        }
    }
    ConvergenceTableau t;
    t.dt_factors = spec.dt_factors;
    t.dx_divisors = spec.dx_divisors;
    t.base_dt = spec.final_time / static_cast<double>(spec.base_steps);
    t.base_dx = spec.half_width * 2.0 / static_cast<double>(spec.base_intervals);
    t.cells.assign(spec.dt_factors.size(),
                   std::vector<std::optional<double>>(spec.dx_divisors.size()));

    struct Task {
        std::size_t i, j;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < spec.dt_factors.size(); ++i) {
        for (std::size_t j = 0; j < spec.dx_divisors.size(); ++j) {
            tasks.push_back({i, j});
        }
    }
    const int workers = std::min<int>(tableau_worker_count(), static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (const Task& task : tasks) {
            t.cells[task.i][task.j] =
                tableau_cell(spec, spec.dt_factors[task.i], spec.dx_divisors[task.j]);
        }
        return t;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= tasks.size()) return;
                const Task& task = tasks[k];
                t.cells[task.i][task.j] =
                    tableau_cell(spec, spec.dt_factors[task.i], spec.dx_divisors[task.j]);
            }
        });
    }
    for (std::thread& th : pool) th.join();
    return t;
}

namespace {

std::vector<std::vector<std::optional<double>>> orders_along(
    const ConvergenceTableau& t, bool temporal) {
    const std::size_t rows = t.dt_factors.size();
    const std::size_t cols = t.dx_divisors.size();
    std::vector<std::vector<std::optional<double>>> out;
    if (temporal) {
        if (rows < 2) return out;
        out.assign(rows - 1, std::vector<std::optional<double>>(cols));
        for (std::size_t i = 0; i + 1 < rows; ++i) {
            const double step_ratio =
                static_cast<double>(t.dt_factors[i + 1]) / static_cast<double>(t.dt_factors[i]);
            for (std::size_t j = 0; j < cols; ++j) {
                const auto& coarse = t.cells[i + 1][j];
                const auto& fine = t.cells[i][j];
                if (!coarse || !fine || *fine <= 0.0 || *coarse <= 0.0) continue;
                // halved log2 ratio: cells hold the squared norm
                out[i][j] = 0.5 * std::log2(*coarse / *fine) / std::log2(step_ratio);
            }
        }
        return out;
    }
    if (cols < 2) return out;
    out.assign(rows, std::vector<std::optional<double>>(cols - 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            const double step_ratio =
                static_cast<double>(t.dx_divisors[j + 1]) / static_cast<double>(t.dx_divisors[j]);
            const auto& coarse = t.cells[i][j];
            const auto& fine = t.cells[i][j + 1];
            if (!coarse || !fine || *fine <= 0.0 || *coarse <= 0.0) continue;
            out[i][j] = 0.5 * std::log2(*coarse / *fine) / std::log2(step_ratio);
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::optional<double>>> observed_temporal_orders(
    const ConvergenceTableau& t) {
    return orders_along(t, true);
}

std::vector<std::vector<std::optional<double>>> observed_spatial_orders(
    const ConvergenceTableau& t) {
    return orders_along(t, false);
}

namespace {

// Pure stepping, no diagnostics: the timed region of a benchmark run.
double timed_run(const RunSpec& spec) {
    const SpaceGrid grid = build_grid(spec.half_width, spec.intervals);
    const TimeMesh mesh = build_time_mesh(spec.final_time, spec.steps);
    WaveField u = initial_condition(spec, grid, required_tag(spec.scheme.kind));
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= mesh.steps; ++n) {
        StepResult r = advance(u, mesh.dt, grid, spec.model, spec.scheme);
        u = std::move(r.field);
    }
    const auto stop = std::chrono::steady_clock::now();
    if (!all_finite(u)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::vector<BenchRow> benchmark(const BenchSpec& spec) {
    if (spec.horizons.empty() || spec.repeats < 1) {
        throw std::invalid_argument("benchmark: need at least one horizon and one repeat");
    }
    const double t_last = spec.horizons.back();
    std::vector<int> steps_per_horizon;
    for (double t : spec.horizons) {
        const double n = static_cast<double>(spec.steps_at_last_horizon) * t / t_last;
        steps_per_horizon.push_back(std::max(1, static_cast<int>(std::lround(n))));
    }

    // One reference over the longest horizon serves every prefix; all
    // horizons share the same dt.
    FieldSeries reference;
    SpaceGrid grid = build_grid(spec.half_width, spec.intervals);
    if (spec.problem == Problem::TwoSolitons) {
        const TimeMesh full = build_time_mesh(t_last, spec.steps_at_last_horizon);
        reference = build_reference(spec.problem, grid, full, spec.model, 8, 16,
                                    spec.symmetric_two_soliton_widths);
    }

    std::vector<BenchRow> rows;
    for (SchemeKind kind : spec.schemes) {
        BenchRow row;
        row.scheme = kind;
        RunSpec base;
        base.scheme.kind = kind;
        base.model = spec.model;
        base.problem = spec.problem;
        base.half_width = spec.half_width;
        base.intervals = spec.intervals;
        base.symmetric_two_soliton_widths = spec.symmetric_two_soliton_widths;

        for (std::size_t h = 0; h < spec.horizons.size(); ++h) {
            RunSpec rs = base;
            rs.final_time = spec.horizons[h];
            rs.steps = steps_per_horizon[h];
            rs.record_every = 1;
            std::vector<double> times;
            for (int rep = 0; rep < spec.repeats; ++rep) {
                times.push_back(timed_run(rs));
            }
            std::sort(times.begin(), times.end());
            row.seconds.push_back(times[times.size() / 2]);
        }

        // untimed error pass over the longest horizon; running accumulations
        // at each horizon's level give the per-horizon errors
        RunSpec err_spec = base;
        err_spec.final_time = t_last;
        err_spec.steps = spec.steps_at_last_horizon;
        err_spec.record_every = 1;
        if (spec.problem == Problem::SingleSoliton) {
            RunResult r = run_simulation(err_spec);
            for (int n : steps_per_horizon) {
                if (r.aborted && n > r.abort_step) {
                    row.errors.push_back(std::numeric_limits<double>::quiet_NaN());
                } else {
                    row.errors.push_back(r.series[static_cast<std::size_t>(n)].l2err_sq_accum);
                }
            }
        } else {
            try {
                FieldSeries num = run_recording_fields(err_spec);
                FieldSeries ref = reference;
                if (required_tag(kind) == GridTag::InteriorDirichlet) {
                    for (WaveField& f : ref.fields) f = to_interior(f, grid);
                }
                const TimeMesh full = build_time_mesh(t_last, spec.steps_at_last_horizon);
                // prefix sums of the per-level contributions
                std::vector<double> level_sq(num.times.size(), 0.0);
                for (std::size_t k = 1; k < num.times.size(); ++k) {
                    double level = 0.0;
                    for (std::size_t i = 0; i < num.fields[k].values.size(); ++i) {
                        level += std::norm(num.fields[k].values[i] - ref.fields[k].values[i]);
                    }
                    level_sq[k] = level_sq[k - 1] + full.dt * grid.dx * level;
                }
                for (int n : steps_per_horizon) {
                    row.errors.push_back(level_sq[static_cast<std::size_t>(n)]);
                }
            } catch (const std::runtime_error&) {
                row.errors.assign(spec.horizons.size(),
                                  std::numeric_limits<double>::quiet_NaN());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gpe
