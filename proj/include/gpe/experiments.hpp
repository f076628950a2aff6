#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpe/diagnostics.hpp"
#include "gpe/field.hpp"
#include "gpe/grid.hpp"
#include "gpe/steppers.hpp"

namespace gpe {

enum class Problem { SingleSoliton, TwoSolitons };

/// Full description of one simulation run.
struct RunSpec {
    SchemeConfig scheme;
    ModelParams model;
    Problem problem = Problem::SingleSoliton;
    double half_width = 40.0;  // L
    int intervals = 512;       // M
    double final_time = 10.0;  // T
    int steps = 2000;          // N
    int record_every = 1;      // must divide N
    bool symmetric_two_soliton_widths = false;
};

struct RunResult {
    WaveField final_field;
    std::vector<DiagnosticsRecord> series;  // one record per recorded level
    bool aborted = false;                   // instability (non-finite state)
    int abort_step = -1;                    // first bad step when aborted
    long total_picard_iterations = 0;
};

/// Advances N steps with the chosen scheme, recording diagnostics every
/// record_every steps (plus t = 0). For the single-soliton problem,
/// l2err_sq_accum carries the running squared space-time error against the
/// exact solution, accumulated at every step. Deterministic for a fixed spec.
RunResult run_simulation(const RunSpec& spec);

/// Like run_simulation but records the wave field itself at every recorded
/// level (t = 0 included). Throws on instability when abort_ok is false.
FieldSeries run_recording_fields(const RunSpec& spec);

/// Fine-grid reference: ABA spectral splitting at space_refine x spatial and
/// time_refine x temporal resolution, subsampled back onto the coarse grid
/// and the coarse recording levels. Throws std::length_error when the fine
/// problem would exceed the memory guard.
FieldSeries build_reference(Problem problem, const SpaceGrid& grid, const TimeMesh& mesh,
                            const ModelParams& model, int space_refine = 8,
                            int time_refine = 16, bool symmetric_widths = false);

/// Convergence tableau: rows coarsen time (dt = factor * base_dt), columns
/// refine space (dx = base_dx / divisor). Cells hold the squared space-time
/// error against the exact solution (single soliton) or the fine ABA
/// reference (two solitons). A cell that goes unstable is left empty.
struct ConvergenceTableau {
    std::vector<int> dt_factors;
    std::vector<int> dx_divisors;
    double base_dt = 0.0;
    double base_dx = 0.0;
    std::vector<std::vector<std::optional<double>>> cells;  // [dt][dx]
};

struct TableauSpec {
    SchemeConfig scheme;
    ModelParams model;
    Problem problem = Problem::SingleSoliton;
    double half_width = 40.0;
    double final_time = 1.0;
    int base_intervals = 256;        // M at divisor 1
    int base_steps = 256;            // N at factor 1
    std::vector<int> dt_factors = {4, 8, 16};
    std::vector<int> dx_divisors = {4, 8, 16};
    bool symmetric_two_soliton_widths = false;
};

/// Fills the tableau; cells run on a worker pool capped by GPE_THREADS.
/// Results are independent of the execution order.
ConvergenceTableau convergence_tableau(const TableauSpec& spec);

/// Observed orders from log2 ratios of adjacent cells, halved to undo the
/// squared norm: order_t[i][j] compares dt_factors[i] and [i+1] in column j;
/// order_x[i][j] compares dx_divisors[j] and [j+1] in row i. Empty cells
/// yield empty orders.
std::vector<std::vector<std::optional<double>>> observed_temporal_orders(const ConvergenceTableau& t);
std::vector<std::vector<std::optional<double>>> observed_spatial_orders(const ConvergenceTableau& t);

/// Wall-clock benchmark rows: median-of-repeats seconds per horizon, paired
/// with the final squared space-time error of the same configuration. Timed
/// runs are strictly serial and single-threaded.
struct BenchRow {
    SchemeKind scheme;
    std::vector<double> seconds;   // one per horizon
    std::vector<double> errors;    // squared space-time error per horizon
};

struct BenchSpec {
    std::vector<SchemeKind> schemes;
    ModelParams model;
    Problem problem = Problem::SingleSoliton;
    double half_width = 40.0;
    int intervals = 512;
    std::vector<double> horizons = {2.5, 5.0, 7.5, 10.0};
    int steps_at_last_horizon = 2000;  // dt is held fixed across horizons
    int repeats = 3;
    bool symmetric_two_soliton_widths = false;
};

std::vector<BenchRow> benchmark(const BenchSpec& spec);

/// Worker-pool width: GPE_THREADS when set (clamped to >= 1), else the
/// hardware concurrency.
int tableau_worker_count();

}  // namespace gpe
