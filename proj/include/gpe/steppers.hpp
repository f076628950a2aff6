#pragma once

#include "gpe/field.hpp"
#include "gpe/grid.hpp"
#include "gpe/steppers_config.hpp"

namespace gpe {

/// Outcome of one time step. Non-iterative schemes report iterations = 1,
/// converged = true. Iterative schemes report the Picard count and whether
/// the tolerance was met before the cap.
struct StepResult {
    WaveField field;
    int iterations = 1;
    bool converged = true;
};

/// Grid convention a scheme steps on: finite-difference and tridiagonal
/// schemes act on the interior Dirichlet samples, transform-based schemes on
/// the periodic grid.
GridTag required_tag(SchemeKind kind);

/// One step of the selected scheme. All steppers advance the field by dt
/// under i u_t = -u_xx + g |u|^2 u and commute with a global phase factor.
StepResult advance(const WaveField& f, double dt, const SpaceGrid& grid,
                   const ModelParams& params, const SchemeConfig& cfg);

// Individual schemes. All take the pre-step field and return the post-step
// field; iterative variants also return the iteration count.

/// U+ = (I - i dt A(U))^-1 U with A(U) = Lap - g diag(|U|^2), lagged.
WaveField step_implicit_euler(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& params);

/// Cayley form (I - i dt/2 A(U))^-1 (I + i dt/2 A(U)) U, lagged nonlinearity.
WaveField step_crank_nicolson(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& params);

/// Semi-implicit Crank-Nicolson with the mass-conserving nonlinear average
///   (|U+|^2 + |U|^2)/2 * (U+ + U)/2,
/// solved by Picard iteration from U0 = U. One tridiagonal solve per sweep.
StepResult step_conservative_cn(const WaveField& f, double dt, const SpaceGrid& grid,
                                const ModelParams& params, const SchemeConfig& cfg);

/// Lie split, implicit linear substep:
/// (I - i dt Lap)^-1 (I - i g dt diag(|U|^2)) U.
WaveField step_ab_fd_implicit(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& params);

/// Fully explicit Euler step (I + i dt Lap - i g dt diag(|U|^2)) U.
/// Stable only for dt well below dx^2.
WaveField step_ab_fd_explicit(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& params);

/// Strang split, both substeps exact: half nonlinear phase, full spectral
/// linear flow, half nonlinear phase. Preserves discrete mass per step.
WaveField step_tssp(const WaveField& f, double dt, const SpaceGrid& grid,
                    const ModelParams& params);

/// Lie split, both substeps exact: full phase then full spectral flow.
WaveField step_ab_spec_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                            const ModelParams& params);

/// Lie split: exact phase, then explicit finite-difference linear Euler
/// (I + i dt Lap). Shares the explicit stability bound.
WaveField step_ab_spec_fd(const WaveField& f, double dt, const SpaceGrid& grid,
                          const ModelParams& params);

/// Lie split: explicit Euler nonlinear substep (I - i g dt diag(|U|^2)) U,
/// then exact spectral linear flow.
WaveField step_ab_fd_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                          const ModelParams& params);

/// Lie split, both substeps explicit finite-difference Euler.
WaveField step_ab_fd_fd(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& params);

/// Strang split with linear half-flows outside: A(dt/2) B(dt) A(dt/2).
WaveField step_aba_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& params);

/// Strang split with nonlinear half-phases outside; the TSSP composition.
WaveField step_bab_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& params);

/// Tridiagonal ABA sweep: (I - i dt/2 Lap)^-1, exact phase with the lagged
/// diagonal |U|^2 over dt, then explicit (I + i dt/2 Lap).
WaveField step_aba_cn(const WaveField& f, double dt, const SpaceGrid& grid,
                      const ModelParams& params);

/// step_aba_cn iterated: the phase diagonal is averaged between |U|^2 and
/// the previous iterate, (|U|^2 + |U_{k-1}|^2)/2, until the increment falls
/// below picard_tol or k = picard_max.
StepResult step_aba_icn(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& params, const SchemeConfig& cfg);

/// Iterated half-AB / half-BA splitting: per sweep one implicit half step
/// with the frozen nonlinear average, then one explicit half step from the
/// hand-off state, repeated until the iterate increment meets picard_tol or
/// the cap. With g = 0 a single sweep is the Crank-Nicolson Cayley map.
StepResult step_half_ab_ba_iter(const WaveField& f, double dt, const SpaceGrid& grid,
                                const ModelParams& params, const SchemeConfig& cfg);

}  // namespace gpe
