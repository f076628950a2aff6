#include "gpe/steppers.hpp"

#include <cmath>
#include <stdexcept>

#include "gpe/linops.hpp"
#include "gpe/spectral.hpp"

namespace gpe {

namespace {

constexpr Complex kI(0.0, 1.0);

// Nonlinear weights |u|^(2 sigma); the validated cubic case is sigma = 1.
std::vector<double> nonlinear_weights(const WaveField& f, const ModelParams& p) {
    std::vector<double> w = abs_squared(f);
    if (p.sigma != 1.0) {
        for (double& v : w) v = std::pow(v, p.sigma);
    }
    return w;
}

// System matrix I - i*tau*(Lap - g*diag(w)); with w empty the nonlinear part
// is omitted. Lap is the full 1/dx^2 (1,-2,1) stencil of i u_t = -u_xx + ...
Tridiag shifted_system(const SpaceGrid& grid, Complex minus_i_tau,
                       const std::vector<double>& w, double g) {
    const auto n = static_cast<std::size_t>(grid.intervals) - 1;
    const double off = 1.0 / (grid.dx * grid.dx);
    Tridiag a;
    a.sub.assign(n - 1, minus_i_tau * off);
    a.sup.assign(n - 1, minus_i_tau * off);
    a.diag.assign(n, Complex(1.0, 0.0) + minus_i_tau * (-2.0 * off));
    if (!w.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            a.diag[i] += minus_i_tau * (-g * w[i]);
        }
    }
    return a;
}

// y = (I + i*tau*Lap) x on the interior samples (zero Dirichlet ghosts).
ComplexVec apply_one_plus_i_tau_lap(const ComplexVec& x, double tau, const SpaceGrid& grid) {
    const std::size_t n = x.size();
    const double off = 1.0 / (grid.dx * grid.dx);
    const Complex itau = kI * tau;
    ComplexVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex lap = -2.0 * off * x[i];
        if (i > 0) lap += off * x[i - 1];
        if (i + 1 < n) lap += off * x[i + 1];
        y[i] = x[i] + itau * lap;
    }
    return y;
}

void require_tag(const WaveField& f, GridTag tag, const char* who) {
    if (f.tag != tag) {
        throw std::invalid_argument(std::string(who) + ": field has the wrong grid tag");
    }
}

// Exact flow of i u_t = -u_xx over tau, via the half-dispersion propagator
// over 2*tau (the flows form an exact semigroup, so this is identical to a
// direct exp(-i mu^2 tau) multiplier).
WaveField full_linear_flow(const WaveField& f, double tau, const SpaceGrid& grid) {
    return linear_propagate(f, 2.0 * tau, grid);
}

}  // namespace

GridTag required_tag(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::TSSP:
        case SchemeKind::AB_spec_spec:
        case SchemeKind::AB_FD_spec:
        case SchemeKind::ABA_spec:
        case SchemeKind::BAB_spec:
            return GridTag::Periodic;
        default:
            return GridTag::InteriorDirichlet;
    }
}

WaveField step_implicit_euler(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_implicit_euler");
    const Tridiag a = shifted_system(grid, -kI * dt, nonlinear_weights(f, p), p.g);
    WaveField out = f;
    out.values = thomas_solve(a, f.values);
    return out;
}

WaveField step_crank_nicolson(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_crank_nicolson");
    const std::vector<double> w = nonlinear_weights(f, p);
    const Tridiag left = shifted_system(grid, -kI * (dt / 2.0), w, p.g);
    const Tridiag right = shifted_system(grid, kI * (dt / 2.0), w, p.g);
    WaveField out = f;
    out.values = thomas_solve(left, apply(right, f.values));
    return out;
}

StepResult step_conservative_cn(const WaveField& f, double dt, const SpaceGrid& grid,
                                const ModelParams& p, const SchemeConfig& cfg) {
    require_tag(f, GridTag::InteriorDirichlet, "step_conservative_cn");
    const std::size_t n = f.values.size();
    const std::vector<double> w_old = nonlinear_weights(f, p);
    const Tridiag left = shifted_system(grid, -kI * (dt / 2.0), {}, 0.0);
    // frozen linear part of the right-hand side: (I + i dt/2 Lap) U
    const ComplexVec rhs_lin = apply_one_plus_i_tau_lap(f.values, dt / 2.0, grid);

    WaveField iterate = f;
    int iters = 0;
    bool converged = false;
    ComplexVec rhs(n);
    while (iters < cfg.picard_max) {
        ++iters;
        const std::vector<double> w_it = nonlinear_weights(iterate, p);
        for (std::size_t i = 0; i < n; ++i) {
            const double avg_w = 0.5 * (w_it[i] + w_old[i]);
            const Complex avg_u = 0.5 * (iterate.values[i] + f.values[i]);
            rhs[i] = rhs_lin[i] - kI * p.g * dt * avg_w * avg_u;
        }
        WaveField next = f;
        next.values = thomas_solve(left, rhs);
        const double inc = discrete_l2_dist(next, iterate, grid.dx);
        iterate = std::move(next);
        if (inc <= cfg.picard_tol) {
            converged = true;
            break;
        }
    }
    return StepResult{std::move(iterate), iters, converged};
}

WaveField step_ab_fd_implicit(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_ab_fd_implicit");
    const std::vector<double> w = nonlinear_weights(f, p);
    const Tridiag left = shifted_system(grid, -kI * dt, {}, 0.0);
    ComplexVec rhs(f.values.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        rhs[i] = (Complex(1.0, 0.0) - kI * p.g * dt * w[i]) * f.values[i];
    }
    WaveField out = f;
    out.values = thomas_solve(left, rhs);
    return out;
}

WaveField step_ab_fd_explicit(const WaveField& f, double dt, const SpaceGrid& grid,
                              const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_ab_fd_explicit");
    const std::vector<double> w = nonlinear_weights(f, p);
    ComplexVec y = apply_one_plus_i_tau_lap(f.values, dt, grid);
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] -= kI * p.g * dt * w[i] * f.values[i];
    }
    WaveField out = f;
    out.values = std::move(y);
    return out;
}

WaveField step_tssp(const WaveField& f, double dt, const SpaceGrid& grid,
                    const ModelParams& p) {
    require_tag(f, GridTag::Periodic, "step_tssp");
    WaveField u = nonlinear_phase(f, p.g, dt / 2.0);
    u = full_linear_flow(u, dt, grid);
    return nonlinear_phase(u, p.g, dt / 2.0);
}

WaveField step_ab_spec_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                            const ModelParams& p) {
    require_tag(f, GridTag::Periodic, "step_ab_spec_spec");
    return full_linear_flow(nonlinear_phase(f, p.g, dt), dt, grid);
}

WaveField step_ab_spec_fd(const WaveField& f, double dt, const SpaceGrid& grid,
                          const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_ab_spec_fd");
    const WaveField u = nonlinear_phase(f, p.g, dt);
    WaveField out = f;
    out.values = apply_one_plus_i_tau_lap(u.values, dt, grid);
    return out;
}

WaveField step_ab_fd_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                          const ModelParams& p) {
    require_tag(f, GridTag::Periodic, "step_ab_fd_spec");
    const std::vector<double> w = nonlinear_weights(f, p);
    WaveField u = f;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        u.values[i] = (Complex(1.0, 0.0) - kI * p.g * dt * w[i]) * f.values[i];
    }
    return full_linear_flow(u, dt, grid);
}

WaveField step_ab_fd_fd(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_ab_fd_fd");
    const std::vector<double> w = nonlinear_weights(f, p);
    ComplexVec u(f.values.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = (Complex(1.0, 0.0) - kI * p.g * dt * w[i]) * f.values[i];
    }
    WaveField out = f;
    out.values = apply_one_plus_i_tau_lap(u, dt, grid);
    return out;
}

WaveField step_aba_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& p) {
    require_tag(f, GridTag::Periodic, "step_aba_spec");
    WaveField u = full_linear_flow(f, dt / 2.0, grid);
    u = nonlinear_phase(u, p.g, dt);
    return full_linear_flow(u, dt / 2.0, grid);
}

WaveField step_bab_spec(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& p) {
    require_tag(f, GridTag::Periodic, "step_bab_spec");
    return step_tssp(f, dt, grid, p);
}

WaveField step_aba_cn(const WaveField& f, double dt, const SpaceGrid& grid,
                      const ModelParams& p) {
    require_tag(f, GridTag::InteriorDirichlet, "step_aba_cn");
    const std::vector<double> w = nonlinear_weights(f, p);
    const Tridiag left = shifted_system(grid, -kI * (dt / 2.0), {}, 0.0);
    WaveField u = f;
    u.values = thomas_solve(left, f.values);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        u.values[i] *= std::polar(1.0, -p.g * w[i] * dt);
    }
    u.values = apply_one_plus_i_tau_lap(u.values, dt / 2.0, grid);
    return u;
}

StepResult step_aba_icn(const WaveField& f, double dt, const SpaceGrid& grid,
                        const ModelParams& p, const SchemeConfig& cfg) {
    require_tag(f, GridTag::InteriorDirichlet, "step_aba_icn");
    const std::vector<double> w_old = nonlinear_weights(f, p);
    const Tridiag left = shifted_system(grid, -kI * (dt / 2.0), {}, 0.0);
    const ComplexVec half_in = thomas_solve(left, f.values);  // same for every sweep

    WaveField iterate = f;  // U_0 = U
    int iters = 0;
    bool converged = false;
    while (iters < cfg.picard_max) {
        ++iters;
        const std::vector<double> w_it = nonlinear_weights(iterate, p);
        ComplexVec u(half_in.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double avg_w = 0.5 * (w_old[i] + w_it[i]);
            u[i] = half_in[i] * std::polar(1.0, -p.g * avg_w * dt);
        }
        WaveField next = f;
        next.values = apply_one_plus_i_tau_lap(u, dt / 2.0, grid);
        const double inc = discrete_l2_dist(next, iterate, grid.dx);
        iterate = std::move(next);
        if (inc <= cfg.picard_tol) {
            converged = true;
            break;
        }
    }
    return StepResult{std::move(iterate), iters, converged};
}

StepResult step_half_ab_ba_iter(const WaveField& f, double dt, const SpaceGrid& grid,
                                const ModelParams& p, const SchemeConfig& cfg) {
    require_tag(f, GridTag::InteriorDirichlet, "step_half_ab_ba_iter");
    const std::size_t n = f.values.size();
    const std::vector<double> w_old = nonlinear_weights(f, p);
    const Tridiag left = shifted_system(grid, -kI * (dt / 2.0), {}, 0.0);

    WaveField iterate = f;  // U_0 = U
    int iters = 0;
    bool converged = false;
    ComplexVec rhs(n);
    while (iters < cfg.picard_max) {
        ++iters;
        const std::vector<double> w_it = nonlinear_weights(iterate, p);
        // half AB: (I - i dt/2 Lap) U~ = U - i g dt/2 (w_it + w_old) U_{k-1} / 2
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] = f.values[i] -
                     kI * p.g * (dt / 2.0) * 0.5 * (w_it[i] + w_old[i]) * iterate.values[i];
        }
        ComplexVec tilde = thomas_solve(left, rhs);
        // half BA from the hand-off state U^ = U~, fully explicit
        ComplexVec hat = apply_one_plus_i_tau_lap(tilde, dt / 2.0, grid);
        for (std::size_t i = 0; i < n; ++i) {
            const double w_hat = std::norm(tilde[i]);
            hat[i] -= kI * p.g * (dt / 2.0) * 0.5 * (w_it[i] + w_hat) * tilde[i];
        }
        WaveField next = f;
        next.values = std::move(hat);
        const double inc = discrete_l2_dist(next, iterate, grid.dx);
        iterate = std::move(next);
        if (inc <= cfg.picard_tol) {
            converged = true;
            break;
        }
    }
    return StepResult{std::move(iterate), iters, converged};
}

StepResult advance(const WaveField& f, double dt, const SpaceGrid& grid,
                   const ModelParams& p, const SchemeConfig& cfg) {
    switch (cfg.kind) {
        case SchemeKind::ImplicitEuler:
            return StepResult{step_implicit_euler(f, dt, grid, p)};
        case SchemeKind::CrankNicolson:
            return StepResult{step_crank_nicolson(f, dt, grid, p)};
        case SchemeKind::ConservativeCN:
            return step_conservative_cn(f, dt, grid, p, cfg);
        case SchemeKind::AB_FD_implicit:
            return StepResult{step_ab_fd_implicit(f, dt, grid, p)};
        case SchemeKind::AB_FD_explicit:
            return StepResult{step_ab_fd_explicit(f, dt, grid, p)};
        case SchemeKind::TSSP:
            return StepResult{step_tssp(f, dt, grid, p)};
        case SchemeKind::AB_spec_spec:
            return StepResult{step_ab_spec_spec(f, dt, grid, p)};
        case SchemeKind::AB_spec_FD:
            return StepResult{step_ab_spec_fd(f, dt, grid, p)};
        case SchemeKind::AB_FD_spec:
            return StepResult{step_ab_fd_spec(f, dt, grid, p)};
        case SchemeKind::AB_FD_FD:
            return StepResult{step_ab_fd_fd(f, dt, grid, p)};
        case SchemeKind::ABA_spec:
            return StepResult{step_aba_spec(f, dt, grid, p)};
        case SchemeKind::BAB_spec:
            return StepResult{step_bab_spec(f, dt, grid, p)};
        case SchemeKind::ABA_CN:
            return StepResult{step_aba_cn(f, dt, grid, p)};
        case SchemeKind::ABA_iCN:
            return step_aba_icn(f, dt, grid, p, cfg);
    }
    throw std::logic_error("advance: unhandled scheme kind");
}

}  // namespace gpe
