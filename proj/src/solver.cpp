#include "modwave/solver.hpp"

#include <cmath>
#include <numbers>

#include "modwave/errors.hpp"

namespace modwave {
namespace {

// Collocation grid and cosine transforms for a profile truncated at N.
// Grid size 4(N+1) oversamples the quadratic and 3/2-power terms well
// past the dealiasing requirement.
struct CosineGrid {
    int N;
    int Ng;
    Eigen::MatrixXd eval;     // Ng x (N+1): cos(n z_j)
    Eigen::MatrixXd eval_d1;  // -n sin(n z_j)
    Eigen::MatrixXd eval_d2;  // -n^2 cos(n z_j)
    Eigen::MatrixXd proj;     // (N+1) x Ng: quadrature for cosine coefficients

    explicit CosineGrid(int N_) : N(N_), Ng(4 * (N_ + 1)) {
        eval.resize(Ng, N + 1);
        eval_d1.resize(Ng, N + 1);
        eval_d2.resize(Ng, N + 1);
        proj.resize(N + 1, Ng);
        for (int j = 0; j < Ng; ++j) {
            const double z = 2.0 * std::numbers::pi * j / Ng;
            for (int n = 0; n <= N; ++n) {
                const double cz = std::cos(n * z);
                const double sz = std::sin(n * z);
                eval(j, n) = cz;
                eval_d1(j, n) = -n * sz;
                eval_d2(j, n) = -double(n) * n * cz;
                proj(n, j) = (n == 0 ? 1.0 : 2.0) * cz / Ng;
            }
        }
    }
};

Eigen::VectorXd multiplier_diag(const WaveProfile& p) {
    const DispersionSpec ww{SymbolKind::WaterWave, p.T};
    Eigen::VectorXd d(p.N + 1);
    for (int n = 0; n <= p.N; ++n) d[n] = phase_speed(ww, n * p.kappa);
    return d;
}

void check_profile(const WaveProfile& p) {
    if (p.coeffs.size() != p.N + 1)
        throw std::invalid_argument("WaveProfile: coeffs size must be N+1");
}

}  // namespace

Eigen::VectorXd galerkin_residual(const WaveProfile& p) {
    check_profile(p);
    const CosineGrid g(p.N);
    const Eigen::VectorXd eta = g.eval * p.coeffs;
    if ((eta.array() <= -1.0).any())
        throw NonlinearityDomainError("galerkin_residual: eta <= -1 on grid");
    const Eigen::VectorXd eta_z = g.eval_d1 * p.coeffs;
    const Eigen::VectorXd eta_zz = g.eval_d2 * p.coeffs;
    const double k2 = p.kappa * p.kappa;

    const Eigen::ArrayXd grid_part =
        2.0 * (1.0 + eta.array()).pow(1.5) - 2.0 +
        (5.0 / 12.0) * k2 * eta.array() * eta_zz.array() +
        (13.0 / 48.0) * k2 * eta_z.array().square();

    Eigen::VectorXd r(p.N + 2);
    r.head(p.N + 1) = g.proj * grid_part.matrix();
    const Eigen::VectorXd mult = multiplier_diag(p);
    for (int n = 0; n <= p.N; ++n)
        r[n] += (mult[n] - p.c - 3.0) * p.coeffs[n];
    r[0] -= (1.0 - p.c) * (1.0 - p.c) * p.b;
    r[p.N + 1] = p.coeffs[1] - p.a;
    return r;
}

Eigen::MatrixXd galerkin_jacobian(const WaveProfile& p) {
    check_profile(p);
    const CosineGrid g(p.N);
    const Eigen::VectorXd eta = g.eval * p.coeffs;
    if ((eta.array() <= -1.0).any())
        throw NonlinearityDomainError("galerkin_jacobian: eta <= -1 on grid");
    const Eigen::VectorXd eta_z = g.eval_d1 * p.coeffs;
    const Eigen::VectorXd eta_zz = g.eval_d2 * p.coeffs;
    const double k2 = p.kappa * p.kappa;

    const Eigen::ArrayXd w = 3.0 * (1.0 + eta.array()).sqrt();

    // Linearization of the grid part in direction cos(m z), all columns
    // at once: each column m of g.eval is cos(m z_j).
    Eigen::MatrixXd cols(g.Ng, p.N + 1);
    for (int m = 0; m <= p.N; ++m) {
        cols.col(m) = (w * g.eval.col(m).array() +
                       (5.0 / 12.0) * k2 *
                           (eta_zz.array() * g.eval.col(m).array() +
                            eta.array() * g.eval_d2.col(m).array()) +
                       (13.0 / 24.0) * k2 * eta_z.array() *
                           g.eval_d1.col(m).array())
                          .matrix();
    }

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(p.N + 2, p.N + 2);
    J.topLeftCorner(p.N + 1, p.N + 1) = g.proj * cols;
    const Eigen::VectorXd mult = multiplier_diag(p);
    for (int n = 0; n <= p.N; ++n)
        J(n, n) += mult[n] - p.c - 3.0;
    // d/dc
    J.col(p.N + 1).head(p.N + 1) = -p.coeffs;
    J(0, p.N + 1) += 2.0 * (1.0 - p.c) * p.b;
    // amplitude row
    J(p.N + 1, 1) = 1.0;
    return J;
}

namespace {

// Newton iteration from the expansion guess; returns false on
// non-convergence within opts.max_newton iterations.
bool newton(WaveProfile& p, const SolveOptions& opts) {
    for (int it = 0; it < opts.max_newton; ++it) {
        Eigen::VectorXd r = galerkin_residual(p);
        const double rnorm = r.cwiseAbs().maxCoeff();
        if (opts.residual_history) opts.residual_history->push_back(rnorm);
        p.residual_norm = rnorm;
        if (rnorm <= opts.tol) return true;
        const Eigen::MatrixXd J = galerkin_jacobian(p);
        const Eigen::VectorXd step = J.partialPivLu().solve(-r);
        // Backtracking keeps the iteration inside the basin of the branch
        // seeded by the expansion; full steps resume near the root.
        double lambda = 1.0;
        bool moved = false;
        for (int cut = 0; cut < 30; ++cut, lambda *= 0.5) {
            WaveProfile trial = p;
            trial.coeffs += lambda * step.head(p.N + 1);
            trial.c += lambda * step[p.N + 1];
            double tnorm;
            try {
                tnorm = galerkin_residual(trial).cwiseAbs().maxCoeff();
            } catch (const NonlinearityDomainError&) {
                continue;
            }
            if (tnorm < rnorm || tnorm <= opts.tol) {
                p = trial;
                moved = true;
                break;
            }
        }
        if (!moved) {
            // Non-monotone fallback: a full step sometimes crosses a
            // residual ridge that backtracking cannot descend.
            WaveProfile trial = p;
            trial.coeffs += step.head(p.N + 1);
            trial.c += step[p.N + 1];
            try {
                galerkin_residual(trial);
            } catch (const NonlinearityDomainError&) {
                break;
            }
            p = trial;
            lambda = 1.0;
        }
        const double scale =
            std::max(1.0, std::max(p.coeffs.cwiseAbs().maxCoeff(),
                                   std::abs(p.c)));
        if (lambda * step.cwiseAbs().maxCoeff() <= opts.step_tol * scale)
            break;
    }
    p.residual_norm = galerkin_residual(p).cwiseAbs().maxCoeff();
    return p.residual_norm <= 1e3 * opts.tol;
}

WaveProfile seed_profile(const ModelSpec& spec, double kappa, double a,
                         double b, int N) {
    const WaveExpansion w = wave_expansion(spec, kappa, a, b);
    WaveProfile p;
    p.kappa = kappa;
    p.T = spec.T;
    p.b = b;
    p.a = a;
    p.N = N;
    p.coeffs = Eigen::VectorXd::Zero(N + 1);
    p.coeffs[0] = w.modes[0];
    p.coeffs[1] = w.modes[1];
    p.coeffs[2] = w.modes[2];
    p.c = w.speed;
    return p;
}

}  // namespace

WaveProfile solve_wave(const ModelSpec& spec, double kappa, double a, double b,
                       int N, const SolveOptions& opts) {
    if (spec.model != Model::FdchSurface)
        throw UnsupportedModelError(
            "solve_wave: only the FDCH surface equation is solved numerically");
    if (N < 16) throw std::invalid_argument("solve_wave: N must be >= 16");
    if (std::abs(a) > opts.a_cap || std::abs(b) > opts.b_cap)
        throw std::invalid_argument("solve_wave: amplitude outside soft cap");
    const DispersionSpec ww{SymbolKind::WaterWave, spec.T};
    if (check_resonance(ww, kappa))
        throw std::domain_error("solve_wave: resonant wave number");

    WaveProfile p = seed_profile(spec, kappa, a, b, N);
    if (newton(p, opts)) return p;

    // Continuation in a: walk up in equal steps, re-seeding mode 1 and
    // re-centering the previous solution.
    for (int steps = 4; steps <= opts.max_continuation; steps *= 2) {
        WaveProfile q = seed_profile(spec, kappa, 0.0, b, N);
        bool ok = true;
        for (int s = 1; s <= steps; ++s) {
            const double as = a * s / steps;
            q.a = as;
            q.coeffs[1] = as;
            if (!newton(q, opts)) {
                ok = false;
                break;
            }
        }
        if (ok) return q;
    }
    throw ConvergenceError(p.residual_norm);
}

double evaluate_profile(const WaveProfile& p, double z) {
    double v = 0.0;
    for (int n = 0; n < p.coeffs.size(); ++n) v += p.coeffs[n] * std::cos(n * z);
    return v;
}

}  // namespace modwave
