#pragma once

#include <Eigen/Dense>
#include <vector>

#include "modwave/expansion.hpp"

namespace modwave {

/// Even 2*pi-periodic traveling wave as a truncated cosine series.
/// coeffs[n] multiplies cos(n z), n = 0..N; coeffs[1] == a by the
/// amplitude normalization.
struct WaveProfile {
    double kappa = 1.0;
    double T = 0.0;
    double b = 0.0;
    double a = 0.0;
    int N = 64;
    Eigen::VectorXd coeffs;
    double c = 1.0;
    double residual_norm = 0.0;
};

struct SolveOptions {
    int max_newton = 50;
    double tol = 1e-12;
    double step_tol = 1e-14;
    double a_cap = 0.1;
    double b_cap = 0.1;
    int max_continuation = 8;
    std::vector<double>* residual_history = nullptr;  // per-iterate max norm
};

/// Length N+2: projections of the traveling-wave residual onto
/// cos(n z), n = 0..N, then the amplitude row coeffs[1]-a.
Eigen::VectorXd galerkin_residual(const WaveProfile& profile);

/// Analytic Jacobian of galerkin_residual with respect to
/// (coeffs[0..N], c).
Eigen::MatrixXd galerkin_jacobian(const WaveProfile& profile);

/// Newton solve seeded with the second-order expansion; FDCH surface
/// equation only.
WaveProfile solve_wave(const ModelSpec& spec, double kappa, double a, double b,
                       int N, const SolveOptions& opts = {});

double evaluate_profile(const WaveProfile& profile, double z);

}  // namespace modwave
