#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "modwave/solver.hpp"

namespace modwave {

/// Rest-state eigenvalue frequency: omega(mu) = mu (c(kappa) - c(kappa mu)).
double omega(double kappa, double T, double mu);

/// Reduced 3x3 action and identity-projection matrices on the
/// three-dimensional kernel eigenspace, truncated at first order in the
/// amplitude and second order in the Floquet exponent.
struct ReducedMatrices {
    Eigen::Matrix3cd L;
    Eigen::Matrix3cd I;
    double xi;
    double a;
    double kappa;
    double T;
};

ReducedMatrices reduced_matrices(double kappa, double T, double xi, double a);

/// Real coefficients q_j of the rescaled characteristic cubic,
/// p_j = xi^{3-j} q_j where det(lambda I - L) = p3 l^3 + i p2 l^2 + p1 l + i p0.
struct CubicCoefficients {
    double q0, q1, q2, q3;
};

CubicCoefficients cubic_coefficients(const ReducedMatrices& rm);

/// Discriminant of the rescaled cubic; negative means a complex pair and
/// modulational instability.
double delta0(double kappa, double T, double xi, double a);

/// Floquet-Fourier-Hill truncation of the linearized operator about a
/// solved wave, acting on modes e^{inz}, |n| <= M.
Eigen::MatrixXcd hill_matrix(const WaveProfile& profile, double xi, int M);

struct HillSpectrum {
    double xi;
    int M;
    Eigen::VectorXcd eigenvalues;
    double max_real;  // over eigenvalues within radius 0.5 of the origin
};

HillSpectrum hill_spectrum(const WaveProfile& profile, double xi, int M);

/// Maximize the Hill growth rate over a Floquet grid; returns (xi*, rate).
std::pair<double, double> max_growth_rate(const WaveProfile& profile,
                                          const std::vector<double>& xi_grid,
                                          int M);

}  // namespace modwave
