#include "modwave/spectrum.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "modwave/errors.hpp"

namespace modwave {

using namespace std::complex_literals;

double omega(double kappa, double T, double mu) {
    const DispersionSpec ww{SymbolKind::WaterWave, T};
    return mu * (phase_speed(ww, kappa) - phase_speed(ww, kappa * mu));
}

ReducedMatrices reduced_matrices(double kappa, double T, double xi, double a) {
    if (std::abs(T - 1.0 / 3.0) < 1e-6)
        throw UnsupportedParameterError("reduced_matrices: T=1/3 excluded");
    const ExpansionCoefficients e = fdch_expansion_coeffs(kappa, T);
    const double p1 = *e.p1;
    const DispersionSpec ww{SymbolKind::WaterWave, T};
    const double c = phase_speed(ww, kappa);
    const double cp = phase_speed_deriv(ww, kappa, 1);
    const double cpp = phase_speed_deriv(ww, kappa, 2);
    const double k2 = kappa * kappa;

    ReducedMatrices rm;
    rm.xi = xi;
    rm.a = a;
    rm.kappa = kappa;
    rm.T = T;
    rm.L.setZero();
    rm.L(2, 1) += a * (0.75 - 5.0 * k2 / 24.0);
    rm.L(0, 0) += 1i * xi * (-kappa * cp);
    rm.L(1, 1) += 1i * xi * (-kappa * cp);
    rm.L(2, 2) += 1i * xi * (c - 1.0);
    rm.L(0, 2) += 1i * xi * a *
                  (-0.75 + 7.0 * k2 / 24.0 + 2.0 * p1 * (c - 1.0));
    rm.L(2, 0) += 1i * xi * a *
                  (-0.75 + 23.0 * k2 / 48.0 + p1 * (c - 1.0));
    const double beta = kappa * cp + 0.5 * k2 * cpp;
    rm.L(0, 1) += xi * xi * beta;
    rm.L(1, 0) -= xi * xi * beta;

    rm.I.setIdentity();
    rm.I(0, 2) += 2.0 * a * p1;
    rm.I(2, 0) += a * p1;
    return rm;
}

CubicCoefficients cubic_coefficients(const ReducedMatrices& rm) {
    if (!(rm.xi > 0.0))
        throw std::domain_error("cubic_coefficients: xi must be positive");
    // det(lambda I - L) is cubic in lambda; recover its coefficients from
    // four exact evaluations. Sampling at lambda = xi mu with mu = O(1)
    // keeps the four recovered coefficients p_j xi^j comparable in size:
    // the pencil eigenvalues are O(xi) near a = 0, so sampling at O(1)
    // points would lose a factor xi^-3 of relative precision in p0.
    const double xi = rm.xi;
    const double pts[4] = {0.0, 1.0, -1.0, 2.0};
    Eigen::Matrix4cd V;
    Eigen::Vector4cd d;
    for (int r = 0; r < 4; ++r) {
        const std::complex<double> mu = pts[r];
        for (int c = 0; c < 4; ++c) V(r, c) = std::pow(mu, c);
        d[r] = (xi * mu * rm.I - rm.L).determinant();
    }
    // coef[j] = p_j xi^j with the pattern p3 l^3 + i p2 l^2 + p1 l + i p0,
    // real p_j; so q_j = coef[j] / xi^3 up to the real/imaginary split.
    const Eigen::Vector4cd coef = V.partialPivLu().solve(d);
    const double xi3 = xi * xi * xi;
    const double p3 = coef[3].real() / xi3;
    const double p2 = coef[2].imag() / xi3;
    const double p1 = coef[1].real() / xi3;
    const double p0 = coef[0].imag() / xi3;
    const double scale = coef.cwiseAbs().maxCoeff();
    const double residue =
        std::max(std::max(std::abs(coef[3].imag()), std::abs(coef[2].real())),
                 std::max(std::abs(coef[1].imag()), std::abs(coef[0].real())));
    if (residue > 1e-10 * (1.0 + scale))
        throw StructureViolationError(
            "cubic_coefficients: imaginary residue exceeds tolerance");
    return {p0, p1, p2, p3};
}

double delta0(double kappa, double T, double xi, double a) {
    const CubicCoefficients q = cubic_coefficients(
        reduced_matrices(kappa, T, xi, a));
    return 18.0 * q.q3 * q.q2 * q.q1 * q.q0 + q.q2 * q.q2 * q.q1 * q.q1 +
           4.0 * q.q2 * q.q2 * q.q2 * q.q0 + 4.0 * q.q3 * q.q1 * q.q1 * q.q1 -
           27.0 * q.q3 * q.q3 * q.q0 * q.q0;
}

namespace {

// Cosine coefficients (lags 0..lag_max) of 3 sqrt(1+eta) on a fine grid.
std::vector<double> sqrt_term_cosine(const WaveProfile& p, int lag_max) {
    const int Ng = 8 * (lag_max + p.N + 2);
    std::vector<double> w(Ng);
    for (int j = 0; j < Ng; ++j) {
        const double z = 2.0 * std::numbers::pi * j / Ng;
        const double eta = evaluate_profile(p, z);
        if (eta <= -1.0)
            throw NonlinearityDomainError("hill_matrix: eta <= -1 on grid");
        w[j] = 3.0 * std::sqrt(1.0 + eta);
    }
    std::vector<double> coef(lag_max + 1, 0.0);
    for (int n = 0; n <= lag_max; ++n) {
        double s = 0.0;
        for (int j = 0; j < Ng; ++j)
            s += w[j] * std::cos(n * 2.0 * std::numbers::pi * j / Ng);
        coef[n] = (n == 0 ? 1.0 : 2.0) * s / Ng;
    }
    return coef;
}

}  // namespace

Eigen::MatrixXcd hill_matrix(const WaveProfile& p, double xi, int M) {
    if (M < 1) throw std::invalid_argument("hill_matrix: M must be positive");
    const DispersionSpec ww{SymbolKind::WaterWave, p.T};
    const int dim = 2 * M + 1;
    const double k2 = p.kappa * p.kappa;

    // Exponential-basis coefficients of eta: hat(0)=coeffs[0],
    // hat(+-n)=coeffs[n]/2.
    auto eta_hat = [&](int j) -> double {
        j = std::abs(j);
        if (j > p.N) return 0.0;
        return j == 0 ? p.coeffs[0] : 0.5 * p.coeffs[j];
    };
    const std::vector<double> wcos = sqrt_term_cosine(p, 2 * M);
    auto w_hat = [&](int j) -> double {
        j = std::abs(j);
        return j == 0 ? wcos[0] : 0.5 * wcos[j];
    };

    Eigen::MatrixXcd A(dim, dim);
    for (int n = -M; n <= M; ++n) {
        for (int m = -M; m <= M; ++m) {
            const int lag = n - m;
            std::complex<double> entry = 0.0;
            if (n == m)
                entry += p.c + 3.0 - phase_speed(ww, p.kappa * (n + xi));
            entry -= w_hat(lag);
            const double eh = eta_hat(lag);
            if (eh != 0.0) {
                entry += (5.0 / 12.0) * k2 *
                         ((m + xi) * (m + xi) + double(lag) * lag) * eh;
                entry += (13.0 / 24.0) * k2 * double(lag) * (m + xi) * eh;
            }
            A(n + M, m + M) = 1i * (n + xi) * entry;
        }
    }
    return A;
}

HillSpectrum hill_spectrum(const WaveProfile& p, double xi, int M) {
    const Eigen::MatrixXcd A = hill_matrix(p, xi, M);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hill_spectrum: eigenvalue solver failed");
    HillSpectrum hs;
    hs.xi = xi;
    hs.M = M;
    hs.eigenvalues = es.eigenvalues();
    hs.max_real = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < hs.eigenvalues.size(); ++i) {
        const std::complex<double> ev = hs.eigenvalues[i];
        if (std::abs(ev) <= 0.5) hs.max_real = std::max(hs.max_real, ev.real());
    }
    if (!std::isfinite(hs.max_real)) hs.max_real = 0.0;
    return hs;
}

std::pair<double, double> max_growth_rate(const WaveProfile& p,
                                          const std::vector<double>& xi_grid,
                                          int M) {
    double best_xi = 0.0;
    double best_rate = 0.0;
    for (double xi : xi_grid) {
        const HillSpectrum hs = hill_spectrum(p, xi, M);
        if (hs.max_real > best_rate) {
            best_rate = hs.max_real;
            best_xi = xi;
        }
    }
    return {best_xi, best_rate};
}

}  // namespace modwave
