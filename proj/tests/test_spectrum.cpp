#include <doctest.h>

#include <cmath>
#include <complex>

#include "modwave/errors.hpp"
#include "modwave/indices.hpp"
#include "modwave/spectrum.hpp"

using namespace modwave;
using std::complex;

TEST_CASE("omega vanishes at integers 0, 1, -1 and is odd around them") {
    const double kappa = 1.3, T = 0.2;
    CHECK(omega(kappa, T, 0.0) == 0.0);
    CHECK(std::abs(omega(kappa, T, 1.0)) <= 1e-15);
    CHECK(std::abs(omega(kappa, T, -1.0)) <= 1e-15);
    CHECK(omega(kappa, T, 0.3) == doctest::Approx(-omega(kappa, T, -0.3)));
}

TEST_CASE("reduced matrices at a=0 are diagonal plus the xi^2 rotation") {
    const auto rm = reduced_matrices(1.2, 0.1, 0.05, 0.0);
    CHECK(rm.I.isIdentity(0.0));
    CHECK(std::abs(rm.L(0, 2)) == 0.0);
    CHECK(std::abs(rm.L(2, 0)) == 0.0);
    CHECK(std::abs(rm.L(2, 1)) == 0.0);
    CHECK(rm.L(0, 1).real() == doctest::Approx(-rm.L(1, 0).real()));
    // Diagonal entries are purely imaginary.
    for (int i = 0; i < 3; ++i) CHECK(rm.L(i, i).real() == 0.0);
}

TEST_CASE("cubic coefficients are real with leading coefficient det(I)") {
    CHECK(cubic_coefficients(reduced_matrices(2.0, 0.0, 0.02, 0.0)).q3 ==
          doctest::Approx(1.0).epsilon(1e-13));
    const auto rm = reduced_matrices(2.0, 0.0, 0.02, 1e-3);
    const auto q = cubic_coefficients(rm);
    CHECK(q.q3 ==
          doctest::Approx(rm.I.determinant().real()).epsilon(1e-12));
    CHECK(std::isfinite(q.q0));
    CHECK(std::isfinite(q.q1));
    CHECK(std::isfinite(q.q2));
    CHECK_THROWS_AS(
        cubic_coefficients(reduced_matrices(2.0, 0.0, 0.0, 1e-3)),
        std::domain_error);
}

TEST_CASE("cubic coefficients reproduce the eigenvalues of the pencil") {
    const auto rm = reduced_matrices(1.7, 0.5, 0.03, 2e-3);
    const auto q = cubic_coefficients(rm);
    const double xi = rm.xi;
    // Roots of det(lambda I - L) are the pencil eigenvalues.
    const Eigen::Matrix3cd B = rm.I.partialPivLu().solve(rm.L);
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(B);
    REQUIRE(es.info() == Eigen::Success);
    for (int i = 0; i < 3; ++i) {
        const complex<double> l = es.eigenvalues()[i];
        const complex<double> val =
            q.q3 * l * l * l + complex<double>(0, q.q2 * xi) * l * l +
            q.q1 * xi * xi * l + complex<double>(0, q.q0 * xi * xi * xi);
        CHECK(std::abs(val) <= 1e-12);
    }
}

TEST_CASE("discriminant closed form at zero amplitude") {
    // Delta0(xi;0) = kappa^2 i1^2 (xi i2^2 - xi^3 kappa^2 i1^2 / 4)^2.
    for (double k : {0.8, 1.3, 2.2})
        for (double T : {0.0, 0.2, 0.6})
            for (double xi : {5e-3, 2e-2, 5e-2}) {
                const auto ic =
                    index_components({Model::FdchSurface, T}, k);
                const double inner =
                    xi * ic.i2 * ic.i2 -
                    0.25 * xi * xi * xi * k * k * ic.i1 * ic.i1;
                const double closed = k * k * ic.i1 * ic.i1 * inner * inner;
                CHECK(delta0(k, T, xi, 0.0) ==
                      doctest::Approx(closed).epsilon(1e-9));
            }
}

TEST_CASE("discriminant closed form degenerates to xi^2 kappa^2 i1^2 i2^4") {
    // To leading order in xi the two inner-sign conventions coincide.
    const double k = 1.3, T = 0.2, xi = 1e-4;
    const auto ic = index_components({Model::FdchSurface, T}, k);
    const double lead =
        k * k * ic.i1 * ic.i1 * xi * xi * std::pow(ic.i2, 4);
    CHECK(delta0(k, T, xi, 0.0) == doctest::Approx(lead).epsilon(1e-4));
}

TEST_CASE("zero-amplitude discriminant is a nonnegative perfect square") {
    for (double k : {0.8, 1.42, 2.0})
        for (double xi : {1e-3, 1e-2, 5e-2})
            CHECK(delta0(k, 0.0, xi, 0.0) >= 0.0);
    // The inner factor vanishes at xi* = 2|i2|/(kappa|i1|).
    const double k = 1.3, T = 0.2;
    const auto ic = index_components({Model::FdchSurface, T}, k);
    const double xi_star = 2.0 * std::abs(ic.i2) / (k * std::abs(ic.i1));
    const double at_star = delta0(k, T, xi_star, 0.0);
    const double nearby = delta0(k, T, 0.5 * xi_star, 0.0);
    CHECK(std::abs(at_star) <= 1e-8 * std::abs(nearby));
}

TEST_CASE("Hill matrix at rest is diagonal with entries i omega(n+xi)") {
    WaveProfile p;
    p.kappa = 1.4;
    p.T = 0.2;
    p.a = 0.0;
    p.b = 0.0;
    p.N = 4;
    p.coeffs = Eigen::VectorXd::Zero(5);
    p.c = phase_speed({SymbolKind::WaterWave, 0.2}, 1.4);
    const int M = 6;
    const double xi = 0.22;
    const Eigen::MatrixXcd A = hill_matrix(p, xi, M);
    for (int n = -M; n <= M; ++n)
        for (int m = -M; m <= M; ++m) {
            const complex<double> want =
                n == m ? complex<double>(0.0, omega(p.kappa, p.T, n + xi))
                       : complex<double>(0.0, 0.0);
            CHECK(std::abs(A(n + M, m + M) - want) <= 1e-12);
        }
}

TEST_CASE("Hill spectrum is stable under truncation refinement") {
    const WaveProfile p =
        solve_wave({Model::FdchSurface, 0.0}, 2.0, 3e-3, 0.0, 32);
    const double r1 = hill_spectrum(p, 0.01, 48).max_real;
    const double r2 = hill_spectrum(p, 0.01, 96).max_real;
    CHECK(r1 > 1e-6);  // genuinely unstable wave
    CHECK(std::abs(r1 - r2) <= 1e-9);
}

TEST_CASE("Hill eigenvalues pair up under xi -> -xi conjugation") {
    const WaveProfile p =
        solve_wave({Model::FdchSurface, 0.0}, 2.0, 1e-2, 0.0, 32);
    const int M = 32;
    const auto plus = hill_spectrum(p, 0.07, M);
    const auto minus = hill_spectrum(p, -0.07, M);
    for (int i = 0; i < plus.eigenvalues.size(); ++i) {
        const complex<double> target = std::conj(plus.eigenvalues[i]);
        double gap = 1e300;
        for (int j = 0; j < minus.eigenvalues.size(); ++j)
            gap = std::min(gap, std::abs(minus.eigenvalues[j] - target));
        CHECK(gap <= 1e-8);
    }
}

TEST_CASE("Hill growth agrees in sign with the index") {
    const int M = 96;
    {
        const WaveProfile p =
            solve_wave({Model::FdchSurface, 0.0}, 2.0, 1e-2, 0.0, 64);
        CHECK(hill_spectrum(p, 0.01, M).max_real > 1e-8);
    }
    {
        const WaveProfile p =
            solve_wave({Model::FdchSurface, 0.0}, 1.0, 1e-2, 0.0, 64);
        CHECK(hill_spectrum(p, 0.01, M).max_real <= 1e-8);
    }
    {
        // kappa_c(0.4) = 1.44: kappa=2 stays unstable with capillarity,
        // kappa=1 is stable.
        const WaveProfile p2 =
            solve_wave({Model::FdchSurface, 0.4}, 2.0, 1e-2, 0.0, 64);
        CHECK(hill_spectrum(p2, 0.01, M).max_real > 1e-8);
        const WaveProfile p1 =
            solve_wave({Model::FdchSurface, 0.4}, 1.0, 1e-2, 0.0, 64);
        CHECK(hill_spectrum(p1, 0.01, M).max_real <= 1e-8);
    }
}

TEST_CASE("max_growth_rate scans the Floquet grid") {
    const WaveProfile p =
        solve_wave({Model::FdchSurface, 0.0}, 2.0, 1e-2, 0.0, 32);
    const auto [xi_star, rate] =
        max_growth_rate(p, {0.005, 0.01, 0.02}, 48);
    CHECK(rate >= hill_spectrum(p, 0.01, 48).max_real - 1e-15);
    CHECK((xi_star == 0.005 || xi_star == 0.01 || xi_star == 0.02));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(reduced_matrices(1.0, 1.0 / 3.0, 0.01, 0.0),
                    UnsupportedParameterError);
    WaveProfile p;
    p.N = 2;
    p.coeffs = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(hill_matrix(p, 0.1, 0), std::invalid_argument);
}
