#include "modwave/expansion.hpp"

#include <cmath>

#include "modwave/errors.hpp"

namespace modwave {
namespace {

constexpr double kDenomTol = 1e-10;

}  // namespace

DispersionSpec dispersion_of(const ModelSpec& spec) {
    if (spec.model == Model::CamassaHolm)
        return {SymbolKind::CamassaHolm, 0.0};
    return {SymbolKind::WaterWave, spec.T};
}

ExpansionCoefficients fdch_expansion_coeffs(double kappa, double T) {
    if (!(kappa > 0.0))
        throw std::domain_error("fdch_expansion_coeffs: kappa must be positive");
    const DispersionSpec ww{SymbolKind::WaterWave, T};
    if (check_resonance(ww, kappa))
        throw SingularCoefficientError("c(kappa)-c(n kappa)");
    const double c1 = phase_speed(ww, kappa);
    const double c2k = phase_speed(ww, 2.0 * kappa);
    const double k2 = kappa * kappa;
    if (std::abs(c1 - 1.0) <= kDenomTol)
        throw SingularCoefficientError("c(kappa)-1");
    if (std::abs(c1 - c2k) <= kDenomTol)
        throw SingularCoefficientError("c(kappa)-c(2 kappa)");

    ExpansionCoefficients e;
    e.h0 = (3.0 / 8.0 - 7.0 * k2 / 96.0) / (c1 - 1.0);
    e.h2 = (3.0 / 8.0 - 11.0 * k2 / 32.0) / (c1 - c2k);
    e.c2 = (1.5 - 5.0 * k2 / 12.0) * e.h0 + (0.75 - 0.5 * k2) * e.h2 -
           3.0 / 32.0;
    if (std::abs(18.0 - 5.0 * k2) <= kDenomTol)
        throw SingularCoefficientError("18-5 kappa^2");
    e.p1 = (9.0 / 4.0 -
            (3.0 / 16.0) * (3.0 - 2.0 * k2) * (12.0 - 11.0 * k2) / (c1 - c2k)) /
           (18.0 - 5.0 * k2);
    e.eta0_slope = 1.0 - c1;
    e.c0_slope = (1.5 - 5.0 * k2 / 12.0) * (1.0 - c1);
    return e;
}

ExpansionCoefficients ch_expansion_coeffs(double kappa) {
    if (!(kappa > 0.0))
        throw std::domain_error("ch_expansion_coeffs: kappa must be positive");
    const DispersionSpec ch{SymbolKind::CamassaHolm, 0.0};
    const double c1 = phase_speed(ch, kappa);
    const double c2k = phase_speed(ch, 2.0 * kappa);
    const double k2 = kappa * kappa;
    if (std::abs(c1 - 1.0) <= kDenomTol)
        throw SingularCoefficientError("c_CH(kappa)-1");
    if (std::abs(c1 - c2k) <= kDenomTol)
        throw SingularCoefficientError("c_CH(kappa)-c_CH(2 kappa)");

    ExpansionCoefficients e;
    e.h0 = (36.0 - 7.0 * k2) / (96.0 * (c1 - 1.0));
    e.h2 = (12.0 - 7.0 * k2) * c2k / (32.0 * (c1 - c2k));
    e.c2 = c1 * ((36.0 - 7.0 * k2) / 24.0 * e.h0 +
                 (12.0 - 7.0 * k2) / 16.0 * e.h2 - 3.0 / 32.0);
    e.p1 = std::nullopt;
    e.eta0_slope = 1.0 - c1;
    e.c0_slope = (1.5 - 7.0 * k2 / 24.0) * c1 * (1.0 - c1);
    return e;
}

WaveExpansion wave_expansion(const ModelSpec& spec, double kappa, double a,
                             double b) {
    if (spec.model == Model::FdchVelocity)
        throw UnsupportedModelError(
            "wave_expansion: no expansion coefficients for the velocity model");
    const ExpansionCoefficients e =
        spec.model == Model::CamassaHolm ? ch_expansion_coeffs(kappa)
                                         : fdch_expansion_coeffs(kappa, spec.T);
    const double c_sym = phase_speed(dispersion_of(spec), kappa);
    WaveExpansion w;
    w.modes = {b * e.eta0_slope + a * a * e.h0, a, a * a * e.h2};
    w.speed = c_sym + b * e.c0_slope + a * a * e.c2;
    return w;
}

}  // namespace modwave
