#pragma once

#include <optional>

namespace modwave {

enum class SymbolKind { WaterWave, CamassaHolm };

/// Which phase-speed symbol to evaluate. T is the surface-tension
/// coefficient; it is ignored for the Camassa-Holm symbol.
struct DispersionSpec {
    SymbolKind kind = SymbolKind::WaterWave;
    double T = 0.0;
};

/// Phase speed c(k). WaterWave: sqrt((1+T k^2) tanh(k)/k), CamassaHolm:
/// (12-k^2)/(12+k^2). Even in k; c(0)=1.
double phase_speed(const DispersionSpec& spec, double k);

/// Closed-form derivative of the symbol, order 1 or 2, with a series
/// branch near k=0.
double phase_speed_deriv(const DispersionSpec& spec, double k, int order);

/// Group speed (k c(k))' = c(k) + k c'(k).
double group_speed(const DispersionSpec& spec, double k);

struct SpeedMinimum {
    double k_min;
    double c_min;
};

/// Unique interior minimizer of the water-wave symbol for 0 < T < 1/3,
/// bracketed to absolute tolerance 1e-10 in k.
SpeedMinimum phase_speed_minimum(double T);

/// Smallest integer n >= 2 with |c(kappa) - c(n kappa)| <= tol, or
/// nullopt if the wave number is non-resonant.
std::optional<int> check_resonance(const DispersionSpec& spec, double kappa,
                                   double tol = 1e-8);

}  // namespace modwave
