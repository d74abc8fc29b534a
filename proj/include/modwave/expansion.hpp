#pragma once

#include <array>
#include <optional>

#include "modwave/dispersion.hpp"

namespace modwave {

enum class Model { FdchSurface, FdchVelocity, CamassaHolm };

struct ModelSpec {
    Model model = Model::FdchSurface;
    double T = 0.0;  // ignored for CamassaHolm
};

/// Phase-speed symbol used by a model: the water-wave symbol for both
/// FDCH forms, the rational symbol for Camassa-Holm.
DispersionSpec dispersion_of(const ModelSpec& spec);

/// Small-amplitude expansion coefficients. p1 is only derived for the
/// FDCH surface equation; empty otherwise.
struct ExpansionCoefficients {
    double h0;
    double h2;
    double c2;
    std::optional<double> p1;
    double eta0_slope;  // d eta_0 / d b at b=0
    double c0_slope;    // d c_0 / d b at b=0
};

ExpansionCoefficients fdch_expansion_coeffs(double kappa, double T);
ExpansionCoefficients ch_expansion_coeffs(double kappa);

/// Second-order wave: cosine coefficients of modes 0..2 and the speed.
struct WaveExpansion {
    std::array<double, 3> modes;
    double speed;
};

WaveExpansion wave_expansion(const ModelSpec& spec, double kappa, double a,
                             double b);

}  // namespace modwave
