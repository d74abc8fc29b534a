#pragma once

#include <vector>

#include "modwave/expansion.hpp"

namespace modwave {

struct IndexComponents {
    double i1;  // (k c)'' at kappa
    double i2;  // (k c)'(kappa) - 1
    double i3;  // c(kappa) - c(2 kappa)
    double i4;  // model-specific fourth factor
};

enum class Stability { Stable, Unstable, Indeterminate };

struct IndexReport {
    ModelSpec model;
    double kappa;
    double i1, i2, i3, i4;
    double delta;
    Stability classification;
    bool near_resonance = false;
    bool near_T_third = false;
    bool near_factor_zero = false;
};

IndexComponents index_components(const ModelSpec& spec, double kappa);

/// Modulational instability index Delta = i1 i2 i4 / i3 and its sign
/// classification.
IndexReport delta(const ModelSpec& spec, double kappa);

enum class Factor { I1, I2, I3, I4 };

struct FactorRoot {
    double kappa;
    Factor factor;
};

/// Sign-change scan plus bisection for roots of the selected factors,
/// returned in increasing kappa.
std::vector<FactorRoot> critical_wavenumbers(const ModelSpec& spec,
                                             double kappa_min,
                                             double kappa_max,
                                             const std::vector<Factor>& which,
                                             double scan_step = 1e-3);

struct TensionSweep {
    std::vector<std::pair<double, double>> values;  // (T, kappa_c(T)*sqrt(T))
    double extrapolate;
};

/// kappa_c(T)*sqrt(T) along the fourth-factor root branch for a sweep of
/// strong surface tensions.
TensionSweep strong_tension_limit(const ModelSpec& spec,
                                  const std::vector<double>& Ts = {1e2, 1e3,
                                                                   1e4, 1e5});

}  // namespace modwave
