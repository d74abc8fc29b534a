#include "modwave/dispersion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace modwave {
namespace {

// Series branch for tanh(k)/k and its derivatives, |k| below this.
constexpr double kSeriesCrossover = 1e-2;

// tanh(k)/k = sum a_j k^{2j} through k^10.
constexpr double kA[6] = {1.0,           -1.0 / 3.0,     2.0 / 15.0,
                          -17.0 / 315.0, 62.0 / 2835.0, -1382.0 / 155925.0};

double tanhc(double k) {
    if (std::abs(k) < kSeriesCrossover) {
        const double k2 = k * k;
        double s = 0.0;
        for (int j = 5; j >= 0; --j) s = s * k2 + kA[j];
        return s;
    }
    return std::tanh(k) / k;
}

double tanhc_d1(double k) {
    if (std::abs(k) < kSeriesCrossover) {
        const double k2 = k * k;
        double s = 0.0;
        for (int j = 5; j >= 1; --j) s = s * k2 + 2.0 * j * kA[j];
        return s * k;
    }
    const double t = std::tanh(k);
    const double sech2 = 1.0 - t * t;
    return sech2 / k - t / (k * k);
}

double tanhc_d2(double k) {
    if (std::abs(k) < kSeriesCrossover) {
        const double k2 = k * k;
        double s = 0.0;
        for (int j = 5; j >= 1; --j)
            s = s * k2 + 2.0 * j * (2.0 * j - 1.0) * kA[j];
        return s;
    }
    const double t = std::tanh(k);
    const double sech2 = 1.0 - t * t;
    return -2.0 * sech2 * t / k - 2.0 * sech2 / (k * k) +
           2.0 * t / (k * k * k);
}

void require_finite(double k) {
    if (!std::isfinite(k)) throw std::domain_error("wave number must be finite");
}

}  // namespace

double phase_speed(const DispersionSpec& spec, double k) {
    require_finite(k);
    const double ak = std::abs(k);
    if (spec.kind == SymbolKind::CamassaHolm)
        return (12.0 - ak * ak) / (12.0 + ak * ak);
    return std::sqrt((1.0 + spec.T * ak * ak) * tanhc(ak));
}

double phase_speed_deriv(const DispersionSpec& spec, double k, int order) {
    require_finite(k);
    if (order != 1 && order != 2)
        throw std::invalid_argument("phase_speed_deriv: order must be 1 or 2");
    const double sgn = (k < 0.0 && order == 1) ? -1.0 : 1.0;
    const double ak = std::abs(k);
    if (spec.kind == SymbolKind::CamassaHolm) {
        const double d = 12.0 + ak * ak;
        if (order == 1) return sgn * (-48.0 * ak / (d * d));
        return -48.0 * (12.0 - 3.0 * ak * ak) / (d * d * d);
    }
    const double T = spec.T;
    const double s = tanhc(ak);
    const double s1 = tanhc_d1(ak);
    const double s2 = tanhc_d2(ak);
    const double w = 1.0 + T * ak * ak;
    const double g = w * s;
    const double g1 = 2.0 * T * ak * s + w * s1;
    const double g2 = 2.0 * T * s + 4.0 * T * ak * s1 + w * s2;
    const double c = std::sqrt(g);
    if (order == 1) return sgn * g1 / (2.0 * c);
    return g2 / (2.0 * c) - g1 * g1 / (4.0 * c * c * c);
}

double group_speed(const DispersionSpec& spec, double k) {
    return phase_speed(spec, k) + k * phase_speed_deriv(spec, k, 1);
}

SpeedMinimum phase_speed_minimum(double T) {
    if (!(T > 0.0 && T < 1.0 / 3.0))
        throw std::domain_error(
            "phase_speed_minimum: interior minimum requires 0 < T < 1/3");
    const DispersionSpec spec{SymbolKind::WaterWave, T};
    double lo = 1e-8;
    double hi = 1.0;
    while (phase_speed_deriv(spec, hi, 1) < 0.0) {
        hi *= 2.0;
        if (hi > 1e8)
            throw std::runtime_error("phase_speed_minimum: bracket not found");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (phase_speed_deriv(spec, mid, 1) < 0.0 ? lo : hi) = mid;
    }
    const double k_min = 0.5 * (lo + hi);
    return {k_min, phase_speed(spec, k_min)};
}

std::optional<int> check_resonance(const DispersionSpec& spec, double kappa,
                                   double tol) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::domain_error("check_resonance: kappa must be positive");
    if (spec.kind == SymbolKind::CamassaHolm || spec.T == 0.0)
        return std::nullopt;  // strictly monotone symbol, no crossings
    if (spec.T >= 1.0 / 3.0) return std::nullopt;  // strictly increasing
    const double k_min = phase_speed_minimum(spec.T).k_min;
    const double ck = phase_speed(spec, kappa);
    const double stop =
        std::max(ck, phase_speed(spec, 2.0 * kappa)) + 1.0;
    for (int n = 2; n <= 1000000; ++n) {
        const double cn = phase_speed(spec, n * kappa);
        if (std::abs(ck - cn) <= tol) return n;
        if (n * kappa > k_min && cn > stop) break;
    }
    return std::nullopt;
}

}  // namespace modwave
