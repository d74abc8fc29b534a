#include "modwave/indices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "modwave/errors.hpp"

namespace modwave {
namespace {

double factor_value(const IndexComponents& ic, Factor f) {
    switch (f) {
        case Factor::I1: return ic.i1;
        case Factor::I2: return ic.i2;
        case Factor::I3: return ic.i3;
        case Factor::I4: return ic.i4;
    }
    return 0.0;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo) {
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

IndexComponents index_components(const ModelSpec& spec, double kappa) {
    if (!(kappa > 0.0))
        throw std::domain_error("index_components: kappa must be positive");
    if (spec.model != Model::CamassaHolm &&
        std::abs(spec.T - 1.0 / 3.0) < 1e-6)
        throw UnsupportedParameterError(
            "index_components: T=1/3 is excluded for the water-wave symbol");
    const DispersionSpec d = dispersion_of(spec);
    const double c = phase_speed(d, kappa);
    const double cp = phase_speed_deriv(d, kappa, 1);
    const double cpp = phase_speed_deriv(d, kappa, 2);
    IndexComponents ic;
    ic.i1 = 2.0 * cp + kappa * cpp;
    ic.i2 = c + kappa * cp - 1.0;
    ic.i3 = c - phase_speed(d, 2.0 * kappa);
    const double k2 = kappa * kappa;
    const double k4 = k2 * k2;
    switch (spec.model) {
        case Model::FdchSurface:
            // Overall factor 3 restores the stated small-kappa limit
            // i4/kappa^2 -> 9/2; the sign pattern and roots are unchanged.
            ic.i4 = 3.0 * (3.0 * ic.i2 - ic.i2 * ic.i3 + 6.0 * ic.i3 -
                           (k2 / 12.0) * (57.0 * ic.i2 + 34.0 * ic.i3) +
                           (k4 / 108.0) * (198.0 * ic.i2 + 35.0 * ic.i3));
            break;
        case Model::FdchVelocity:
            ic.i4 = ic.i2 + 2.0 * ic.i3 +
                    (k2 / 36.0) * (57.0 * ic.i2 + 34.0 * ic.i3) +
                    (k4 / 324.0) * (198.0 * ic.i2 + 35.0 * ic.i3);
            break;
        case Model::CamassaHolm: {
            const double c2k = phase_speed(d, 2.0 * kappa);
            ic.i4 = 1296.0 * (c2k * ic.i2 + 2.0 * ic.i3) -
                    432.0 * ic.i2 * ic.i3 - 1512.0 * k2 * c2k * ic.i2 +
                    49.0 * k4 * (9.0 * c2k * ic.i2 - 2.0 * ic.i3);
            break;
        }
    }
    return ic;
}

IndexReport delta(const ModelSpec& spec, double kappa) {
    const IndexComponents ic = index_components(spec, kappa);
    IndexReport r;
    r.model = spec;
    r.kappa = kappa;
    r.i1 = ic.i1;
    r.i2 = ic.i2;
    r.i3 = ic.i3;
    r.i4 = ic.i4;
    r.near_T_third = spec.model != Model::CamassaHolm &&
                     std::abs(spec.T - 1.0 / 3.0) < 1e-3;
    r.near_factor_zero = std::abs(ic.i1) < 1e-8 || std::abs(ic.i2) < 1e-8 ||
                         std::abs(ic.i3) < 1e-8 || std::abs(ic.i4) < 1e-8;
    try {
        r.near_resonance =
            check_resonance(dispersion_of(spec), kappa).has_value();
    } catch (const std::domain_error&) {
        r.near_resonance = false;
    }
    if (std::abs(ic.i3) <= 1e-10) {
        r.delta = std::numeric_limits<double>::quiet_NaN();
        r.classification = Stability::Indeterminate;
        r.near_factor_zero = true;
        return r;
    }
    r.delta = ic.i1 * ic.i2 * ic.i4 / ic.i3;
    const double tol_sign = 1e-12 * (1.0 + std::abs(r.delta));
    if (r.delta < -tol_sign)
        r.classification = Stability::Unstable;
    else if (r.delta > tol_sign)
        r.classification = Stability::Stable;
    else
        r.classification = Stability::Indeterminate;
    return r;
}

std::vector<FactorRoot> critical_wavenumbers(const ModelSpec& spec,
                                             double kappa_min,
                                             double kappa_max,
                                             const std::vector<Factor>& which,
                                             double scan_step) {
    if (!(kappa_min > 0.0 && kappa_min < kappa_max && kappa_max <= 1e3))
        throw std::invalid_argument("critical_wavenumbers: bad kappa range");
    std::vector<FactorRoot> roots;
    for (Factor f : which) {
        auto fv = [&](double k) {
            return factor_value(index_components(spec, k), f);
        };
        double k_prev = kappa_min;
        double v_prev = fv(k_prev);
        for (double k = kappa_min + scan_step; k_prev < kappa_max;
             k += scan_step) {
            k = std::min(k, kappa_max);
            const double v = fv(k);
            if (v_prev == 0.0) {
                roots.push_back({k_prev, f});
            } else if ((v_prev < 0.0) != (v < 0.0)) {
                roots.push_back({bisect(fv, k_prev, k, v_prev), f});
            }
            if (k >= kappa_max) break;
            k_prev = k;
            v_prev = v;
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const FactorRoot& x, const FactorRoot& y) {
                  return x.kappa < y.kappa;
              });
    return roots;
}

TensionSweep strong_tension_limit(const ModelSpec& spec,
                                  const std::vector<double>& Ts) {
    if (spec.model == Model::CamassaHolm)
        throw UnsupportedModelError(
            "strong_tension_limit: water-wave models only");
    const Factor f4 = Factor::I4;
    TensionSweep sweep;
    double prev_scaled = -1.0;  // previous kappa_c * sqrt(T)
    for (double T : Ts) {
        ModelSpec s = spec;
        s.T = T;
        // The branch lives near kappa*sqrt(T) = O(1); scan a log grid
        // wide enough to bracket it.
        const double lo = 1e-3 / std::sqrt(T);
        const double hi = 50.0 / std::sqrt(T);
        const int n_scan = 2000;
        auto fv = [&](double k) {
            return factor_value(index_components(s, k), f4);
        };
        std::vector<double> candidates;
        double k_prev = lo;
        double v_prev = fv(k_prev);
        for (int i = 1; i <= n_scan; ++i) {
            const double k = lo * std::pow(hi / lo, double(i) / n_scan);
            const double v = fv(k);
            if ((v_prev < 0.0) != (v < 0.0))
                candidates.push_back(bisect(fv, k_prev, k, v_prev));
            k_prev = k;
            v_prev = v;
        }
        if (candidates.empty())
            throw BranchLostError(sweep.values.empty()
                                      ? T
                                      : sweep.values.back().first);
        double root = candidates.front();
        if (prev_scaled > 0.0) {
            for (double cand : candidates)
                if (std::abs(cand * std::sqrt(T) - prev_scaled) <
                    std::abs(root * std::sqrt(T) - prev_scaled))
                    root = cand;
        }
        prev_scaled = root * std::sqrt(T);
        sweep.values.emplace_back(T, prev_scaled);
    }
    sweep.extrapolate = sweep.values.back().second;
    return sweep;
}

}  // namespace modwave
