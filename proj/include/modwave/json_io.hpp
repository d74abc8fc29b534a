#pragma once

#include <json.hpp>

#include "modwave/indices.hpp"
#include "modwave/solver.hpp"
#include "modwave/spectrum.hpp"

namespace modwave {

inline const char* model_name(Model m) {
    switch (m) {
        case Model::FdchSurface: return "fdch-surface";
        case Model::FdchVelocity: return "fdch-velocity";
        case Model::CamassaHolm: return "ch";
    }
    return "?";
}

inline void to_json(nlohmann::json& j, const ExpansionCoefficients& e) {
    j = {{"h0", e.h0},
         {"h2", e.h2},
         {"c2", e.c2},
         {"eta0_slope", e.eta0_slope},
         {"c0_slope", e.c0_slope}};
    if (e.p1)
        j["p1"] = *e.p1;
    else
        j["p1"] = nullptr;
}

inline void to_json(nlohmann::json& j, const WaveProfile& p) {
    j = {{"kappa", p.kappa}, {"T", p.T},
         {"b", p.b},         {"a", p.a},
         {"N", p.N},         {"c", p.c},
         {"residual_norm", p.residual_norm}};
    j["coeffs"] = std::vector<double>(p.coeffs.begin(), p.coeffs.end());
}

inline void to_json(nlohmann::json& j, const IndexReport& r) {
    const char* cls = r.classification == Stability::Stable     ? "stable"
                      : r.classification == Stability::Unstable ? "unstable"
                                                                : "indeterminate";
    std::vector<std::string> flags;
    if (r.near_resonance) flags.push_back("near_resonance");
    if (r.near_T_third) flags.push_back("near_T_third");
    if (r.near_factor_zero) flags.push_back("near_factor_zero");
    j = {{"model", model_name(r.model.model)},
         {"kappa", r.kappa},
         {"T", r.model.T},
         {"i1", r.i1},
         {"i2", r.i2},
         {"i3", r.i3},
         {"i4", r.i4},
         {"delta", r.delta},
         {"classification", cls},
         {"flags", flags}};
}

inline void to_json(nlohmann::json& j, const HillSpectrum& hs) {
    std::vector<std::array<double, 2>> evs;
    for (int i = 0; i < hs.eigenvalues.size(); ++i)
        evs.push_back({hs.eigenvalues[i].real(), hs.eigenvalues[i].imag()});
    j = {{"xi", hs.xi},
         {"M", hs.M},
         {"eigenvalues", evs},
         {"max_real", hs.max_real}};
}

}  // namespace modwave
