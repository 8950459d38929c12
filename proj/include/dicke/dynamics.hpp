// dynamics.hpp — initial-state construction, spectral expansion, phase
// evolution, and the observable traces built from them.
//
// Observables are evaluated from spectral coefficients, never by time
// stepping: every sample is exact up to the solved rapidities.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "dicke/bethe.hpp"
#include "dicke/eigen.hpp"
#include "dicke/errors.hpp"
#include "dicke/state.hpp"

namespace dicke::dynamics {

using bethe::BetheSpectrum;
using model::ModelParams;

struct InitialCondition {
    enum class Kind { SingleSpin, SinglePhoton, Bell };

    Kind kind = Kind::SinglePhoton;
    int A = 0;      // 1-based spin index
    int B = 0;      // 1-based spin index, Bell only
    int sign = +1;  // Bell only

    static InitialCondition single_spin(int a) { return {Kind::SingleSpin, a, 0, +1}; }
    static InitialCondition single_photon() { return {Kind::SinglePhoton, 0, 0, +1}; }
    static InitialCondition bell(int a, int b, int sign) { return {Kind::Bell, a, b, sign}; }
};

struct ObservableTrace {
    std::vector<double> times;
    std::vector<Complex> values;
    std::string label;
};

namespace detail {

inline void check_index(int idx, int L, const char* what) {
    if (idx < 1 || idx > L) throw IndexOutOfRange(std::string(what) + " index outside [1, L]");
}

} // namespace detail

inline SectorState make_initial(const InitialCondition& cond, const ModelParams& p) {
    SectorState s;
    s.spin_amps.assign(static_cast<std::size_t>(p.L), Complex{0.0, 0.0});
    switch (cond.kind) {
    case InitialCondition::Kind::SingleSpin:
        detail::check_index(cond.A, p.L, "spin");
        s.spin_amps[static_cast<std::size_t>(cond.A - 1)] = 1.0;
        break;
    case InitialCondition::Kind::SinglePhoton:
        s.photon_amp = 1.0;
        break;
    case InitialCondition::Kind::Bell: {
        detail::check_index(cond.A, p.L, "spin A");
        detail::check_index(cond.B, p.L, "spin B");
        if (cond.A == cond.B) throw IndexOutOfRange("Bell spins must differ");
        const double amp = 1.0 / std::sqrt(2.0);
        s.spin_amps[static_cast<std::size_t>(cond.A - 1)] = amp;
        s.spin_amps[static_cast<std::size_t>(cond.B - 1)] = (cond.sign >= 0 ? amp : -amp);
        break;
    }
    }
    return s;
}

// C_alpha(0) = <phi_alpha | psi(0)> over the normalized eigenbasis.
inline std::vector<Complex> expand(const SectorState& state, const BetheSpectrum& spec,
                                   const ModelParams& p) {
    std::vector<Complex> coeffs(spec.roots.size());
    for (std::size_t a = 0; a < spec.roots.size(); ++a) {
        const double inv = 1.0 / std::sqrt(spec.norm_sq[a]);
        Complex c = inv * state.photon_amp;
        for (std::size_t j = 0; j < state.spin_amps.size(); ++j) {
            c += inv * (p.g / (spec.roots[a] - p.epsilons[j])) * state.spin_amps[j];
        }
        coeffs[a] = c;
    }
    return coeffs;
}

// psi(t) = sum_alpha C_alpha(0) e^{-i lambda_alpha t} phi_alpha
inline SectorState evolve(const std::vector<Complex>& coeffs, const BetheSpectrum& spec,
                          const ModelParams& p, double t) {
    SectorState out;
    out.spin_amps.assign(static_cast<std::size_t>(p.L), Complex{0.0, 0.0});
    for (std::size_t a = 0; a < spec.roots.size(); ++a) {
        const Complex w = coeffs[a] * std::polar(1.0, -spec.roots[a] * t);
        const double inv = 1.0 / std::sqrt(spec.norm_sq[a]);
        out.photon_amp += w * inv;
        for (std::size_t j = 0; j < out.spin_amps.size(); ++j) {
            out.spin_amps[j] += w * (inv * p.g / (spec.roots[a] - p.epsilons[j]));
        }
    }
    return out;
}

namespace detail {

// Per-root weights w_alpha such that trace(t) = sum_alpha w_alpha e^{-i lambda_alpha t}.
template <typename WeightFn>
ObservableTrace trace_from_weights(const BetheSpectrum& spec, const std::vector<double>& times,
                                   std::string label, WeightFn&& weight) {
    ObservableTrace tr;
    tr.times = times;
    tr.label = std::move(label);
    tr.values.resize(times.size());
    std::vector<Complex> w(spec.roots.size());
    for (std::size_t a = 0; a < spec.roots.size(); ++a) w[a] = weight(a);
    for (std::size_t i = 0; i < times.size(); ++i) {
        Complex v{0.0, 0.0};
        for (std::size_t a = 0; a < spec.roots.size(); ++a) {
            v += w[a] * std::polar(1.0, -spec.roots[a] * times[i]);
        }
        tr.values[i] = v;
    }
    return tr;
}

} // namespace detail

// <psi(0)|psi(t)> = sum_alpha |C_alpha|^2 e^{-i lambda_alpha t}; for Bell
// conditions this is exactly the fidelity amplitude.
inline ObservableTrace survival_amplitude(const InitialCondition& cond, const BetheSpectrum& spec,
                                          const ModelParams& p, const std::vector<double>& times) {
    const auto coeffs = expand(make_initial(cond, p), spec, p);
    return detail::trace_from_weights(spec, times, "survival",
                                      [&](std::size_t a) { return std::norm(coeffs[a]); });
}

// <0,down...| a |psi(t)>
inline ObservableTrace photon_amplitude(const InitialCondition& cond, const BetheSpectrum& spec,
                                        const ModelParams& p, const std::vector<double>& times) {
    const auto coeffs = expand(make_initial(cond, p), spec, p);
    return detail::trace_from_weights(spec, times, "photon", [&](std::size_t a) {
        return coeffs[a] / std::sqrt(spec.norm_sq[a]);
    });
}

// <0,down...| sigma_m |psi(t)>
inline ObservableTrace spin_amplitude(int m, const InitialCondition& cond, const BetheSpectrum& spec,
                                      const ModelParams& p, const std::vector<double>& times) {
    detail::check_index(m, p.L, "spin");
    const auto coeffs = expand(make_initial(cond, p), spec, p);
    const double eps_m = p.epsilons[static_cast<std::size_t>(m - 1)];
    return detail::trace_from_weights(spec, times, "spin:" + std::to_string(m), [&](std::size_t a) {
        return coeffs[a] * (p.g / (spec.roots[a] - eps_m)) / std::sqrt(spec.norm_sq[a]);
    });
}

} // namespace dicke::dynamics
