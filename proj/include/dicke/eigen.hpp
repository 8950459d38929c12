// eigen.hpp — normalized Bethe eigenstates in the M=1 basis and darkness
// diagnostics.
//
// Amplitudes come straight from the root value: (1, g/(lambda-eps_1), ...,
// g/(lambda-eps_L)) / sqrt(norm). The dense oracle is deliberately not used
// here; it stays an independent cross-check.

#pragma once

#include <cmath>
#include <utility>

#include "dicke/bethe.hpp"
#include "dicke/errors.hpp"
#include "dicke/state.hpp"

namespace dicke::eigen {

using bethe::BetheSpectrum;
using model::ModelParams;

// Residual bound that tracks conditioning: near a pole the smallest
// representable |f| grows with f', so a flat threshold would reject
// perfectly converged roots.
inline double root_check_bound(double lambda, const ModelParams& p) {
    const double floor = 1e-6 / p.g;
    const double cond = bethe::residual_derivative(lambda, p) * 1e-10 * std::abs(lambda);
    return std::max(floor, cond);
}

// Builds the normalized eigenstate for a solved root; returns the state and
// the unnormalized norm <Phi|Phi>. Photon component is real positive, which
// fixes the global phase convention.
inline std::pair<SectorState, double> eigenstate(double lambda, const ModelParams& p) {
    const double res = bethe::residual(lambda, p);
    if (std::abs(res) > root_check_bound(lambda, p)) {
        throw NotARoot("lambda does not satisfy the spectral equation");
    }
    const double nsq = bethe::state_norm_sq(lambda, p);
    const double inv = 1.0 / std::sqrt(nsq);
    SectorState state;
    state.photon_amp = inv;
    state.spin_amps.resize(p.epsilons.size());
    for (std::size_t j = 0; j < p.epsilons.size(); ++j) {
        state.spin_amps[j] = inv * p.g / (lambda - p.epsilons[j]);
    }
    return {std::move(state), nsq};
}

// Photon weight of the normalized eigenstate; << 1 marks a dark state.
inline double darkness(double norm_sq) {
    return 1.0 / norm_sq;
}

} // namespace dicke::eigen
