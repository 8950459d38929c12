// model.hpp — model parameters, disorder distributions, and the M=1 basis
// conventions used by every other module.
//
// Basis order throughout the project: (photon, spin_1, ..., spin_L) with
// spin energies strictly ascending. All energies are in units of the cavity
// frequency omega, times in 1/omega.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/rng.hpp"

namespace dicke::model {

struct ModelParams {
    double omega = 1.0;           // cavity frequency
    double g = 0.0;               // spin-photon coupling
    int L = 0;                    // spin count
    std::vector<double> epsilons; // spin excitation energies, strictly ascending
};

enum class DisorderKind { EquallySpaced, UniformRandom, Gaussian };

struct DisorderSpec {
    DisorderKind kind = DisorderKind::EquallySpaced;
    double center = 1.0;
    double width = 0.0;           // Omega; std deviation for Gaussian
    std::uint64_t seed = 0;       // ignored for EquallySpaced
    bool pin_resonant = false;    // force one energy exactly to `center`
};

namespace detail {

inline double distinct_tol(double center) {
    return 1e-12 * std::max(1.0, std::abs(center));
}

inline void require_distinct(const std::vector<double>& eps, double tol) {
    for (std::size_t j = 0; j + 1 < eps.size(); ++j) {
        if (eps[j + 1] - eps[j] <= tol) {
            throw DistinctnessViolation("spin energies coincide within tolerance");
        }
    }
}

} // namespace detail

// Builds the L spin energies for a disorder specification. Deterministic for
// a fixed seed. Random kinds resample (bounded) until strict ascent holds.
inline std::vector<double> build_epsilons(const DisorderSpec& spec, int L) {
    if (L < 1) throw InvalidSpec("L must be >= 1");
    if (spec.width < 0.0) throw InvalidSpec("disorder width must be >= 0");
    const double tol = detail::distinct_tol(spec.center);

    std::vector<double> eps(static_cast<std::size_t>(L));
    if (spec.kind == DisorderKind::EquallySpaced) {
        if (L == 1) {
            eps[0] = spec.center;
        } else {
            const double lo = spec.center - spec.width / 2.0;
            const double d = spec.width / (L - 1);
            for (int j = 0; j < L; ++j) eps[static_cast<std::size_t>(j)] = lo + j * d;
            eps.back() = spec.center + spec.width / 2.0; // endpoints exactly at the cutoffs
            detail::require_distinct(eps, tol);
        }
    } else {
        Rng rng(spec.seed);
        const int max_attempts = 64;
        bool ok = false;
        for (int attempt = 0; attempt < max_attempts && !ok; ++attempt) {
            for (auto& e : eps) {
                e = spec.kind == DisorderKind::UniformRandom
                        ? rng.uniform(spec.center - spec.width / 2.0, spec.center + spec.width / 2.0)
                        : rng.gaussian(spec.center, spec.width);
            }
            std::sort(eps.begin(), eps.end());
            ok = true;
            for (std::size_t j = 0; j + 1 < eps.size(); ++j) {
                if (eps[j + 1] - eps[j] <= tol) { ok = false; break; }
            }
        }
        if (!ok) throw DistinctnessViolation("could not draw distinct energies after bounded resampling");
    }

    if (spec.pin_resonant) {
        auto nearest = std::size_t{0};
        double best = std::abs(eps[0] - spec.center);
        for (std::size_t j = 1; j < eps.size(); ++j) {
            const double dist = std::abs(eps[j] - spec.center);
            if (dist < best) { best = dist; nearest = j; } // ties keep the lower index
        }
        if (best != 0.0) {
            eps[nearest] = spec.center;
            std::sort(eps.begin(), eps.end());
            detail::require_distinct(eps, tol);
        }
    }
    return eps;
}

inline ModelParams make_params(double omega, double g, int L, const DisorderSpec& spec) {
    return ModelParams{omega, g, L, build_epsilons(spec, L)};
}

// Index (1-based) of the spin nearest to `target`; ties keep the lower index.
inline int resonant_index(const ModelParams& p, double target) {
    int best = 1;
    double dist = std::abs(p.epsilons.at(0) - target);
    for (int j = 2; j <= p.L; ++j) {
        const double dj = std::abs(p.epsilons[static_cast<std::size_t>(j - 1)] - target);
        if (dj < dist) { dist = dj; best = j; }
    }
    return best;
}

// Checks all ModelParams invariants; throws on violation. Returns warnings
// (rotating-wave caution) that are not errors.
inline std::vector<std::string> validate(const ModelParams& p) {
    if (p.L < 1) throw InvalidSpec("L must be >= 1");
    if (p.omega <= 0.0) throw InvalidSpec("omega must be > 0");
    if (p.g <= 0.0) throw NonPositiveCoupling("coupling g must be > 0");
    if (static_cast<int>(p.epsilons.size()) != p.L) {
        throw InvalidSpec("epsilons size must equal L");
    }
    for (std::size_t j = 0; j + 1 < p.epsilons.size(); ++j) {
        if (!(p.epsilons[j] < p.epsilons[j + 1])) {
            throw NonAscendingEnergies("spin energies must be strictly ascending");
        }
    }
    std::vector<std::string> warnings;
    double max_detuning = 0.0;
    for (double e : p.epsilons) max_detuning = std::max(max_detuning, std::abs(e - p.omega));
    if (max_detuning > 0.5 * p.omega) {
        warnings.push_back("max |eps_j - omega| exceeds 0.5*omega; rotating-wave approximation questionable");
    }
    return warnings;
}

} // namespace dicke::model
