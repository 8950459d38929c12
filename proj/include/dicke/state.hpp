// state.hpp — complex amplitude vector on the M=1 basis

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace dicke {

using Complex = std::complex<double>;

// One photon slot plus L spin slots, basis order (photon, spin_1, ..., spin_L).
struct SectorState {
    Complex photon_amp{0.0, 0.0};
    std::vector<Complex> spin_amps;

    std::size_t spins() const { return spin_amps.size(); }

    double norm_sq() const {
        double s = std::norm(photon_amp);
        for (const auto& a : spin_amps) s += std::norm(a);
        return s;
    }

    double norm() const { return std::sqrt(norm_sq()); }

    void scale(double factor) {
        photon_amp *= factor;
        for (auto& a : spin_amps) a *= factor;
    }
};

inline Complex inner(const SectorState& bra, const SectorState& ket) {
    Complex s = std::conj(bra.photon_amp) * ket.photon_amp;
    for (std::size_t j = 0; j < bra.spin_amps.size(); ++j) {
        s += std::conj(bra.spin_amps[j]) * ket.spin_amps[j];
    }
    return s;
}

inline double max_component_diff(const SectorState& a, const SectorState& b) {
    double m = std::abs(a.photon_amp - b.photon_amp);
    for (std::size_t j = 0; j < a.spin_amps.size(); ++j) {
        m = std::max(m, std::abs(a.spin_amps[j] - b.spin_amps[j]));
    }
    return m;
}

} // namespace dicke
