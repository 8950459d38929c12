// oracle.hpp — independent verification path: explicit (L+1)x(L+1) matrix
// for the M=1 block, a self-contained cyclic Jacobi eigensolver, and
// eigendecomposition propagation.
//
// The arrow structure is intentionally not exploited; the fast secular-
// equation path already lives in bethe.hpp and the oracle must not share
// algorithms with it.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"
#include "dicke/state.hpp"

namespace dicke::oracle {

using model::ModelParams;

struct HamiltonianBlock {
    int dim = 0;
    std::vector<double> a; // row-major, symmetric

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim; ++i) t += at(i, i);
        return t;
    }

    double frobenius_sq() const {
        return std::inner_product(a.begin(), a.end(), a.begin(), 0.0);
    }
};

inline HamiltonianBlock build(const ModelParams& p) {
    model::validate(p);
    HamiltonianBlock block;
    block.dim = p.L + 1;
    block.a.assign(static_cast<std::size_t>(block.dim) * block.dim, 0.0);
    block.at(0, 0) = p.omega;
    for (int j = 1; j <= p.L; ++j) {
        block.at(j, j) = p.epsilons[static_cast<std::size_t>(j - 1)];
        block.at(0, j) = p.g;
        block.at(j, 0) = p.g;
    }
    return block;
}

// y = H x without forming dense products; used by eigen-residual checks.
inline SectorState apply(const HamiltonianBlock& block, const SectorState& s) {
    SectorState out;
    const int L = block.dim - 1;
    out.spin_amps.resize(static_cast<std::size_t>(L));
    Complex ph = block.at(0, 0) * s.photon_amp;
    for (int j = 1; j <= L; ++j) ph += block.at(0, j) * s.spin_amps[static_cast<std::size_t>(j - 1)];
    out.photon_amp = ph;
    for (int j = 1; j <= L; ++j) {
        out.spin_amps[static_cast<std::size_t>(j - 1)] =
            block.at(j, 0) * s.photon_amp + block.at(j, j) * s.spin_amps[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

struct EigenDecomposition {
    int dim = 0;
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> vectors;      // row-major; column k is eigenvector k

    double vec(int i, int k) const { return vectors[static_cast<std::size_t>(i) * dim + k]; }
};

// Cyclic Jacobi sweeps until the off-diagonal Frobenius mass drops below
// tol * ||A||_F.
inline EigenDecomposition diagonalize(const HamiltonianBlock& block, double tol = 1e-14) {
    const int n = block.dim;
    std::vector<double> a = block.a;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double norm = std::sqrt(block.frobenius_sq());
    const double target = tol * std::max(norm, std::numeric_limits<double>::min());

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += A(i, j) * A(i, j);
        return std::sqrt(2.0 * s);
    };

    constexpr int kSweepCap = 64;
    int sweep = 0;
    while (off_norm() > target) {
        if (++sweep > kSweepCap) throw ConvergenceFailure("Jacobi sweeps exceeded cap");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p);
                    const double akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k);
                    const double aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p);
                    const double vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return A(i, i) < A(j, j); });

    EigenDecomposition out;
    out.dim = n;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[static_cast<std::size_t>(k)] = A(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
        for (int i = 0; i < n; ++i) {
            out.vectors[static_cast<std::size_t>(i) * n + k] = V(i, order[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

// U(t) = Q exp(-i Lambda t) Q^T applied to a sector state.
inline SectorState propagate(const EigenDecomposition& eig, const SectorState& s, double t) {
    const int n = eig.dim;
    const int L = n - 1;
    std::vector<Complex> coeff(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        Complex c = eig.vec(0, k) * s.photon_amp;
        for (int j = 1; j <= L; ++j) c += eig.vec(j, k) * s.spin_amps[static_cast<std::size_t>(j - 1)];
        coeff[static_cast<std::size_t>(k)] = c * std::polar(1.0, -eig.eigenvalues[static_cast<std::size_t>(k)] * t);
    }
    SectorState out;
    out.spin_amps.assign(static_cast<std::size_t>(L), Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        out.photon_amp += eig.vec(0, k) * coeff[static_cast<std::size_t>(k)];
        for (int j = 1; j <= L; ++j) {
            out.spin_amps[static_cast<std::size_t>(j - 1)] += eig.vec(j, k) * coeff[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

} // namespace dicke::oracle
