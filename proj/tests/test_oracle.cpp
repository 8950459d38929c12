#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dicke/bethe.hpp"
#include "dicke/oracle.hpp"
#include "dicke/rng.hpp"

using namespace dicke;
using model::ModelParams;

namespace {

ModelParams fig2_params(int L) {
    model::DisorderSpec spec;
    spec.kind = model::DisorderKind::EquallySpaced;
    spec.center = 1.0;
    spec.width = 0.1;
    return model::make_params(1.0, 0.05, L, spec);
}

ModelParams seeded_params(std::uint64_t seed, int L) {
    model::DisorderSpec spec;
    spec.kind = model::DisorderKind::UniformRandom;
    spec.center = 1.0;
    spec.width = 0.3;
    spec.seed = seed;
    return model::make_params(1.0, 0.07, L, spec);
}

} // namespace

TEST_CASE("arrow block layout") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    const auto block = oracle::build(p);
    REQUIRE(block.dim == 2);
    REQUIRE(block.at(0, 0) == 1.0);
    REQUIRE(block.at(1, 1) == 1.0);
    REQUIRE(block.at(0, 1) == 0.05);
    REQUIRE(block.at(1, 0) == 0.05);
}

TEST_CASE("trace and Frobenius norm of the arrow block") {
    const auto p = fig2_params(20);
    const auto block = oracle::build(p);
    double eps_sum = 0.0, eps_sq = 0.0;
    for (double e : p.epsilons) {
        eps_sum += e;
        eps_sq += e * e;
    }
    REQUIRE(block.trace() == Catch::Approx(p.omega + eps_sum).margin(1e-12));
    REQUIRE(block.frobenius_sq() ==
            Catch::Approx(p.omega * p.omega + eps_sq + 2.0 * p.L * p.g * p.g).epsilon(1e-12));
}

TEST_CASE("two-level resonance eigenvalues") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    const auto eig = oracle::diagonalize(oracle::build(p));
    REQUIRE(eig.eigenvalues[0] == Catch::Approx(0.95).margin(1e-13));
    REQUIRE(eig.eigenvalues[1] == Catch::Approx(1.05).margin(1e-13));
}

TEST_CASE("eigenvalues equal Bethe roots on the reference grid") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    const auto eig = oracle::diagonalize(oracle::build(p));
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        REQUIRE(std::abs(spec.roots[i] - eig.eigenvalues[i]) <= 1e-10);
    }
}

TEST_CASE("eigenvector matrix is orthonormal") {
    const auto p = seeded_params(11, 8);
    const auto eig = oracle::diagonalize(oracle::build(p));
    const int n = eig.dim;
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += eig.vec(i, a) * eig.vec(i, b);
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    }
    REQUIRE(worst <= 1e-12);
}

TEST_CASE("eigenvector photon weight reproduces darkness") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    const auto eig = oracle::diagonalize(oracle::build(p));
    for (int k = 0; k < eig.dim; ++k) {
        const double w = eig.vec(0, k) * eig.vec(0, k);
        REQUIRE(std::abs(w - 1.0 / spec.norm_sq[static_cast<std::size_t>(k)]) <= 1e-9);
    }
}

TEST_CASE("propagation: identity at t=0, Rabi flop, reversibility") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    const auto eig = oracle::diagonalize(oracle::build(p));
    SectorState psi0;
    psi0.spin_amps = {Complex{1.0, 0.0}};

    const auto same = oracle::propagate(eig, psi0, 0.0);
    REQUIRE(max_component_diff(same, psi0) <= 1e-13);

    for (double t : {3.0, 17.5, 120.0}) {
        const auto psi = oracle::propagate(eig, psi0, t);
        REQUIRE(std::abs(psi.spin_amps[0]) == Catch::Approx(std::abs(std::cos(p.g * t))).margin(1e-12));
        REQUIRE(std::abs(psi.norm() - 1.0) <= 1e-12);

        const auto back = oracle::propagate(eig, psi, -t);
        REQUIRE(max_component_diff(back, psi0) <= 1e-11);
    }
}

TEST_CASE("roots equal eigenvalues across seeded parameter draws") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto p = seeded_params(seed, 1 + static_cast<int>(seed) * 3);
        const auto spec = bethe::solve_spectrum(p);
        const auto eig = oracle::diagonalize(oracle::build(p));
        for (std::size_t i = 0; i < spec.roots.size(); ++i) {
            REQUIRE(std::abs(spec.roots[i] - eig.eigenvalues[i]) <= 1e-10);
        }
    }
}
