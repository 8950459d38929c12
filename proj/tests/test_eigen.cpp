#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "dicke/asymptotics.hpp"
#include "dicke/bethe.hpp"
#include "dicke/eigen.hpp"
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

SectorState random_state(int L, std::uint64_t seed) {
    Rng rng(seed);
    SectorState v;
    v.photon_amp = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    v.spin_amps.resize(static_cast<std::size_t>(L));
    for (auto& a : v.spin_amps) a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    v.scale(1.0 / v.norm());
    return v;
}

} // namespace

TEST_CASE("resonant doublet eigenstate") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    const auto [state, nsq] = eigen::eigenstate(1.05, p);
    REQUIRE(nsq == Catch::Approx(2.0).epsilon(1e-12));
    REQUIRE(state.photon_amp.real() == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(state.spin_amps[0].real() == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("eigenstate rejects a non-root") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    REQUIRE_THROWS_AS(eigen::eigenstate(1.02, p), NotARoot);
}

TEST_CASE("eigenstates are normalized") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    for (double root : spec.roots) {
        const auto [state, nsq] = eigen::eigenstate(root, p);
        REQUIRE(state.norm_sq() == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("distinct eigenstates are orthogonal") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    std::vector<SectorState> states;
    for (double root : spec.roots) states.push_back(eigen::eigenstate(root, p).first);
    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = a + 1; b < states.size(); ++b) {
            REQUIRE(std::abs(inner(states[a], states[b])) <= 1e-9);
        }
    }
}

TEST_CASE("eigenbasis is complete") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto v = random_state(p.L, seed);
        double sum = 0.0;
        for (double root : spec.roots) {
            const auto phi = eigen::eigenstate(root, p).first;
            sum += std::norm(inner(phi, v));
        }
        REQUIRE(sum == Catch::Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("matrix residual of every eigenpair is tiny") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    const auto block = oracle::build(p);
    for (int a = 0; a < spec.size(); ++a) {
        const auto i = static_cast<std::size_t>(a);
        const auto phi = eigen::eigenstate(spec.roots[i], p).first;
        const auto hv = oracle::apply(block, phi);
        double err_sq = std::norm(hv.photon_amp - spec.roots[i] * phi.photon_amp);
        for (std::size_t j = 0; j < phi.spin_amps.size(); ++j) {
            err_sq += std::norm(hv.spin_amps[j] - spec.roots[i] * phi.spin_amps[j]);
        }
        REQUIRE(std::sqrt(err_sq) <= 1e-9);
    }
}

TEST_CASE("darkness basics and photon-weight sum rule") {
    REQUIRE(eigen::darkness(2.0) == 0.5);
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    double total = 0.0;
    for (double nsq : spec.norm_sq) total += eigen::darkness(nsq);
    REQUIRE(total == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("confined states are dark at the d^2/g^2 scale") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    const double d = 0.1 / 19.0;
    const double scale = d * d / (p.g * p.g * std::numbers::pi * std::numbers::pi);
    const int mid = p.L / 2; // central confined root
    const double dk = eigen::darkness(spec.norm_sq[static_cast<std::size_t>(mid)]);
    REQUIRE(dk == Catch::Approx(scale).epsilon(0.3));
}

TEST_CASE("separated-state darkness follows the pole-product form") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    for (std::size_t i : {std::size_t{0}, static_cast<std::size_t>(p.L)}) {
        const double lam = spec.roots[i];
        const double form =
            1.0 / (1.0 + p.g * p.g * p.L /
                             ((lam - p.epsilons.front()) * (lam - p.epsilons.back())));
        REQUIRE(eigen::darkness(spec.norm_sq[i]) == Catch::Approx(form).epsilon(0.05));
    }
}

TEST_CASE("central confined norm agrees with the closed form within 20 percent") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    const auto ctx = asym::context_for(p);
    const int mid = p.L / 2;
    const double eps_mid = p.epsilons[static_cast<std::size_t>(mid) - 1];
    const double predicted = asym::dark_norm(eps_mid, ctx);
    REQUIRE(spec.norm_sq[static_cast<std::size_t>(mid)] ==
            Catch::Approx(predicted).epsilon(0.2));
}
