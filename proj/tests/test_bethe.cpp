#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "dicke/bethe.hpp"
#include "dicke/model.hpp"
#include "dicke/oracle.hpp"

using namespace dicke;
using bethe::RootClass;
using model::ModelParams;

namespace {

ModelParams fig2_params(int L) {
    model::DisorderSpec spec;
    spec.kind = model::DisorderKind::EquallySpaced;
    spec.center = 1.0;
    spec.width = 0.1;
    return model::make_params(1.0, 0.05, L, spec);
}

ModelParams random_params(std::uint64_t seed, int L = 12) {
    model::DisorderSpec spec;
    spec.kind = model::DisorderKind::UniformRandom;
    spec.center = 1.0;
    spec.width = 0.2;
    spec.seed = seed;
    return model::make_params(1.0, 0.04, L, spec);
}

} // namespace

TEST_CASE("single resonant spin gives the two-level doublet") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    const auto spec = bethe::solve_spectrum(p);
    REQUIRE(spec.size() == 2);
    REQUIRE(spec.roots[0] == Catch::Approx(0.95).margin(1e-12));
    REQUIRE(spec.roots[1] == Catch::Approx(1.05).margin(1e-12));
    REQUIRE(spec.classes[0] == RootClass::SeparatedLow);
    REQUIRE(spec.classes[1] == RootClass::SeparatedHigh);
}

TEST_CASE("detuned single spin matches the quadratic formula") {
    const double delta = 0.02;
    const double g = 0.013;
    ModelParams p{1.0, g, 1, {1.0 + delta}};
    const auto spec = bethe::solve_spectrum(p);
    const double mid = 1.0 + delta / 2.0;
    const double split = std::sqrt(delta * delta / 4.0 + g * g);
    REQUIRE(spec.roots[0] == Catch::Approx(mid - split).margin(1e-13));
    REQUIRE(spec.roots[1] == Catch::Approx(mid + split).margin(1e-13));
}

TEST_CASE("residual zeroes at both resonance roots") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    REQUIRE(bethe::residual(1.05, p) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(bethe::residual(0.95, p) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("residual throws on a pole") {
    ModelParams p{1.0, 0.05, 2, {0.95, 1.05}};
    REQUIRE_THROWS_AS(bethe::residual(0.95, p), PoleHit);
    REQUIRE_THROWS_AS(bethe::residual_derivative(1.05, p), PoleHit);
}

TEST_CASE("derivative exceeds 1/g and hits 2/g at the resonance root") {
    ModelParams p{1.0, 0.05, 1, {1.0}};
    REQUIRE(bethe::residual_derivative(1.05, p) == Catch::Approx(2.0 / 0.05).epsilon(1e-12));
    const auto p20 = fig2_params(20);
    for (double lam : {0.8, 0.9521, 1.0011, 1.3}) {
        REQUIRE(bethe::residual_derivative(lam, p20) > 1.0 / p20.g);
    }
}

TEST_CASE("derivative matches a centered finite difference") {
    const auto p = fig2_params(20);
    const double h = 1e-7;
    for (double lam : {0.93, 0.9761, 1.0204, 1.0892, 1.31}) {
        const double fd = (bethe::residual(lam + h, p) - bethe::residual(lam - h, p)) / (2.0 * h);
        REQUIRE(bethe::residual_derivative(lam, p) == Catch::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("three-spin block: roots equal dense eigenvalues") {
    ModelParams p{1.0, 0.05, 2, {0.95, 1.05}};
    const auto spec = bethe::solve_spectrum(p);
    const auto eig = oracle::diagonalize(oracle::build(p));
    REQUIRE(spec.size() == 3);
    for (int a = 0; a < 3; ++a) {
        REQUIRE(spec.roots[static_cast<std::size_t>(a)] ==
                Catch::Approx(eig.eigenvalues[static_cast<std::size_t>(a)]).margin(1e-12));
    }
}

TEST_CASE("residual is tiny at dense-oracle eigenvalues") {
    const auto p = fig2_params(20);
    const auto eig = oracle::diagonalize(oracle::build(p));
    for (double lam : eig.eigenvalues) {
        REQUIRE(std::abs(bethe::residual(lam, p)) <= 1e-8);
    }
}

TEST_CASE("trace and second-moment identities") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    const double eps_sum = std::accumulate(p.epsilons.begin(), p.epsilons.end(), 0.0);
    const double trace = std::accumulate(spec.roots.begin(), spec.roots.end(), 0.0);
    REQUIRE(trace == Catch::Approx(p.omega + eps_sum).margin(1e-10));
    REQUIRE(p.omega + eps_sum == Catch::Approx(21.0).margin(1e-12));

    double m2 = 0.0;
    for (double r : spec.roots) m2 += r * r;
    double expected = p.omega * p.omega + 2.0 * p.L * p.g * p.g;
    for (double e : p.epsilons) expected += e * e;
    REQUIRE(m2 == Catch::Approx(expected).epsilon(1e-9));
}

TEST_CASE("roots interlace the spin energies") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto p = random_params(seed);
        const auto spec = bethe::solve_spectrum(p);
        REQUIRE(spec.size() == p.L + 1);
        REQUIRE(spec.roots.front() < p.epsilons.front());
        REQUIRE(spec.roots.back() > p.epsilons.back());
        for (int j = 0; j < p.L - 1; ++j) {
            const double root = spec.roots[static_cast<std::size_t>(j) + 1];
            REQUIRE(root > p.epsilons[static_cast<std::size_t>(j)]);
            REQUIRE(root < p.epsilons[static_cast<std::size_t>(j) + 1]);
        }
        int confined = 0;
        for (auto c : spec.classes) confined += c == RootClass::Confined;
        REQUIRE(confined == p.L - 1);
    }
}

TEST_CASE("every root sits inside its reported bracket with small residual") {
    const auto p = random_params(3, 16);
    const auto spec = bethe::solve_spectrum(p);
    for (int a = 0; a < spec.size(); ++a) {
        const auto i = static_cast<std::size_t>(a);
        REQUIRE(spec.roots[i] >= spec.brackets[i].first);
        REQUIRE(spec.roots[i] <= spec.brackets[i].second);
        // conditioning-aware residual bound: near-pole roots cannot do better
        // than derivative * ulp
        const double bound =
            bethe::residual_derivative(spec.roots[i], p) * 1e-12 * std::abs(spec.roots[i]) +
            1e-9 / p.g;
        REQUIRE(std::abs(spec.residuals[i]) <= bound);
    }
}

TEST_CASE("vanishing width recovers the collective doublet at omega ± g sqrt(L)") {
    model::DisorderSpec spec;
    spec.kind = model::DisorderKind::EquallySpaced;
    spec.center = 1.0;
    spec.width = 1e-6;
    const auto p = model::make_params(1.0, 0.05, 20, spec);
    const auto s = bethe::solve_spectrum(p);
    const double rabi = p.g * std::sqrt(20.0);
    REQUIRE(std::abs(s.roots.front() - (1.0 - rabi)) < 1e-3 * rabi);
    REQUIRE(std::abs(s.roots.back() - (1.0 + rabi)) < 1e-3 * rabi);
}

TEST_CASE("norms match the analytic form") {
    const auto p = fig2_params(20);
    const auto spec = bethe::solve_spectrum(p);
    for (int a = 0; a < spec.size(); ++a) {
        double expected = 1.0;
        for (double e : p.epsilons) {
            const double det = spec.roots[static_cast<std::size_t>(a)] - e;
            expected += p.g * p.g / (det * det);
        }
        REQUIRE(spec.norm_sq[static_cast<std::size_t>(a)] ==
                Catch::Approx(expected).epsilon(1e-12));
    }
}
