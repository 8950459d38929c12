// bethe.hpp — the single-pseudoparticle spectral equation and its L+1 real
// roots.
//
// The residual f(lambda) = (lambda - omega)/g - sum_j g/(lambda - eps_j) is
// strictly increasing on every pole-free interval, so each of the L+1 roots
// is bracketed: one below eps_1, one above eps_L, one between each pair of
// neighboring spin energies. Bracketed bisection with Newton acceleration is
// globally convergent here.

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"

namespace dicke::bethe {

using model::ModelParams;

enum class RootClass { SeparatedLow, Confined, SeparatedHigh };

struct BetheSpectrum {
    std::vector<double> roots;                         // ascending, size L+1
    std::vector<RootClass> classes;                    // positional
    std::vector<std::pair<double, double>> brackets;   // final enclosing interval
    std::vector<double> norm_sq;                       // <Phi|Phi> per root
    std::vector<double> residuals;                     // f at the accepted root
    double tol = 0.0;                                  // absolute tolerance used

    int size() const { return static_cast<int>(roots.size()); }
};

inline constexpr double kPoleGuard = 1e-300;

inline double residual(double lambda, const ModelParams& p) {
    double sum = 0.0;
    for (double e : p.epsilons) {
        const double den = lambda - e;
        if (std::abs(den) < kPoleGuard) throw PoleHit("residual evaluated at a spin energy");
        sum += p.g / den;
    }
    return (lambda - p.omega) / p.g - sum;
}

inline double residual_derivative(double lambda, const ModelParams& p) {
    double sum = 0.0;
    for (double e : p.epsilons) {
        const double den = lambda - e;
        if (std::abs(den) < kPoleGuard) throw PoleHit("residual derivative evaluated at a spin energy");
        sum += (p.g / den) * (1.0 / den);
    }
    return 1.0 / p.g + sum;
}

// Eq.-style norm 1 + sum_j g^2/(lambda - eps_j)^2, compensated so the
// dominant near-pole term does not absorb the rest.
inline double state_norm_sq(double lambda, const ModelParams& p) {
    double sum = 1.0;
    double comp = 0.0;
    for (double e : p.epsilons) {
        const double a = p.g / (lambda - e);
        const double term = a * a;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

namespace detail {

// Safeguarded Newton in a sign-changing bracket f(a) < 0 < f(b). Runs to the
// floating-point floor of the bracket; the spec tolerances are the acceptance
// criterion, not the stopping point.
inline double refine_root(const ModelParams& p, double& a, double& b,
                          double tol_abs, double res_tol, double& out_residual) {
    constexpr int kIterCap = 200;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    double x = 0.5 * (a + b);
    double fx = 0.0;
    for (int it = 0; it < kIterCap; ++it) {
        fx = residual(x, p);
        if (fx == 0.0) { out_residual = 0.0; return x; }
        if (fx < 0.0) a = x; else b = x;
        const double width = b - a;
        const double fp_floor = 4.0 * kEps * std::max(std::abs(a), std::abs(b));
        if (width <= fp_floor) break;
        double next = x - fx / residual_derivative(x, p);
        if (!(next > a && next < b) || next == x) next = 0.5 * (a + b);
        if (std::abs(next - x) <= 0.25 * kEps * std::abs(x) && width <= tol_abs) break;
        x = next;
    }
    out_residual = fx;
    const double width = b - a;
    const double fp_floor = 4.0 * kEps * std::max(std::abs(a), std::abs(b));
    const bool lambda_ok = width <= std::max(tol_abs, fp_floor);
    const bool res_ok = std::abs(fx) <= res_tol || width <= fp_floor;
    if (!lambda_ok || !res_ok) {
        throw ConvergenceFailure("root refinement did not reach tolerance");
    }
    return x;
}

// Shrinks the pole offset until the residual has the sign the pole side
// dictates (negative just above a pole, positive just below).
inline double guard_above(const ModelParams& p, double pole, double start) {
    double delta = start;
    for (int k = 0; k < 64; ++k) {
        if (residual(pole + delta, p) < 0.0) return delta;
        delta *= 0.1;
    }
    throw BracketFailure("no sign change approaching pole from above");
}

inline double guard_below(const ModelParams& p, double pole, double start) {
    double delta = start;
    for (int k = 0; k < 64; ++k) {
        if (residual(pole - delta, p) > 0.0) return delta;
        delta *= 0.1;
    }
    throw BracketFailure("no sign change approaching pole from below");
}

} // namespace detail

// Solves for all L+1 roots. tol is the absolute tolerance in units of omega.
inline BetheSpectrum solve_spectrum(const ModelParams& p, double tol = 1e-12) {
    if (tol <= 0.0) throw InvalidSpec("tolerance must be positive");
    model::validate(p);
    const int L = p.L;
    const double tol_abs = tol * p.omega;
    const double res_tol = 1e-9 / p.g;
    const double band = p.epsilons.back() - p.epsilons.front();

    BetheSpectrum spec;
    spec.tol = tol_abs;
    spec.roots.resize(static_cast<std::size_t>(L) + 1);
    spec.classes.resize(static_cast<std::size_t>(L) + 1, RootClass::Confined);
    spec.brackets.resize(static_cast<std::size_t>(L) + 1);
    spec.norm_sq.resize(static_cast<std::size_t>(L) + 1);
    spec.residuals.resize(static_cast<std::size_t>(L) + 1);

    const double w0 = std::max(p.g * std::sqrt(static_cast<double>(L)), band);

    // separated root below eps_1
    {
        double W = w0;
        int k = 0;
        while (residual(p.epsilons.front() - W, p) > 0.0) {
            W *= 2.0;
            if (++k > 64) throw BracketFailure("no sign change expanding below the band");
        }
        const double delta = detail::guard_below(p, p.epsilons.front(), 1e-3 * W);
        double a = p.epsilons.front() - W;
        double b = p.epsilons.front() - delta;
        spec.roots[0] = detail::refine_root(p, a, b, tol_abs, res_tol, spec.residuals[0]);
        spec.brackets[0] = {a, b};
        spec.classes[0] = RootClass::SeparatedLow;
    }

    // confined roots, one per gap
    for (int j = 0; j < L - 1; ++j) {
        const double lo = p.epsilons[static_cast<std::size_t>(j)];
        const double hi = p.epsilons[static_cast<std::size_t>(j) + 1];
        const double width = hi - lo;
        const double da = detail::guard_above(p, lo, 1e-3 * width);
        const double db = detail::guard_below(p, hi, 1e-3 * width);
        double a = lo + da;
        double b = hi - db;
        const auto idx = static_cast<std::size_t>(j) + 1;
        spec.roots[idx] = detail::refine_root(p, a, b, tol_abs, res_tol, spec.residuals[idx]);
        spec.brackets[idx] = {a, b};
    }

    // separated root above eps_L
    {
        double W = w0;
        int k = 0;
        while (residual(p.epsilons.back() + W, p) < 0.0) {
            W *= 2.0;
            if (++k > 64) throw BracketFailure("no sign change expanding above the band");
        }
        const double delta = detail::guard_above(p, p.epsilons.back(), 1e-3 * W);
        double a = p.epsilons.back() + delta;
        double b = p.epsilons.back() + W;
        const auto idx = static_cast<std::size_t>(L);
        spec.roots[idx] = detail::refine_root(p, a, b, tol_abs, res_tol, spec.residuals[idx]);
        spec.brackets[idx] = {a, b};
        spec.classes[idx] = RootClass::SeparatedHigh;
    }

    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        spec.norm_sq[i] = state_norm_sq(spec.roots[i], p);
    }
    return spec;
}

} // namespace dicke::bethe
