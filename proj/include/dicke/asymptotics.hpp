// asymptotics.hpp — large-L closed forms for the equally-spaced grid:
// confined-root offsets, dark/bright norms, the transcendental bright-root
// equation, and the triangle/square-wave observable formulas.
//
// Fourier series are kept alongside their closed forms; evaluators default
// to the closed form and the series are cross-checked in tests.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "dicke/bethe.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/errors.hpp"
#include "dicke/model.hpp"

namespace dicke::asym {

using model::ModelParams;

struct AsymptoticContext {
    double d = 0.0;         // level spacing
    double g = 0.0;
    double omega = 0.0;
    int L = 0;
    double epsilon_1 = 0.0;
    double epsilon_L = 0.0;
    int series_terms = 10000; // N in sum_{n=0}^{N}
};

inline AsymptoticContext context_for(const ModelParams& p, int series_terms = 10000) {
    if (p.L < 2) throw InvalidSpec("asymptotic context needs L >= 2");
    if (series_terms < 1) throw InvalidSpec("series_terms must be >= 1");
    AsymptoticContext ctx;
    ctx.d = (p.epsilons.back() - p.epsilons.front()) / (p.L - 1);
    ctx.g = p.g;
    ctx.omega = p.omega;
    ctx.L = p.L;
    ctx.epsilon_1 = p.epsilons.front();
    ctx.epsilon_L = p.epsilons.back();
    ctx.series_terms = series_terms;
    return ctx;
}

namespace detail {

inline void check_interior(double eps_alpha, const AsymptoticContext& ctx) {
    if (!(eps_alpha > ctx.epsilon_1 && eps_alpha < ctx.epsilon_L)) {
        throw OutOfRange("eps_alpha must lie strictly inside (eps_1, eps_L)");
    }
}

inline double log_edge_ratio(double eps_alpha, const AsymptoticContext& ctx) {
    return std::log((ctx.epsilon_L - eps_alpha) / (eps_alpha - ctx.epsilon_1));
}

// arccot valued in (0, pi)
inline double arccot(double x) {
    return std::numbers::pi / 2.0 - std::atan(x);
}

} // namespace detail

// Offset of a confined root above its grid point, 0 < delta_alpha < d.
inline double delta_alpha(double eps_alpha, const AsymptoticContext& ctx) {
    detail::check_interior(eps_alpha, ctx);
    const double arg = (ctx.d / (ctx.g * ctx.g) * (eps_alpha - ctx.omega) +
                        detail::log_edge_ratio(eps_alpha, ctx)) / std::numbers::pi;
    return ctx.d / std::numbers::pi * detail::arccot(arg);
}

// Unnormalized norm of a confined eigenstate, g^2 pi^2/d^2 [1 + ln^2(..)/pi^2].
inline double dark_norm(double eps_alpha, const AsymptoticContext& ctx) {
    detail::check_interior(eps_alpha, ctx);
    const double lg = detail::log_edge_ratio(eps_alpha, ctx);
    const double pref = ctx.g * ctx.g * std::numbers::pi * std::numbers::pi / (ctx.d * ctx.d);
    return pref * (1.0 + lg * lg / (std::numbers::pi * std::numbers::pi));
}

struct BrightRoots {
    double lambda_low = 0.0;
    double lambda_high = 0.0;
    double norm_low = 0.0;   // via 1 + g^2 L /((lambda-eps_1)(lambda-eps_L))
    double norm_high = 0.0;
    bool valid_low = true;   // false when eps_1 - lambda is not >> d
    bool valid_high = true;
};

namespace detail {

// lambda - omega = (g^2 L / Omega) ln((lambda-eps_1)/(lambda-eps_L));
// monotone increasing on both outer intervals, solved by plain bisection.
inline double solve_transcendental(const AsymptoticContext& ctx, bool upper, double tol) {
    const double width = ctx.epsilon_L - ctx.epsilon_1;
    const double k = ctx.g * ctx.g * ctx.L / width;
    auto h = [&](double lam) {
        return (lam - ctx.omega) - k * std::log((lam - ctx.epsilon_1) / (lam - ctx.epsilon_L));
    };
    double reach = std::max(ctx.g * std::sqrt(static_cast<double>(ctx.L)), width);
    double a = 0.0, b = 0.0;
    if (upper) {
        a = ctx.epsilon_L + 1e-14 * std::max(1.0, std::abs(ctx.epsilon_L));
        b = ctx.omega + reach;
        int n = 0;
        while (h(b) < 0.0) {
            reach *= 2.0;
            b = ctx.omega + reach;
            if (++n > 64) throw BracketFailure("no bracket above the band");
        }
    } else {
        b = ctx.epsilon_1 - 1e-14 * std::max(1.0, std::abs(ctx.epsilon_1));
        a = ctx.omega - reach;
        int n = 0;
        while (h(a) > 0.0) {
            reach *= 2.0;
            a = ctx.omega - reach;
            if (++n > 64) throw BracketFailure("no bracket below the band");
        }
    }
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        const double mid = 0.5 * (a + b);
        (h(mid) < 0.0 ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

} // namespace detail

inline double bright_norm(double lambda, const AsymptoticContext& ctx) {
    return 1.0 + ctx.g * ctx.g * ctx.L /
                     ((lambda - ctx.epsilon_1) * (lambda - ctx.epsilon_L));
}

inline BrightRoots bright_roots(const AsymptoticContext& ctx, double tol = 1e-13) {
    BrightRoots out;
    out.lambda_low = detail::solve_transcendental(ctx, false, tol);
    out.lambda_high = detail::solve_transcendental(ctx, true, tol);
    out.norm_low = bright_norm(out.lambda_low, ctx);
    out.norm_high = bright_norm(out.lambda_high, ctx);
    out.valid_low = (ctx.epsilon_1 - out.lambda_low) >= 3.0 * ctx.d;
    out.valid_high = (out.lambda_high - ctx.epsilon_L) >= 3.0 * ctx.d;
    return out;
}

// ----------------------------- wave forms ----------------------------------

// (8/pi^2) sum_{n=0}^{N} cos[(2n+1) t d/2]/(2n+1)^2
inline double triangle_series(double t, const AsymptoticContext& ctx) {
    const double theta = t * ctx.d / 2.0;
    double sum = 0.0;
    for (int n = ctx.series_terms; n >= 0; --n) {
        const double m = 2.0 * n + 1.0;
        sum += std::cos(m * theta) / (m * m);
    }
    return 8.0 / (std::numbers::pi * std::numbers::pi) * sum;
}

// Exact limit of the series: period 4 pi / d, 1 at t = 0, -1 at t = 2 pi / d.
inline double triangle_closed(double t, const AsymptoticContext& ctx) {
    const double two_pi = 2.0 * std::numbers::pi;
    double theta = std::fmod(t * ctx.d / 2.0, two_pi);
    if (theta < 0.0) theta += two_pi;
    return theta <= std::numbers::pi ? 1.0 - 2.0 * theta / std::numbers::pi
                                     : -3.0 + 2.0 * theta / std::numbers::pi;
}

inline double triangle(double t, const AsymptoticContext& ctx) {
    return triangle_closed(t, ctx);
}

// sum_{n=0}^{N} sin[(2n+1) t d/2]/(2n+1)  (no prefactor)
inline double square_series(double t, const AsymptoticContext& ctx) {
    const double theta = t * ctx.d / 2.0;
    double sum = 0.0;
    for (int n = ctx.series_terms; n >= 0; --n) {
        const double m = 2.0 * n + 1.0;
        sum += std::sin(m * theta) / m;
    }
    return sum;
}

// Exact limit: +pi/4 on (0, pi), -pi/4 on (pi, 2 pi) in theta = t d/2, zero
// at the jumps.
inline double square_closed(double t, const AsymptoticContext& ctx) {
    const double two_pi = 2.0 * std::numbers::pi;
    double theta = std::fmod(t * ctx.d / 2.0, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta == 0.0 || theta == std::numbers::pi) return 0.0;
    return theta < std::numbers::pi ? std::numbers::pi / 4.0 : -std::numbers::pi / 4.0;
}

inline double square(double t, const AsymptoticContext& ctx) {
    return square_closed(t, ctx);
}

// --------------------------- observable forms -------------------------------

// Exact bright roots and norms feeding the first-order corrections. Default
// source is the solved spectrum; the transcendental roots are the fully
// explicit alternative.
struct BrightData {
    double lambda_low = 0.0;
    double lambda_high = 0.0;
    double norm_low = 1.0;
    double norm_high = 1.0;

    static BrightData from_spectrum(const bethe::BetheSpectrum& spec) {
        BrightData b;
        b.lambda_low = spec.roots.front();
        b.lambda_high = spec.roots.back();
        b.norm_low = spec.norm_sq.front();
        b.norm_high = spec.norm_sq.back();
        return b;
    }

    static BrightData from_asymptotic(const BrightRoots& roots) {
        return {roots.lambda_low, roots.lambda_high, roots.norm_low, roots.norm_high};
    }
};

// Leading-order single-spin survival plus the optional bright correction,
// written with the 1/L and g^2 L factors as printed (they cancel).
inline Complex survival_asym_single_spin(double t, const AsymptoticContext& ctx, double eps_A,
                                         const std::optional<BrightData>& bright = std::nullopt) {
    Complex value = std::polar(1.0, -eps_A * t) * triangle_closed(t, ctx);
    if (bright) {
        const Complex phase_A = std::polar(1.0, -eps_A * t);
        for (const auto& [lam, nsq] : {std::pair{bright->lambda_low, bright->norm_low},
                                       std::pair{bright->lambda_high, bright->norm_high}}) {
            const double det = lam - eps_A;
            value += (1.0 / ctx.L) * phase_A * std::polar(1.0, -(lam - eps_A) * t) *
                     (ctx.g * ctx.g * ctx.L / (det * det)) / nsq;
        }
    }
    return value;
}

// Bell fidelity amplitude: both series enter exactly as printed; the
// coincidence limit eps_A == eps_B is taken analytically.
inline Complex survival_asym_bell(double t, const AsymptoticContext& ctx, double eps_A,
                                  double eps_B, int sign) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double half_diff = (eps_B - eps_A) / 2.0;
    const double s2 = pi2 / 8.0 * triangle_closed(t, ctx);
    const double s1 = square_closed(t, ctx);
    const double sgn = sign >= 0 ? 1.0 : -1.0;
    const double mix = eps_A == eps_B ? -ctx.d * t / 2.0
                                      : ctx.d / (eps_A - eps_B) * std::sin(half_diff * t);
    const double bracket = std::cos(half_diff * t) * s2 + sgn * mix * s1;
    return 8.0 / pi2 * std::polar(1.0, -(eps_A + eps_B) * t / 2.0) * bracket;
}

// Dispatcher on the initial condition; SinglePhoton belongs to
// photon_survival_asym.
inline Complex survival_asym(const dynamics::InitialCondition& cond, const ModelParams& p,
                             double t, const AsymptoticContext& ctx,
                             const std::optional<BrightData>& bright = std::nullopt) {
    using Kind = dynamics::InitialCondition::Kind;
    switch (cond.kind) {
    case Kind::SingleSpin:
        return survival_asym_single_spin(t, ctx, p.epsilons.at(static_cast<std::size_t>(cond.A - 1)),
                                         bright);
    case Kind::Bell:
        return survival_asym_bell(t, ctx, p.epsilons.at(static_cast<std::size_t>(cond.A - 1)),
                                  p.epsilons.at(static_cast<std::size_t>(cond.B - 1)), cond.sign);
    case Kind::SinglePhoton:
    default:
        throw UnsupportedCondition("use photon_survival_asym for the single-photon state");
    }
}

// Photon-to-photon amplitude split into the dark comb (summed over the grid)
// and the two bright poles.
inline Complex photon_survival_asym(double t, const AsymptoticContext& ctx,
                                    const std::vector<double>& epsilons,
                                    const BrightData& bright) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    Complex dark{0.0, 0.0};
    for (std::size_t a = 1; a < epsilons.size(); ++a) {
        // grid point below confined root alpha = 1..L-1; the alpha = 1 term
        // carries zero weight through the diverging logarithm
        const double ea = epsilons[a - 1];
        if (!(ea > ctx.epsilon_1 && ea < ctx.epsilon_L)) continue;
        const double lg = detail::log_edge_ratio(ea, ctx);
        dark += std::polar(1.0, -ea * t) / (1.0 + lg * lg / pi2);
    }
    dark *= ctx.d * ctx.d / (pi2 * ctx.g * ctx.g) * std::polar(1.0, -ctx.d * t / 2.0);

    Complex brightsum{0.0, 0.0};
    for (const auto& [lam, nsq] : {std::pair{bright.lambda_low, bright.norm_low},
                                   std::pair{bright.lambda_high, bright.norm_high}}) {
        brightsum += std::polar(1.0, -lam * t) / nsq;
    }
    return dark + brightsum;
}

// (2 sqrt2 / pi^2)(d/g)(e^{-i eps_A t} ± e^{-i eps_B t}) * sin series
inline Complex bell_photon_asym(double t, const AsymptoticContext& ctx, double eps_A,
                                double eps_B, int sign) {
    const double sgn = sign >= 0 ? 1.0 : -1.0;
    const Complex phases = std::polar(1.0, -eps_A * t) + sgn * std::polar(1.0, -eps_B * t);
    return 2.0 * std::sqrt(2.0) / (std::numbers::pi * std::numbers::pi) * (ctx.d / ctx.g) *
           phases * square_closed(t, ctx);
}

} // namespace dicke::asym
