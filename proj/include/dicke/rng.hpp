// rng.hpp — seeded sampling helpers with bit-stable output
//
// std::uniform_real_distribution / normal_distribution are not specified
// bit-exactly across standard libraries, so golden fixtures built on them
// would not be portable. The draws below use only the mt19937_64 bit stream
// (which the standard does pin down) plus arithmetic.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace dicke {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1) with 53-bit resolution
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Box–Muller; caches the second deviate
    double gaussian(double mean, double sigma) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sigma * spare_;
        }
        double u = 0.0;
        do {
            u = uniform01();
        } while (u == 0.0);
        const double v = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double phi = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return mean + sigma * r * std::cos(phi);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace dicke
