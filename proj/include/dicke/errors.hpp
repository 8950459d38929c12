// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// model
struct InvalidSpec : Error { using Error::Error; };
struct DistinctnessViolation : Error { using Error::Error; };
struct NonAscendingEnergies : Error { using Error::Error; };
struct NonPositiveCoupling : Error { using Error::Error; };

// bethe / asymptotics
struct PoleHit : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// eigen / dynamics
struct NotARoot : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct UnsupportedCondition : Error { using Error::Error; };

// cli / scenario
struct ConfigError : Error { using Error::Error; };

} // namespace dicke
