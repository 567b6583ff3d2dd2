#pragma once

#include <stdexcept>
#include <string>

namespace bgl3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by a quantity that vanishes identically (f/g/K evaluated on a
// pole locus, zero denominator in a field operation).
struct PoleError : Error {
    using Error::Error;
};

// The regulated limit eps -> 0 does not exist: the normalized denominator
// still vanishes at eps = 0.
struct PoleAtZeroError : Error {
    using Error::Error;
};

struct DegenerateQError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct SizeMismatchError : Error {
    using Error::Error;
};

// Normalized numerator or denominator degree exceeded the configured cap.
struct DegreeCapError : Error {
    using Error::Error;
};

struct SamplingError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace bgl3
