#pragma once

#include <stdexcept>
#include <string>

namespace mixreg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGridError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DegenerateRangeError : Error {
    using Error::Error;
};

struct InvalidIntervalError : Error {
    using Error::Error;
};

struct SingularSystemError : Error {
    using Error::Error;
};

struct NoBracketError : Error {
    NoBracketError(const std::string& what, double disc_low, double disc_high)
        : Error(what), discrepancy_low(disc_low), discrepancy_high(disc_high) {}
    double discrepancy_low;
    double discrepancy_high;
};

struct UndefinedMetricError : Error {
    using Error::Error;
};

}  // namespace mixreg
