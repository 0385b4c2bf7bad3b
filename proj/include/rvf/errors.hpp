#pragma once

#include <stdexcept>
#include <string>

namespace rvf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// exact-arith
struct ZeroInverse : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};

// qseries
struct PrecisionZero : Error {
    using Error::Error;
};
struct NonIntegralCoefficient : Error {
    using Error::Error;
};

// graded-poly
struct InexactDivision : Error {
    using Error::Error;
};
struct NotPolynomial : Error {
    using Error::Error;
};

// modforms
struct NotModularOfWeight : Error {
    using Error::Error;
};
struct InsufficientPrecision : Error {
    using Error::Error;
};

// p-power / supersingular
struct BoundExceeded : Error {
    using Error::Error;
};
struct CoercionFailure : Error {
    using Error::Error;
};
struct OnDiscriminant : Error {
    using Error::Error;
};
struct NotHomogeneous : Error {
    using Error::Error;
};
struct NotBivariate : Error {
    using Error::Error;
};

} // namespace rvf
