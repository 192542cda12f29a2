#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// qseries
struct ZeroLeadingCoefficient : Error {
    using Error::Error;
};
struct PrecisionExceeded : Error {
    using Error::Error;
};

// forms
struct FractionalPrefactor : Error {
    using Error::Error;
};

// polynomials / ode
struct DomainError : Error {
    using Error::Error;
};
struct NonTerminating : Error {
    using Error::Error;
};
struct PochhammerPole : Error {
    using Error::Error;
};
struct NotAnIndicialRoot : Error {
    using Error::Error;
};

} // namespace qmf
