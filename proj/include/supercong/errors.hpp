#pragma once

#include <stdexcept>
#include <string>

namespace sc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulus : Error { using Error::Error; };
struct BadPrecision : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct NegativeValuation : Error { using Error::Error; };
struct NotPAdicInteger : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NoRepresentation : Error { using Error::Error; };

// A weight denominator that is zero as an exact rational, not merely
// divisible by p.  Carries the offending index.
struct ExactPole : Error {
    long k;
    explicit ExactPole(long k_, const std::string& what = "exact pole")
        : Error(what + " at k=" + std::to_string(k_)), k(k_) {}
};

} // namespace sc
