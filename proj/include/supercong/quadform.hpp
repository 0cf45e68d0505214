#pragma once

#include <optional>

#include "supercong/errors.hpp"

namespace sc::qf {

// p = x^2 + d*y^2 (scaled=false) or 4p = x^2 + 27*y^2 (scaled=true), x, y > 0.
struct QuadRep {
    long d;
    long x;
    long y;
    bool scaled;
};

// Square root of a mod p when one exists (Tonelli-Shanks).
std::optional<long> sqrt_mod(long a, long p);

// Representation p = x^2 + d*y^2 for d in {2,3,4,7}; empty when the residue
// class of p rules one out.
std::optional<QuadRep> represent(long p, long d);

// 4p = x^2 + 27 y^2 for p = 1 (mod 3).
std::optional<QuadRep> represent_4p27(long p);

// Exhaustive-search oracle used by tests and as a fallback.
std::optional<QuadRep> represent_search(long p, long d);
std::optional<QuadRep> represent_4p27_search(long p);

} // namespace sc::qf
