#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "supercong/padic.hpp"

namespace sc::seq {

using padic::Context;
using padic::Fp;

// Per-prime memo of the Euler and U recurrences mod p.  Entries are filled
// once and never mutated; concurrent fills of the same prime are idempotent.
class Cache {
public:
    // E_n mod p and U_n mod p, any n >= 0 (odd indices are 0).
    long euler_mod_p(long p, long n);
    long u_mod_p(long p, long n);

private:
    struct Tables {
        std::vector<long> euler;  // E_{2i} mod p
        std::vector<long> useq;   // U_{2i} mod p
    };
    std::shared_ptr<const Tables> tables_for(long p, long n);

    std::mutex mu_;
    std::map<long, std::shared_ptr<const Tables>> by_prime_;
};

// H_n (r=1) or H_n^(2) (r=2); requires n < p so every denominator is a unit.
Fp harmonic(const Context& ctx, long n, int r = 1);

// (b^(p-1) - 1) / p at full context precision.
Fp fermat_quotient(const Context& ctx, long b);

// Legendre symbol (a/p) by Euler's criterion.
int legendre(long a, long p);

// C(a, k) for rational a as a falling-factorial quotient; requires k < p.
Fp binom_rational(const Context& ctx, const mpq_class& a, long k);

// Exact integer binomial C(n, r) embedded with its p-valuation extracted.
Fp binom_integer(const Context& ctx, long n, long r);

enum class RAggregate { R1, R2, R3, R7 };

Fp r_aggregate(const Context& ctx, RAggregate which);

} // namespace sc::seq
