#pragma once

#include <gmpxx.h>

#include <cassert>
#include <vector>

#include "supercong/errors.hpp"

namespace sc::padic {

// Working modulus p^N for one prime.  Immutable after construction and safe
// to share between threads.
class Context {
public:
    Context(long p, int precision);

    long p() const { return p_; }
    int precision() const { return n_; }
    // p^e for 0 <= e <= precision()
    const mpz_class& pe(int e) const {
        if (e < 0 || e > n_)
            throw PrecisionExhausted("p^" + std::to_string(e) + " outside working precision " +
                                     std::to_string(n_));
        return pow_[static_cast<size_t>(e)];
    }
    const mpz_class& modulus() const { return pow_.back(); }

private:
    long p_;
    int n_;
    std::vector<mpz_class> pow_;
};

Context make_context(long p, int precision);

// A p-adic number p^v * u with the unit u known to `prec` digits.  The zero
// flag marks cancellation of every attained digit; it carries the absolute
// precision to which the vanishing is certified (kExactZero for a true 0),
// so reducing a collapsed value beyond what was computed still errors out.
class Fp {
public:
    static constexpr long kExactZero = 1L << 40;

    Fp() : ctx_(nullptr), zero_(true), v_(0), prec_(0), zero_abs_(kExactZero) {}

    static Fp zero(const Context& ctx) { return Fp(&ctx, kExactZero); }
    static Fp one(const Context& ctx) { return from_long(ctx, 1); }
    static Fp from_long(const Context& ctx, long n);
    static Fp from_integer(const Context& ctx, const mpz_class& n);
    static Fp from_rational(const Context& ctx, const mpq_class& q);
    // A value already known only modulo p^prec (e.g. a residue from a mod-p
    // recurrence embedded into a higher-precision computation).
    static Fp from_residue(const Context& ctx, const mpz_class& r, int prec);

    bool is_zero() const { return zero_; }
    long valuation() const;         // throws on zero
    const mpz_class& unit() const { return u_; }
    int prec() const { return prec_; }
    // Absolute precision of a zero: the value is 0 modulo p^zero_bound().
    long zero_bound() const { return zero_abs_; }
    const Context& ctx() const { return *ctx_; }

    Fp operator-() const;
    Fp pow(long e) const;
    Fp inv() const;

    // The canonical residue in [0, p^e); requires v >= 0 and v + prec >= e.
    mpz_class residue(int e) const;
    bool congruent(const Fp& other, int e) const;

    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);

private:
    Fp(const Context* ctx, long zero_abs)
        : ctx_(ctx), zero_(true), v_(0), prec_(0), zero_abs_(zero_abs) {}
    Fp(const Context* ctx, long v, mpz_class u, int prec);
    static Fp add_signed(const Fp& a, const Fp& b, bool subtract);
    static long sat(long bound) { return bound > kExactZero ? kExactZero : bound; }

    const Context* ctx_;
    bool zero_;
    long v_;
    mpz_class u_;    // in [1, p^prec), coprime to p
    int prec_;       // attained digits above v, 1..N
    long zero_abs_;  // zero only: certified absolute precision
};

// Least nonnegative residue of a modulo p; denominator must be prime to p.
long residue_index(const Context& ctx, const mpq_class& a);

// (a - <a>_p) / p as an exact rational (again p-integral).
mpq_class a_prime(const Context& ctx, const mpq_class& a);

} // namespace sc::padic
