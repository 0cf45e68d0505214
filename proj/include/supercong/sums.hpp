#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "supercong/padic.hpp"

namespace sc::sums {

using padic::Context;
using padic::Fp;

enum class FamilyTag { GeneralA, CentralCube, CentralSq3k, CentralSq4k2k, Mixed6k };

// One term family: C(a,k)C(-1-a,k)C(2k,k)/4^k for GeneralA, otherwise a
// product of central binomials over m^k.
struct TermFamily {
    FamilyTag tag = FamilyTag::CentralCube;
    mpq_class a;   // GeneralA only
    long m = 64;   // power base (4 implicitly for GeneralA)

    static TermFamily general(const mpq_class& a);
    static TermFamily central_cube(long m);
    static TermFamily central_sq3k(long m);
    static TermFamily central_sq4k2k(long m);
    static TermFamily mixed6k(long m);
};

// w(k) = k^j or 1/(alpha*k + beta)^j.
struct Weight {
    enum class Kind { KPow, InvLinear } kind = Kind::KPow;
    int j = 0;
    mpq_class alpha, beta;

    static Weight kpow(int j);
    static Weight inv_linear(const mpq_class& alpha, const mpq_class& beta, int j);
};

enum class Upper { PM1, PM2, PM3, PM4, Half };

long upper_bound(Upper u, long p);

struct SumSpec {
    TermFamily family;
    Weight weight;
    Upper upper = Upper::PM1;
};

// Central binomial caches for one context: C(2k,k), C(3k,k), C(4k,2k),
// C(6k,3k) for 0 <= k < p, with p-valuations extracted.
class TermCache {
public:
    explicit TermCache(const Context& ctx);

    const Context& ctx() const { return *ctx_; }
    const Fp& c2k(long k) const { return c2k_[static_cast<size_t>(k)]; }
    const Fp& c3k(long k) const { return c3k_[static_cast<size_t>(k)]; }
    const Fp& c4k2k(long k) const { return c4k2k_[static_cast<size_t>(k)]; }
    const Fp& c6k3k(long k) const { return c6k3k_[static_cast<size_t>(k)]; }

private:
    const Context* ctx_;
    std::vector<Fp> c2k_, c3k_, c4k2k_, c6k3k_;
};

Fp term_value(TermCache& cache, const TermFamily& family, long k);
Fp weight_value(const Context& ctx, const Weight& w, long k);

// Sum of term * weight over the requested range, in valued-residue arithmetic.
Fp evaluate(TermCache& cache, const SumSpec& spec);

// GeneralA terms for k = 0..kmax, built incrementally (exact).
std::vector<Fp> general_terms(const Context& ctx, const mpq_class& a, long kmax);

// S_n(a): partial sum of the GeneralA family, k < n.
Fp s_n(const Context& ctx, const mpq_class& a, long n);

// Brute-force oracle over exact rationals; practical for p <= ~50.
mpq_class exact_oracle(const SumSpec& spec, long p);

std::string family_name(FamilyTag tag);
std::string weight_name(const Weight& w);

} // namespace sc::sums
