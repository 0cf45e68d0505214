#include "supercong/seq.hpp"

#include <cstdint>

namespace sc::seq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

// C(n, 2k) mod p tables for the E/U recurrences; n < p so factorials are units.
struct SmallBinom {
    explicit SmallBinom(long p) : p_(p), fact_(static_cast<size_t>(p)), finv_(static_cast<size_t>(p)) {
        fact_[0] = 1;
        for (long i = 1; i < p; ++i)
            fact_[static_cast<size_t>(i)] = mulmod(fact_[static_cast<size_t>(i - 1)], static_cast<u64>(i), static_cast<u64>(p));
        finv_[static_cast<size_t>(p - 1)] = powmod(fact_[static_cast<size_t>(p - 1)], static_cast<u64>(p - 2));
        for (long i = p - 1; i > 0; --i)
            finv_[static_cast<size_t>(i - 1)] = mulmod(finv_[static_cast<size_t>(i)], static_cast<u64>(i), static_cast<u64>(p));
    }
    u64 powmod(u64 b, u64 e) const {
        u64 r = 1;
        b %= static_cast<u64>(p_);
        while (e) {
            if (e & 1)
                r = mulmod(r, b, static_cast<u64>(p_));
            b = mulmod(b, b, static_cast<u64>(p_));
            e >>= 1;
        }
        return r;
    }
    u64 operator()(long n, long k) const {
        if (k < 0 || k > n)
            return 0;
        return mulmod(fact_[static_cast<size_t>(n)],
                      mulmod(finv_[static_cast<size_t>(k)], finv_[static_cast<size_t>(n - k)], static_cast<u64>(p_)),
                      static_cast<u64>(p_));
    }
    long p_;
    std::vector<u64> fact_, finv_;
};

} // namespace

std::shared_ptr<const Cache::Tables> Cache::tables_for(long p, long n) {
    long need = std::max(n, p >= 3 ? p - 3 : 0L);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = by_prime_.find(p);
        if (it != by_prime_.end() &&
            static_cast<long>(it->second->euler.size()) * 2 - 2 >= need)
            return it->second;
    }
    // Fill outside the lock; a racing duplicate fill computes the same tables.
    long half = need / 2 + 1;
    SmallBinom binom(p);
    auto t = std::make_shared<Tables>();
    t->euler.resize(static_cast<size_t>(half) + 1);
    t->useq.resize(static_cast<size_t>(half) + 1);
    t->euler[0] = 1;
    t->useq[0] = 1;
    for (long i = 1; i <= half; ++i) {
        u64 se = 0, su = 0;
        for (long k = 1; k <= i; ++k) {
            u64 c = binom(2 * i, 2 * k);
            se = (se + mulmod(c, static_cast<u64>(t->euler[static_cast<size_t>(i - k)]), static_cast<u64>(p))) % static_cast<u64>(p);
            su = (su + mulmod(c, static_cast<u64>(t->useq[static_cast<size_t>(i - k)]), static_cast<u64>(p))) % static_cast<u64>(p);
        }
        t->euler[static_cast<size_t>(i)] = static_cast<long>((static_cast<u64>(p) - se) % static_cast<u64>(p));
        t->useq[static_cast<size_t>(i)] = static_cast<long>((2 * (static_cast<u64>(p) - su)) % static_cast<u64>(p));
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = by_prime_[p];
    if (!slot || static_cast<long>(slot->euler.size()) < half + 1)
        slot = t;
    return slot;
}

long Cache::euler_mod_p(long p, long n) {
    if (n < 0)
        throw OutOfRange("negative index");
    if (n % 2 == 1)
        return 0;
    return tables_for(p, n)->euler[static_cast<size_t>(n / 2)];
}

long Cache::u_mod_p(long p, long n) {
    if (n < 0)
        throw OutOfRange("negative index");
    if (n % 2 == 1)
        return 0;
    return tables_for(p, n)->useq[static_cast<size_t>(n / 2)];
}

Fp harmonic(const Context& ctx, long n, int r) {
    if (n < 0 || n >= ctx.p())
        throw OutOfRange("harmonic index must satisfy 0 <= n < p");
    if (r != 1 && r != 2)
        throw OutOfRange("harmonic order must be 1 or 2");
    mpz_class acc = 0;
    const mpz_class& m = ctx.modulus();
    for (long k = 1; k <= n; ++k) {
        mpz_class inv, kz(k);
        mpz_invert(inv.get_mpz_t(), kz.get_mpz_t(), m.get_mpz_t());
        if (r == 2)
            inv = (inv * inv) % m;
        acc = (acc + inv) % m;
    }
    return Fp::from_residue(ctx, acc, ctx.precision());
}

Fp fermat_quotient(const Context& ctx, long b) {
    if (b % ctx.p() == 0)
        throw NotAUnit("base divisible by p");
    // One extra digit so the quotient keeps full context precision.
    mpz_class m = ctx.modulus() * ctx.p();
    mpz_class r, bz(b);
    mpz_powm_ui(r.get_mpz_t(), bz.get_mpz_t(), static_cast<unsigned long>(ctx.p() - 1), m.get_mpz_t());
    r -= 1;
    if (r < 0)
        r += m;
    mpz_class q = r / ctx.p();
    return Fp::from_residue(ctx, q, ctx.precision());
}

int legendre(long a, long p) {
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        return 0;
    u64 r = 1, b = static_cast<u64>(a), e = static_cast<u64>((p - 1) / 2);
    while (e) {
        if (e & 1)
            r = mulmod(r, b, static_cast<u64>(p));
        b = mulmod(b, b, static_cast<u64>(p));
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

Fp binom_rational(const Context& ctx, const mpq_class& a, long k) {
    if (k < 0 || k >= ctx.p())
        throw OutOfRange("binomial index must satisfy 0 <= k < p");
    Fp acc = Fp::one(ctx);
    for (long j = 0; j < k; ++j) {
        mpq_class f = a - j;
        f /= (j + 1);
        acc = acc * Fp::from_rational(ctx, f);
    }
    return acc;
}

Fp binom_integer(const Context& ctx, long n, long r) {
    if (r < 0 || r > n)
        throw OutOfRange("binomial arguments out of range");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return Fp::from_integer(ctx, b);
}

Fp r_aggregate(const Context& ctx, RAggregate which) {
    const long p = ctx.p();
    const Fp one = Fp::one(ctx);
    auto fl = [&](long d) { return p / d; };
    auto half_binom = [&](long r) {
        return binom_rational(ctx, mpq_class(p - 1) / 2, r);
    };
    auto pow_fp = [&](long b, long e) {
        mpz_class r;
        mpz_class bz(b);
        mpz_powm_ui(r.get_mpz_t(), bz.get_mpz_t(), static_cast<unsigned long>(e), ctx.modulus().get_mpz_t());
        return Fp::from_residue(ctx, r, ctx.precision());
    };
    switch (which) {
    case RAggregate::R1: {
        Fp lead = Fp::from_long(ctx, 2 * p + 2) - pow_fp(2, p - 1);
        return lead * half_binom(fl(4)).pow(2);
    }
    case RAggregate::R2: {
        long s = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
        Fp inner = one + Fp::from_long(ctx, (4 + 2 * s) * p)
                   - Fp::from_long(ctx, 4) * (pow_fp(2, p - 1) - one)
                   - Fp::from_rational(ctx, mpq_class(p, 2)) * harmonic(ctx, fl(8));
        return Fp::from_long(ctx, 5 - 4 * s) * inner * half_binom(fl(8)).pow(2);
    }
    case RAggregate::R3: {
        Fp inner = Fp::from_long(ctx, 1 + 2 * p)
                   + Fp::from_rational(ctx, mpq_class(4, 3)) * (pow_fp(2, p - 1) - one)
                   - Fp::from_rational(ctx, mpq_class(3, 2)) * (pow_fp(3, p - 1) - one);
        return inner * half_binom(fl(6)).pow(2);
    }
    case RAggregate::R7: {
        // Termwise; k+1 < p is always a unit on the half range.
        Fp acc = Fp::zero(ctx);
        Fp c2k = one;
        for (long k = 0; k <= (p - 1) / 2; ++k) {
            acc = acc + c2k.pow(3) / Fp::from_long(ctx, k + 1);
            c2k = c2k * Fp::from_long(ctx, (2 * k + 1) * (2 * k + 2)) /
                  Fp::from_long(ctx, (k + 1) * (k + 1));
        }
        return acc;
    }
    }
    throw Error("unreachable");
}

} // namespace sc::seq
