#include <doctest.h>

#include <random>

#include "supercong/primes.hpp"
#include "supercong/quadform.hpp"
#include "supercong/seq.hpp"
#include "supercong/sums.hpp"

using namespace sc;
using padic::Context;
using padic::Fp;
using sums::SumSpec;
using sums::TermFamily;
using sums::Upper;
using sums::Weight;
using Q = mpq_class;

TEST_CASE("term values") {
    Context ctx(7, 4);
    sums::TermCache tc(ctx);
    // C(4,2)^3/64^2 = 27/512, same through the general family at a = -1/2
    Fp t1 = sums::term_value(tc, TermFamily::central_cube(64), 2);
    CHECK(t1.congruent(Fp::from_rational(ctx, Q(27, 512)), 4));
    Fp t2 = sums::term_value(tc, TermFamily::general(Q(-1, 2)), 2);
    CHECK((t1 - t2).is_zero());

    CHECK(sums::term_value(tc, TermFamily::central_cube(64), 0).congruent(Fp::one(ctx), 4));
    Fp t3 = sums::term_value(tc, TermFamily::mixed6k(1728), 1);
    CHECK(t3.congruent(Fp::from_rational(ctx, Q(5, 72)), 4));
}

TEST_CASE("weight values") {
    Context ctx(7, 4);
    CHECK(sums::weight_value(ctx, Weight::kpow(2), 3).residue(2) == 9);
    CHECK(sums::weight_value(ctx, Weight::inv_linear(2, -1, 1), 0)
              .congruent(Fp::from_long(ctx, -1), 4));
    CHECK_THROWS_AS(sums::weight_value(ctx, Weight::inv_linear(1, -2, 1), 2), ExactPole);
    // half-integer offsets never hit an exact pole at integer k
    CHECK_NOTHROW(sums::weight_value(ctx, Weight::inv_linear(1, Q(-1, 2), 1), 5));
}

TEST_CASE("partial sums S_n") {
    Context ctx(13, 6);
    CHECK(sums::s_n(ctx, Q(3, 7), 1).congruent(Fp::one(ctx), 6));
    CHECK(sums::s_n(ctx, Q(-5, 4), 1).congruent(Fp::one(ctx), 6));

    // value at a = p t for t = 1: 1 - 2(2^{p-1}-1) + 3(2^{p-1}-1)^2 at p = 7
    Context c7(7, 6);
    Fp w = Fp::from_long(c7, (1 << 6) - 1);
    Fp expect = Fp::one(c7) - Fp::from_long(c7, 2) * w + Fp::from_long(c7, 3) * w * w;
    CHECK(sums::s_n(c7, Q(7), 7).congruent(expect, 3));

    // odd-residue closed form at p = 13, a = 1/2:
    // a'(a'+1) p^2 / (a^2 C((p-1)/2,(<a>_p-1)/2)^2), <1/2>_13 = 7, a' = -1/2
    Context c13(13, 6);
    Fp lhs = sums::s_n(c13, Q(1, 2), 13);
    Fp b = seq::binom_rational(c13, Q(6), 3);
    Fp rhs = Fp::from_rational(c13, Q(-1, 4)) * Fp::from_long(c13, 169) /
             (Fp::from_rational(c13, Q(1, 4)) * b * b);
    CHECK(lhs.congruent(rhs, 3));
}

TEST_CASE("evaluate matches closed forms at spot primes") {
    // p = 13 = 3^2 + 4 1^2: full cube sum = 4 x^2 - 2p - p^2/(4x^2) (mod p^3)
    Context ctx(13, 6);
    sums::TermCache tc(ctx);
    Fp lhs = sums::evaluate(tc, SumSpec{TermFamily::central_cube(64), Weight::kpow(0), Upper::PM1});
    Fp rhs = Fp::from_long(ctx, 36 - 26) - Fp::from_rational(ctx, Q(169, 36));
    CHECK(lhs.congruent(rhs, 3));

    // S_5(1/2) = -25/4 = 25 (mod 125)
    Context c5(5, 6);
    CHECK(sums::s_n(c5, Q(1, 2), 5).residue(3) == 25);
}

TEST_CASE("oracle spot values") {
    SumSpec spec{TermFamily::central_cube(1), Weight::inv_linear(1, 1, 1), Upper::Half};
    CHECK(sums::exact_oracle(spec, 5) == 77);

    SumSpec gen0{TermFamily::general(Q(0)), Weight::kpow(0), Upper::PM1};
    CHECK(sums::exact_oracle(gen0, 11) == 1);

    SumSpec pole{TermFamily::central_cube(64), Weight::inv_linear(1, -2, 1), Upper::PM1};
    CHECK_THROWS_AS(sums::exact_oracle(pole, 7), ExactPole);
}

TEST_CASE("family identities: the general family specializes") {
    for (long p : {11L, 23L}) {
        Context ctx(p, 6);
        sums::TermCache tc(ctx);
        auto terms_m12 = sums::general_terms(ctx, Q(-1, 2), p - 1);
        auto terms_m13 = sums::general_terms(ctx, Q(-1, 3), p - 1);
        auto terms_m14 = sums::general_terms(ctx, Q(-1, 4), p - 1);
        auto terms_m16 = sums::general_terms(ctx, Q(-1, 6), p - 1);
        for (long k = 0; k < p; ++k) {
            CHECK((terms_m12[k] - sums::term_value(tc, TermFamily::central_cube(64), k)).is_zero());
            CHECK((terms_m13[k] - sums::term_value(tc, TermFamily::central_sq3k(108), k)).is_zero());
            CHECK((terms_m14[k] - sums::term_value(tc, TermFamily::central_sq4k2k(256), k)).is_zero());
            CHECK((terms_m16[k] - sums::term_value(tc, TermFamily::mixed6k(1728), k)).is_zero());
        }
    }
}

TEST_CASE("truncation: full and half ranges agree mod p^3 for the cube family") {
    for (long p : primes_in(5, 60)) {
        Context ctx(p, 6);
        sums::TermCache tc(ctx);
        // p | C(2k,k) for p/2 < k < p, so the cube terms carry valuation >= 3
        for (long k = (p + 1) / 2; k < p; ++k)
            CHECK(sums::term_value(tc, TermFamily::central_cube(64), k).valuation() >= 3);
        Fp full = sums::evaluate(tc, SumSpec{TermFamily::central_cube(64), Weight::kpow(0), Upper::PM1});
        Fp half = sums::evaluate(tc, SumSpec{TermFamily::central_cube(64), Weight::kpow(0), Upper::Half});
        CHECK(full.congruent(half, 3));
    }
}

TEST_CASE("shifting the cubed odd denominator to a k+1 cube") {
    // sum_{k=1}^{p-1} C(2k,k)^3/(m^k (2k-1)^3) = (8/m) sum_{r=0}^{p-2} C(2r,r)^3/(m^r (r+1)^3)
    auto cube = [](long n) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
        return mpq_class(b * b * b);
    };
    for (long p : {5L, 7L, 11L, 13L}) {
        for (long m : {64L, 16L, -8L}) {
            mpq_class lhs = 0, rhs = 0, mp = 1;
            for (long k = 1; k < p; ++k) {
                mp *= m;
                lhs += cube(k) / (mp * (2 * k - 1) * (2 * k - 1) * (2 * k - 1));
            }
            mp = 1;
            for (long r = 0; r <= p - 2; ++r) {
                rhs += cube(r) / (mp * (r + 1) * (r + 1) * (r + 1));
                mp *= m;
            }
            CHECK(lhs == mpq_class(8) / m * rhs);
        }
    }
}

TEST_CASE("oracle equivalence on random specs") {
    std::mt19937_64 rng(20240817);
    auto primes = primes_in(5, 47);
    std::uniform_int_distribution<size_t> pick_p(0, primes.size() - 1);
    std::uniform_int_distribution<int> pick_fam(0, 4), pick_w(0, 5), j3(0, 3);
    std::uniform_int_distribution<long> pick_m(1, 6), num(-9, 9), den(1, 9);
    int done = 0;
    while (done < 40) {
        long p = primes[pick_p(rng)];
        TermFamily fam;
        switch (pick_fam(rng)) {
        case 0: {
            Q a(num(rng), den(rng));
            a.canonicalize();
            if (a.get_den() % p == 0)
                continue;
            fam = TermFamily::general(a);
            break;
        }
        case 1: fam = TermFamily::central_cube(std::vector<long>{64, 16, -8, 256, 4096, -512}[pick_m(rng) - 1]); break;
        case 2: fam = TermFamily::central_sq3k(pick_m(rng) % 2 ? 108 : -192); break;
        case 3: fam = TermFamily::central_sq4k2k(pick_m(rng) % 2 ? 256 : -144); break;
        default: fam = TermFamily::mixed6k(1728); break;
        }
        Weight w;
        switch (pick_w(rng)) {
        case 0: w = Weight::kpow(j3(rng)); break;
        case 1: w = Weight::inv_linear(1, 1, 1 + j3(rng) % 3); break;
        case 2: w = Weight::inv_linear(2, -1, 1 + j3(rng) % 3); break;
        case 3: w = Weight::inv_linear(1, 2, 1 + j3(rng) % 2); break;
        case 4: w = Weight::inv_linear(1, 3, 1); break;
        default: w = Weight::inv_linear(2, -3, 1); break;
        }
        Upper u = std::vector<Upper>{Upper::PM1, Upper::PM2, Upper::PM3, Upper::PM4,
                                     Upper::Half}[static_cast<size_t>(j3(rng)) % 5];
        SumSpec spec{fam, w, u};
        Context ctx(p, 7);
        sums::TermCache tc(ctx);
        Fp got = sums::evaluate(tc, spec);
        Fp want = Fp::from_rational(ctx, sums::exact_oracle(spec, p));
        CHECK((got - want).is_zero());
        ++done;
    }
}
