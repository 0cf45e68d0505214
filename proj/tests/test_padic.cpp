#include <doctest.h>

#include <random>

#include "supercong/padic.hpp"

using namespace sc;
using padic::Context;
using padic::Fp;
using Q = mpq_class;

TEST_CASE("context construction") {
    Context c7 = padic::make_context(7, 3);
    CHECK(c7.modulus() == 343);
    Context c13 = padic::make_context(13, 1);
    CHECK(c13.modulus() == 13);
    CHECK_THROWS_AS(padic::make_context(4, 3), CompositeModulus);
    CHECK_THROWS_AS(padic::make_context(9, 2), CompositeModulus);
    CHECK_THROWS_AS(padic::make_context(7, 0), BadPrecision);
}

TEST_CASE("from_rational embeds valuation and unit") {
    Context ctx(7, 3);
    Fp x = Fp::from_rational(ctx, Q(3, 4));
    CHECK(x.valuation() == 0);
    mpz_class inv4;
    mpz_class four(4), m(343);
    mpz_invert(inv4.get_mpz_t(), four.get_mpz_t(), m.get_mpz_t());
    CHECK(x.unit() == 3 * inv4 % 343);

    Fp y = Fp::from_rational(ctx, Q(14, 3));
    CHECK(y.valuation() == 1);
    mpz_class inv3;
    mpz_class three(3);
    mpz_invert(inv3.get_mpz_t(), three.get_mpz_t(), m.get_mpz_t());
    CHECK(y.unit() == 2 * inv3 % 343);

    CHECK(Fp::from_rational(ctx, Q(0)).is_zero());
}

TEST_CASE("ring operations") {
    Context ctx(5, 4);
    auto fq = [&](const Q& q) { return Fp::from_rational(ctx, q); };
    CHECK((fq(Q(1, 2)) * fq(2)).residue(4) == 1);
    CHECK((fq(Q(1, 5)) + fq(Q(-1, 5))).is_zero());

    Fp s = fq(3) + fq(2);  // 5 = 5^1 * 1, one digit consumed by the carry
    CHECK(s.valuation() == 1);
    CHECK(s.unit() == 1);
    CHECK(s.prec() == 3);

    CHECK_THROWS_AS(fq(1) / Fp::zero(ctx), DivisionByZero);
    CHECK((-fq(2)).residue(1) == 3);
    CHECK(fq(2).pow(0).residue(4) == 1);
    CHECK(fq(2).pow(-2).congruent(fq(Q(1, 4)), 4));
}

TEST_CASE("reduce_mod") {
    Context c7(7, 4);
    Fp x = Fp::from_rational(c7, Q(-1, 8));
    CHECK(x.residue(3) == 300);  // -inv(8) mod 343, and 8*43 = 344 = 343+1

    Context c5(5, 4);
    CHECK(Fp::from_rational(c5, Q(25)).residue(3) == 25);
    CHECK_THROWS_AS(Fp::from_rational(c5, Q(1, 5)).residue(2), NegativeValuation);
    Fp lowprec = Fp::from_residue(c5, 7, 1);
    CHECK_THROWS_AS(lowprec.residue(3), PrecisionExhausted);
}

TEST_CASE("residue_index and a_prime") {
    Context c7(7, 3);
    CHECK(padic::residue_index(c7, Q(-1, 2)) == 3);
    CHECK(padic::residue_index(c7, Q(2, 3)) == 3);
    CHECK(padic::residue_index(c7, Q(5)) == 5);
    CHECK_THROWS_AS(padic::residue_index(c7, Q(1, 7)), NotPAdicInteger);

    CHECK(padic::a_prime(c7, Q(1, 2)) == Q(-1, 2));
    CHECK(padic::a_prime(c7, Q(5)) == 0);
    Context c13(13, 3);
    Q ap = padic::a_prime(c13, Q(-1, 6));
    CHECK(ap == Q(-1, 6));
    CHECK(ap * (ap + 1) == Q(-5, 36));
}

TEST_CASE("round trip over random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 120);
    for (long p : {5L, 13L, 101L}) {
        Context ctx(p, 6);
        for (int i = 0; i < 200; ++i) {
            long n = num(rng), d = den(rng);
            if (d % p == 0)
                continue;
            Q q(n, d);
            q.canonicalize();
            Fp x = Fp::from_rational(ctx, q);
            if (x.is_zero() || x.valuation() < 0)
                continue;
            for (int e = 1; e <= 6; ++e) {
                mpz_class m = ctx.pe(e);
                mpz_class invd;
                mpz_class dz(q.get_den());
                mpz_invert(invd.get_mpz_t(), dz.get_mpz_t(), m.get_mpz_t());
                mpz_class expect = q.get_num() * invd % m;
                if (expect < 0)
                    expect += m;
                CHECK(x.residue(e) == expect);
            }
        }
    }
}

TEST_CASE("ring laws hold in attained precision") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 40);
    Context ctx(7, 6);
    auto draw = [&]() {
        for (;;) {
            long n = num(rng), d = den(rng);
            if (d % 7 == 0 || n == 0)
                continue;
            Q q(n, d);
            q.canonicalize();
            return Fp::from_rational(ctx, q);
        }
    };
    for (int i = 0; i < 300; ++i) {
        Fp a = draw(), b = draw(), c = draw();
        CHECK((a * b).congruent(b * a, 4));
        CHECK(((a * b) * c).congruent(a * (b * c), 4));
        Fp lhs = a * (b + c), rhs = a * b + a * c;
        CHECK((lhs - rhs).is_zero());
        CHECK((a * a.inv()).congruent(Fp::one(ctx), 6));
        // valuation additivity
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
    }
}

TEST_CASE("a = <a>_p + p a' exactly") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 12);
    for (long p : {7L, 11L, 101L}) {
        Context ctx(p, 6);
        for (int i = 0; i < 100; ++i) {
            Q a(num(rng), den(rng));
            a.canonicalize();
            if (a.get_den() % p == 0)
                continue;
            long r = padic::residue_index(ctx, a);
            CHECK(a == r + p * padic::a_prime(ctx, a));
        }
    }
}

TEST_CASE("cancellation tracks precision loss") {
    Context ctx(5, 4);
    // (1 + 5^3) - 1 has three digits of carry; one digit of unit remains
    Fp a = Fp::from_long(ctx, 1 + 125);
    Fp d = a - Fp::one(ctx);
    CHECK(d.valuation() == 3);
    CHECK(d.prec() == 1);
    // subtracting values equal through all attained digits collapses to zero
    CHECK((a - a).is_zero());
}

TEST_CASE("collapsed zeros remember their certified precision") {
    Context ctx(5, 3);
    // exact zeros reduce at any exponent
    CHECK(Fp::zero(ctx).residue(3) == 0);
    CHECK((Fp::from_long(ctx, 7) - Fp::from_long(ctx, 7)).residue(3) == 0);

    // a cancellation of all three attained digits certifies only p^3
    Fp a = Fp::from_residue(ctx, 1 + 2 * 25, 3);
    Fp b = Fp::from_residue(ctx, 1 + 2 * 25, 3);
    Fp z = a - b;
    CHECK(z.is_zero());
    CHECK(z.zero_bound() == 3);
    CHECK(z.residue(3) == 0);

    // scaling by p raises the bound; dividing lowers it
    Fp zp = z * Fp::from_long(ctx, 5);
    CHECK(zp.zero_bound() == 4);
    Fp zd = z / Fp::from_long(ctx, 5);
    CHECK(zd.zero_bound() == 2);
    CHECK_THROWS_AS(zd.residue(3), PrecisionExhausted);

    // a residue that vanishes mod p^1 is not an exact zero
    Fp e1 = Fp::from_residue(ctx, 0, 1);
    CHECK(e1.is_zero());
    CHECK(e1.zero_bound() == 1);
    CHECK(e1.residue(1) == 0);
    CHECK_THROWS_AS(e1.residue(2), PrecisionExhausted);

    // adding a low-precision zero caps the other operand's certainty
    Fp x = Fp::from_long(ctx, 7);
    Fp sum = x + e1;
    CHECK(sum.prec() == 1);
    CHECK(sum.residue(1) == 2);
    CHECK_THROWS_AS(sum.residue(2), PrecisionExhausted);

    // powers outside the table are refused rather than read out of range
    CHECK_THROWS_AS(ctx.pe(4), PrecisionExhausted);
}
