#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "supercong/padic.hpp"
#include "supercong/quadform.hpp"
#include "supercong/registry.hpp"
#include "supercong/seq.hpp"
#include "supercong/sums.hpp"

namespace sc::registry {

using padic::Context;
using padic::Fp;
using Q = mpq_class;

struct Outcome {
    Status status = Status::Pass;
    mpz_class lhs, rhs;
    int mod_exp = 0;
    std::string branch;
    long x = 0, y = 0;
};

// Evaluation scratchpad for one (statement, prime).  Wraps the shared caches
// and provides the vocabulary the closed forms are written in.
struct Env {
    const Context& ctx;
    sums::TermCache& tc;
    seq::Cache& sq;
    long p;
    int mod_exp;
    long x_used = 0, y_used = 0;

    Fp fp(long n) const { return Fp::from_long(ctx, n); }
    Fp fq(const Q& q) const { return Fp::from_rational(ctx, q); }
    Fp P(int e = 1) const { return Fp::from_integer(ctx, ctx.pe(e)); }

    Fp sum(const sums::TermFamily& f, const sums::Weight& w, sums::Upper u) {
        return sums::evaluate(tc, sums::SumSpec{f, w, u});
    }
    Fp sumA(const Q& a, const sums::Weight& w, sums::Upper u) {
        return sums::evaluate(tc, sums::SumSpec{sums::TermFamily::general(a), w, u});
    }
    Fp Sp(const Q& a) const { return sums::s_n(ctx, a, p); }
    Fp Sn(const Q& a, long n) const { return sums::s_n(ctx, a, n); }

    Fp q2() const { return seq::fermat_quotient(ctx, 2); }
    Fp q3() const { return seq::fermat_quotient(ctx, 3); }
    Fp H(long n) const { return seq::harmonic(ctx, n, 1); }
    Fp H2(long n) const { return seq::harmonic(ctx, n, 2); }
    Fp Epm3() { return Fp::from_residue(ctx, sq.euler_mod_p(p, p - 3), 1); }
    Fp Upm3() { return Fp::from_residue(ctx, sq.u_mod_p(p, p - 3), 1); }
    Fp bhalf(long r) const { return seq::binom_rational(ctx, Q(p - 1) / 2, r); }
    Fp binq(const Q& a, long k) const { return seq::binom_rational(ctx, a, k); }
    Fp binz(long n, long r) const { return seq::binom_integer(ctx, n, r); }
    Fp two_pm1() const {
        mpz_class r;
        mpz_class two(2);
        mpz_powm_ui(r.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(p - 1),
                    ctx.modulus().get_mpz_t());
        return Fp::from_residue(ctx, r, ctx.precision());
    }
    long leg3() const { return seq::legendre(p, 3); }
    long sgn_half() const { return ((p - 1) / 2) % 2 == 0 ? 1 : -1; }
    long resid(const Q& a) const { return padic::residue_index(ctx, a); }
    Q aprime(const Q& a) const { return padic::a_prime(ctx, a); }

    std::pair<long, long> quad(long d) {
        auto rep = qf::represent(p, d);
        if (!rep)
            throw NoRepresentation("p=" + std::to_string(p) + " d=" + std::to_string(d));
        x_used = rep->x;
        y_used = rep->y;
        return {rep->x, rep->y};
    }
    std::pair<long, long> quad4p27() {
        auto rep = qf::represent_4p27(p);
        if (!rep)
            throw NoRepresentation("4p=x^2+27y^2 at p=" + std::to_string(p));
        x_used = rep->x;
        y_used = rep->y;
        return {rep->x, rep->y};
    }

    Fp R(seq::RAggregate which) const { return seq::r_aggregate(ctx, which); }

    // Shared factor of the 108-family p = 2 (mod 3) branches.
    Fp bracket3() {
        Fp Q2 = q2(), Q3 = q3();
        return fp(1) + P() * (fp(2) + fq(Q(4, 3)) * Q2 - fq(Q(3, 2)) * Q3) +
               P(2) * (fp(1) + fq(Q(8, 3)) * Q2 + fq(Q(2, 9)) * Q2 * Q2 - fp(3) * Q3 -
                       fp(2) * Q2 * Q3 + fq(Q(15, 8)) * Q3 * Q3 + fq(Q(3, 4)) * Upm3());
    }

    // Shared factor of the 1728-family p = 3 (mod 4) branches.  The constant
    // for 12|p-7 is 10: shifting the binomial index [p/12]+1 down to [p/12]
    // contributes (1+(48/5)p)/25, which the bare 2/5 would drop.
    Fp bracket12() {
        Q c = p % 12 == 7 ? Q(10) : Q(2);
        return fp(1) + P() * (fq(c) - fp(3) * q2() - fq(Q(5, 2)) * q3() -
                              fq(Q(2, 3)) * H(p / 12));
    }

    // c1*(p+1)^2/2^(p-1)*B^2 + c2*p^2/B^2 + c3*p^2*B^2*E_{p-3},
    // B = C((p-1)/2, (p-3)/4); the common shape of the 4|p-3 branches.
    Fp ebr(const Q& c1, const Q& c2, const Q& c3) {
        Fp B2 = bhalf((p - 3) / 4).pow(2);
        Fp acc = fq(c1) * fp(p + 1).pow(2) / two_pm1() * B2;
        if (c2 != 0)
            acc = acc + fq(c2) * P(2) / B2;
        if (c3 != 0)
            acc = acc + fq(c3) * P(2) * B2 * Epm3();
        return acc;
    }

    Outcome cmp(const std::string& branch, const Fp& lhs, const Fp& rhs, int e = 0) {
        if (e == 0)
            e = mod_exp;
        Outcome o;
        o.mod_exp = e;
        o.branch = branch;
        o.lhs = lhs.residue(e);
        o.rhs = rhs.residue(e);
        o.status = o.lhs == o.rhs ? Status::Pass : Status::Fail;
        o.x = x_used;
        o.y = y_used;
        return o;
    }

    // Chain several printed forms of one statement: first failure wins,
    // otherwise the last outcome is reported.
    Outcome all(std::initializer_list<Outcome> outcomes) {
        Outcome last;
        for (const Outcome& o : outcomes) {
            if (o.status != Status::Pass)
                return o;
            last = o;
        }
        return last;
    }
};

// One parametric sample: a rational a, or small integers (t) / (t, n).
struct Sample {
    Q a;
    long t = 0;
    long n = 0;
    std::string label;
};

enum class ParamKind { None, ASample, TSample, TNSample };

struct Statement {
    std::string id;
    Kind kind = Kind::Theorem;
    int mod_exp = 3;
    long floor = 3;
    std::string hypotheses;
    std::string annotation;
    ParamKind pk = ParamKind::None;
    std::function<bool(long)> applicable;  // beyond the floor; may be null
    std::function<Outcome(Env&)> run;
    std::function<Outcome(Env&, const Sample&)> run_param;
    // Residues of a excluded mod p (ASample statements).
    std::vector<long> excluded_residues;
    // Extra per-sample filter (exact poles etc.); may be null.
    std::function<bool(const Context&, const Q&)> extra_admissible;
};

const std::vector<Statement>& statements();

void register_catalog_head(std::vector<Statement>& out);  // 1.x, 2.x, 3.x + cited
void register_catalog_mid(std::vector<Statement>& out);   // 4.x .. 12.x
void register_catalog_conj(std::vector<Statement>& out);  // 13.x

bool admissible_a(const Statement& st, const Context& ctx, const Q& a);

sums::Weight wk(int j);
sums::Weight winv(const Q& alpha, const Q& beta, int j);

} // namespace sc::registry
