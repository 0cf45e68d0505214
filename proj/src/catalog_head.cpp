#include "supercong/errors.hpp"

#include "catalog.hpp"

namespace sc::registry {

using sums::TermFamily;
using sums::Upper;

sums::Weight wk(int j) { return sums::Weight::kpow(j); }
sums::Weight winv(const Q& alpha, const Q& beta, int j) {
    return sums::Weight::inv_linear(alpha, beta, j);
}

namespace {

Statement base(std::string id, Kind kind, int e, long floor, std::string hyp) {
    Statement s;
    s.id = std::move(id);
    s.kind = kind;
    s.mod_exp = e;
    s.floor = floor;
    s.hypotheses = std::move(hyp);
    return s;
}

Statement param(std::string id, Kind kind, int e, long floor, std::string hyp,
                std::vector<long> excluded) {
    Statement s = base(std::move(id), kind, e, floor, std::move(hyp));
    s.pk = ParamKind::ASample;
    s.excluded_residues = std::move(excluded);
    return s;
}

// 4x^2 - 2p - p^2/(4x^2)
Fp classic_rhs(Env& e, long x) {
    Fp X = e.fp(x * x);
    return e.fp(4) * X - e.fp(2 * e.p) - e.P(2) / (e.fp(4) * X);
}

} // namespace

void register_catalog_head(std::vector<Statement>& out) {
    // ---- central cube / 64, weight 1 ----
    {
        Statement s = base("EQ1.1", Kind::CitedResult, 3, 3, "p > 3; branches on p mod 4");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_cube(64), wk(0), Upper::PM1);
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                return e.cmp("p=x^2+4y^2", lhs, classic_rhs(e, x));
            }
            Fp rhs = -e.P(2) / e.bhalf((e.p - 3) / 4).pow(2);
            return e.cmp("3mod4", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- sq3k / 108, weight 1 ----
    {
        Statement s = base("EQ1.2", Kind::CitedResult, 3, 3, "p > 3; branches on p mod 3");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_sq3k(108), wk(0), Upper::PM1);
            if (e.p % 3 == 1) {
                auto [x, y] = e.quad(3);
                return e.cmp("p=x^2+3y^2", lhs, classic_rhs(e, x));
            }
            Fp rhs = -e.P(2) / (e.fp(2) * e.bhalf((e.p - 5) / 6).pow(2));
            return e.cmp("2mod3", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- sq4k2k / 256, weight 1 ----
    {
        Statement s = base("EQ1.3", Kind::CitedResult, 3, 3, "p > 3; branches on p mod 8");
        s.annotation = "printed constant -1/3 for both 5,7 mod 8; the 5 mod 8 class takes -3 "
                       "(follows from the parametric evaluation at a=-1/4)";
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_sq4k2k(256), wk(0), Upper::PM1);
            long m8 = e.p % 8;
            if (m8 == 1 || m8 == 3) {
                auto [x, y] = e.quad(2);
                return e.cmp("p=x^2+2y^2", lhs, classic_rhs(e, x));
            }
            Fp B2 = e.bhalf(e.p / 8).pow(2);
            Fp rhs = m8 == 5 ? -e.fp(3) * e.P(2) / B2 : -e.P(2) / (e.fp(3) * B2);
            return e.cmp(m8 == 5 ? "5mod8" : "7mod8", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- mixed6k / 1728, weight 1, with Legendre prefactor ----
    {
        Statement s = base("EQ1.4", Kind::CitedResult, 3, 3, "p > 3; branches on p mod 4");
        s.run = [](Env& e) {
            Fp lhs = e.fp(e.leg3()) * e.sum(TermFamily::mixed6k(1728), wk(0), Upper::PM1);
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                return e.cmp("p=x^2+4y^2", lhs, classic_rhs(e, x));
            }
            Fp rhs = e.fq(Q(5, 12)) * e.P(2) / e.binq(Q(e.p - 3) / 2, (e.p - 3) / 4).pow(2);
            return e.cmp("3mod4", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- cited: half-range cube / 64 with weight 1/(k+1)^3 ----
    {
        Statement s = base("R-Tauraso", Kind::CitedResult, 3, 3, "p > 3; branches on p mod 4");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_cube(64), winv(1, 1, 3), Upper::Half);
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                Fp rhs = e.fp(8) + e.fp(6) * e.P(2) / e.fp(x * x);
                return e.cmp("p=x^2+4y^2", lhs, rhs);
            }
            Fp B2 = e.binq(Q(e.p - 3) / 2, (e.p - 3) / 4).pow(2);
            Fp den = e.two_pm1() * (e.fp(1 + 2 * e.p) +
                                    (e.fp(3) - e.fq(Q(1, 2)) * e.Epm3()) * e.P(2));
            return e.cmp("3mod4", lhs, e.fp(8) - e.fp(96) * B2 / den);
        };
        out.push_back(std::move(s));
    }
    // ---- cited: sq3k / 108 for p = 5 (mod 6), rational-binomial form ----
    {
        Statement s = base("R-Guo", Kind::CitedResult, 3, 3, "p = 5 (mod 6)");
        s.applicable = [](long p) { return p % 6 == 5; };
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_sq3k(108), wk(0), Upper::PM1);
            long k1 = (2 * e.p - 1) / 3, k2 = (e.p - 2) / 3;
            Fp rhs = e.fp(2 * e.p) * e.binq(Q(-2, 3), k1) / (e.fp(3) * e.binq(Q(-7, 6), k1)) +
                     e.P() * e.binq(Q(-5, 6), k2) / (e.fp(3) * e.binq(Q(-4, 3), k2));
            return e.cmp("5mod6", lhs, rhs);
        };
        out.push_back(std::move(s));
    }

    // ---- the two-step recurrence in a, at n = p ----
    {
        Statement s = param("L2.1", Kind::Lemma, 4, 3, "p > 3; a != -1 (mod p); second branch at <a>_p = p-2",
                            {-1});
        s.run_param = [](Env& e, const Sample& smp) {
            const Q& a = smp.a;
            long r = e.resid(a);
            Q ap = e.aprime(a);
            Fp lhs = e.fq((a + 2) * (a + 2)) * e.Sp(a + 2) - e.fq((a + 1) * (a + 1)) * e.Sp(a);
            if (r < e.p - 2) {
                Fp rhs = e.fq((1 / (a + 1) + 1 / (a + 2)) * ap * (ap + 1)) * e.P(3);
                return e.cmp("generic", lhs, rhs, 4);
            }
            return e.cmp("edge-p-2", lhs, e.fq(a + 2) * e.P(), 3);
        };
        out.push_back(std::move(s));
    }
    // ---- value at a = p*t ----
    {
        Statement s = base("L2.2", Kind::Lemma, 3, 2, "odd p; t a p-adic integer");
        s.pk = ParamKind::TSample;
        s.run_param = [](Env& e, const Sample& smp) {
            Q t(smp.t);
            Fp lhs = e.Sp(Q(e.p) * t);
            Fp w = e.two_pm1() - e.fp(1);
            Fp rhs = e.fp(1) - e.fq(2 * t) * w + e.fq(2 * t * t + t) * w * w;
            return e.cmp("", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- binomial shift C((p-1)/2 + pt, n) ----
    {
        Statement s = base("L2.3", Kind::Lemma, 3, 2, "odd p; t p-adic; 1 <= n <= (p-1)/2");
        s.pk = ParamKind::TNSample;
        s.run_param = [](Env& e, const Sample& smp) {
            Q t(smp.t);
            long n = smp.n;
            Fp lhs = e.binq(Q(e.p - 1) / 2 + e.p * t, n);
            Q s1 = 0, s2 = 0;
            for (long k = 1; k <= n; ++k) {
                s1 += Q(1, 2 * k - 1);
                s2 += Q(1, (2 * k - 1) * (2 * k - 1));
            }
            Fp rhs = e.bhalf(n) *
                     (e.fp(1) - e.fq(2 * t * s1) * e.P() +
                      e.fq(2 * t * (t * s1 * s1 - (t + 1) * s2)) * e.P(2));
            return e.cmp("", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- harmonic values at (p-1)/2 and [p/4] ----
    {
        Statement s = base("L2.4.i", Kind::Lemma, 2, 3, "p > 3");
        s.run = [](Env& e) {
            Fp Q2 = e.q2();
            return e.cmp("", e.H((e.p - 1) / 2), -e.fp(2) * Q2 + e.P() * Q2 * Q2);
        };
        out.push_back(std::move(s));
    }
    {
        Statement s = base("L2.4.ii", Kind::Lemma, 1, 3, "p > 3");
        s.run = [](Env& e) { return e.cmp("", e.H2((e.p - 1) / 2), Fp::zero(e.ctx)); };
        out.push_back(std::move(s));
    }
    {
        Statement s = base("L2.4.iii", Kind::Lemma, 2, 3, "p > 3");
        s.run = [](Env& e) {
            Fp Q2 = e.q2();
            Fp rhs = -e.fp(3) * Q2 + e.fq(Q(3, 2)) * e.P() * Q2 * Q2 -
                     e.fp(e.sgn_half()) * e.P() * e.Epm3();
            return e.cmp("", e.H(e.p / 4), rhs);
        };
        out.push_back(std::move(s));
    }
    {
        Statement s = base("L2.4.iv", Kind::Lemma, 1, 3, "p > 3");
        s.run = [](Env& e) {
            return e.cmp("", e.H2(e.p / 4), e.fp(4 * e.sgn_half()) * e.Epm3());
        };
        out.push_back(std::move(s));
    }
    // ---- S_p(1/2) ----
    {
        Statement s = base("L2.5", Kind::Lemma, 3, 3, "p > 3; branches on p mod 4");
        s.run = [](Env& e) {
            Fp lhs = e.Sp(Q(1, 2));
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                return e.cmp("p=x^2+4y^2", lhs, -e.P(2) / e.fp(4 * x * x));
            }
            Fp B2 = e.bhalf((e.p - 3) / 4).pow(2);
            Fp rhs = e.fp((e.p + 1) * (e.p + 1)) / e.two_pm1() * B2 +
                     e.P(2) / e.fp(2) * B2 * e.Epm3();
            return e.cmp("3mod4", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- S_p(a), both parities of <a>_p, both printed forms ----
    {
        Statement s = param("T2.1", Kind::Theorem, 3, 2, "odd p; a != 0, -1 (mod p)", {0, -1});
        s.run_param = [](Env& e, const Sample& smp) {
            const Q& a = smp.a;
            long r = e.resid(a);
            Q ap = e.aprime(a);
            Fp lhs = e.Sp(a);
            if (r % 2 == 0) {
                long n = r / 2;
                Fp w = e.two_pm1() - e.fp(1);
                Fp rhs1 = e.binq((a - 1) / 2, n).pow(2) / e.binq(a / 2, n).pow(2) *
                          (e.fp(1) - e.fq(2 * ap) * w + e.fq(ap * (2 * ap + 1)) * w * w);
                Fp br = e.fq(2 * ap + 2) * e.H(r) - e.fq(2 * ap + 1) * e.H(n) - e.fq(2 * ap) * e.q2();
                Fp rhs2 = e.bhalf(n).pow(2) *
                          (e.fp(1) + e.P() * br +
                           e.P(2) / e.fp(2) *
                               (e.fq(2 * ap) * e.q2().pow(2) + br * br +
                                e.fq((2 * ap * ap - 1) / 2) * e.H2(n) +
                                e.fq(2 * (1 - ap * ap)) * e.H2(r)));
                return e.all({e.cmp("even/ratio-form", lhs, rhs1),
                              e.cmp("even/harmonic-form", lhs, rhs2)});
            }
            Fp rhs1 = e.fp(4).pow(r - 1) * e.fq(ap * (ap + 1) / (a * a)) * e.P(2) /
                      e.binz(r - 1, (r - 1) / 2).pow(2);
            Fp rhs2 = e.fq(ap * (ap + 1) / (a * a)) * e.P(2) / e.bhalf((r - 1) / 2).pow(2);
            return e.all({e.cmp("odd/4power-form", lhs, rhs1),
                          e.cmp("odd/half-form", lhs, rhs2)});
        };
        out.push_back(std::move(s));
    }
    // ---- cube / 64 with weight 1/(2k-1) ----
    {
        Statement s = base("T2.2", Kind::Theorem, 3, 3, "p > 3; branches on p mod 4");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_cube(64), winv(2, -1, 1), Upper::PM1);
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                Fp X = e.fp(x * x);
                Fp rhs = -e.fp(2) * X + e.P() + e.P(2) / (e.fp(4) * X);
                return e.cmp("p=x^2+4y^2", lhs, rhs);
            }
            Fp B2 = e.bhalf((e.p - 3) / 4).pow(2);
            Fp rhs = -e.fq(Q(1, 4)) * (e.fp(2) + e.P(2) * e.Epm3()) *
                         e.fp((e.p + 1) * (e.p + 1)) / e.two_pm1() * B2 +
                     e.P(2) / (e.fp(2) * B2);
            return e.cmp("3mod4", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- mixed6k / 1728 for p = 3 (mod 4) ----
    {
        Statement s = base("Cor2.1", Kind::Corollary, 3, 3, "p = 3 (mod 4); branches on p mod 12");
        s.applicable = [](long p) { return p % 4 == 3; };
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::mixed6k(1728), wk(0), Upper::PM1);
            Fp B2 = e.bhalf(e.p / 12).pow(2);
            if (e.p % 12 == 7)
                return e.cmp("7mod12", lhs, -e.fp(5) * e.P(2) / B2);
            return e.cmp("11mod12", lhs, -e.P(2) / (e.fp(5) * B2));
        };
        out.push_back(std::move(s));
    }

    // ---- k = p-1 term of the weight-1/(k+1) family ----
    {
        Statement s = param("L3.2", Kind::Lemma, 3, 2, "odd p; a != 0, -1 (mod p)", {0, -1});
        s.run_param = [](Env& e, const Sample& smp) {
            const Q& a = smp.a;
            Q ap = e.aprime(a);
            Fp lhs = e.binq(a, e.p - 1) * e.binq(-1 - a, e.p - 1) *
                     e.binz(2 * (e.p - 1), e.p - 1) / (e.fp(4).pow(e.p - 1) * e.P());
            Fp rhs = -e.fq(ap * (ap + 1) / (a * (a + 1))) * e.P(2);
            return e.cmp("", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- harmonic values at thirds ----
    {
        Statement s = base("L3.3.i", Kind::Lemma, 2, 3, "p > 3");
        s.run = [](Env& e) {
            Fp Q3 = e.q3();
            Fp rhs = -e.fq(Q(3, 2)) * Q3 + e.fq(Q(3, 4)) * e.P() * Q3 * Q3 -
                     e.fp(e.leg3()) * e.P() * e.Upm3();
            return e.cmp("", e.H(e.p / 3), rhs);
        };
        out.push_back(std::move(s));
    }
    {
        Statement s = base("L3.3.ii", Kind::Lemma, 2, 3, "p > 3");
        s.run = [](Env& e) {
            Fp Q3 = e.q3();
            Fp rhs = -e.fq(Q(3, 2)) * Q3 + e.fq(Q(3, 4)) * e.P() * Q3 * Q3 +
                     e.fp(2 * e.leg3()) * e.P() * e.Upm3();
            return e.cmp("", e.H(2 * e.p / 3), rhs);
        };
        out.push_back(std::move(s));
    }
    {
        Statement s = base("L3.3.iii", Kind::Lemma, 1, 3, "p > 3");
        s.run = [](Env& e) {
            return e.cmp("", e.H2(e.p / 3), e.fp(3 * e.leg3()) * e.Upm3());
        };
        out.push_back(std::move(s));
    }
    {
        Statement s = base("L3.3.iv", Kind::Lemma, 1, 3, "p > 3");
        s.run = [](Env& e) {
            return e.cmp("", -e.H2(2 * e.p / 3), e.fp(3 * e.leg3()) * e.Upm3());
        };
        out.push_back(std::move(s));
    }
    // ---- weight 1/(k+1): truncation relation + S_p forms + explicit forms ----
    {
        Statement s = param("T3.1", Kind::Theorem, 3, 2, "odd p; a != 0, -1 (mod p)", {0, -1});
        s.run_param = [](Env& e, const Sample& smp) {
            const Q& a = smp.a;
            long r = e.resid(a);
            Q ap = e.aprime(a);
            Fp full = e.sumA(a, winv(1, 1, 1), Upper::PM1);
            Fp trunc = e.sumA(a, winv(1, 1, 1), Upper::PM2);
            Fp spa = e.Sp(a), spa1 = e.Sp(a + 1);
            Outcome o1 = e.cmp("full-vs-trunc", full + e.fq(ap * (ap + 1) / (a * (a + 1))) * e.P(2), trunc);
            Outcome o2 = e.cmp("S_p-form", trunc, spa + e.fq((a + 1) / a) * spa1);
            if (o1.status != Status::Pass)
                return o1;
            if (o2.status != Status::Pass)
                return o2;
            if (r % 2 == 0) {
                long n = r / 2;
                Fp br = e.fq(2 * ap + 2) * e.H(r) - e.fq(2 * ap + 1) * e.H(n) - e.fq(2 * ap) * e.q2();
                Fp rhs = e.bhalf(n).pow(2) *
                             (e.fp(1) + e.P() * br +
                              e.P(2) / e.fp(2) *
                                  (e.fq(2 * ap) * e.q2().pow(2) + br * br +
                                   e.fq((2 * ap * ap - 1) / 2) * e.H2(n) +
                                   e.fq(2 * (1 - ap * ap)) * e.H2(r))) +
                         e.P(2) * e.fq(ap * (ap + 1) / (a * (a + 1))) / e.bhalf(n).pow(2);
                return e.cmp("even-explicit", trunc, rhs);
            }
            if (r != e.p - 2) {
                long n = (r + 1) / 2;
                Fp br = e.fq(2 * ap + 2) * e.H(r + 1) - e.fq(2 * ap + 1) * e.H(n) -
                        e.fq(2 * ap) * e.q2();
                Fp rhs = e.fq((a + 1) / a) * e.bhalf(n).pow(2) *
                             (e.fp(1) + e.P() * br +
                              e.P(2) / e.fp(2) *
                                  (e.fq(2 * ap) * e.q2().pow(2) + br * br +
                                   e.fq((2 * ap * ap - 1) / 2) * e.H2(n) +
                                   e.fq(2 * (1 - ap * ap)) * e.H2(r + 1))) +
                         e.P(2) * e.fq(ap * (ap + 1) / ((a + 1) * (a + 1))) / e.bhalf(n).pow(2);
                return e.cmp("odd-explicit", trunc, rhs);
            }
            return o2;
        };
        out.push_back(std::move(s));
    }
    // ---- cube / 64 with 1/(k+1), half range ----
    {
        Statement s = base("T3.2", Kind::Theorem, 3, 2, "odd p; branches on p mod 4");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_cube(64), winv(1, 1, 1), Upper::Half);
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                return e.cmp("p=x^2+4y^2", lhs, e.fp(4 * x * x) - e.fp(2 * e.p));
            }
            Fp B2 = e.bhalf((e.p - 3) / 4).pow(2);
            Fp rhs = -e.fp((e.p + 1) * (e.p + 1)) / e.two_pm1() * B2 -
                     e.P(2) * (e.fp(1) / B2 + e.fq(Q(1, 2)) * B2 * e.Epm3());
            return e.cmp("3mod4", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- sq3k / 108 with 1/(k+1), k <= p-2 ----
    {
        Statement s = base("T3.3", Kind::Theorem, 3, 3, "p > 3; branches on p mod 3");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_sq3k(108), winv(1, 1, 1), Upper::PM2);
            if (e.p % 3 == 1) {
                auto [x, y] = e.quad(3);
                return e.cmp("p=x^2+3y^2", lhs, e.fp(4 * x * x) - e.fp(2 * e.p));
            }
            Fp B2 = e.bhalf((e.p - 5) / 6).pow(2);
            Fp rhs = -e.fp(2) * B2 * e.bracket3() - e.fq(Q(1, 2)) * e.P(2) / B2;
            return e.cmp("2mod3", lhs, rhs);
        };
        out.push_back(std::move(s));
    }
    // ---- sq4k2k / 256 with 1/(k+1), k <= p-2 ----
    {
        Statement s = base("T3.4", Kind::Theorem, 3, 3, "p > 3; branches on p mod 8");
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::central_sq4k2k(256), winv(1, 1, 1), Upper::PM2);
            long m8 = e.p % 8;
            if (m8 == 1 || m8 == 3) {
                auto [x, y] = e.quad(2);
                return e.cmp("p=x^2+2y^2", lhs, e.fp(4 * x * x) - e.fp(2 * e.p));
            }
            return e.cmp("5,7mod8", lhs, -e.fq(Q(1, 3)) * e.R(seq::RAggregate::R2), 2);
        };
        out.push_back(std::move(s));
    }
    // ---- mixed6k / 1728 with 1/(k+1), k <= p-2 ----
    {
        Statement s = base("T3.5", Kind::Theorem, 2, 5, "p > 5; branches on p mod 12");
        s.annotation = "floor raised from p > 3: at p = 5 the parameter -1/6 is -1 (mod 5); "
                       "12|p-7 bracket constant corrected to 10";
        s.run = [](Env& e) {
            Fp lhs = e.sum(TermFamily::mixed6k(1728), winv(1, 1, 1), Upper::PM2);
            if (e.p % 4 == 1) {
                auto [x, y] = e.quad(4);
                Fp rhs = e.fp(e.leg3()) * (e.fp(4 * x * x) - e.fp(2 * e.p));
                return e.cmp("1mod4", lhs, rhs);
            }
            Fp B2 = e.bhalf(e.p / 12).pow(2);
            Q c = e.p % 12 == 7 ? Q(-1, 5) : Q(-5);
            return e.cmp(e.p % 12 == 7 ? "7mod12" : "11mod12", lhs, e.fq(c) * B2 * e.bracket12());
        };
        out.push_back(std::move(s));
    }
}

} // namespace sc::registry
