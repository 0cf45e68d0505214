#include "supercong/errors.hpp"

#include "catalog.hpp"

namespace sc::registry {

using sums::TermFamily;
using sums::Upper;

namespace {

enum class Sign { None, Half, Quarter };

long sign_of(long p, Sign s) {
    switch (s) {
    case Sign::None: return 1;
    case Sign::Half: return ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    case Sign::Quarter:
        // (-1)^((p-1)/4) for p = 1 (mod 4), (-1)^((p-3)/4) otherwise
        return ((p % 4 == 1 ? p - 1 : p - 3) / 4) % 2 == 0 ? 1 : -1;
    }
    return 1;
}

// Quadratic-branch row: c0 + c0s*sign + cA*A + cP*p + cPP*p^2/A,
// A = x^2 or y^2 of the representation.
struct QRow {
    const char* suffix;
    sums::Weight w;
    Upper upper;
    bool use_x;
    Q c0, c0s, cA, cP, cPP;
};

// Aggregate-branch row: c0 + c0s*sign + cR*R + cP*p.
struct RRow {
    const char* suffix;
    sums::Weight w;
    Upper upper;
    Q c0, c0s, cR, cP;
};

} // namespace

namespace {

void add_qrow(std::vector<Statement>& out, const std::string& id, long floor, int e,
              const TermFamily& fam, Sign sign, long quad_d, bool scaled,
              std::function<bool(long)> applicable, const std::string& hyp, const QRow& row,
              const std::string& note = "") {
    Statement s;
    s.id = id + "." + row.suffix;
    s.kind = Kind::Conjecture;
    s.mod_exp = e;
    s.floor = floor;
    s.hypotheses = hyp;
    s.annotation = note;
    s.applicable = std::move(applicable);
    sums::Weight w = row.w;
    Upper up = row.upper;
    bool use_x = row.use_x;
    Q c0 = row.c0, c0s = row.c0s, cA = row.cA, cP = row.cP, cPP = row.cPP;
    s.run = [fam, w, up, sign, quad_d, scaled, use_x, c0, c0s, cA, cP, cPP](Env& e) {
        long sg = sign_of(e.p, sign);
        Fp lhs = e.fp(sg) * e.sum(fam, w, up);
        auto [x, y] = scaled ? e.quad4p27() : e.quad(quad_d);
        Fp A = e.fp(use_x ? x * x : y * y);
        Fp rhs = e.fq(c0 + c0s * sg) + e.fq(cA) * A + e.fq(cP) * e.P();
        if (cPP != 0)
            rhs = rhs + e.fq(cPP) * e.P(2) / A;
        return e.cmp(scaled ? "4p=x^2+27y^2" : "form-branch", lhs, rhs);
    };
    out.push_back(std::move(s));
}

void add_rrow(std::vector<Statement>& out, const std::string& id, long floor,
              const TermFamily& fam, Sign sign, std::function<bool(long)> applicable,
              const std::string& hyp, std::function<Fp(Env&)> aggregate, const RRow& row,
              const std::string& note = "") {
    Statement s;
    s.id = id + "." + row.suffix;
    s.kind = Kind::Conjecture;
    s.mod_exp = 2;
    s.floor = floor;
    s.hypotheses = hyp;
    s.annotation = note;
    s.applicable = std::move(applicable);
    sums::Weight w = row.w;
    Upper up = row.upper;
    Q c0 = row.c0, c0s = row.c0s, cR = row.cR, cP = row.cP;
    s.run = [fam, w, up, sign, aggregate, c0, c0s, cR, cP](Env& e) {
        long sg = sign_of(e.p, sign);
        Fp lhs = e.fp(sg) * e.sum(fam, w, up);
        Fp rhs = e.fq(c0 + c0s * sg) + e.fq(cR) * aggregate(e) + e.fq(cP) * e.P();
        return e.cmp("aggregate-branch", lhs, rhs);
    };
    out.push_back(std::move(s));
}

} // namespace

void register_catalog_conj(std::vector<Statement>& out) {
    auto W2 = winv(1, 2, 1), W3 = winv(1, 3, 1);
    auto W12 = winv(1, 1, 2), W22 = winv(1, 2, 2), W32 = winv(1, 3, 2), W13 = winv(1, 1, 3);
    auto r1 = [](Env& e) { return e.R(seq::RAggregate::R1); };
    auto r2 = [](Env& e) { return e.R(seq::RAggregate::R2); };
    auto r3 = [](Env& e) { return e.R(seq::RAggregate::R3); };
    auto r7 = [](Env& e) { return e.R(seq::RAggregate::R7); };

    // ---- cube family, m = 1 ----
    {
        auto in_i = [](long p) { long r = p % 7; return r == 1 || r == 2 || r == 4; };
        auto in_ii = [](long p) { long r = p % 7; return r == 3 || r == 5 || r == 6; };
        TermFamily f = TermFamily::central_cube(1);
        const std::string hyp_i = "p > 7; p = 1,2,4 (mod 7), p = x^2+7y^2";
        const std::string hyp_ii = "p > 7; p = 3,5,6 (mod 7)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, false, 0, 0, Q(-466, 27), Q(29, 27), Q(17, 864)},
            {"2", W3, Upper::Half, false, 0, 0, Q(-36052, 3375), Q(2378, 3375), Q(1421, 108000)},
            {"3", W12, Upper::Half, false, 0, 0, -68, 1, Q(-1, 4)},
            {"4", W22, Upper::Half, false, 0, 0, Q(-287, 27), Q(119, 216), Q(7, 864)},
            {"5", W32, Upper::Half, false, 0, 0, Q(-68722, 16875), Q(33079, 135000), Q(4987, 1080000)},
            {"6", W13, Upper::Half, false, Q(1, 8), 0, Q(-201, 2), Q(-9, 4), Q(-39, 32)},
        };
        for (const auto& r : rows_i)
            add_qrow(out, "C13.1.i", 7, 3, f, Sign::None, 7, false, in_i, hyp_i, r);
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, Q(1, 24), Q(-1, 9)},
            {"2", W3, Upper::Half, 0, 0, Q(1, 120), Q(-11, 225)},
            {"3", W22, Upper::Half, 0, 0, Q(7, 72), Q(-7, 72)},
            {"4", W32, Upper::Half, 0, 0, Q(37, 3600), Q(-307, 9000)},
            {"5", W13, Upper::Half, Q(1, 8), 0, 24, 18},
        };
        for (const auto& r : rows_ii)
            add_rrow(out, "C13.1.ii", 7, f, Sign::None, in_ii, hyp_ii, r7, r);
    }
    // ---- cube family, m = 16 ----
    {
        auto in_i = [](long p) { return p % 3 == 1; };
        auto in_ii = [](long p) { return p % 3 == 2; };
        TermFamily f = TermFamily::central_cube(16);
        const std::string hyp_i = "p > 5; p = 1 (mod 3), p = x^2+3y^2";
        const std::string hyp_ii = "p > 5; p = 2 (mod 3)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, true, 0, 0, Q(64, 27), Q(-4, 3), Q(-1, 9)},
            {"2", W3, Upper::Half, true, 0, 0, Q(5056, 3375), Q(-302, 375), Q(-97, 1125)},
            {"3", W12, Upper::Half, false, 0, 0, -24, 2, Q(-1, 2)},
            {"4", W22, Upper::Half, false, 0, 0, Q(-40, 9), Q(14, 27), Q(-1, 54)},
            {"5", W32, Upper::Half, false, 0, 0, Q(-9656, 5625), Q(3958, 16875), Q(169, 33750)},
            {"6", W13, Upper::Half, false, 2, 0, -24, 0, Q(-5, 2)},
        };
        for (const auto& r : rows_i)
            add_qrow(out, "C13.2.i", 5, 3, f, Sign::None, 3, false, in_i, hyp_i, r);
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, Q(-4, 27), Q(-4, 27)},
            {"2", W3, Upper::Half, 0, 0, Q(-4, 135), Q(-38, 675)},
            {"3", W22, Upper::Half, 0, 0, Q(-16, 27), Q(-2, 9)},
            {"4", W32, Upper::Half, 0, 0, Q(-56, 675), Q(-58, 1125)},
            {"5", W13, Upper::Half, 2, 0, -32, -4},
        };
        for (const auto& r : rows_ii)
            add_rrow(out, "C13.2.ii", 5, f, Sign::None, in_ii, hyp_ii, r3, r);
    }
    // ---- cube family, m = -8 ----
    {
        auto in_i = [](long p) { return p % 4 == 1; };
        auto in_ii = [](long p) { return p % 4 == 3; };
        TermFamily f = TermFamily::central_cube(-8);
        const std::string hyp_i = "p > 5; p = 1 (mod 4), p = x^2+4y^2";
        const std::string hyp_ii = "p > 5; p = 3 (mod 4)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, true, 0, 0, Q(64, 27), Q(-35, 27), Q(-4, 27)},
            {"2", W3, Upper::Half, true, 0, 0, Q(202, 135), Q(-538, 675), Q(-611, 6750)},
            {"3", W12, Upper::Half, false, 0, 0, -32, 1, Q(-7, 16)},
            {"4", W22, Upper::Half, false, 0, 0, Q(-152, 27), Q(16, 27), Q(7, 216)},
            {"5", W32, Upper::Half, false, 0, 0, Q(-1504, 675), Q(811, 3375), Q(1927, 270000)},
            {"6", W13, Upper::Half, false, -1, 0, -48, 0, Q(-33, 16)},
        };
        for (const auto& r : rows_i)
            add_qrow(out, "C13.3.i", 5, 3, f, Sign::None, 4, false, in_i, hyp_i, r);
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, 0, Q(1, 9)},
            {"2", W3, Upper::Half, 0, 0, Q(1, 250), Q(11, 225)},
            {"3", W22, Upper::Half, 0, 0, Q(-1, 18), Q(1, 9)},
            {"4", W32, Upper::Half, 0, 0, Q(47, 5625), Q(43, 1125)},
            {"5", W13, Upper::Half, -1, 0, 12, 6},
        };
        for (const auto& r : rows_ii)
            add_rrow(out, "C13.3.ii", 5, f, Sign::None, in_ii, hyp_ii, r1, r);
    }
    // ---- cube family, m = -64, sign (-1)^((p-1)/2) ----
    {
        auto in_i = [](long p) { long r = p % 8; return r == 1 || r == 3; };
        auto in_ii = [](long p) { long r = p % 8; return r == 5 || r == 7; };
        TermFamily f = TermFamily::central_cube(-64);
        const std::string hyp_i = "p > 5; p = 1,3 (mod 8), p = x^2+2y^2";
        const std::string hyp_ii = "p > 5; p = 5,7 (mod 8)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, true, 0, 0, 2, Q(-8, 9), Q(-2, 9)},
            {"2", W3, Upper::Half, true, 0, 0, Q(198, 125), Q(-1036, 1125), Q(-52, 1125)},
            {"3", W12, Upper::Half, false, 0, 0, -8, 0, -1},
            {"4", W22, Upper::Half, false, 0, 0, Q(-40, 9), Q(32, 27), Q(1, 3)},
            {"5", W32, Upper::Half, false, 0, 0, Q(56, 5625), Q(-1312, 16875), Q(-81, 625)},
            {"6", W13, Upper::Half, false, 0, -8, -32, 8, -4},
        };
        for (const auto& r : rows_i)
            add_qrow(out, "C13.4.i", 5, 3, f, Sign::Half, 2, false, in_i, hyp_i, r);
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, Q(7, 54), Q(1, 9)},
            {"2", W3, Upper::Half, 0, 0, Q(-19, 270), Q(-29, 225)},
            {"3", W22, Upper::Half, 0, 0, Q(19, 27), Q(2, 27)},
            {"4", W32, Upper::Half, 0, 0, Q(-233, 675), Q(-254, 3375)},
            {"5", W13, Upper::Half, 0, -8, -12, 0},
        };
        for (const auto& r : rows_ii)
            add_rrow(out, "C13.4.ii", 5, f, Sign::Half, in_ii, hyp_ii, r2, r);
    }
    // ---- cube family, m = -512, sign (-1)^((p-1)/4) resp. (-1)^((p-3)/4) ----
    {
        auto in_i = [](long p) { return p % 4 == 1; };
        auto in_ii = [](long p) { return p % 4 == 3; };
        TermFamily f = TermFamily::central_cube(-512);
        const std::string hyp_i = "p > 5; p = 1 (mod 4), p = x^2+4y^2";
        const std::string hyp_ii = "p > 5; p = 3 (mod 4)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, true, 0, 0, Q(-152, 27), Q(190, 27), Q(-22, 27)},
            {"2", W3, Upper::Half, true, 0, 0, Q(4504, 135), Q(-23074, 675), Q(9104, 3375)},
            {"3", W12, Upper::Half, false, 0, 0, 64, -8, -1},
            {"4", W22, Upper::Half, false, 0, 0, Q(-6464, 27), Q(664, 27), Q(65, 27)},
            {"5", W13, Upper::Half, false, 0, -64, -384, 72, Q(-3, 2)},
        };
        for (const auto& r : rows_i) {
            std::string note =
                std::string(r.suffix) == "5"
                    ? "y^2 and p^2/y^2 coefficients corrected to -384 and -3/2 (printed "
                      "-192, -3 fit only with y^2 read as 2y^2)"
                    : "";
            add_qrow(out, "C13.5.i", 5, 3, f, Sign::Quarter, 4, false, in_i, hyp_i, r, note);
        }
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, Q(28, 3), Q(38, 9)},
            {"2", W3, Upper::Half, 0, 0, Q(-14348, 375), Q(-3938, 225)},
            {"3", W22, Upper::Half, 0, 0, Q(424, 9), Q(-16, 3)},
            {"4", W13, Upper::Half, 0, -64, -96, 24},
        };
        for (const auto& r : rows_ii)
            add_rrow(out, "C13.5.ii", 5, f, Sign::Quarter, in_ii, hyp_ii, r1, r);
    }
    // ---- cube family, m = 256, sign (-1)^((p-1)/2) ----
    {
        auto in_i = [](long p) { return p % 3 == 1; };
        auto in_ii = [](long p) { return p % 3 == 2; };
        TermFamily f = TermFamily::central_cube(256);
        const std::string hyp_i = "p > 5; p = 1 (mod 3), p = x^2+3y^2";
        const std::string hyp_ii = "p > 5; p = 2 (mod 3)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, true, 0, 0, Q(-8, 27), Q(10, 9), Q(2, 9)},
            {"2", W3, Upper::Half, true, 0, 0, Q(-12344, 3375), Q(4354, 1125), Q(728, 1125)},
            {"3", W12, Upper::Half, false, 0, 0, -48, 8, 0},
            {"4", W22, Upper::Half, false, 0, 0, -48, Q(200, 27), 0},
            {"5", W13, Upper::Half, false, 0, 32, 96, -24, -2},
        };
        for (const auto& r : rows_i)
            add_qrow(out, "C13.6.i", 5, 3, f, Sign::Half, 3, false, in_i, hyp_i, r);
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, Q(176, 27), Q(26, 27)},
            {"2", W3, Upper::Half, 0, 0, Q(1808, 135), Q(1378, 675)},
            {"3", W22, Upper::Half, 0, 0, 32, Q(-16, 27)},
            {"4", W32, Upper::Half, 0, 0, Q(13856, 225), Q(-1184, 675)},
            {"5", W13, Upper::Half, 0, 32, 128, -8},
        };
        for (const auto& r : rows_ii) {
            std::string note = std::string(r.suffix) == "5"
                                   ? "p coefficient corrected to -8 (printed +8)"
                                   : "";
            add_rrow(out, "C13.6.ii", 5, f, Sign::Half, in_ii, hyp_ii, r3, r, note);
        }
    }
    // ---- cube family, m = 4096, sign (-1)^((p-1)/2) ----
    {
        auto in_i = [](long p) { long r = p % 7; return r == 1 || r == 2 || r == 4; };
        auto in_ii = [](long p) { long r = p % 7; return r == 3 || r == 5 || r == 6; };
        TermFamily f = TermFamily::central_cube(4096);
        const std::string hyp_i = "p > 7; p = 1,2,4 (mod 7), p = x^2+7y^2";
        const std::string hyp_ii = "p > 7; p = 3,5,6 (mod 7)";
        QRow rows_i[] = {
            {"1", W2, Upper::Half, false, 0, 0, Q(52616, 27), Q(-34, 27), Q(-20, 27)},
            {"2", W3, Upper::Half, false, 0, 0, Q(217125848, 3375), Q(-250882, 3375), Q(-83972, 3375)},
            {"3", W12, Upper::Half, false, 0, 0, -1136, 64, 2},
            {"4", W13, Upper::Half, false, 0, 512, 6432, -648, -6},
        };
        for (const auto& r : rows_i)
            add_qrow(out, "C13.7.i", 7, 3, f, Sign::Half, 7, false, in_i, hyp_i, r);
        RRow rows_ii[] = {
            {"1", W2, Upper::Half, 0, 0, -1216, Q(-11266, 9)},
            {"2", W3, Upper::Half, 0, 0, Q(-199232, 5), Q(-1845802, 45)},
            {"3", W13, Upper::Half, 0, 512, -1536, -1944},
        };
        for (const auto& r : rows_ii)
            add_rrow(out, "C13.7.ii", 7, f, Sign::Half, in_ii, hyp_ii, r7, r);
    }
    // ---- sq3k family, m = -192: each row carries both residue branches; the
    //      p = 2 (mod 3) aggregate is (2p+1) C([2p/3],[p/3])^2 ----
    {
        TermFamily f = TermFamily::central_sq3k(-192);
        struct Row {
            const char* suffix;
            sums::Weight w;
            Upper upper;
            Q i0, iX, iP, iPP;        // branch (i): i0 + iX x^2 + iP p + iPP p^2/x^2, mod p^3
            bool has_ii;
            Q ii0, iiB, iiP;          // branch (ii): ii0 + iiB*agg + iiP p, mod p^2
        };
        Row rows[] = {
            {"1", W2, Upper::PM3, 0, Q(2, 5), Q(-7, 15), Q(-23, 20), true, 0, -1, Q(-1, 3)},
            {"2", W3, Upper::PM4, 0, Q(99, 200), Q(-103, 75), Q(141, 700), true, 0, Q(13, 14), Q(23, 60)},
            {"3", W13, Upper::PM2, -16, Q(51, 8), -9, Q(147, 4), true, -16, Q(115, 2), Q(-15, 4)},
            {"4", W12, Upper::PM2, 0, Q(1, 4), -2, Q(19, 2), false, 0, 0, 0},
        };
        for (const Row& r : rows) {
            Statement s;
            s.id = std::string("C13.8.") + r.suffix;
            s.kind = Kind::Conjecture;
            s.mod_exp = 3;
            s.floor = 7;
            s.hypotheses = r.has_ii ? "p > 7; branches on p mod 3 (4p = x^2+27y^2 when p = 1 mod 3)"
                                    : "p > 7; p = 1 (mod 3), 4p = x^2+27y^2";
            if (!r.has_ii)
                s.applicable = [](long p) { return p % 3 == 1; };
            Row row = r;
            s.run = [f, row](Env& e) {
                Fp lhs = e.sum(f, row.w, row.upper);
                if (e.p % 3 == 1) {
                    auto [x, y] = e.quad4p27();
                    Fp X = e.fp(x * x);
                    Fp rhs = e.fq(row.i0) + e.fq(row.iX) * X + e.fq(row.iP) * e.P() +
                             e.fq(row.iPP) * e.P(2) / X;
                    return e.cmp("4p=x^2+27y^2", lhs, rhs, 3);
                }
                Fp agg = e.fp(2 * e.p + 1) * e.binz(2 * e.p / 3, e.p / 3).pow(2);
                Fp rhs = e.fq(row.ii0) + e.fq(row.iiB) * agg + e.fq(row.iiP) * e.P();
                return e.cmp("2mod3", lhs, rhs, 2);
            };
            out.push_back(std::move(s));
        }
    }
    // ---- sq4k2k family, m = -144: both branches per row ----
    {
        TermFamily f = TermFamily::central_sq4k2k(-144);
        struct Row {
            const char* suffix;
            sums::Weight w;
            Upper upper;
            Q i0, iY, iP, iPP;        // branch (i): uses y^2 of p = x^2+3y^2, mod p^3
            bool has_ii;
            Q ii0, iiR, iiP;          // branch (ii): R3-aggregate, mod p^2
        };
        Row rows[] = {
            {"1", W2, Upper::PM3, 0, Q(-32, 5), Q(16, 15), Q(19, 315), true, 0, Q(-4, 21), 0},
            {"2", W3, Upper::PM4, 0, Q(-3584, 825), Q(1682, 2475), Q(431, 17325), true, 0, Q(4, 63), Q(2, 45)},
            {"3", W13, Upper::PM2, -6, Q(-376, 9), Q(56, 9), Q(-211, 54), true, -6, Q(1360, 27), Q(20, 27)},
            {"4", W12, Upper::PM2, 0, Q(-40, 3), Q(2, 3), Q(-13, 18), false, 0, 0, 0},
        };
        for (const Row& r : rows) {
            Statement s;
            s.id = std::string("C13.9.") + r.suffix;
            s.kind = Kind::Conjecture;
            s.mod_exp = 3;
            s.floor = 11;
            s.hypotheses = r.has_ii ? "p > 11; branches on p mod 3 (p = x^2+3y^2 when p = 1 mod 3)"
                                    : "p > 11; p = 1 (mod 3), p = x^2+3y^2";
            if (!r.has_ii)
                s.applicable = [](long p) { return p % 3 == 1; };
            Row row = r;
            s.run = [f, row](Env& e) {
                Fp lhs = e.sum(f, row.w, row.upper);
                if (e.p % 3 == 1) {
                    auto [x, y] = e.quad(3);
                    Fp Y = e.fp(y * y);
                    Fp rhs = e.fq(row.i0) + e.fq(row.iY) * Y + e.fq(row.iP) * e.P() +
                             e.fq(row.iPP) * e.P(2) / Y;
                    return e.cmp("p=x^2+3y^2", lhs, rhs, 3);
                }
                Fp rhs = e.fq(row.ii0) + e.fq(row.iiR) * e.R(seq::RAggregate::R3) +
                         e.fq(row.iiP) * e.P();
                return e.cmp("2mod3", lhs, rhs, 2);
            };
            out.push_back(std::move(s));
        }
    }
}

} // namespace sc::registry
