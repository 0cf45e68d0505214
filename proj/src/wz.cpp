#include "supercong/wz.hpp"

#include "supercong/errors.hpp"

namespace sc::wz {

namespace {

mpq_class qdiv(const mpq_class& num, const mpq_class& den, long k) {
    if (den == 0)
        throw ExactPole(k);
    return num / den;
}

mpq_class pow4(long e) {
    // 4^e for e possibly negative
    mpq_class r = 1;
    for (long i = 0; i < e; ++i)
        r *= 4;
    for (long i = 0; i > e; --i)
        r /= 4;
    return r;
}

mpz_class binz(long n, long r) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

} // namespace

mpq_class binom_q(const mpq_class& a, long k) {
    mpq_class r = 1;
    for (long j = 0; j < k; ++j) {
        r *= (a - j);
        r /= (j + 1);
    }
    return r;
}

mpq_class central_binom_q(long k) { return mpq_class(binz(2 * k, k)); }

mpq_class term_q(const mpq_class& a, long k) {
    return binom_q(a, k) * binom_q(-1 - a, k) * central_binom_q(k) / pow4(k);
}

mpq_class s_n_q(const mpq_class& a, long n) {
    mpq_class acc = 0, t = 1;
    const mpq_class b = -1 - a;
    for (long k = 0; k < n; ++k) {
        acc += t;
        t *= (a - k) * (b - k) * ((2 * k + 1) * (2 * k + 2));
        t /= 4 * mpq_class(k + 1) * (k + 1) * (k + 1) * (k + 1);
    }
    return acc;
}

namespace {

using Q = mpq_class;
using Fn2 = std::function<Q(const Q&, long)>;

Q sq(const Q& x) { return x * x; }

std::vector<Certificate> build() {
    std::vector<Certificate> out;

    auto sum_terms = [](const Fn2& term) {
        return [term](const Q& a, long n) -> Q {
            Q acc = 0;
            for (long k = 0; k < n; ++k)
                acc += term(a, k);
            return acc;
        };
    };

    // --- identity behind the two-step recurrence in a ---
    {
        Certificate c;
        c.id = "SEC2";
        c.style = Style::GStyle;
        c.admissible = [](const Q&) { return true; };
        c.telescoped = [](const Q& a, long k) -> Q {
            return sq(a + 2) * term_q(a + 2, k) - sq(a + 1) * term_q(a, k);
        };
        c.g = [](const Q& a, long k) -> Q {
            if (k == 0)
                return 0;
            return qdiv((a + 2) * (2 * a + 3) * k * binz(2 * k - 1, k - 1) *
                            binom_q(a + 1, k - 1) * binom_q(-3 - a, k - 1),
                        pow4(k - 1) * (a + 1 + k), k);
        };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = [](const Q& a, long n) -> Q {
            return sq(a + 2) * s_n_q(a + 2, n) - sq(a + 1) * s_n_q(a, n);
        };
        Fn2 g = c.g;
        c.sum_rhs = [g](const Q& a, long n) -> Q { return g(a, n); };
        out.push_back(std::move(c));
    }

    // --- weight 1/(k+1) ---
    {
        Certificate c;
        c.id = "L3.1";
        c.style = Style::RStyle;
        c.admissible = [](const Q& a) { return a != 0; };
        c.f = [](const Q& a, long n) -> Q {
            return (binom_q(a, n) * binom_q(-1 - a, n) * (Q(1, n + 1) - 1) -
                    (a + 1) / a * binom_q(a + 1, n) * binom_q(-2 - a, n)) *
                   central_binom_q(n) / pow4(n);
        };
        c.r = [](const Q& a, long n) -> Q {
            return qdiv(Q(-2 * n * n * (n + 1)), Q(n) * n + 2 * sq(a + 1) * n + sq(a + 1), n);
        };
        c.telescoped = [](const Q& a, long k) -> Q { return term_q(a, k) / (k + 1); };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 f = c.f, r = c.r;
        c.sum_rhs = [f, r](const Q& a, long n) -> Q {
            return s_n_q(a, n) + (a + 1) / a * s_n_q(a + 1, n) + f(a, n) * r(a, n);
        };
        out.push_back(std::move(c));
    }

    // --- weight k ---
    {
        Certificate c;
        c.id = "L4.1";
        c.style = Style::RStyle;
        c.admissible = [](const Q&) { return true; };
        c.f = [](const Q& a, long n) -> Q {
            return (binom_q(a, n) * binom_q(-1 - a, n) * (n - a * (a + 1)) +
                    sq(a + 1) * binom_q(a + 1, n) * binom_q(-2 - a, n)) *
                   central_binom_q(n) / pow4(n);
        };
        c.r = [](const Q& a, long n) -> Q {
            return qdiv(Q(2) * n * n * n, Q(n) * n - 2 * sq(a + 1) * n - sq(a + 1), n);
        };
        c.telescoped = [](const Q& a, long k) -> Q { return term_q(a, k) * k; };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 f = c.f, r = c.r;
        c.sum_rhs = [f, r](const Q& a, long n) -> Q {
            return a * (a + 1) * s_n_q(a, n) - sq(a + 1) * s_n_q(a + 1, n) + f(a, n) * r(a, n);
        };
        out.push_back(std::move(c));
    }

    // --- weight 1/(2k-1) ---
    {
        Certificate c;
        c.id = "L5.1";
        c.style = Style::RStyle;
        c.admissible = [](const Q&) { return true; };
        c.f = [](const Q& a, long n) -> Q {
            return (binom_q(a, n) * binom_q(-1 - a, n) * (Q(1) / (2 * n - 1) + 2 * a * a + 2 * a + 1) +
                    2 * sq(a + 1) * binom_q(a + 1, n) * binom_q(-2 - a, n)) *
                   central_binom_q(n) / pow4(n);
        };
        c.r = [](const Q& a, long n) -> Q {
            return qdiv(Q(-2) * n * n * n, Q(n) * n + 2 * sq(a + 1) * n - sq(a + 1), n);
        };
        c.telescoped = [](const Q& a, long k) -> Q { return term_q(a, k) / (2 * k - 1); };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 f = c.f, r = c.r;
        c.sum_rhs = [f, r](const Q& a, long n) -> Q {
            return -(2 * a * a + 2 * a + 1) * s_n_q(a, n) - 2 * sq(a + 1) * s_n_q(a + 1, n) +
                   f(a, n) * r(a, n);
        };
        out.push_back(std::move(c));
    }

    // --- quadratic k-polynomial weight ---
    {
        Certificate c;
        c.id = "L6.1";
        c.style = Style::GStyle;
        c.admissible = [](const Q&) { return true; };
        c.telescoped = [](const Q& a, long k) -> Q {
            return term_q(a, k) * (Q(3) * k * k - (2 * a * a + 2 * a - 1) * k - a * (a + 1));
        };
        c.g = [](const Q& a, long k) -> Q { return Q(2) * k * k * k * term_q(a, k); };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 g = c.g;
        c.sum_rhs = [g](const Q& a, long n) -> Q { return g(a, n); };
        out.push_back(std::move(c));
    }

    // --- cubic k-polynomial weight ---
    {
        Certificate c;
        c.id = "L7.1";
        c.style = Style::GStyle;
        c.admissible = [](const Q&) { return true; };
        c.telescoped = [](const Q& a, long k) -> Q {
            Q aa = a * (a + 1);
            return term_q(a, k) *
                   (Q(15) * k * k * k - (4 * sq(a) * sq(a + 1) - aa + 1) * k - aa * (2 * aa - 1));
        };
        c.g = [](const Q& a, long k) -> Q {
            return Q(2) * k * k * k * (3 * k + 2 * a * (a + 1) - 4) * term_q(a, k);
        };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 g = c.g;
        c.sum_rhs = [g](const Q& a, long n) -> Q { return g(a, n); };
        out.push_back(std::move(c));
    }

    // --- weight 1/(k+2) - 1/(3(k+1)) + 1/(3(a-1)(a+2)) ---
    {
        Certificate c;
        c.id = "L8.1";
        c.style = Style::RStyle;
        c.admissible = [](const Q& a) { return a != 1 && a != -2; };
        auto w = [](const Q& a, long k) -> Q {
            return Q(1, k + 2) - Q(1, 3 * (k + 1)) + Q(1, 3) / ((a - 1) * (a + 2));
        };
        c.f = [w](const Q& a, long n) -> Q {
            return binom_q(a, n) * binom_q(-1 - a, n) * central_binom_q(n) / pow4(n) * w(a, n);
        };
        c.r = [](const Q& a, long n) -> Q {
            return qdiv(Q(-2 * n * n) * (n + 2), Q(n) * n + (2 * a * (a + 1) - 1) * n + a * (a + 1), n);
        };
        c.telescoped = [w](const Q& a, long k) -> Q { return term_q(a, k) * w(a, k); };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 f = c.f, r = c.r;
        c.sum_rhs = [f, r](const Q& a, long n) -> Q { return f(a, n) * r(a, n); };
        out.push_back(std::move(c));
    }

    // --- weight 1/(k+1)^2 ---
    {
        Certificate c;
        c.id = "L9.1";
        c.style = Style::RStyle;
        c.admissible = [](const Q& a) { return a != 0; };
        c.f = [](const Q& a, long n) -> Q {
            return (binom_q(a, n) * binom_q(-1 - a, n) * (Q(1, (n + 1) * (n + 1)) - 2) -
                    (2 * a * a + 2 * a - 1) / (a * a) * binom_q(a + 1, n) * binom_q(-2 - a, n)) *
                   central_binom_q(n) / pow4(n);
        };
        c.r = [](const Q& a, long n) -> Q {
            Q m = n + 1;
            Q num = Q(-2) * m * m * ((2 * a - 1) * m * m + (2 - 3 * a) * m + a - 1);
            Q den = (2 * a - 1) * m * m * m + (4 * a * a * a + 6 * a * a - a) * m * m + a * a * m -
                    a * a * (a + 2);
            return qdiv(num, den, n);
        };
        c.telescoped = [](const Q& a, long k) -> Q { return term_q(a, k) / ((k + 1) * (k + 1)); };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 f = c.f, r = c.r;
        c.sum_rhs = [f, r](const Q& a, long n) -> Q {
            return 2 * s_n_q(a, n) + (2 * a * a + 2 * a - 1) / (a * a) * s_n_q(a + 1, n) +
                   f(a, n) * r(a, n);
        };
        out.push_back(std::move(c));
    }

    // --- weight 1/(k+1)^3; G = F*R has the nonzero boundary 2/(a(a+1)) ---
    {
        Certificate c;
        c.id = "L10.1";
        c.style = Style::GStyle;
        c.admissible = [](const Q& a) { return a != 0 && a != -1; };
        auto F = [](const Q& a, long n) -> Q {
            Q aa = a * (a + 1);
            return binom_q(a, n) * binom_q(-1 - a, n) * (Q(1, (n + 1) * (n + 1) * (n + 1)) - sq(2 * a + 1) / aa) *
                       central_binom_q(n) / pow4(n) -
                   (4 * sq(a) * sq(a + 1) - aa + 1) / (a * a * a * (a + 1)) * binom_q(a + 1, n) *
                       binom_q(-2 - a, n) * central_binom_q(n) / pow4(n);
        };
        auto R = [](const Q& a, long n) -> Q {
            Q m = n + 1;
            Q num = Q(-2) * m * m * m *
                    ((4 * a * a - 2 * a + 1) * m * m + (-6 * a * a + 3 * a - 2) * m + 3 * a * a - a + 1);
            Q den = (4 * a * a - 2 * a + 1) * m * m * m * m +
                    (8 * a * a * a * a + 12 * a * a * a + a) * m * m * m + a * a * a * m -
                    a * a * a * (a + 2);
            return qdiv(num, den, n);
        };
        c.f = F;
        c.r = R;
        c.g = [F, R](const Q& a, long k) -> Q { return F(a, k) * R(a, k); };
        c.telescoped = F;  // the telescoped function is F itself, G = F*R
        c.boundary = [](const Q& a) -> Q { return Q(2) / (a * (a + 1)); };
        c.sum_lhs = sum_terms([](const Q& a, long k) -> Q { return term_q(a, k) / ((k + 1) * (k + 1) * (k + 1)); });
        c.sum_rhs = [F, R](const Q& a, long n) -> Q {
            Q aa = a * (a + 1);
            return Q(-2) / aa + sq(2 * a + 1) / aa * s_n_q(a, n) +
                   (4 * sq(a) * sq(a + 1) - aa + 1) / (a * a * a * (a + 1)) * s_n_q(a + 1, n) +
                   F(a, n) * R(a, n);
        };
        out.push_back(std::move(c));
    }

    // --- weight 1/(k+3) ---
    {
        Certificate c;
        c.id = "L11.1";
        c.style = Style::GStyle;
        c.admissible = [](const Q& a) {
            return a != 0 && a != 1 && a != -1 && a != 2 && a != -2 && a != -3;
        };
        c.telescoped = [](const Q& a, long k) -> Q {
            Q aa = a * (a + 1);
            return binom_q(a, k) * binom_q(-1 - a, k) * central_binom_q(k) / pow4(k) *
                   (Q(1, k + 3) - (3 * aa - 10) / (15 * (a - 1) * (a + 2)) -
                    (a + 1) * (3 * aa - 16) / (15 * a * (a - 2) * (a + 3)) *
                        qdiv(a + 1 + k, a + 1 - k, k));
        };
        c.g = [](const Q& a, long n) -> Q {
            Q N = (3 * sq(sq(a)) + 12 * a * a * a - 13 * a * a - 50 * a + 32) * n * n +
                  (3 * sq(sq(a)) + 12 * a * a * a - 29 * a * a - 82 * a + 96) * n + 64;
            return Q(2 * n * n) * N /
                   (15 * a * (a * a - 1) * (a * a - 4) * (a + 3) * (n + 1) * (n + 2)) *
                   binom_q(a + 1, n) * binom_q(-1 - a, n) * central_binom_q(n) / pow4(n);
        };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms([](const Q& a, long k) -> Q { return term_q(a, k) / (k + 3); });
        Fn2 g = c.g;
        c.sum_rhs = [g](const Q& a, long n) -> Q {
            Q aa = a * (a + 1);
            return (3 * aa - 10) / (15 * (a - 1) * (a + 2)) * s_n_q(a, n) +
                   (a + 1) * (3 * aa - 16) / (15 * a * (a - 2) * (a + 3)) * s_n_q(a + 1, n) +
                   g(a, n);
        };
        out.push_back(std::move(c));
    }

    // --- weight 1/(a-1+k) ---
    {
        Certificate c;
        c.id = "L12.1";
        c.style = Style::RStyle;
        c.admissible = [](const Q& a) { return a != 0 && a != 1; };
        c.f = [](const Q& a, long n) -> Q {
            return (binom_q(a, n) * binom_q(-1 - a, n) *
                        (qdiv(Q(1), a - 1 + n, n) - (sq(a - 1) + 1) / (2 * sq(a - 1) * (a - 1))) -
                    Q(1, 2) / (a - 1) * binom_q(a - 1, n) * binom_q(-a, n)) *
                   central_binom_q(n) / pow4(n);
        };
        c.r = [](const Q& a, long n) -> Q {
            return qdiv(Q(-2) * n * n * n, Q(n) * n + (2 * a * a - 2 * a + 1) * n + a * (a - 1), n);
        };
        c.telescoped = [](const Q& a, long k) -> Q {
            return term_q(a, k) * qdiv(Q(1), a - 1 + k, k);
        };
        c.boundary = [](const Q&) -> Q { return 0; };
        c.sum_lhs = sum_terms(c.telescoped);
        Fn2 f = c.f, r = c.r;
        c.sum_rhs = [f, r](const Q& a, long n) -> Q {
            return (sq(a - 1) + 1) / (2 * sq(a - 1) * (a - 1)) * s_n_q(a, n) +
                   Q(1, 2) / (a - 1) * s_n_q(a - 1, n) + f(a, n) * r(a, n);
        };
        out.push_back(std::move(c));
    }

    return out;
}

} // namespace

const std::vector<Certificate>& certificates() {
    static const std::vector<Certificate> certs = build();
    return certs;
}

const Certificate* find_certificate(const std::string& id) {
    for (const auto& c : certificates())
        if (c.id == id)
            return &c;
    return nullptr;
}

Outcome verify_telescoping(const Certificate& cert, const mpq_class& a, long k_max) {
    try {
        for (long k = 0; k <= k_max; ++k) {
            mpq_class lhs, rhs;
            if (cert.style == Style::GStyle) {
                lhs = cert.telescoped(a, k);
                rhs = cert.g(a, k + 1) - cert.g(a, k);
            } else {
                lhs = cert.f(a, k);
                rhs = cert.f(a, k + 1) * cert.r(a, k + 1) - cert.f(a, k) * cert.r(a, k);
            }
            if (lhs != rhs)
                return {Status::Fail, k};
        }
    } catch (const ExactPole& e) {
        return {Status::Pole, e.k};
    }
    return {Status::Pass, -1};
}

Outcome verify_boundary(const Certificate& cert, const mpq_class& a) {
    try {
        mpq_class got = cert.style == Style::RStyle ? cert.r(a, 0) : cert.g(a, 0);
        if (got != cert.boundary(a))
            return {Status::Fail, 0};
    } catch (const ExactPole& e) {
        return {Status::Pole, e.k};
    }
    return {Status::Pass, -1};
}

Outcome verify_sum_identity(const Certificate& cert, const mpq_class& a, long n) {
    try {
        if (cert.sum_lhs(a, n) != cert.sum_rhs(a, n))
            return {Status::Fail, n};
    } catch (const ExactPole& e) {
        return {Status::Pole, e.k};
    }
    return {Status::Pass, -1};
}

} // namespace sc::wz
