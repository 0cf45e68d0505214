#include "supercong/sums.hpp"

#include "supercong/errors.hpp"

namespace sc::sums {

TermFamily TermFamily::general(const mpq_class& a) {
    TermFamily f;
    f.tag = FamilyTag::GeneralA;
    f.a = a;
    f.m = 4;
    return f;
}

TermFamily TermFamily::central_cube(long m) { return TermFamily{FamilyTag::CentralCube, 0, m}; }
TermFamily TermFamily::central_sq3k(long m) { return TermFamily{FamilyTag::CentralSq3k, 0, m}; }
TermFamily TermFamily::central_sq4k2k(long m) { return TermFamily{FamilyTag::CentralSq4k2k, 0, m}; }
TermFamily TermFamily::mixed6k(long m) { return TermFamily{FamilyTag::Mixed6k, 0, m}; }

Weight Weight::kpow(int j) {
    Weight w;
    w.kind = Kind::KPow;
    w.j = j;
    return w;
}

Weight Weight::inv_linear(const mpq_class& alpha, const mpq_class& beta, int j) {
    Weight w;
    w.kind = Kind::InvLinear;
    w.alpha = alpha;
    w.beta = beta;
    w.j = j;
    return w;
}

long upper_bound(Upper u, long p) {
    switch (u) {
    case Upper::PM1: return p - 1;
    case Upper::PM2: return p - 2;
    case Upper::PM3: return p - 3;
    case Upper::PM4: return p - 4;
    case Upper::Half: return (p - 1) / 2;
    }
    throw Error("unreachable");
}

TermCache::TermCache(const Context& ctx) : ctx_(&ctx) {
    const long p = ctx.p();
    c2k_.reserve(static_cast<size_t>(p));
    c3k_.reserve(static_cast<size_t>(p));
    c4k2k_.reserve(static_cast<size_t>(p));
    c6k3k_.reserve(static_cast<size_t>(p));
    Fp a = Fp::one(ctx), b = a, c = a, d = a;
    auto fl = [&](long n) { return Fp::from_long(ctx, n); };
    for (long k = 0; k < p; ++k) {
        c2k_.push_back(a);
        c3k_.push_back(b);
        c4k2k_.push_back(c);
        c6k3k_.push_back(d);
        a = a * fl((2 * k + 1) * (2 * k + 2)) / fl((k + 1) * (k + 1));
        b = b * fl((3 * k + 1) * (3 * k + 2) * (3 * k + 3)) /
            fl((k + 1) * (2 * k + 1) * (2 * k + 2));
        c = c * fl(4 * k + 1) * fl(4 * k + 2) * fl(4 * k + 3) * fl(4 * k + 4) /
            (fl((2 * k + 1) * (2 * k + 2)) * fl((2 * k + 1) * (2 * k + 2)));
        d = d * fl(6 * k + 1) * fl(6 * k + 2) * fl(6 * k + 3) * fl(6 * k + 4) *
            fl(6 * k + 5) * fl(6 * k + 6) /
            (fl((3 * k + 1) * (3 * k + 2) * (3 * k + 3)) * fl((3 * k + 1) * (3 * k + 2) * (3 * k + 3)));
    }
}

Fp term_value(TermCache& cache, const TermFamily& family, long k) {
    const Context& ctx = cache.ctx();
    if (k < 0 || k >= ctx.p())
        throw OutOfRange("term index out of range");
    if (family.tag == FamilyTag::GeneralA) {
        auto terms = general_terms(ctx, family.a, k);
        return terms.back();
    }
    Fp mpow = Fp::from_long(ctx, family.m).pow(k);
    switch (family.tag) {
    case FamilyTag::CentralCube:
        return cache.c2k(k).pow(3) / mpow;
    case FamilyTag::CentralSq3k:
        return cache.c2k(k).pow(2) * cache.c3k(k) / mpow;
    case FamilyTag::CentralSq4k2k:
        return cache.c2k(k).pow(2) * cache.c4k2k(k) / mpow;
    case FamilyTag::Mixed6k:
        return cache.c2k(k) * cache.c3k(k) * cache.c6k3k(k) / mpow;
    default:
        throw Error("unreachable");
    }
}

Fp weight_value(const Context& ctx, const Weight& w, long k) {
    if (w.kind == Weight::Kind::KPow)
        return Fp::from_long(ctx, k).pow(w.j);
    mpq_class den = w.alpha * k + w.beta;
    if (den == 0)
        throw ExactPole(k);
    return Fp::from_rational(ctx, den).pow(-w.j);
}

std::vector<Fp> general_terms(const Context& ctx, const mpq_class& a, long kmax) {
    std::vector<Fp> out;
    out.reserve(static_cast<size_t>(kmax) + 1);
    Fp t = Fp::one(ctx);
    mpq_class b = -1 - a;
    for (long k = 0; k <= kmax; ++k) {
        out.push_back(t);
        mpq_class num = (a - k) * (b - k) * ((2 * k + 1) * (2 * k + 2));
        mpq_class den = 4 * mpq_class(k + 1) * (k + 1) * (k + 1) * (k + 1);
        t = t * Fp::from_rational(ctx, num / den);
    }
    return out;
}

Fp s_n(const Context& ctx, const mpq_class& a, long n) {
    if (n < 1 || n > ctx.p())
        throw OutOfRange("partial-sum length must satisfy 1 <= n <= p");
    auto terms = general_terms(ctx, a, n - 1);
    Fp acc = Fp::zero(ctx);
    for (const Fp& t : terms)
        acc = acc + t;
    return acc;
}

Fp evaluate(TermCache& cache, const SumSpec& spec) {
    const Context& ctx = cache.ctx();
    const long hi = upper_bound(spec.upper, ctx.p());
    Fp acc = Fp::zero(ctx);
    if (spec.family.tag == FamilyTag::GeneralA) {
        auto terms = general_terms(ctx, spec.family.a, hi);
        for (long k = 0; k <= hi; ++k)
            acc = acc + terms[static_cast<size_t>(k)] * weight_value(ctx, spec.weight, k);
        return acc;
    }
    Fp minv = Fp::from_long(ctx, spec.family.m).inv();
    Fp mpow = Fp::one(ctx);
    for (long k = 0; k <= hi; ++k) {
        Fp t;
        switch (spec.family.tag) {
        case FamilyTag::CentralCube: t = cache.c2k(k).pow(3); break;
        case FamilyTag::CentralSq3k: t = cache.c2k(k).pow(2) * cache.c3k(k); break;
        case FamilyTag::CentralSq4k2k: t = cache.c2k(k).pow(2) * cache.c4k2k(k); break;
        case FamilyTag::Mixed6k: t = cache.c2k(k) * cache.c3k(k) * cache.c6k3k(k); break;
        default: throw Error("unreachable");
        }
        acc = acc + t * mpow * weight_value(ctx, spec.weight, k);
        mpow = mpow * minv;
    }
    return acc;
}

namespace {

mpz_class binz(long n, long r) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

mpq_class weight_q(const Weight& w, long k) {
    if (w.kind == Weight::Kind::KPow) {
        mpq_class r = 1;
        for (int i = 0; i < w.j; ++i)
            r *= k;
        return r;
    }
    mpq_class den = w.alpha * k + w.beta;
    if (den == 0)
        throw ExactPole(k);
    mpq_class r = 1;
    for (int i = 0; i < w.j; ++i)
        r /= den;
    return r;
}

} // namespace

mpq_class exact_oracle(const SumSpec& spec, long p) {
    const long hi = upper_bound(spec.upper, p);
    mpq_class acc = 0;
    if (spec.family.tag == FamilyTag::GeneralA) {
        mpq_class t = 1;
        const mpq_class a = spec.family.a, b = -1 - spec.family.a;
        for (long k = 0; k <= hi; ++k) {
            acc += t * weight_q(spec.weight, k);
            t *= (a - k) * (b - k) * ((2 * k + 1) * (2 * k + 2));
            t /= 4 * mpq_class(k + 1) * (k + 1) * (k + 1) * (k + 1);
        }
        return acc;
    }
    mpq_class mpow = 1;
    for (long k = 0; k <= hi; ++k) {
        mpz_class num;
        switch (spec.family.tag) {
        case FamilyTag::CentralCube: num = binz(2 * k, k); num = num * num * num; break;
        case FamilyTag::CentralSq3k: num = binz(2 * k, k) * binz(2 * k, k) * binz(3 * k, k); break;
        case FamilyTag::CentralSq4k2k: num = binz(2 * k, k) * binz(2 * k, k) * binz(4 * k, 2 * k); break;
        case FamilyTag::Mixed6k: num = binz(2 * k, k) * binz(3 * k, k) * binz(6 * k, 3 * k); break;
        default: throw Error("unreachable");
        }
        acc += num * mpow * weight_q(spec.weight, k);
        mpow /= spec.family.m;
    }
    return acc;
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::GeneralA: return "general";
    case FamilyTag::CentralCube: return "central-cube";
    case FamilyTag::CentralSq3k: return "central-sq3k";
    case FamilyTag::CentralSq4k2k: return "central-sq4k2k";
    case FamilyTag::Mixed6k: return "mixed6k";
    }
    return "?";
}

std::string weight_name(const Weight& w) {
    if (w.kind == Weight::Kind::KPow)
        return "pow:" + std::to_string(w.j);
    return "inv:" + w.alpha.get_str() + "," + w.beta.get_str() + "," + std::to_string(w.j);
}

} // namespace sc::sums
