#include "supercong/padic.hpp"

#include "supercong/primes.hpp"

namespace sc::padic {

Context::Context(long p, int precision) : p_(p), n_(precision) {
    if (precision < 1)
        throw BadPrecision("precision must be >= 1, got " + std::to_string(precision));
    if (p < 3 || !is_prime(p))
        throw CompositeModulus(std::to_string(p) + " is not an odd prime");
    pow_.reserve(static_cast<size_t>(precision) + 1);
    mpz_class acc = 1;
    for (int i = 0; i <= precision; ++i) {
        pow_.push_back(acc);
        acc *= p;
    }
}

Context make_context(long p, int precision) { return Context(p, precision); }

Fp::Fp(const Context* ctx, long v, mpz_class u, int prec)
    : ctx_(ctx), zero_(false), v_(v), u_(std::move(u)), prec_(prec), zero_abs_(0) {
    assert(prec_ >= 1 && prec_ <= ctx_->precision());
    assert(u_ > 0 && u_ < ctx_->pe(prec_));
    assert(u_ % ctx_->p() != 0);
}

long Fp::valuation() const {
    if (zero_)
        throw DivisionByZero("valuation of zero");
    return v_;
}

Fp Fp::from_long(const Context& ctx, long n) {
    return from_integer(ctx, mpz_class(n));
}

Fp Fp::from_integer(const Context& ctx, const mpz_class& n) {
    if (n == 0)
        return zero(ctx);
    mpz_class u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(),
                                          mpz_class(ctx.p()).get_mpz_t()));
    u %= ctx.modulus();
    if (u < 0)
        u += ctx.modulus();
    return Fp(&ctx, v, u, ctx.precision());
}

Fp Fp::from_rational(const Context& ctx, const mpq_class& q) {
    if (q == 0)
        return zero(ctx);
    mpz_class pz(ctx.p());
    mpz_class nu, du;
    long vn = static_cast<long>(mpz_remove(nu.get_mpz_t(), q.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(du.get_mpz_t(), q.get_den().get_mpz_t(), pz.get_mpz_t()));
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), du.get_mpz_t(), ctx.modulus().get_mpz_t()) == 0)
        throw Error("non-invertible denominator");  // unreachable after mpz_remove
    mpz_class u = (nu * inv) % ctx.modulus();
    if (u < 0)
        u += ctx.modulus();
    return Fp(&ctx, vn - vd, u, ctx.precision());
}

Fp Fp::from_residue(const Context& ctx, const mpz_class& r, int prec) {
    if (prec < 1 || prec > ctx.precision())
        throw BadPrecision("residue precision out of range");
    mpz_class m = r % ctx.pe(prec);
    if (m < 0)
        m += ctx.pe(prec);
    if (m == 0)
        return Fp(&ctx, prec);  // vanishes to the stated precision only
    mpz_class u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), m.get_mpz_t(),
                                          mpz_class(ctx.p()).get_mpz_t()));
    int rem = prec - static_cast<int>(v);
    if (rem < 1)
        throw PrecisionExhausted("residue has no unit digits left");
    u %= ctx.pe(rem);
    return Fp(&ctx, v, u, rem);
}

Fp Fp::operator-() const {
    if (zero_)
        return *this;
    return Fp(ctx_, v_, ctx_->pe(prec_) - u_, prec_);
}

Fp Fp::inv() const {
    if (zero_)
        throw DivisionByZero("inverse of zero");
    mpz_class r;
    mpz_invert(r.get_mpz_t(), u_.get_mpz_t(), ctx_->pe(prec_).get_mpz_t());
    return Fp(ctx_, -v_, r, prec_);
}

Fp Fp::pow(long e) const {
    if (e == 0)
        return one(*ctx_);
    if (zero_) {
        if (e < 0)
            throw DivisionByZero("negative power of zero");
        long b = zero_abs_;
        for (long i = 1; i < e && b < kExactZero; ++i)
            b = sat(b + zero_abs_);
        return Fp(ctx_, b);
    }
    const Fp base = e < 0 ? inv() : *this;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), base.u_.get_mpz_t(), ae, ctx_->pe(base.prec_).get_mpz_t());
    return Fp(ctx_, base.v_ * static_cast<long>(ae), r, base.prec_);
}

Fp operator*(const Fp& a, const Fp& b) {
    assert(a.ctx_ == nullptr || b.ctx_ == nullptr || a.ctx_ == b.ctx_);
    if (a.zero_ || b.zero_) {
        // |xy| <= p^(bound_x + v_y); bounds add when both vanish; an exact
        // zero stays exact
        long bound;
        if (a.zero_ && b.zero_)
            bound = (a.zero_abs_ == Fp::kExactZero || b.zero_abs_ == Fp::kExactZero)
                        ? Fp::kExactZero
                        : Fp::sat(a.zero_abs_ + b.zero_abs_);
        else if (a.zero_)
            bound = a.zero_abs_ == Fp::kExactZero ? Fp::kExactZero : Fp::sat(a.zero_abs_ + b.v_);
        else
            bound = b.zero_abs_ == Fp::kExactZero ? Fp::kExactZero : Fp::sat(b.zero_abs_ + a.v_);
        return Fp(a.ctx_ ? a.ctx_ : b.ctx_, bound);
    }
    int prec = std::min(a.prec_, b.prec_);
    mpz_class u = (a.u_ * b.u_) % a.ctx_->pe(prec);
    return Fp(a.ctx_, a.v_ + b.v_, u, prec);
}

Fp operator/(const Fp& a, const Fp& b) {
    if (b.zero_)
        throw DivisionByZero("division by zero");
    if (a.zero_)
        return Fp(a.ctx_, a.zero_abs_ == Fp::kExactZero ? Fp::kExactZero
                                                        : Fp::sat(a.zero_abs_ - b.v_));
    int prec = std::min(a.prec_, b.prec_);
    mpz_class binv;
    mpz_invert(binv.get_mpz_t(), b.u_.get_mpz_t(), a.ctx_->pe(prec).get_mpz_t());
    mpz_class u = (a.u_ * binv) % a.ctx_->pe(prec);
    return Fp(a.ctx_, a.v_ - b.v_, u, prec);
}

Fp Fp::add_signed(const Fp& a, const Fp& b, bool subtract) {
    if (a.zero_ || b.zero_) {
        if (a.zero_ && b.zero_)
            return Fp(a.ctx_ ? a.ctx_ : b.ctx_,
                      std::min(a.zero_abs_, b.zero_abs_));
        // x plus a value vanishing to p^bound is x known to that bound
        const Fp& z = a.zero_ ? a : b;
        Fp x = a.zero_ ? (subtract ? -b : b) : a;
        if (z.zero_abs_ >= x.v_ + x.prec_)
            return x;
        if (z.zero_abs_ <= x.v_)
            return Fp(x.ctx_, z.zero_abs_);
        int prec = static_cast<int>(z.zero_abs_ - x.v_);
        mpz_class u = x.u_ % x.ctx_->pe(prec);
        if (u == 0)
            return Fp(x.ctx_, z.zero_abs_);  // unreachable: u is a unit
        return Fp(x.ctx_, x.v_, u, prec);
    }
    assert(a.ctx_ == b.ctx_);
    const Context& ctx = *a.ctx_;
    long vmin = std::min(a.v_, b.v_);
    long abs_prec = std::min(a.v_ + a.prec_, b.v_ + b.prec_);
    int digits = static_cast<int>(abs_prec - vmin);
    assert(digits >= 1);
    if (digits > ctx.precision())
        digits = ctx.precision();
    const mpz_class& m = ctx.pe(digits);
    mpz_class s = a.u_;
    for (long i = a.v_; i > vmin; --i)
        s *= ctx.p();
    s %= m;
    mpz_class t = b.u_;
    for (long i = b.v_; i > vmin; --i)
        t *= ctx.p();
    t %= m;
    if (subtract)
        s -= t;
    else
        s += t;
    s %= m;
    if (s < 0)
        s += m;
    if (s == 0)
        return Fp(&ctx, vmin + digits);  // every attained digit cancelled
    mpz_class u;
    long c = static_cast<long>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(),
                                          mpz_class(ctx.p()).get_mpz_t()));
    int prec = digits - static_cast<int>(c);
    if (prec < 1)
        throw PrecisionExhausted("additive cancellation exhausted precision");
    u %= ctx.pe(prec);
    return Fp(&ctx, vmin + c, u, prec);
}

Fp operator+(const Fp& a, const Fp& b) { return Fp::add_signed(a, b, false); }
Fp operator-(const Fp& a, const Fp& b) { return Fp::add_signed(a, b, true); }

mpz_class Fp::residue(int e) const {
    if (e < 0)
        throw OutOfRange("negative modulus exponent");
    if (e == 0)
        return mpz_class(0);
    if (zero_) {
        if (zero_abs_ < e)
            throw PrecisionExhausted("zero certified only to " +
                                     std::to_string(zero_abs_) + " digits, need " +
                                     std::to_string(e));
        return mpz_class(0);
    }
    if (v_ < 0)
        throw NegativeValuation("value has valuation " + std::to_string(v_));
    if (v_ + prec_ < e)
        throw PrecisionExhausted("only " + std::to_string(v_ + prec_) +
                                 " digits attained, need " + std::to_string(e));
    if (v_ >= e)
        return mpz_class(0);
    mpz_class r = u_ % ctx_->pe(e - static_cast<int>(v_));
    for (long i = 0; i < v_; ++i)
        r *= ctx_->p();
    return r;
}

bool Fp::congruent(const Fp& other, int e) const {
    return residue(e) == other.residue(e);
}

long residue_index(const Context& ctx, const mpq_class& a) {
    mpz_class den = a.get_den();
    if (den % ctx.p() == 0)
        throw NotPAdicInteger("denominator divisible by p");
    mpz_class inv, pz(ctx.p());
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class r = (a.get_num() * inv) % pz;
    if (r < 0)
        r += pz;
    return r.get_si();
}

mpq_class a_prime(const Context& ctx, const mpq_class& a) {
    long r = residue_index(ctx, a);
    mpq_class out = (a - r) / ctx.p();
    out.canonicalize();
    return out;
}

} // namespace sc::padic
