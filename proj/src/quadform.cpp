#include "supercong/quadform.hpp"

#include <cmath>
#include <cstdint>

#include "supercong/seq.hpp"

namespace sc::qf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

long isqrt_long(long n) {
    if (n < 0)
        return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::optional<long> perfect_square(long n) {
    if (n < 0)
        return std::nullopt;
    long r = isqrt_long(n);
    if (r * r == n)
        return r;
    return std::nullopt;
}

bool class_admits(long p, long d) {
    switch (d) {
    case 2: return p % 8 == 1 || p % 8 == 3;
    case 3: return p % 3 == 1;
    case 4: return p % 4 == 1;
    case 7: return p % 7 == 1 || p % 7 == 2 || p % 7 == 4;
    default: throw OutOfRange("unsupported form discriminant " + std::to_string(d));
    }
}

} // namespace

std::optional<long> sqrt_mod(long a, long p) {
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        return 0;
    if (seq::legendre(a, p) != 1)
        return std::nullopt;
    if (p % 4 == 3)
        return static_cast<long>(powmod(static_cast<u64>(a), static_cast<u64>((p + 1) / 4), static_cast<u64>(p)));
    // Tonelli-Shanks
    long q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    long z = 2;
    while (seq::legendre(z, p) != -1)
        ++z;
    u64 m = static_cast<u64>(s);
    u64 c = powmod(static_cast<u64>(z), static_cast<u64>(q), static_cast<u64>(p));
    u64 t = powmod(static_cast<u64>(a), static_cast<u64>(q), static_cast<u64>(p));
    u64 r = powmod(static_cast<u64>(a), static_cast<u64>((q + 1) / 2), static_cast<u64>(p));
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, static_cast<u64>(p));
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j)
            b = mulmod(b, b, static_cast<u64>(p));
        m = i;
        c = mulmod(b, b, static_cast<u64>(p));
        t = mulmod(t, c, static_cast<u64>(p));
        r = mulmod(r, b, static_cast<u64>(p));
    }
    return static_cast<long>(r);
}

std::optional<QuadRep> represent(long p, long d) {
    if (!class_admits(p, d))
        return std::nullopt;
    auto root = sqrt_mod(p - d % p, p);  // sqrt(-d)
    if (!root)
        return std::nullopt;  // cannot happen for admitted classes
    // Cornacchia descent from (p, sqrt(-d)).
    long a = p, b = *root, bound = isqrt_long(p);
    if (b * 2 < p)
        b = p - b;  // either root works; start from the larger
    while (b > bound) {
        long r = a % b;
        a = b;
        b = r;
    }
    if (b == 0)
        return std::nullopt;
    long rem = p - b * b;
    if (rem % d != 0)
        return represent_search(p, d);
    auto y = perfect_square(rem / d);
    if (!y || *y == 0)
        return represent_search(p, d);
    return QuadRep{d, b, *y, false};
}

std::optional<QuadRep> represent_4p27(long p) {
    if (p % 3 != 1)
        return std::nullopt;
    // Derive from p = a^2 + 3 b^2: exactly one of 3|b, 3|(a-b), 3|(a+b) holds.
    auto base = represent(p, 3);
    if (!base)
        return represent_4p27_search(p);
    long a = base->x, b = base->y;
    long x = 0, y = 0;
    if (b % 3 == 0) {
        x = 2 * a;
        y = 2 * b / 3;
    } else if ((a - b) % 3 == 0) {
        x = a + 3 * b;
        y = (a - b) / 3;
    } else {
        x = a - 3 * b;
        y = (a + b) / 3;
    }
    if (x < 0)
        x = -x;
    if (y < 0)
        y = -y;
    if (x > 0 && y > 0 && x * x + 27 * y * y == 4 * p)
        return QuadRep{27, x, y, true};
    return represent_4p27_search(p);
}

std::optional<QuadRep> represent_search(long p, long d) {
    for (long x = 1; x * x < p; ++x) {
        long rem = p - x * x;
        if (rem % d != 0)
            continue;
        if (auto y = perfect_square(rem / d); y && *y > 0)
            return QuadRep{d, x, *y, false};
    }
    return std::nullopt;
}

std::optional<QuadRep> represent_4p27_search(long p) {
    for (long x = 1; x * x < 4 * p; ++x) {
        long rem = 4 * p - x * x;
        if (rem % 27 != 0)
            continue;
        if (auto y = perfect_square(rem / 27); y && *y > 0)
            return QuadRep{27, x, *y, true};
    }
    return std::nullopt;
}

} // namespace sc::qf
