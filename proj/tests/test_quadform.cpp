#include <doctest.h>

#include "supercong/primes.hpp"
#include "supercong/quadform.hpp"
#include "supercong/seq.hpp"

using namespace sc;

TEST_CASE("spot representations") {
    auto r = qf::represent(13, 4);
    REQUIRE(r.has_value());
    CHECK(r->x == 3);
    CHECK(r->y == 1);

    r = qf::represent(11, 2);
    REQUIRE(r.has_value());
    CHECK(r->x == 3);
    CHECK(r->y == 1);

    CHECK_FALSE(qf::represent(7, 4).has_value());

    auto s = qf::represent_4p27(7);
    REQUIRE(s.has_value());
    CHECK(s->x == 1);
    CHECK(s->y == 1);

    s = qf::represent_4p27(13);
    REQUIRE(s.has_value());
    CHECK(s->x == 5);
    CHECK(s->y == 1);

    CHECK_FALSE(qf::represent_4p27(11).has_value());
}

TEST_CASE("sqrt_mod") {
    for (long p : {5L, 13L, 17L, 97L, 193L, 577L}) {
        for (long a = 1; a < std::min(p, 60L); ++a) {
            auto r = qf::sqrt_mod(a, p);
            if (seq::legendre(a, p) == 1) {
                REQUIRE(r.has_value());
                CHECK(*r * *r % p == a % p);
            } else {
                CHECK_FALSE(r.has_value());
            }
        }
    }
}

TEST_CASE("exactness and class criteria to 2000") {
    for (long p : primes_in(5, 2000)) {
        for (long d : {2L, 3L, 4L, 7L}) {
            if (p <= d)
                continue;
            bool admits = false;
            switch (d) {
            case 2: admits = p % 8 == 1 || p % 8 == 3; break;
            case 3: admits = p % 3 == 1; break;
            case 4: admits = p % 4 == 1; break;
            case 7: admits = p % 7 == 1 || p % 7 == 2 || p % 7 == 4; break;
            }
            auto rep = qf::represent(p, d);
            CHECK(rep.has_value() == admits);
            if (rep) {
                CHECK(rep->x > 0);
                CHECK(rep->y > 0);
                CHECK(rep->x * rep->x + d * rep->y * rep->y == p);
                // agreement with the independent search oracle
                auto oracle = qf::represent_search(p, d);
                REQUIRE(oracle.has_value());
                CHECK(oracle->x == rep->x);
                CHECK(oracle->y == rep->y);
            }
        }
        auto s = qf::represent_4p27(p);
        CHECK(s.has_value() == (p % 3 == 1 && p >= 7));
        if (s) {
            CHECK(s->x > 0);
            CHECK(s->y > 0);
            CHECK(s->x * s->x + 27 * s->y * s->y == 4 * p);
        }
    }
}

TEST_CASE("uniqueness of the positive representation") {
    for (long p : primes_in(5, 600)) {
        for (long d : {2L, 3L, 4L, 7L}) {
            if (p <= d)
                continue;
            int count = 0;
            long fx = 0, fy = 0;
            for (long x = 1; x * x < p; ++x) {
                long rem = p - x * x;
                if (rem % d != 0)
                    continue;
                long y = 1;
                while (y * y < rem / d)
                    ++y;
                if (y * y == rem / d && y > 0) {
                    ++count;
                    fx = x;
                    fy = y;
                }
            }
            auto rep = qf::represent(p, d);
            if (rep) {
                CHECK(count == 1);
                CHECK(rep->x == fx);
                CHECK(rep->y == fy);
            } else {
                CHECK(count == 0);
            }
        }
    }
}
