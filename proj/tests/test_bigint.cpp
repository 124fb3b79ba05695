#include <doctest.h>

#include <stdexcept>

#include "gkm21/bigint.hpp"

using gkm21::BigInt;

TEST_CASE("small arithmetic agrees with machine integers") {
    // deterministic xorshift sweep; values stay well inside int64 after ops
    uint64_t state = 0x243f6a8885a308d3ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<long long>(state % 2000001) - 1000000;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = next(), b = next();
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK(BigInt(a).to_string() == std::to_string(a));
    }
}

TEST_CASE("large products round trip through decimal") {
    // 30! computed by the library must match the known decimal expansion
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f = f * BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
    CHECK_FALSE(f.fits_int64());
    BigInt g = f;
    for (int i = 30; i >= 2; --i) g = g.exact_div(BigInt(i));
    CHECK(g.to_int64() == 1);
}

TEST_CASE("multi-limb divmod satisfies the division identity") {
    // products of 60-bit values give 120-bit dividends, well past one limb
    uint64_t state = 0x13198a2e03707344ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 500; ++trial) {
        BigInt a(static_cast<long long>(next() >> 4));
        BigInt b(static_cast<long long>(next() >> 4));
        BigInt c(static_cast<long long>(next() >> 34) + 1);
        BigInt n = a * b + c;
        if (trial % 2) n = -n;
        BigInt d = (trial % 3) ? b : -b;
        BigInt q, r;
        BigInt::divmod(n, d, q, r);
        CHECK(q * d + r == n);
        bool remainder_small = r.abs_less(d.abs()) || r.is_zero();
        CHECK(remainder_small);
        // remainder carries the dividend sign under truncation
        if (!r.is_zero()) CHECK(r.is_negative() == n.is_negative());
        CHECK((n * d).exact_div(d) == n);
    }
}

TEST_CASE("division semantics and guards") {
    CHECK((BigInt(-7) / BigInt(2)).to_int64() == -3);
    CHECK((BigInt(-7) % BigInt(2)).to_int64() == -1);
    CHECK((BigInt(7) / BigInt(-2)).to_int64() == -3);
    CHECK((BigInt(7) % BigInt(-2)).to_int64() == 1);
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
    CHECK_THROWS_AS(BigInt(7).exact_div(BigInt(2)), std::logic_error);
    CHECK(BigInt(-12).abs().to_int64() == 12);
    CHECK(BigInt(0).is_zero());
}
