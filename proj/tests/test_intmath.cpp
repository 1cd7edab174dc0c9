#include <catch2/catch_amalgamated.hpp>

#include "kummer/intmath.hpp"
#include "kummer/prng.hpp"

using namespace kummer;

namespace {

// Direct-summation oracles; these stay authoritative over the closed forms.
Int floor_sum_direct(long long a, long long b) {
    Int total = 0;
    for (long long k = 1; k < b; ++k) total += floor_div(Int(k) * Int(a), Int(b));
    return total;
}

Int ceil_sum_direct(long long m, long long lambda) {
    Int total = 0;
    for (long long i = 1; i < m; ++i) total += ceil_div(Int(i) * Int(lambda), Int(m));
    return total;
}

}  // namespace

TEST_CASE("floor_div and ceil_div basics") {
    CHECK(floor_div(7, 2) == Int(3));
    CHECK(floor_div(-7, 2) == Int(-4));
    CHECK(floor_div(-8, 2) == Int(-4));
    CHECK(ceil_div(7, 2) == Int(4));
    CHECK(ceil_div(-7, 2) == Int(-3));
    CHECK(ceil_div(6, 3) == Int(2));
    CHECK_THROWS_AS(floor_div(1, 0), domain_error);
    CHECK_THROWS_AS(ceil_div(1, 0), domain_error);
}

TEST_CASE("floor/ceil division identities") {
    Xorshift64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        Int a = rng.range(-500, 500);
        Int b = 0;
        while (b.is_zero()) b = rng.range(-40, 40);
        Int diff = ceil_div(a, b) - floor_div(a, b);
        bool divides = mod_reduce(a, b.abs()).is_zero();
        CHECK(diff == (divides ? Int(0) : Int(1)));
        CHECK(floor_div(-a, b) == -ceil_div(a, b));
        // the floor remainder has the sign of b
        Int rem = a - floor_div(a, b) * b;
        if (b > Int(0)) {
            CHECK(rem >= Int(0));
            CHECK(rem < b);
        } else {
            CHECK(rem <= Int(0));
            CHECK(rem > b);
        }
    }
}

TEST_CASE("floor_partial_sum agrees with direct summation") {
    // Values fixed from the summation oracle.
    CHECK(floor_sum_direct(3, 5) == Int(4));
    CHECK(floor_partial_sum(3, 5) == Int(4));
    CHECK(floor_partial_sum(1, 1) == Int(0));
    CHECK(floor_sum_direct(4, 6) == Int(8));
    CHECK(floor_partial_sum(4, 6) == Int(8));
    CHECK_THROWS_AS(floor_partial_sum(0, 3), domain_error);
    CHECK_THROWS_AS(floor_partial_sum(3, -1), domain_error);

    for (long long a = 1; a <= 60; ++a)
        for (long long b = 1; b <= 60; ++b)
            REQUIRE(floor_partial_sum(a, b) == floor_sum_direct(a, b));
}

TEST_CASE("ceil_partial_sum agrees with direct summation") {
    CHECK(ceil_partial_sum(4, 0) == Int(0));
    CHECK(ceil_sum_direct(5, 3) == Int(8));
    CHECK(ceil_partial_sum(5, 3) == Int(8));
    CHECK(ceil_sum_direct(5, -3) == Int(-4));
    CHECK(ceil_partial_sum(5, -3) == Int(-4));
    CHECK_THROWS_AS(ceil_partial_sum(1, 3), domain_error);

    for (long long m = 2; m <= 60; ++m)
        for (long long lam = -60; lam <= 60; ++lam)
            REQUIRE(ceil_partial_sum(m, lam) == ceil_sum_direct(m, lam));
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 7) == Int(5));
    CHECK(mod_inverse(1, 9) == Int(1));
    CHECK(mod_inverse(-5, 6) == Int(1));
    CHECK_THROWS_AS(mod_inverse(2, 4), domain_error);
    CHECK_THROWS_AS(mod_inverse(3, 1), domain_error);

    Xorshift64 rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        Int m = rng.range(2, 200);
        Int a = rng.range(-1000, 1000);
        if (gcd(a, m) != Int(1)) continue;
        Int u = mod_inverse(a, m);
        CHECK(u >= Int(1));
        CHECK(u < m);
        CHECK(mod_reduce(a * u, m) == Int(1));
    }
}

TEST_CASE("weighted floor sums are invariant under congruent shifts") {
    // With sum(lambda_i * d_i) = 0 and b == c (mod m), the weighted floor and
    // ceiling sums coincide for b and c.
    Xorshift64 rng(33);
    for (int trial = 0; trial < 400; ++trial) {
        long long m = rng.range(2, 30);
        int r = static_cast<int>(rng.range(1, 5));
        std::vector<Int> lambda, deg, a;
        Int weighted = 0;
        for (int i = 0; i < r; ++i) {
            lambda.push_back(rng.range(-15, 15));
            deg.push_back(rng.range(1, 3));
            a.push_back(rng.range(-40, 40));
            weighted += lambda.back() * deg.back();
        }
        lambda.push_back(-weighted);  // lambda_0 with degree 1 makes the total zero
        deg.push_back(1);
        a.push_back(rng.range(-40, 40));

        Int b = rng.range(-100, 100);
        Int c = b + Int(m) * Int(rng.range(-5, 5));
        Int fb = 0, fc = 0, cb = 0, cc = 0;
        for (size_t i = 0; i < lambda.size(); ++i) {
            fb += floor_div(a[i] + b * lambda[i], m) * deg[i];
            fc += floor_div(a[i] + c * lambda[i], m) * deg[i];
            cb += ceil_div(a[i] + b * lambda[i], m) * deg[i];
            cc += ceil_div(a[i] + c * lambda[i], m) * deg[i];
        }
        CHECK(fb == fc);
        CHECK(cb == cc);
    }
}

TEST_CASE("overflow detection") {
    Int big = Int::from_raw((static_cast<__int128>(1) << 126));
    CHECK_THROWS_AS(big * 4, overflow_error);
    CHECK_THROWS_AS(big + big, overflow_error);
    CHECK_THROWS_AS((-big) - big, overflow_error);
    CHECK_THROWS_AS(Int(INT64_MAX) * Int(INT64_MAX) * Int(4), overflow_error);
    CHECK_NOTHROW(Int(INT64_MAX) * Int(INT64_MAX));
    CHECK_THROWS_AS((Int(INT64_MAX) * Int(2)).to_i64(), overflow_error);
}
