#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "kummer/numsg.hpp"
#include "kummer/prng.hpp"

using namespace kummer;

TEST_CASE("from_generators on the worked examples") {
    NumericalSemigroup s56 = NumericalSemigroup::from_generators({Int(5), Int(6)});
    CHECK(s56.gaps() == std::vector<Int>{1, 2, 3, 4, 7, 8, 9, 13, 14, 19});
    CHECK(s56.frobenius() == std::optional<Int>(Int(19)));
    CHECK(s56.genus() == Int(10));
    CHECK(s56.multiplicity() == Int(5));
    CHECK(s56.minimal_generators() == std::vector<Int>{5, 6});

    NumericalSemigroup ggs = NumericalSemigroup::from_generators(
        {Int(28), Int(20), Int(12), Int(22), Int(14), Int(6), Int(16), Int(8), Int(9)});
    CHECK(ggs.gaps() == std::vector<Int>{1, 2, 3, 4, 5, 7, 10, 11, 13, 19});
    CHECK(ggs.minimal_generators() == std::vector<Int>{6, 8, 9});

    NumericalSemigroup trivial = NumericalSemigroup::from_generators({Int(1)});
    CHECK(trivial.gaps().empty());
    CHECK_FALSE(trivial.frobenius().has_value());
    CHECK(trivial.genus() == Int(0));
    CHECK(trivial.minimal_generators() == std::vector<Int>{1});

    CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), domain_error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({Int(4), Int(6)}), domain_error);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({Int(0)}), domain_error);
}

TEST_CASE("no coprime pair is needed, only overall gcd 1") {
    NumericalSemigroup s = NumericalSemigroup::from_generators({Int(6), Int(10), Int(15)});
    CHECK(s.frobenius() == std::optional<Int>(Int(29)));
    CHECK(s.minimal_generators() == std::vector<Int>{6, 10, 15});
}

TEST_CASE("apery sets") {
    NumericalSemigroup s56 = NumericalSemigroup::from_generators({Int(5), Int(6)});
    CHECK(s56.apery_set(5) == std::vector<Int>{0, 6, 12, 18, 24});

    NumericalSemigroup trivial = NumericalSemigroup::from_generators({Int(1)});
    CHECK(trivial.apery_set(1) == std::vector<Int>{0});

    NumericalSemigroup ggs = NumericalSemigroup::from_generators(
        {Int(28), Int(20), Int(12), Int(22), Int(14), Int(6), Int(16), Int(8), Int(9)});
    std::vector<Int> ap = ggs.apery_set(9);
    REQUIRE(ap.size() == 9);
    Int mx = ap.front();
    for (Int v : ap) mx = v > mx ? v : mx;
    CHECK(mx == Int(28));  // frobenius + n

    CHECK_THROWS_AS(s56.apery_set(7), domain_error);  // 7 is a gap
}

TEST_CASE("symmetry checks") {
    CHECK(NumericalSemigroup::from_generators({Int(5), Int(6)}).is_symmetric());
    // the sieve is authoritative: F(<3,7>) = 11 = 2*6 - 1
    CHECK(NumericalSemigroup::from_generators({Int(3), Int(7)}).is_symmetric());
    CHECK_FALSE(NumericalSemigroup::from_generators({Int(4), Int(5), Int(7)}).is_symmetric());
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({Int(1)}).is_symmetric(), domain_error);
}

TEST_CASE("random semigroup properties") {
    Xorshift64 rng(808);
    int produced = 0;
    while (produced < 200) {
        std::vector<Int> gens;
        int count = static_cast<int>(rng.range(2, 4));
        Int g = 0;
        for (int i = 0; i < count; ++i) {
            gens.push_back(Int(rng.range(2, 25)));
            g = gcd(g, gens.back());
        }
        if (g != Int(1)) continue;
        NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
        if (!s.frobenius()) continue;
        ++produced;
        Int F = *s.frobenius();
        REQUIRE(F <= Int(200));

        // max of the Apery set is F + n for every member n
        for (Int n : gens) REQUIRE(*std::max_element(s.apery_set(n).begin(), s.apery_set(n).end()) ==
                                   F + n);

        // mirror symmetry agrees with the F = 2g - 1 definition (is_symmetric
        // runs both internally and throws on mismatch)
        REQUIRE_NOTHROW(s.is_symmetric());

        // the complement is closed under addition up to 2F
        for (long long x = 0; x <= 2 * F.to_i64(); ++x)
            for (long long y = x; x + y <= 2 * F.to_i64(); ++y)
                if (s.contains(Int(x)) && s.contains(Int(y))) REQUIRE(s.contains(Int(x + y)));

        // the minimal system regenerates the same semigroup
        NumericalSemigroup back = NumericalSemigroup::from_generators(s.minimal_generators());
        REQUIRE(back.gaps() == s.gaps());
    }
}
