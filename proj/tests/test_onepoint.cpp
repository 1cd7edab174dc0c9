#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "kummer/numsg.hpp"
#include "kummer/onepoint.hpp"
#include "kummer/rroracle.hpp"

using namespace kummer;
using kummer::testing::admissible_places;
using kummer::testing::make_corpus;

namespace {

CurveData section33_curve() {  // y^8 = x^3 (x-1)^6 over F_11
    CurveData c;
    c.m = Int(8);
    c.branches = {{Int(3), Int(1), "x"}, {Int(6), Int(1), "x-1"}};
    c.base_field_q = Int(11);
    return c;
}

std::vector<Int> gaps_56() { return {1, 2, 3, 4, 7, 8, 9, 13, 14, 19}; }

}  // namespace

TEST_CASE("gap_set reproduces the worked examples") {
    CHECK(gap_set(preset_ggs(2, 3), {0}) == std::vector<Int>{1, 2, 3, 4, 5, 7, 10, 11, 13, 19});
    CHECK(gap_set(preset_equal_multiplicity(6, 5, 1), {1}) == gaps_56());
    std::vector<Int> bm_gaps{1,  2,  3,  4,  5,  6,  8,  9,  10, 11, 13, 15,
                             16, 17, 18, 20, 22, 23, 25, 29, 30, 32, 37, 44};
    CHECK(gap_set(preset_bm_subcover(3, 3, 4, 7), {1}) == bm_gaps);
}

TEST_CASE("is_gap examples") {
    CurveData ggs = preset_ggs(2, 3);
    CHECK(is_gap(ggs, {0}, 19));
    CHECK_FALSE(is_gap(ggs, {0}, 20));
    CurveData rational;
    rational.m = Int(2);
    rational.branches = {{Int(1), Int(1), "a"}, {Int(1), Int(1), "b"}};
    CHECK_FALSE(is_gap(rational, {0}, 1));
    CHECK_THROWS_AS(is_gap(ggs, {0}, 0), domain_error);
}

TEST_CASE("generators match the printed systems") {
    std::vector<Int> ggs_gens = generators(preset_ggs(2, 3), {0});
    CHECK(ggs_gens == std::vector<Int>{9, 28, 20, 12, 22, 14, 6, 16, 8});

    std::vector<Int> bm_gens = generators(preset_bm_subcover(3, 3, 4, 7), {1});
    CHECK(bm_gens == std::vector<Int>{7, 36, 51, 24, 39, 12, 27});

    // the equal-multiplicity semigroup at Q_inf is <5, 6>
    std::vector<Int> em = generators(preset_equal_multiplicity(6, 5, 1), {0});
    CHECK(NumericalSemigroup::from_generators(em).gaps() == gaps_56());
}

TEST_CASE("multiplicity and frobenius") {
    CurveData em = preset_equal_multiplicity(6, 5, 1);
    CHECK(multiplicity(em, {1}) == Int(5));
    CHECK(multiplicity(em, {0}) == Int(5));
    CHECK(frobenius(em, {0}) == std::optional<Int>(Int(19)));
    CHECK(frobenius(em, {1}) == std::optional<Int>(Int(19)));

    // m < r forces multiplicity m at a finite place
    CurveData wide = preset_equal_multiplicity(5, 7, 1);
    CHECK(multiplicity(wide, {1}) == Int(5));

    CHECK(multiplicity(preset_bm_subcover(3, 3, 4, 7), {1}) == Int(7));
    CHECK(frobenius(preset_ggs(2, 3), {1}) == std::optional<Int>(Int(19)));

    CurveData rational;
    rational.m = Int(2);
    rational.branches = {{Int(1), Int(1), "a"}, {Int(1), Int(1), "b"}};
    CHECK_FALSE(frobenius(rational, {0}).has_value());
}

TEST_CASE("symmetry criterion") {
    CHECK(is_symmetric(section33_curve(), {0}));
    for (long long q : {2, 3}) {
        CHECK(is_symmetric(preset_ggs(q, 3), {1}));
        CHECK_FALSE(is_symmetric(preset_ggs(q, 5), {1}));
    }
    // finite-place symmetry iff r == -1 (mod m)
    CHECK(is_symmetric(preset_equal_multiplicity(6, 5, 1), {1}));
    CHECK_FALSE(is_symmetric(preset_equal_multiplicity(5, 7, 1), {1}));

    CurveData rational;
    rational.m = Int(2);
    rational.branches = {{Int(1), Int(1), "a"}, {Int(1), Int(1), "b"}};
    CHECK_FALSE(is_symmetric(rational, {0}));  // genus 0 has no Frobenius number
}

TEST_CASE("fast symmetry conditions") {
    CurveData em = preset_equal_multiplicity(6, 5, 1);
    FastSymmetryConditions fc = fast_symmetry_conditions(em, {0});
    CHECK(fc.condition1);
    CHECK(fc.condition2 == std::optional<bool>(true));

    CurveData ggs = preset_ggs(2, 3);
    fc = fast_symmetry_conditions(ggs, {1});
    CHECK(fc.condition1);                     // reduced exponents {1, 1, 3, 3} all divide 9
    CHECK_FALSE(fc.condition2.has_value());   // gcd(9, 3) = 3 blocks condition2

    // condition1 can fail while the semigroup is symmetric
    CurveData s33 = section33_curve();
    fc = fast_symmetry_conditions(s33, {0});
    CHECK_FALSE(fc.condition1);
    CHECK(is_symmetric(s33, {0}));
}

TEST_CASE("semigroups_equal_shortcut") {
    CurveData ggs = preset_ggs(2, 3);
    CHECK(semigroups_equal_shortcut(ggs, {0}, {1}));  // -8 == 1 (mod 9)
    CHECK(gap_set(ggs, {0}) == gap_set(ggs, {1}));

    CurveData em = preset_equal_multiplicity(6, 5, 1);
    CHECK(semigroups_equal_shortcut(em, {1}, {2}));

    CurveData s33 = section33_curve();
    CHECK_FALSE(semigroups_equal_shortcut(s33, {1}, {0}));  // 3 vs -9 == 7 (mod 8)
}

TEST_CASE("lambda choice does not change the gap set") {
    std::vector<CurveData> curves{preset_equal_multiplicity(6, 5, 1), preset_ggs(2, 3),
                                  preset_bm_subcover(3, 3, 4, 7), section33_curve()};
    for (const CurveData& c : make_corpus(909, 12, {.genus_cap = 30})) curves.push_back(c);
    for (const CurveData& c : curves) {
        for (PlaceRef p : admissible_places(c)) {
            std::vector<Int> reference = gap_set(c, p);
            for (Int lam = 1; lam < c.m; lam += 1) {
                if (gcd(lam, c.m) != Int(1)) continue;
                REQUIRE(gap_set(c, p, lam) == reference);
            }
        }
        CHECK_THROWS_AS(gap_set(c, admissible_places(c).front(), c.m), domain_error);
    }
}

TEST_CASE("closed form agrees with the oracle on random curves") {
    for (const CurveData& c : make_corpus(1010, 60)) {
        Int g = genus(c);
        for (PlaceRef p : admissible_places(c)) {
            std::vector<Int> closed = gap_set(c, p);
            REQUIRE(Int(static_cast<long long>(closed.size())) == g);
            REQUIRE(closed == brute_force_gaps(c, p));

            // pointwise membership formula agrees too
            for (long long a = 1; a <= 2 * g.to_i64() + 1; ++a)
                REQUIRE(is_gap(c, p, a) ==
                        std::binary_search(closed.begin(), closed.end(), Int(a)));
        }
    }
}

TEST_CASE("generator form and gap form describe the same semigroup") {
    for (const CurveData& c : make_corpus(1111, 25, {.genus_cap = 30})) {
        Int g = genus(c);
        for (PlaceRef p : admissible_places(c)) {
            std::vector<Int> gaps = gap_set(c, p);
            NumericalSemigroup S = NumericalSemigroup::from_generators(generators(c, p));
            REQUIRE(S.gaps() == gaps);
            // complement of the gap set in [0, 2g] is exactly the sieve members
            for (long long x = 0; x <= 2 * g.to_i64(); ++x)
                REQUIRE(S.contains(Int(x)) ==
                        !std::binary_search(gaps.begin(), gaps.end(), Int(x)));
        }
    }
}

TEST_CASE("symmetry agrees with the largest-gap characterization") {
    for (const CurveData& c : make_corpus(1212, 60)) {
        Int g = genus(c);
        for (PlaceRef p : admissible_places(c)) {
            std::vector<Int> gaps = gap_set(c, p);
            bool by_gap = !gaps.empty() && gaps.back() == Int(2) * g - 1;
            REQUIRE(is_symmetric(c, p) == by_gap);
            std::optional<Int> F = frobenius(c, p);
            if (gaps.empty())
                REQUIRE_FALSE(F.has_value());
            else
                REQUIRE(F == std::optional<Int>(gaps.back()));

            OnePointResult r = one_point(c, p);
            REQUIRE(r.gaps == gaps);
            if (!gaps.empty()) {
                REQUIRE(gaps.back() <= Int(2) * g - 1);
                Int mult = r.multiplicity;
                for (Int x = 1; x < mult; x += 1)
                    REQUIRE(std::binary_search(gaps.begin(), gaps.end(), x));
                REQUIRE_FALSE(std::binary_search(gaps.begin(), gaps.end(), mult));
            }
        }
    }
}

TEST_CASE("fast conditions are sound but not necessary") {
    bool saw_condition1 = false, saw_condition2 = false, saw_incomplete = false;
    std::vector<CurveData> curves = make_corpus(1313, 120);
    curves.push_back(section33_curve());
    for (const CurveData& c : curves) {
        for (PlaceRef p : admissible_places(c)) {
            FastSymmetryConditions fc = fast_symmetry_conditions(c, p);
            bool sym = is_symmetric(c, p);
            if (genus(c) > Int(0)) {
                if (fc.condition1) {
                    saw_condition1 = true;
                    REQUIRE(sym);
                    // condition1 pins the Frobenius number
                    Int expected = 0;
                    Int sum_d = 0;
                    for (int i = 0; i <= c.r(); ++i) sum_d += c.degree_at(i);
                    expected = c.m * (sum_d - 2);
                    for (int i = 0; i <= c.r(); ++i) {
                        if (i == p.index) continue;
                        Int reduced = mod_reduce(c.lambda_at(i), c.m);
                        if (reduced.is_zero()) reduced = c.m;
                        expected -= reduced * c.degree_at(i);
                    }
                    REQUIRE(frobenius(c, p) == std::optional<Int>(expected));
                }
                if (fc.condition2 && *fc.condition2) {
                    saw_condition2 = true;
                    REQUIRE(sym);
                }
                if (sym && !fc.condition1) saw_incomplete = true;
            }
        }
    }
    CHECK(saw_condition1);
    CHECK(saw_condition2);
    CHECK(saw_incomplete);
}

TEST_CASE("equal lambda residues give equal gap sets") {
    for (const CurveData& c : make_corpus(1414, 40, {.genus_cap = 30, .min_admissible = 2})) {
        std::vector<PlaceRef> adm = admissible_places(c);
        for (size_t a = 0; a < adm.size(); ++a)
            for (size_t b = a + 1; b < adm.size(); ++b)
                if (semigroups_equal_shortcut(c, adm[a], adm[b]))
                    REQUIRE(gap_set(c, adm[a]) == gap_set(c, adm[b]));
    }
}
