#pragma once

// Closed-form descriptions of the Weierstrass objects at one totally
// ramified degree-one place Q_s: the gap set, a generating system for
// H(Q_s), multiplicity, Frobenius number, and the symmetry criterion.
//
// Everything is driven by the ceiling sums
//   S_i = sum_{k=0}^{r} ceil(i * lam * lambda_k / m) * d_k,  1 <= i <= m-1,
// where lam is any integer coprime to m. With lam the inverse of lambda_s
// modulo m the gap set takes the simple form { m*j + i | 0 <= j <= S_i - 2 }.

#include <algorithm>
#include <optional>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

namespace detail {

// S_i for all i in [1, m-1], as 0-based vector entry i-1.
inline std::vector<Int> ceil_sums(const CurveData& c, Int lam) {
    long long m = c.m.to_i64();
    std::vector<Int> s(static_cast<size_t>(m - 1), Int(0));
    for (int k = 0; k <= c.r(); ++k) {
        Int lk = lam * c.lambda_at(k);
        Int dk = c.degree_at(k);
        for (long long i = 1; i < m; ++i)
            s[static_cast<size_t>(i - 1)] += ceil_div(Int(i) * lk, c.m) * dk;
    }
    return s;
}

inline Int default_lambda(const CurveData& c, PlaceRef s) {
    return mod_inverse(c.lambda_at(s.index), c.m);
}

inline void check_lambda_choice(const CurveData& c, std::optional<Int> lambda) {
    if (lambda && gcd(*lambda, c.m) != Int(1))
        throw domain_error("lambda = " + lambda->str() + " is not coprime to m = " + c.m.str());
}

}  // namespace detail

// G(Q_s), ascending. With the default lambda (the inverse of lambda_s mod m)
// this evaluates { m*j + i | 1 <= i <= m-1, 0 <= j <= S_i - 2 }; any other
// lambda coprime to m goes through the general parameterization
// { m*j + i*lam*lambda_s | ceil(-i*lam*lambda_s/m) <= j <= S_i - ceil(i*lam*lambda_s/m) - 1 }
// and yields the identical set.
inline std::vector<Int> gap_set(const CurveData& c, PlaceRef s,
                                std::optional<Int> lambda = std::nullopt) {
    require_valid(c);
    require_admissible(c, s);
    detail::check_lambda_choice(c, lambda);
    Int lam = lambda ? *lambda : detail::default_lambda(c, s);
    std::vector<Int> sums = detail::ceil_sums(c, lam);
    Int lam_s = lam * c.lambda_at(s.index);
    std::vector<Int> gaps;
    long long m = c.m.to_i64();
    for (long long i = 1; i < m; ++i) {
        Int base = Int(i) * lam_s;
        Int jlo = ceil_div(-base, c.m);
        Int jhi = sums[static_cast<size_t>(i - 1)] - ceil_div(base, c.m) - 1;
        for (Int j = jlo; j <= jhi; j += 1)
            gaps.push_back(c.m * j + base);
    }
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

// Membership test for the gap set, evaluated directly from
// sum floor(-a*lam*lambda_i/m) d_i + ceil(a/m) <= -1 with lam the inverse
// of lambda_s modulo m.
inline bool is_gap(const CurveData& c, PlaceRef s, Int a) {
    require_valid(c);
    require_admissible(c, s);
    if (a < Int(1)) throw domain_error("is_gap: a must be >= 1");
    Int lam = detail::default_lambda(c, s);
    Int total = ceil_div(a, c.m);
    for (int k = 0; k <= c.r(); ++k)
        total += floor_div(-a * lam * c.lambda_at(k), c.m) * c.degree_at(k);
    return total <= Int(-1);
}

// Generating system [m] ++ [ m*(S_i - 1) + i : i = 1..m-1 ] for H(Q_s); not
// reduced to the minimal system (see NumericalSemigroup for that).
inline std::vector<Int> generators(const CurveData& c, PlaceRef s) {
    require_valid(c);
    require_admissible(c, s);
    std::vector<Int> sums = detail::ceil_sums(c, detail::default_lambda(c, s));
    std::vector<Int> gens{c.m};
    long long m = c.m.to_i64();
    for (long long i = 1; i < m; ++i)
        gens.push_back(c.m * (sums[static_cast<size_t>(i - 1)] - 1) + Int(i));
    return gens;
}

// m_{H(Q_s)} = min({ i | S_i = 1 } union {m}).
inline Int multiplicity(const CurveData& c, PlaceRef s) {
    require_valid(c);
    require_admissible(c, s);
    std::vector<Int> sums = detail::ceil_sums(c, detail::default_lambda(c, s));
    for (long long i = 1; i < c.m.to_i64(); ++i)
        if (sums[static_cast<size_t>(i - 1)] == Int(1)) return Int(i);
    return c.m;
}

// Largest gap, as m*j_max + i with j_max = max_i (S_i - 2). Several i can
// attain j_max; the Frobenius number is by definition the largest gap, so the
// largest attaining i wins. Empty (nullopt) exactly at genus 0.
inline std::optional<Int> frobenius(const CurveData& c, PlaceRef s) {
    require_valid(c);
    require_admissible(c, s);
    std::vector<Int> sums = detail::ceil_sums(c, detail::default_lambda(c, s));
    std::optional<Int> best;
    for (long long i = 1; i < c.m.to_i64(); ++i) {
        Int j = sums[static_cast<size_t>(i - 1)] - 2;
        if (j < Int(0)) continue;
        Int candidate = c.m * j + Int(i);
        if (!best || candidate > *best) best = candidate;
    }
    return best;
}

// Symmetry criterion: H(Q_s) is symmetric iff some u in [1, m-1] makes all
// u*lambda_i/gcd(m,lambda_i) congruent modulo m over i != s. Genus-0 curves
// have no Frobenius number and report false.
inline bool is_symmetric(const CurveData& c, PlaceRef s) {
    require_valid(c);
    require_admissible(c, s);
    if (genus(c).is_zero()) return false;
    std::vector<Int> ratios;  // lambda_i / gcd(m, lambda_i) over i != s
    for (int i = 0; i <= c.r(); ++i) {
        if (i == s.index) continue;
        ratios.push_back(floor_div(c.lambda_at(i), gcd(c.m, c.lambda_at(i))));
    }
    if (ratios.size() <= 1) return true;
    for (Int u = 1; u < c.m; u += 1) {
        Int first = mod_reduce(u * ratios.front(), c.m);
        bool all_equal = true;
        for (const Int& rho : ratios)
            if (mod_reduce(u * rho, c.m) != first) {
                all_equal = false;
                break;
            }
        if (all_equal) return true;
    }
    return false;
}

struct FastSymmetryConditions {
    bool condition1 = false;                 // all reduced exponents divide m
    std::optional<bool> condition2;          // all exponents congruent mod m; needs gcd(m, lambda_i) = 1 for all i
};

// Two sufficient conditions for symmetry that avoid the u-search. Writing
// lambda_i = m*b_i + reduced_i with 1 <= reduced_i <= m: condition1 holds when
// reduced_i | m for every i != s. condition2 is only defined when every
// exponent is coprime to m and then asks that all lambda_i (i != s) be
// congruent modulo m. Either condition implies is_symmetric.
inline FastSymmetryConditions fast_symmetry_conditions(const CurveData& c, PlaceRef s) {
    require_valid(c);
    require_admissible(c, s);
    FastSymmetryConditions out;
    out.condition1 = true;
    bool all_coprime = true;
    std::optional<Int> residue;
    bool congruent = true;
    for (int i = 0; i <= c.r(); ++i) {
        if (gcd(c.m, c.lambda_at(i)) != Int(1)) all_coprime = false;
        if (i == s.index) continue;
        Int reduced = mod_reduce(c.lambda_at(i), c.m);
        if (reduced.is_zero()) reduced = c.m;
        if (mod_reduce(c.m, reduced) != Int(0)) out.condition1 = false;
        Int rem = mod_reduce(c.lambda_at(i), c.m);
        if (!residue)
            residue = rem;
        else if (*residue != rem)
            congruent = false;
    }
    if (all_coprime) out.condition2 = congruent;
    return out;
}

// G(Q_i) = G(Q_j) (hence equal semigroups) whenever lambda_i == lambda_j mod m.
inline bool semigroups_equal_shortcut(const CurveData& c, PlaceRef i, PlaceRef j) {
    require_valid(c);
    require_admissible(c, i);
    require_admissible(c, j);
    return mod_reduce(c.lambda_at(i.index) - c.lambda_at(j.index), c.m) == Int(0);
}

struct OnePointResult {
    PlaceRef place;
    Int lambda_used = 0;
    std::vector<Int> gaps;
    std::vector<Int> generators;
    Int multiplicity = 0;
    std::optional<Int> frobenius;
    bool symmetric = false;

    friend bool operator==(const OnePointResult& a, const OnePointResult& b) {
        return a.place == b.place && a.lambda_used == b.lambda_used && a.gaps == b.gaps &&
               a.generators == b.generators && a.multiplicity == b.multiplicity &&
               a.frobenius == b.frobenius && a.symmetric == b.symmetric;
    }
};

inline OnePointResult one_point(const CurveData& c, PlaceRef s) {
    OnePointResult res;
    res.place = s;
    res.lambda_used = detail::default_lambda(c, s);
    res.gaps = gap_set(c, s);
    res.generators = generators(c, s);
    res.multiplicity = multiplicity(c, s);
    res.frobenius = frobenius(c, s);
    res.symmetric = is_symmetric(c, s);
    return res;
}

}  // namespace kummer
