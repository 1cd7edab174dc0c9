#pragma once

// Gamma sets at several totally ramified degree-one places, their witness
// functions, the minimal generating set (tilde Gamma), lub-based membership
// reconstruction of H(P_1, ..., P_s), and a brute-force Gamma built purely
// on the Riemann-Roch oracle for cross-validation.
//
// The closed form enumerates, per residue index i in [1, m-1], the j-vectors
// with
//   j_k >= ceil(-i*lam*lambda_{l_k} / m),
//   sum_k j_k = S_i - sum_k ceil(i*lam*lambda_{l_k} / m),
// giving tuples (m*j_0 + i*lam*lambda_{l_0}, ..., m*j_s + i*lam*lambda_{l_s})
// together with the function whose pole divisor realizes each tuple.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/intmath.hpp"
#include "kummer/onepoint.hpp"
#include "kummer/rroracle.hpp"

namespace kummer {

struct WitnessFunction {
    Int y_exponent = 0;            // net exponent of y
    std::vector<Int> z_exponents;  // net exponent of z_k = p_k(x), k = 0..r; z_0 = 1 is formal
};

struct GammaElement {
    std::vector<Int> tuple;  // s+1 pole orders
    Int i = 0;               // residue index in [1, m-1]
    std::vector<Int> j;      // tuple[k] = m*j[k] + i*lambda_used*lambda_{l_k}
    Int lambda_used = 0;
    WitnessFunction witness;
};

struct TupleSet {
    int dimension = 0;
    std::vector<std::vector<Int>> elements;  // lexicographically sorted, unique

    bool contains(const std::vector<Int>& t) const {
        return std::binary_search(elements.begin(), elements.end(), t);
    }
};

// Largest admissible s: places count minus one may not exceed
// min(r + 1, |K|) - 1, with |K| unbounded when no base field is given.
inline Int rbar(const CurveData& c) {
    Int bound = Int(c.r() + 1);
    if (c.base_field_q && *c.base_field_q < bound) bound = *c.base_field_q;
    return bound - 1;
}

namespace detail {

inline void check_gamma_places(const CurveData& c, const std::vector<PlaceRef>& places) {
    require_valid(c);
    if (places.size() < 2)
        throw domain_error("gamma: need at least two places (s >= 1)");
    Int s = Int(static_cast<long long>(places.size()) - 1);
    if (s > rbar(c))
        throw domain_error("gamma: s = " + s.str() + " exceeds rbar = " + rbar(c).str());
    for (PlaceRef p : places) require_admissible(c, p);
    for (size_t a = 0; a < places.size(); ++a)
        for (size_t b = a + 1; b < places.size(); ++b)
            if (places[a] == places[b]) throw domain_error("gamma: places must be pairwise distinct");
}

// Compositions of total into parts slots, lexicographically.
template <typename Fn>
void for_each_composition(long long total, int parts, std::vector<long long>& scratch, Fn&& fn) {
    if (parts == 1) {
        scratch.push_back(total);
        fn(scratch);
        scratch.pop_back();
        return;
    }
    for (long long v = 0; v <= total; ++v) {
        scratch.push_back(v);
        for_each_composition(total - v, parts - 1, scratch, fn);
        scratch.pop_back();
    }
}

inline WitnessFunction make_witness(const CurveData& c, const std::vector<PlaceRef>& places,
                                    Int lam, Int i, const std::vector<Int>& j) {
    WitnessFunction w;
    w.y_exponent = -(i * lam);
    w.z_exponents.assign(static_cast<size_t>(c.r() + 1), Int(0));
    std::vector<int> support_slot(static_cast<size_t>(c.r() + 1), -1);
    for (size_t k = 0; k < places.size(); ++k)
        support_slot[static_cast<size_t>(places[k].index)] = static_cast<int>(k);
    for (int b = 0; b <= c.r(); ++b) {
        int slot = support_slot[static_cast<size_t>(b)];
        if (slot >= 0)
            w.z_exponents[static_cast<size_t>(b)] = -j[static_cast<size_t>(slot)];
        else
            w.z_exponents[static_cast<size_t>(b)] = ceil_div(i * lam * c.lambda_at(b), c.m);
    }
    return w;
}

}  // namespace detail

// Gamma(Q_{l_0}, ..., Q_{l_s}), every element carrying its (i, j) data and
// witness function. lambda defaults to the inverse of lambda_{l_0} modulo m;
// the resulting set is the same for every lambda coprime to m.
inline std::vector<GammaElement> gamma(const CurveData& c, const std::vector<PlaceRef>& places,
                                       std::optional<Int> lambda = std::nullopt) {
    detail::check_gamma_places(c, places);
    detail::check_lambda_choice(c, lambda);
    Int lam = lambda ? *lambda : mod_inverse(c.lambda_at(places.front().index), c.m);

    std::vector<Int> sums = detail::ceil_sums(c, lam);
    std::vector<GammaElement> out;
    int parts = static_cast<int>(places.size());
    long long m = c.m.to_i64();
    for (long long i = 1; i < m; ++i) {
        Int ii(i);
        std::vector<Int> base(places.size());   // i * lam * lambda_{l_k}
        std::vector<Int> low(places.size());    // lower bound on j_k
        Int sum_ceil_support = 0;
        Int sum_low = 0;
        for (size_t k = 0; k < places.size(); ++k) {
            base[k] = ii * lam * c.lambda_at(places[k].index);
            low[k] = ceil_div(-base[k], c.m);
            sum_ceil_support += ceil_div(base[k], c.m);
            sum_low += low[k];
        }
        Int total = sums[static_cast<size_t>(i - 1)] - sum_ceil_support;
        Int excess = total - sum_low;
        if (excess < Int(0)) continue;

        std::vector<long long> scratch;
        detail::for_each_composition(excess.to_i64(), parts, scratch, [&](const std::vector<long long>& e) {
            GammaElement el;
            el.i = ii;
            el.lambda_used = lam;
            el.j.resize(places.size());
            el.tuple.resize(places.size());
            for (size_t k = 0; k < places.size(); ++k) {
                el.j[k] = low[k] + Int(e[k]);
                el.tuple[k] = c.m * el.j[k] + base[k];
            }
            el.witness = detail::make_witness(c, places, lam, ii, el.j);
            out.push_back(std::move(el));
        });
    }
    std::sort(out.begin(), out.end(),
              [](const GammaElement& a, const GammaElement& b) { return a.tuple < b.tuple; });
    return out;
}

// Simplified enumeration when lambda_{l_0} == ... == lambda_{l_t} (mod m):
// with lambda the inverse of lambda_{l_0}, the first t+1 coordinates take the
// form m*j + i with j >= 0. Produces the same set as gamma().
inline std::vector<GammaElement> gamma_congruent_form(const CurveData& c,
                                                      const std::vector<PlaceRef>& places, int t) {
    detail::check_gamma_places(c, places);
    if (t < 0 || static_cast<size_t>(t) >= places.size())
        throw domain_error("gamma_congruent_form: t out of range");
    for (int k = 1; k <= t; ++k)
        if (mod_reduce(c.lambda_at(places[static_cast<size_t>(k)].index) -
                           c.lambda_at(places[0].index),
                       c.m) != Int(0))
            throw domain_error("gamma_congruent_form: lambda_{l_0..l_t} are not congruent mod m");
    Int lam = mod_inverse(c.lambda_at(places.front().index), c.m);

    std::vector<Int> sums = detail::ceil_sums(c, lam);
    std::vector<GammaElement> out;
    int parts = static_cast<int>(places.size());
    long long m = c.m.to_i64();
    for (long long i = 1; i < m; ++i) {
        Int ii(i);
        std::vector<Int> base(places.size());
        std::vector<Int> shift(places.size(), Int(0));  // congruent slots: j_theorem = j - i*b_k
        std::vector<Int> low(places.size());
        Int total = sums[static_cast<size_t>(i - 1)];
        Int sum_low = 0;
        for (size_t k = 0; k < places.size(); ++k) {
            base[k] = ii * lam * c.lambda_at(places[k].index);
            if (static_cast<int>(k) <= t) {
                // lam * lambda_{l_k} = m*b_k + 1, so m*j + i*lam*lambda = m*(j + i*b_k) + i.
                shift[k] = ii * floor_div(lam * c.lambda_at(places[k].index) - 1, c.m);
                low[k] = Int(0);
            } else {
                low[k] = ceil_div(-base[k], c.m);
                total -= ceil_div(base[k], c.m);
            }
            sum_low += low[k];
        }
        total -= Int(t + 1);
        Int excess = total - sum_low;
        if (excess < Int(0)) continue;

        std::vector<long long> scratch;
        detail::for_each_composition(excess.to_i64(), parts, scratch, [&](const std::vector<long long>& e) {
            GammaElement el;
            el.i = ii;
            el.lambda_used = lam;
            el.j.resize(places.size());
            el.tuple.resize(places.size());
            for (size_t k = 0; k < places.size(); ++k) {
                Int jk = low[k] + Int(e[k]);
                if (static_cast<int>(k) <= t) {
                    el.tuple[k] = c.m * jk + ii;
                    el.j[k] = jk - shift[k];  // back to the theorem parameterization
                } else {
                    el.tuple[k] = c.m * jk + base[k];
                    el.j[k] = jk;
                }
            }
            el.witness = detail::make_witness(c, places, lam, ii, el.j);
            out.push_back(std::move(el));
        });
    }
    std::sort(out.begin(), out.end(),
              [](const GammaElement& a, const GammaElement& b) { return a.tuple < b.tuple; });
    return out;
}

// Principal-divisor bookkeeping for a monomial y^e * prod z_k^{f_k}: the
// valuation at every place over P_b (1 <= b <= r) is
//   f_b * m/gcd(m, lambda_b) + e * lambda_b/gcd(m, lambda_b),
// and at every place over the pole of x it is
//   -sum_b f_b * m*d_b/gcd(m, lambda_0) + e * lambda_0/gcd(m, lambda_0).
// True iff the pole orders at `places` match `expected` exactly and the
// valuation is nonnegative at every other place.
inline bool verify_witness(const CurveData& c, const WitnessFunction& w,
                           const std::vector<PlaceRef>& places, const std::vector<Int>& expected) {
    require_valid(c);
    if (w.z_exponents.size() != static_cast<size_t>(c.r() + 1))
        throw domain_error("verify_witness: z_exponents must have r + 1 entries");
    if (places.size() != expected.size())
        throw domain_error("verify_witness: places and expected must have equal length");

    std::vector<Int> valuation(static_cast<size_t>(c.r() + 1), Int(0));
    Int g0 = gcd(c.m, c.lambda_at(0));
    Int v_inf = w.y_exponent * floor_div(c.lambda_at(0), g0);
    for (int b = 1; b <= c.r(); ++b) {
        Int gb = gcd(c.m, c.lambda_at(b));
        valuation[static_cast<size_t>(b)] =
            w.z_exponents[static_cast<size_t>(b)] * floor_div(c.m, gb) +
            w.y_exponent * floor_div(c.lambda_at(b), gb);
        v_inf -= w.z_exponents[static_cast<size_t>(b)] * floor_div(c.m * c.degree_at(b), g0);
    }
    valuation[0] = v_inf;

    std::vector<bool> in_support(static_cast<size_t>(c.r() + 1), false);
    for (size_t k = 0; k < places.size(); ++k) {
        in_support[static_cast<size_t>(places[k].index)] = true;
        if (valuation[static_cast<size_t>(places[k].index)] != -expected[k]) return false;
    }
    for (int b = 0; b <= c.r(); ++b)
        if (!in_support[static_cast<size_t>(b)] && valuation[static_cast<size_t>(b)] < Int(0))
            return false;
    return true;
}

// Recovers the (i, j) decomposition of a tuple for a given lambda; the residue
// of any coordinate determines i uniquely, so this exists iff all coordinates
// agree on one i and each j_k meets its lower bound.
inline std::optional<GammaElement> decompose_tuple(const CurveData& c,
                                                   const std::vector<PlaceRef>& places,
                                                   const std::vector<Int>& tuple,
                                                   std::optional<Int> lambda = std::nullopt) {
    detail::check_gamma_places(c, places);
    if (tuple.size() != places.size()) throw domain_error("decompose_tuple: size mismatch");
    Int lam = lambda ? *lambda : mod_inverse(c.lambda_at(places.front().index), c.m);
    Int factor0 = lam * c.lambda_at(places.front().index);
    Int i = mod_reduce(tuple.front() * mod_inverse(factor0, c.m), c.m);
    if (i.is_zero()) return std::nullopt;
    GammaElement el;
    el.i = i;
    el.lambda_used = lam;
    el.tuple = tuple;
    el.j.resize(places.size());
    for (size_t k = 0; k < places.size(); ++k) {
        Int base = i * lam * c.lambda_at(places[k].index);
        Int num = tuple[k] - base;
        if (mod_reduce(num, c.m) != Int(0)) return std::nullopt;  // coordinate residue forces a different i
        el.j[k] = floor_div(num, c.m);
        if (el.j[k] < ceil_div(-base, c.m)) return std::nullopt;
    }
    el.witness = detail::make_witness(c, places, lam, i, el.j);
    return el;
}

// max_{1 <= i <= m} sum_k ceil(i*lambda_k/m) d_k; Gamma at s+1 places is empty
// exactly when s reaches this value.
inline Int gamma_empty_threshold(const CurveData& c) {
    require_valid(c);
    Int best = 0;  // the i = m term: sum_k lambda_k d_k = 0
    for (Int i = 1; i <= c.m; i += 1) {
        Int sum = 0;
        for (int k = 0; k <= c.r(); ++k)
            sum += ceil_div(i * c.lambda_at(k), c.m) * c.degree_at(k);
        if (sum > best) best = sum;
    }
    return best;
}

// Minimal generating set of H at `places` inside [0, box]^(s+1): the union of
// iota-embedded Gamma sets over all nonempty subsets, with single-place parts
// H(P) truncated to [0, box]. box defaults to 2*genus.
inline TupleSet tilde_gamma(const CurveData& c, const std::vector<PlaceRef>& places,
                            std::optional<Int> box = std::nullopt) {
    detail::check_gamma_places(c, places);
    Int bound = box ? *box : Int(2) * genus(c);
    if (bound < Int(0)) throw domain_error("tilde_gamma: box must be nonnegative");
    size_t L = places.size();
    std::set<std::vector<Int>> acc;
    for (unsigned mask = 1; mask < (1u << L); ++mask) {
        std::vector<size_t> idx;
        for (size_t k = 0; k < L; ++k)
            if (mask & (1u << k)) idx.push_back(k);
        if (idx.size() == 1) {
            std::vector<Int> gaps = gap_set(c, places[idx[0]]);
            std::set<Int> gapset(gaps.begin(), gaps.end());
            for (Int h = 0; h <= bound; h += 1) {
                if (gapset.count(h)) continue;
                std::vector<Int> t(L, Int(0));
                t[idx[0]] = h;
                acc.insert(std::move(t));
            }
        } else {
            std::vector<PlaceRef> sub;
            for (size_t k : idx) sub.push_back(places[k]);
            for (const GammaElement& el : gamma(c, sub)) {
                std::vector<Int> t(L, Int(0));
                for (size_t k = 0; k < idx.size(); ++k) t[idx[k]] = el.tuple[k];
                acc.insert(std::move(t));
            }
        }
    }
    TupleSet out;
    out.dimension = static_cast<int>(L);
    out.elements.assign(acc.begin(), acc.end());
    return out;
}

// Answers membership queries against the lub closure of tilde Gamma: n is in
// H iff for every coordinate some generator u <= n (coordinatewise) attains
// u_k = n_k, making n the least upper bound of those generators.
class LubMembership {
public:
    LubMembership(const CurveData& c, const std::vector<PlaceRef>& places, std::optional<Int> box = std::nullopt)
        : box_(box ? *box : Int(2) * genus(c)), tilde_(tilde_gamma(c, places, box_)) {
        if (box_ < Int(2) * genus(c))
            throw domain_error("lub membership: box " + box_.str() + " is smaller than 2g = " +
                               (Int(2) * genus(c)).str());
    }

    Int box() const { return box_; }
    const TupleSet& generating_set() const { return tilde_; }

    bool contains(const std::vector<Int>& n) const {
        if (n.size() != static_cast<size_t>(tilde_.dimension))
            throw domain_error("lub membership: tuple size mismatch");
        for (Int x : n)
            if (x < Int(0) || x > box_)
                throw domain_error("lub membership: tuple leaves the box [0, " + box_.str() + "]");
        for (size_t k = 0; k < n.size(); ++k) {
            bool hit = false;
            for (const auto& u : tilde_.elements) {
                if (u[k] != n[k]) continue;
                bool le = true;
                for (size_t t = 0; t < n.size(); ++t)
                    if (u[t] > n[t]) {
                        le = false;
                        break;
                    }
                if (le) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    }

private:
    Int box_;
    TupleSet tilde_;
};

inline bool membership_via_lub(const CurveData& c, const std::vector<PlaceRef>& places,
                               const std::vector<Int>& n, Int box) {
    return LubMembership(c, places, box).contains(n);
}

struct BruteForceCaps {
    Int genus_cap = 60;
    int s_cap = 5;
};

// Gamma from the oracle alone: enumerate the gap box G(P_{l_0}) x ... x
// G(P_{l_s}) (gaps themselves from the oracle), keep tuples that the
// Carvalho-Torres criterion puts in H and whose dimension drops by exactly
// one under removing any one or any two distinct support places.
inline TupleSet brute_force_gamma(const CurveData& c, const std::vector<PlaceRef>& places,
                                  const BruteForceCaps& caps = {}) {
    detail::check_gamma_places(c, places);
    if (genus(c) > caps.genus_cap)
        throw domain_error("brute_force_gamma: genus " + genus(c).str() + " exceeds cap " +
                           caps.genus_cap.str());
    if (places.size() > static_cast<size_t>(caps.s_cap) + 1)
        throw domain_error("brute_force_gamma: s exceeds cap");

    size_t L = places.size();
    std::vector<std::vector<long long>> gaps(L);
    for (size_t k = 0; k < L; ++k)
        for (Int a : brute_force_gaps(c, places[k])) gaps[k].push_back(a.to_i64());

    TupleSet out;
    out.dimension = static_cast<int>(L);
    for (const auto& gk : gaps)
        if (gk.empty()) return out;

    DimContext ctx(c, places);
    std::vector<size_t> pos(L, 0);
    std::vector<long long> n(L), probe(L);
    while (true) {
        for (size_t k = 0; k < L; ++k) n[k] = gaps[k][pos[k]];
        if (is_in_H_ctx(ctx, n)) {
            Int full = ctx.dim(n);
            bool minimal = true;
            for (size_t a = 0; a < L && minimal; ++a) {
                for (size_t b = a + 1; b < L && minimal; ++b) {
                    probe = n;
                    probe[a] -= 1;
                    probe[b] -= 1;
                    if (ctx.dim(probe) + 1 != full) minimal = false;
                }
            }
            if (minimal) {
                std::vector<Int> t;
                t.reserve(L);
                for (long long v : n) t.push_back(Int(v));
                out.elements.push_back(std::move(t));
            }
        }
        size_t k = L;
        while (k > 0) {
            --k;
            if (++pos[k] < gaps[k].size()) break;
            pos[k] = 0;
            if (k == 0) {
                std::sort(out.elements.begin(), out.elements.end());
                return out;
            }
        }
    }
}

}  // namespace kummer
