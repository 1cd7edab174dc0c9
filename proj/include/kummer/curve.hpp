#pragma once

// Combinatorial model of a Kummer extension y^m = f(x): the exponent m and
// the list of (lambda_i, d_i) branch data for the monic irreducible factors
// of f. The infinite place is index 0 with lambda_0 = -sum(lambda_i * d_i)
// and degree 1. Constants and actual coefficients of f never enter the
// formulas downstream, so they are not part of this model.

#include <optional>
#include <string>
#include <vector>

#include "kummer/intmath.hpp"

namespace kummer {

struct Branch {
    Int lambda;         // exponent of the irreducible factor, nonzero
    Int degree;         // degree of the factor, >= 1
    std::string label;  // free-form identifier
};

// A place index: 0 is the infinite place, 1..r the places over the branch zeros.
struct PlaceRef {
    int index = 0;

    friend bool operator==(PlaceRef a, PlaceRef b) { return a.index == b.index; }
    friend bool operator!=(PlaceRef a, PlaceRef b) { return a.index != b.index; }
    friend bool operator<(PlaceRef a, PlaceRef b) { return a.index < b.index; }
};

struct CurveData {
    Int m;
    std::vector<Branch> branches;      // branch i is branches[i-1]
    std::optional<Int> base_field_q;   // size of the full constant field, if bounded

    int r() const { return static_cast<int>(branches.size()); }

    Int lambda0() const {
        Int s = 0;
        for (const Branch& b : branches) s += b.lambda * b.degree;
        return -s;
    }

    // lambda_i for i in [0, r]; index 0 is the derived infinite-place exponent.
    Int lambda_at(int index) const {
        if (index == 0) return lambda0();
        return branches.at(static_cast<size_t>(index - 1)).lambda;
    }

    // d_i for i in [0, r]; d_0 = 1.
    Int degree_at(int index) const {
        if (index == 0) return Int(1);
        return branches.at(static_cast<size_t>(index - 1)).degree;
    }

    std::string label_at(int index) const {
        if (index == 0) return "infinity";
        return branches.at(static_cast<size_t>(index - 1)).label;
    }
};

struct ValidationIssue {
    bool is_error = false;
    std::string message;
    std::string hypothesis;  // which model hypothesis is violated or asserted
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<PlaceRef> ramified_places;  // totally ramified places of degree one

    bool ok() const {
        for (const auto& it : issues)
            if (it.is_error) return false;
        return true;
    }

    bool has_warnings() const {
        for (const auto& it : issues)
            if (!it.is_error) return true;
        return false;
    }
};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Writes p and k with q = p^k when q is a prime power.
inline bool is_prime_power(Int q, long long* p_out = nullptr, int* k_out = nullptr) {
    if (q < Int(2)) return false;
    long long n = q.to_i64();
    long long p = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    long long t = n;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

// True when place `index` is totally ramified of degree one: d = 1 and
// gcd(m, lambda) = 1 (gcd taken on |lambda|).
inline bool is_admissible_place(const CurveData& c, int index) {
    if (index < 0 || index > c.r()) return false;
    return c.degree_at(index) == Int(1) && gcd(c.m, c.lambda_at(index)) == Int(1);
}

// Checks every model invariant and lists the totally ramified degree-one
// places. Violations are reported, not thrown.
inline ValidationReport validate(const CurveData& c) {
    ValidationReport rep;
    auto error = [&](std::string msg, std::string hyp) {
        rep.issues.push_back({true, std::move(msg), std::move(hyp)});
    };
    auto warn = [&](std::string msg, std::string hyp) {
        rep.issues.push_back({false, std::move(msg), std::move(hyp)});
    };

    if (c.m < Int(2)) error("m = " + c.m.str() + " but the model needs m >= 2", "m >= 2");
    if (c.branches.empty()) {
        error("no branches given (f must have at least one irreducible factor)", "r >= 1");
        return rep;
    }
    if (c.r() == 1)
        warn("r = 1: the source results assume r >= 2; formulas degrade gracefully but are unproven here",
             "r >= 2");

    for (int i = 1; i <= c.r(); ++i) {
        const Branch& b = c.branches[static_cast<size_t>(i - 1)];
        if (b.lambda.is_zero())
            error("branch " + std::to_string(i) + ": lambda = 0", "lambda_i != 0");
        if (b.degree < Int(1))
            error("branch " + std::to_string(i) + ": degree " + b.degree.str() + " < 1", "d_i >= 1");
    }

    if (c.base_field_q) {
        if (!is_prime_power(*c.base_field_q))
            error("q = " + c.base_field_q->str() + " is not a prime power", "q a prime power");
        else if (gcd(c.m, *c.base_field_q) != Int(1))
            error("gcd(m, q) = " + gcd(c.m, *c.base_field_q).str() + " != 1", "gcd(m, q) = 1");
    }

    Int g = c.m;
    for (const Branch& b : c.branches) g = gcd(g, b.lambda);
    if (c.m >= Int(2) && g != Int(1))
        error("gcd(m, lambda_1, ..., lambda_r) = " + g.str() +
                  "; f(x) would be a d-th power up to a constant",
             "f(x) is not a d-th power for any d | m, d >= 2");
    // The constant factor of f is outside this model; whether it turns f into
    // a d-th power is asserted by the user.
    warn("d-th-power check covers exponents only; the constant factor of f is user-asserted",
         "f(x) is not a d-th power for any d | m, d >= 2");

    if (rep.ok() && c.m >= Int(2)) {
        Int two_g = Int(2) - Int(2) * c.m;
        for (int i = 0; i <= c.r(); ++i)
            two_g += (c.m - gcd(c.m, c.lambda_at(i))) * c.degree_at(i);
        if (mod_reduce(two_g, 2) != Int(0))
            error("genus numerator " + two_g.str() + " is odd", "genus is an integer");
        else if (two_g < Int(0))
            error("genus would be negative (" + floor_div(two_g, 2).str() + ")", "genus >= 0");
    }

    if (rep.ok()) {
        for (int i = 0; i <= c.r(); ++i)
            if (is_admissible_place(c, i)) rep.ramified_places.push_back({i});
    }
    return rep;
}

inline void require_valid(const CurveData& c) {
    ValidationReport rep = validate(c);
    if (!rep.ok()) {
        std::string msg = "invalid curve:";
        for (const auto& it : rep.issues)
            if (it.is_error) msg += " [" + it.message + "]";
        throw domain_error(msg);
    }
}

inline void require_admissible(const CurveData& c, PlaceRef s) {
    if (s.index < 0 || s.index > c.r())
        throw domain_error("place index " + std::to_string(s.index) + " out of range [0, " +
                           std::to_string(c.r()) + "]");
    if (!is_admissible_place(c, s.index))
        throw domain_error("place " + std::to_string(s.index) +
                           " is not totally ramified of degree one (needs d = 1 and gcd(m, lambda) = 1)");
}

// g = (2 - 2m + sum_{i=0}^{r} (m - gcd(m, lambda_i)) d_i) / 2.
inline Int genus(const CurveData& c) {
    require_valid(c);
    Int two_g = Int(2) - Int(2) * c.m;
    for (int i = 0; i <= c.r(); ++i)
        two_g += (c.m - gcd(c.m, c.lambda_at(i))) * c.degree_at(i);
    if (mod_reduce(two_g, 2) != Int(0)) throw domain_error("genus: non-integer result");
    Int g = floor_div(two_g, 2);
    if (g < Int(0)) throw domain_error("genus: negative result");
    return g;
}

// y^m = prod (x - a_i)^lambda with r distinct roots; needs gcd(r*lambda, m) = 1.
inline CurveData preset_equal_multiplicity(Int m, Int r, Int lambda,
                                           std::optional<Int> q = std::nullopt) {
    if (m < Int(2)) throw domain_error("preset eqmult: m must be >= 2");
    if (r < Int(1)) throw domain_error("preset eqmult: r must be >= 1");
    if (gcd(r * lambda, m) != Int(1))
        throw domain_error("preset eqmult: gcd(r*lambda, m) = " + gcd(r * lambda, m).str() + " != 1");
    CurveData c;
    c.m = m;
    c.base_field_q = q;
    long long rr = r.to_i64();
    for (long long i = 1; i <= rr; ++i)
        c.branches.push_back({lambda, Int(1), "a" + std::to_string(i)});
    return c;
}

// Plane model y^(q^n + 1) = (x^q + x) ((x^q + x)^(q-1) - 1)^(q+1) of the
// GGS(q, n) curve over F_{q^{2n}}: q linear branches with exponent 1 and
// q^2 - q linear branches with exponent q + 1.
inline CurveData preset_ggs(Int q, Int n) {
    long long p = 0;
    int k = 0;
    if (!is_prime_power(q, &p, &k)) throw domain_error("preset ggs: q must be a prime power");
    if (n < Int(3) || mod_reduce(n, 2) != Int(1))
        throw domain_error("preset ggs: n must be odd and >= 3");
    long long qq = q.to_i64();
    long long nn = n.to_i64();
    Int m = 1;
    for (long long i = 0; i < nn; ++i) m *= q;
    m += 1;
    Int field = 1;
    for (long long i = 0; i < 2 * nn; ++i) field *= q;
    CurveData c;
    c.m = m;
    c.base_field_q = field;
    for (long long i = 1; i <= qq; ++i)
        c.branches.push_back({Int(1), Int(1), "a" + std::to_string(i)});
    for (long long i = 1; i <= qq * qq - qq; ++i)
        c.branches.push_back({q + 1, Int(1), "b" + std::to_string(i)});
    // Cross-check against the published genus of GGS(q, n).
    Int qn = m - 1;
    Int expected = floor_div((q - 1) * (qn * q + qn - q * q), 2);
    if (genus(c) != expected)
        throw domain_error("preset ggs: genus " + genus(c).str() + " does not match " + expected.str());
    return c;
}

// Subcover y^m = x^d (x^d - 1) ((1 - x^{d(q-1)})/(x^d - 1))^{q+1} of the BM
// curve over F_{q^{2n}}. Places 1..d are the roots of x^d - 1 (the paper's
// Q_i); the x-branch and the beta-branches follow them.
inline CurveData preset_bm_subcover(Int q, Int n, Int d, Int m) {
    long long p = 0;
    int k = 0;
    if (!is_prime_power(q, &p, &k)) throw domain_error("preset bm: q must be a prime power");
    if (n < Int(3) || mod_reduce(n, 2) != Int(1))
        throw domain_error("preset bm: n must be odd and >= 3");
    if (d < Int(1) || mod_reduce(q + 1, d) != Int(0))
        throw domain_error("preset bm: d must divide q + 1");
    Int qn = 1;
    for (long long i = 0, nn = n.to_i64(); i < nn; ++i) qn *= q;
    if (m < Int(2) || mod_reduce(qn + 1, m) != Int(0))
        throw domain_error("preset bm: m must divide q^n + 1 and be >= 2");
    if (gcd(m, d * (q - 1)) != Int(1))
        throw domain_error("preset bm: gcd(m, d(q-1)) = " + gcd(m, d * (q - 1)).str() + " != 1");
    Int field = 1;
    for (long long i = 0, nn = n.to_i64(); i < 2 * nn; ++i) field *= q;
    CurveData c;
    c.m = m;
    c.base_field_q = field;
    long long dd = d.to_i64();
    long long qq = q.to_i64();
    for (long long i = 1; i <= dd; ++i)
        c.branches.push_back({Int(1), Int(1), "a" + std::to_string(i)});
    c.branches.push_back({d, Int(1), "x"});
    for (long long i = 1; i <= dd * (qq - 2); ++i)
        c.branches.push_back({q + 1, Int(1), "b" + std::to_string(i)});
    require_valid(c);
    return c;
}

}  // namespace kummer
