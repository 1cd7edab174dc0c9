#pragma once

// Finite fields F_{p^k} with an explicit modulus, dense univariate
// polynomials over them, complete factorization into monic irreducibles
// (squarefree split, then distinct-degree, then randomized equal-degree
// splitting), and the equation parser that turns a defining equation
// y^m = f(x) into the combinatorial curve model.

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/intmath.hpp"
#include "kummer/prng.hpp"

namespace kummer {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// F_{p^k} = F_p[x] / (modulus). Elements are codes in [0, q) whose base-p
// digits, low-to-high, are the coordinates in the power basis.
struct FieldSpec {
    long long p = 0;
    int k = 0;
    std::vector<int> modulus;  // monic, degree k, coefficients low-to-high
    long long q = 0;

    std::vector<int> decode(uint32_t code) const {
        std::vector<int> digits(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            digits[static_cast<size_t>(i)] = static_cast<int>(code % p);
            code = static_cast<uint32_t>(code / p);
        }
        return digits;
    }

    uint32_t encode(const std::vector<int>& digits) const {
        uint64_t code = 0;
        for (size_t i = digits.size(); i-- > 0;) {
            int d = digits[i] % static_cast<int>(p);
            if (d < 0) d += static_cast<int>(p);
            code = code * static_cast<uint64_t>(p) + static_cast<uint64_t>(d);
        }
        return static_cast<uint32_t>(code);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        std::vector<int> da = decode(a), db = decode(b);
        for (int i = 0; i < k; ++i)
            da[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) %
                                         static_cast<int>(p);
        return encode(da);
    }

    uint32_t neg(uint32_t a) const {
        std::vector<int> da = decode(a);
        for (int& d : da) d = (static_cast<int>(p) - d) % static_cast<int>(p);
        return encode(da);
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::vector<int> da = decode(a), db = decode(b);
        std::vector<long long> prod(static_cast<size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                prod[static_cast<size_t>(i + j)] +=
                    static_cast<long long>(da[static_cast<size_t>(i)]) * db[static_cast<size_t>(j)];
        // Reduce by the monic modulus: x^k = -(modulus minus leading term).
        for (int d = 2 * k - 2; d >= k; --d) {
            long long top = prod[static_cast<size_t>(d)] % p;
            if (top == 0) continue;
            for (int i = 0; i < k; ++i)
                prod[static_cast<size_t>(d - k + i)] -= top * modulus[static_cast<size_t>(i)];
            prod[static_cast<size_t>(d)] = 0;
        }
        std::vector<int> out(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            long long v = prod[static_cast<size_t>(i)] % p;
            if (v < 0) v += p;
            out[static_cast<size_t>(i)] = static_cast<int>(v);
        }
        return encode(out);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t result = 1, base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw domain_error("field: inverse of zero");
        return pow(a, static_cast<uint64_t>(q - 2));
    }

    // Integer literals land in the prime subfield.
    uint32_t from_int(long long n) const {
        long long v = n % p;
        if (v < 0) v += p;
        return static_cast<uint32_t>(v);
    }
};

namespace fpdetail {

// Plain F_p[x] helpers for modulus construction; vectors low-to-high, trimmed.
inline void trim(std::vector<int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<int> mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                const std::vector<int>& mod, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
    // mod is monic of degree mod.size()-1
    size_t md = mod.size() - 1;
    for (size_t d = prod.size(); d-- > md;) {
        long long top = prod[d] % p;
        if (top == 0) continue;
        for (size_t i = 0; i < md; ++i) prod[d - md + i] -= top * mod[i];
        prod[d] = 0;
    }
    std::vector<int> out(md);
    for (size_t i = 0; i < md && i < prod.size(); ++i) {
        long long v = prod[i] % p;
        if (v < 0) v += p;
        out[i] = static_cast<int>(v);
    }
    trim(out);
    return out;
}

inline std::vector<int> pow_x_mod(uint64_t e, const std::vector<int>& mod, long long p) {
    std::vector<int> result{1}, base{0, 1};
    if (mod.size() == 2) base = mul_mod(base, {1}, mod, p);  // reduce x when deg mod = 1
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, mod, p);
        base = mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

inline std::vector<int> gcd_fp(std::vector<int> a, std::vector<int> b, long long p) {
    trim(a);
    trim(b);
    auto inv_mod_p = [p](long long x) {
        long long r = 1, base = ((x % p) + p) % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        long long lead_inv = inv_mod_p(b.back());
        std::vector<int> rem = a;
        while (rem.size() >= b.size()) {
            long long coef = static_cast<long long>(rem.back()) * lead_inv % p;
            size_t shift = rem.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                long long v = (rem[shift + i] - coef * b[i]) % p;
                if (v < 0) v += p;
                rem[shift + i] = static_cast<int>(v);
            }
            trim(rem);
            if (rem.size() < b.size()) break;
        }
        a = b;
        b = rem;
    }
    return a;
}

// Irreducibility over F_p: x^{p^k} == x mod f and gcd(x^{p^{k/l}} - x, f) = 1
// for every prime l dividing k.
inline bool irreducible_fp(const std::vector<int>& f, long long p) {
    int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    auto pow_pk = [&](int e) {
        uint64_t exp = 1;
        for (int i = 0; i < e; ++i) exp *= static_cast<uint64_t>(p);
        return pow_x_mod(exp, f, p);
    };
    std::vector<int> xk = pow_pk(k);
    std::vector<int> x{0, 1};
    if (f.size() == 2) x = mul_mod(x, {1}, f, p);
    if (xk != x) return false;
    for (int l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool is_prime_l = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) is_prime_l = false;
        if (!is_prime_l) continue;
        std::vector<int> xe = pow_pk(k / l);
        std::vector<int> diff = xe;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] - 1 % p + static_cast<int>(p)) % static_cast<int>(p);
        trim(diff);
        std::vector<int> g = gcd_fp(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace fpdetail

// Builds F_{p^k} for a prime power q, choosing the lexicographically smallest
// monic irreducible modulus (coefficient vector low-to-high read as a base-p
// number). Deterministic, no external tables.
inline FieldSpec field_spec(Int q_in) {
    long long p = 0;
    int k = 0;
    if (!is_prime_power(q_in, &p, &k))
        throw domain_error("field: q = " + q_in.str() + " is not a prime power");
    long long q = q_in.to_i64();
    if (q > (1LL << 20)) throw domain_error("field: q = " + q_in.str() + " exceeds the supported range");
    FieldSpec f;
    f.p = p;
    f.k = k;
    f.q = q;
    if (k == 1) {
        f.modulus = {0, 1};  // x
        return f;
    }
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= p;
    for (long long v = 0; v < qk; ++v) {
        std::vector<int> mod(static_cast<size_t>(k + 1), 0);
        long long t = v;
        for (int i = 0; i < k; ++i) {
            mod[static_cast<size_t>(i)] = static_cast<int>(t % p);
            t /= p;
        }
        mod[static_cast<size_t>(k)] = 1;
        if (fpdetail::irreducible_fp(mod, p)) {
            f.modulus = mod;
            return f;
        }
    }
    throw std::logic_error("field: no irreducible modulus found");  // unreachable
}

// Dense polynomial over F_q, coefficients low-to-high with no trailing zeros.
struct FqPoly {
    std::vector<uint32_t> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    uint32_t leading() const { return c.empty() ? 0 : c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    static FqPoly zero() { return {}; }
    static FqPoly constant(uint32_t v) {
        FqPoly f;
        if (v != 0) f.c = {v};
        return f;
    }
    static FqPoly x() { return {{0, 1}}; }

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c == b.c; }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return a.c != b.c; }
};

inline FqPoly fq_add(const FieldSpec& F, const FqPoly& a, const FqPoly& b) {
    FqPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        uint32_t av = i < a.c.size() ? a.c[i] : 0;
        uint32_t bv = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = F.add(av, bv);
    }
    out.trim();
    return out;
}

inline FqPoly fq_neg(const FieldSpec& F, const FqPoly& a) {
    FqPoly out = a;
    for (uint32_t& v : out.c) v = F.neg(v);
    return out;
}

inline FqPoly fq_sub(const FieldSpec& F, const FqPoly& a, const FqPoly& b) {
    return fq_add(F, a, fq_neg(F, b));
}

inline FqPoly fq_mul(const FieldSpec& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly::zero();
    FqPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    out.trim();
    return out;
}

inline FqPoly fq_scale(const FieldSpec& F, const FqPoly& a, uint32_t s) {
    if (s == 0) return FqPoly::zero();
    FqPoly out = a;
    for (uint32_t& v : out.c) v = F.mul(v, s);
    return out;
}

// Quotient and remainder; the divisor may have any nonzero leading coefficient.
inline std::pair<FqPoly, FqPoly> fq_divmod(const FieldSpec& F, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw domain_error("poly: division by zero polynomial");
    FqPoly rem = a, quot;
    if (a.deg() >= b.deg()) quot.c.assign(static_cast<size_t>(a.deg() - b.deg() + 1), 0);
    uint32_t lead_inv = F.inv(b.leading());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        uint32_t coef = F.mul(rem.leading(), lead_inv);
        int shift = rem.deg() - b.deg();
        quot.c[static_cast<size_t>(shift)] = coef;
        for (size_t i = 0; i < b.c.size(); ++i) {
            size_t pos = static_cast<size_t>(shift) + i;
            rem.c[pos] = F.sub(rem.c[pos], F.mul(coef, b.c[i]));
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

inline FqPoly fq_mod(const FieldSpec& F, const FqPoly& a, const FqPoly& b) {
    return fq_divmod(F, a, b).second;
}

inline FqPoly fq_div_exact(const FieldSpec& F, const FqPoly& a, const FqPoly& b) {
    auto [q, r] = fq_divmod(F, a, b);
    if (!r.is_zero()) throw std::logic_error("poly: expected exact division");
    return q;
}

inline FqPoly fq_make_monic(const FieldSpec& F, const FqPoly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return fq_scale(F, a, F.inv(a.leading()));
}

inline FqPoly fq_gcd(const FieldSpec& F, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = fq_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_make_monic(F, a);
}

inline FqPoly fq_powmod(const FieldSpec& F, FqPoly base, uint64_t e, const FqPoly& mod) {
    FqPoly result = FqPoly::constant(1);
    base = fq_mod(F, base, mod);
    while (e > 0) {
        if (e & 1) result = fq_mod(F, fq_mul(F, result, base), mod);
        base = fq_mod(F, fq_mul(F, base, base), mod);
        e >>= 1;
    }
    return result;
}

inline FqPoly fq_derivative(const FieldSpec& F, const FqPoly& a) {
    FqPoly out;
    for (size_t i = 1; i < a.c.size(); ++i) {
        uint32_t scaled = F.mul(a.c[i], F.from_int(static_cast<long long>(i)));
        out.c.push_back(scaled);
    }
    out.trim();
    return out;
}

inline std::string fq_poly_to_string(const FieldSpec& /*F*/, const FqPoly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int d = a.deg(); d >= 0; --d) {
        uint32_t v = a.c[static_cast<size_t>(d)];
        if (v == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0) {
            s += std::to_string(v);
        } else {
            if (v != 1) s += std::to_string(v) + "*";
            s += d == 1 ? "x" : "x^" + std::to_string(d);
        }
    }
    return s;
}

namespace fqdetail {

// f = g(x^p) has the exact p-th root sum_i f_{p i}^(p^(k-1)) x^i.
inline FqPoly pth_root(const FieldSpec& F, const FqPoly& f) {
    uint64_t root_exp = 1;
    for (int i = 0; i < F.k - 1; ++i) root_exp *= static_cast<uint64_t>(F.p);
    FqPoly out;
    for (size_t i = 0; i < f.c.size(); i += static_cast<size_t>(F.p))
        out.c.push_back(F.pow(f.c[i], root_exp));
    out.trim();
    return out;
}

inline void squarefree_split(const FieldSpec& F, const FqPoly& f,
                             std::vector<std::pair<FqPoly, int>>& out, int mult) {
    FqPoly fp = fq_derivative(F, f);
    if (fp.is_zero()) {
        squarefree_split(F, pth_root(F, f), out, mult * static_cast<int>(F.p));
        return;
    }
    FqPoly c = fq_gcd(F, f, fp);
    FqPoly w = fq_div_exact(F, f, c);
    int i = 1;
    while (!w.is_one()) {
        FqPoly y = fq_gcd(F, w, c);
        FqPoly z = fq_div_exact(F, w, y);
        if (z.deg() > 0) out.emplace_back(z, mult * i);
        w = std::move(y);
        c = fq_div_exact(F, c, w);
        ++i;
    }
    if (!c.is_one()) squarefree_split(F, pth_root(F, c), out, mult * static_cast<int>(F.p));
}

// Distinct-degree split of a monic squarefree polynomial.
inline std::vector<std::pair<FqPoly, int>> distinct_degree(const FieldSpec& F, FqPoly f) {
    std::vector<std::pair<FqPoly, int>> parts;
    FqPoly h = fq_mod(F, FqPoly::x(), f);
    int d = 0;
    while (f.deg() >= 2 * (d + 1)) {
        ++d;
        h = fq_powmod(F, h, static_cast<uint64_t>(F.q), f);
        FqPoly g = fq_gcd(F, f, fq_sub(F, h, FqPoly::x()));
        if (g.deg() > 0) {
            parts.emplace_back(g, d);
            f = fq_div_exact(F, f, g);
            h = fq_mod(F, h, f);
        }
    }
    if (f.deg() > 0) parts.emplace_back(f, f.deg());
    return parts;
}

// Cantor-Zassenhaus equal-degree splitting: g is monic squarefree with all
// irreducible factors of degree d.
inline void equal_degree(const FieldSpec& F, const FqPoly& g, int d, Xorshift64& rng,
                         std::vector<FqPoly>& out) {
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    while (true) {
        FqPoly a;
        a.c.resize(static_cast<size_t>(g.deg()), 0);
        for (uint32_t& v : a.c) v = static_cast<uint32_t>(rng.below(static_cast<uint64_t>(F.q)));
        a.trim();
        if (a.deg() < 1) continue;
        FqPoly shared = fq_gcd(F, a, g);
        if (shared.deg() > 0 && shared.deg() < g.deg()) {
            equal_degree(F, shared, d, rng, out);
            equal_degree(F, fq_div_exact(F, g, shared), d, rng, out);
            return;
        }
        FqPoly b;
        if (F.p == 2) {
            // Trace map over F_2: sum of a^(2^j) for j < k*d.
            FqPoly t = fq_mod(F, a, g);
            b = t;
            for (int j = 1; j < F.k * d; ++j) {
                t = fq_mod(F, fq_mul(F, t, t), g);
                b = fq_add(F, b, t);
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2).
            FqPoly c = fq_mod(F, a, g), acc = c;
            for (int j = 1; j < d; ++j) {
                c = fq_powmod(F, c, static_cast<uint64_t>(F.q), g);
                acc = fq_mod(F, fq_mul(F, acc, c), g);
            }
            b = fq_powmod(F, acc, static_cast<uint64_t>((F.q - 1) / 2), g);
            b = fq_sub(F, b, FqPoly::constant(1));
        }
        FqPoly h = fq_gcd(F, g, b);
        if (h.deg() > 0 && h.deg() < g.deg()) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, fq_div_exact(F, g, h), d, rng, out);
            return;
        }
    }
}

}  // namespace fqdetail

struct Factorization {
    uint32_t leading = 1;                        // constant alpha with poly = alpha * prod factors^mult
    std::vector<std::pair<FqPoly, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization into monic irreducibles, ordered by (degree,
// coefficient vector). The PRNG stream for equal-degree splitting is derived
// from `seed`, and the canonical ordering makes the output independent of it.
inline Factorization factor(const FqPoly& poly, const FieldSpec& F, uint64_t seed = 0) {
    if (poly.is_zero()) throw domain_error("factor: zero polynomial");
    Factorization out;
    out.leading = poly.leading();
    if (poly.deg() == 0) return out;
    FqPoly f = fq_make_monic(F, poly);
    Xorshift64 rng(seed);

    std::vector<std::pair<FqPoly, int>> squarefree;
    fqdetail::squarefree_split(F, f, squarefree, 1);
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [block, d] : fqdetail::distinct_degree(F, part)) {
            std::vector<FqPoly> irreducibles;
            fqdetail::equal_degree(F, block, d, rng, irreducibles);
            for (FqPoly& fac : irreducibles) out.factors.emplace_back(std::move(fac), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        if (a.first.c != b.first.c) return a.first.c < b.first.c;
        return a.second < b.second;
    });
    return out;
}

// Rational function as a reduced fraction with monic denominator.
struct FqRational {
    FqPoly num, den = FqPoly::constant(1);
};

namespace fqdetail {

inline FqRational reduce(const FieldSpec& F, FqPoly num, FqPoly den) {
    if (den.is_zero()) throw domain_error("equation: division by the zero function");
    if (num.is_zero()) return {FqPoly::zero(), FqPoly::constant(1)};
    FqPoly g = fq_gcd(F, num, den);
    if (g.deg() > 0) {
        num = fq_div_exact(F, num, g);
        den = fq_div_exact(F, den, g);
    }
    uint32_t lead = den.leading();
    if (lead != 1) {
        uint32_t li = F.inv(lead);
        num = fq_scale(F, num, li);
        den = fq_scale(F, den, li);
    }
    return {std::move(num), std::move(den)};
}

class EquationParser {
public:
    EquationParser(const std::string& text, const FieldSpec& field) : text_(text), F_(field) {}

    // Grammar: y ^ INT = EXPR ; EXPR := term (('+'|'-') term)* ;
    // term := pow (('*'|'/') pow)* ; pow := atom ('^' INT)? ;
    // atom := 'x' | INT | '(' EXPR ')' | '[' INT (',' INT)* ']'.
    std::tuple<Int, FqPoly, FqPoly> parse() {
        skip_ws();
        expect('y');
        skip_ws();
        expect('^');
        long long m = parse_int();
        if (m < 2) throw parse_error("exponent of y must be >= 2, got " + std::to_string(m), pos_);
        skip_ws();
        expect('=');
        FqRational rhs = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        if (rhs.num.is_zero()) throw parse_error("f(x) must be nonzero", pos_);
        return {Int(m), rhs.num, rhs.den};
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long long parse_int() {
        skip_ws();
        size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected an integer", start);
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1LL << 40)) throw parse_error("integer literal too large", start);
            ++pos_;
        }
        return negative ? -v : v;
    }

    FqRational parse_expr() {
        FqRational acc = parse_term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            FqRational rhs = parse_term();
            // a/b +- c/d = (ad +- cb) / bd
            FqPoly num = fq_mul(F_, acc.num, rhs.den);
            FqPoly other = fq_mul(F_, rhs.num, acc.den);
            num = c == '+' ? fq_add(F_, num, other) : fq_sub(F_, num, other);
            acc = reduce(F_, std::move(num), fq_mul(F_, acc.den, rhs.den));
        }
    }

    FqRational parse_term() {
        FqRational acc = parse_pow();
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') return acc;
            ++pos_;
            FqRational rhs = parse_pow();
            if (c == '*')
                acc = reduce(F_, fq_mul(F_, acc.num, rhs.num), fq_mul(F_, acc.den, rhs.den));
            else {
                if (rhs.num.is_zero()) throw parse_error("division by zero", pos_);
                acc = reduce(F_, fq_mul(F_, acc.num, rhs.den), fq_mul(F_, acc.den, rhs.num));
            }
        }
    }

    FqRational parse_pow() {
        FqRational base = parse_atom();
        if (peek() != '^') return base;
        ++pos_;
        long long e = parse_int();
        bool invert = e < 0;
        if (invert) {
            if (base.num.is_zero()) throw parse_error("zero raised to a negative power", pos_);
            std::swap(base.num, base.den);
            e = -e;
        }
        FqRational out{FqPoly::constant(1), FqPoly::constant(1)};
        FqRational sq = base;
        while (e > 0) {
            if (e & 1) out = reduce(F_, fq_mul(F_, out.num, sq.num), fq_mul(F_, out.den, sq.den));
            e >>= 1;
            if (e > 0) sq = reduce(F_, fq_mul(F_, sq.num, sq.num), fq_mul(F_, sq.den, sq.den));
        }
        return out;
    }

    FqRational parse_atom() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return {FqPoly::x(), FqPoly::constant(1)};
        }
        if (c == '(') {
            ++pos_;
            FqRational inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            std::vector<int> digits;
            digits.push_back(static_cast<int>(((parse_int() % F_.p) + F_.p) % F_.p));
            while (peek() == ',') {
                ++pos_;
                digits.push_back(static_cast<int>(((parse_int() % F_.p) + F_.p) % F_.p));
            }
            expect(']');
            if (digits.size() > static_cast<size_t>(F_.k))
                throw parse_error("field element vector longer than the extension degree", pos_);
            digits.resize(static_cast<size_t>(F_.k), 0);
            return {FqPoly::constant(F_.encode(digits)), FqPoly::constant(1)};
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
            return {FqPoly::constant(F_.from_int(parse_int())), FqPoly::constant(1)};
        throw parse_error("expected 'x', an integer, '(', or '['", pos_);
    }

    const std::string& text_;
    const FieldSpec& F_;
    size_t pos_ = 0;
};

}  // namespace fqdetail

// Parses `y^m = f(x)` and returns (m, numerator, denominator) with the
// fraction in lowest terms and a monic denominator.
inline std::tuple<Int, FqPoly, FqPoly> parse_equation(const std::string& text, const FieldSpec& field) {
    fqdetail::EquationParser parser(text, field);
    auto [m, num, den] = parser.parse();
    FqRational reduced = fqdetail::reduce(field, num, den);
    return {m, reduced.num, reduced.den};
}

struct EquationCurve {
    CurveData curve;
    ValidationReport report;
};

// Branches from the factored numerator (positive exponents) and denominator
// (negative exponents), labelled by the rendered factor polynomials.
inline EquationCurve to_curve(Int m, const Factorization& num_factors,
                              const Factorization& den_factors, const FieldSpec& field) {
    CurveData c;
    c.m = m;
    c.base_field_q = Int(field.q);
    for (const auto& [poly, mult] : num_factors.factors)
        c.branches.push_back({Int(mult), Int(poly.deg()), fq_poly_to_string(field, poly)});
    for (const auto& [poly, mult] : den_factors.factors)
        c.branches.push_back({Int(-mult), Int(poly.deg()), fq_poly_to_string(field, poly)});
    return {c, validate(c)};
}

inline EquationCurve curve_from_equation(const std::string& text, const FieldSpec& field,
                                         uint64_t seed = 0) {
    auto [m, num, den] = parse_equation(text, field);
    Factorization nf = factor(num, field, seed);
    Factorization df = den.deg() >= 1 ? factor(den, field, seed) : Factorization{};
    return to_curve(m, nf, df, field);
}

}  // namespace kummer
