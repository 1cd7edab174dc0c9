#pragma once

// Independent ground truth: the Riemann-Roch dimension at divisors supported
// on totally ramified degree-one places, evaluated as the finite floor-sum
//
//   l(sum a_i Q_{l_i}) = sum_{t=0}^{m-1} max(0,
//       sum_{i in support} floor((a_i + t*lambda_{l_i}) / m) * d_{l_i}
//     + sum_{i outside}    floor(t*lambda_{l_i} / m) * d_{l_i} + 1).
//
// Everything downstream (closed-form gap sets, Gamma sets, symmetry) is
// cross-validated against this oracle, so it deliberately stays a direct
// transcription of the sum with no shortcuts borrowed from those results.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

struct DivisorCoeffs {
    std::vector<PlaceRef> places;  // pairwise distinct, totally ramified, degree one
    std::vector<Int> coeffs;       // same length; any integers
};

// Precomputed evaluation state for one (curve, support) pair. All branch
// contributions outside the support depend only on t and are folded into one
// table, so a dim() call costs m * (support size + 1) integer operations.
class DimContext {
public:
    DimContext(const CurveData& c, const std::vector<PlaceRef>& places) {
        require_valid(c);
        for (PlaceRef p : places) require_admissible(c, p);
        for (size_t i = 0; i < places.size(); ++i)
            for (size_t j = i + 1; j < places.size(); ++j)
                if (places[i] == places[j])
                    throw domain_error("divisor support places must be pairwise distinct");

        m_ = c.m.to_i64();
        for (PlaceRef p : places) support_lambda_.push_back(c.lambda_at(p.index).to_i64());

        long long max_abs_lambda = 1;
        long long sum_deg = 1;
        for (int i = 0; i <= c.r(); ++i) {
            max_abs_lambda = std::max(max_abs_lambda, c.lambda_at(i).abs().to_i64());
            sum_deg += c.degree_at(i).to_i64();
        }
        // Keep every intermediate far below the int64 range; the oracle must
        // fail loudly rather than wrap.
        if (m_ > (1LL << 20) || max_abs_lambda > (1LL << 20) || sum_deg > (1LL << 20))
            throw overflow_error("dim oracle: curve parameters exceed the guarded range");
        coeff_limit_ = (1LL << 60) / (sum_deg + static_cast<long long>(places.size()) + 2);

        outside_plus_one_.assign(static_cast<size_t>(m_), 1);
        for (int i = 0; i <= c.r(); ++i) {
            bool in_support = false;
            for (PlaceRef p : places)
                if (p.index == i) in_support = true;
            if (in_support) continue;
            long long lam = c.lambda_at(i).to_i64();
            long long deg = c.degree_at(i).to_i64();
            for (long long t = 0; t < m_; ++t)
                outside_plus_one_[static_cast<size_t>(t)] += fldiv(t * lam, m_) * deg;
        }
    }

    size_t support_size() const { return support_lambda_.size(); }

    Int dim(const std::vector<long long>& coeffs) const {
        if (coeffs.size() != support_lambda_.size())
            throw domain_error("dim: coefficient count does not match support");
        for (long long a : coeffs)
            if (a > coeff_limit_ || a < -coeff_limit_)
                throw overflow_error("dim oracle: coefficient exceeds the guarded range");
        long long total = 0;
        for (long long t = 0; t < m_; ++t) {
            long long term = outside_plus_one_[static_cast<size_t>(t)];
            for (size_t i = 0; i < coeffs.size(); ++i)
                term += fldiv(coeffs[i] + t * support_lambda_[i], m_);
            if (term > 0) total += term;
        }
        return Int(total);
    }

private:
    static long long fldiv(long long a, long long b) {
        long long q = a / b;
        if (a % b != 0 && ((a < 0) != (b < 0))) --q;
        return q;
    }

    long long m_ = 0;
    long long coeff_limit_ = 0;
    std::vector<long long> support_lambda_;
    std::vector<long long> outside_plus_one_;  // per t, with the trailing +1 folded in
};

inline Int dim(const CurveData& c, const DivisorCoeffs& D) {
    if (D.places.size() != D.coeffs.size())
        throw domain_error("dim: places and coeffs must have equal length");
    DimContext ctx(c, D.places);
    std::vector<long long> a;
    a.reserve(D.coeffs.size());
    for (Int x : D.coeffs) a.push_back(x.to_i64());
    return ctx.dim(a);
}

// Carvalho-Torres membership: n is in H(P_1, ..., P_s) iff removing any one
// place from the divisor drops the dimension by exactly one.
inline bool is_in_H_ctx(const DimContext& ctx, const std::vector<long long>& n) {
    Int full = ctx.dim(n);
    std::vector<long long> probe = n;
    for (size_t j = 0; j < n.size(); ++j) {
        probe[j] = n[j] - 1;
        Int dropped = ctx.dim(probe);
        probe[j] = n[j];
        if (full != dropped + 1) return false;
    }
    return true;
}

inline bool is_in_H(const CurveData& c, const std::vector<PlaceRef>& places,
                    const std::vector<Int>& n) {
    if (places.size() != n.size())
        throw domain_error("is_in_H: places and tuple must have equal length");
    std::vector<long long> a;
    for (Int x : n) {
        if (x < Int(0)) throw domain_error("is_in_H: coefficients must be nonnegative");
        a.push_back(x.to_i64());
    }
    DimContext ctx(c, places);
    return is_in_H_ctx(ctx, a);
}

// a is a gap at Q_s iff l(a Q_s) = l((a-1) Q_s).
inline bool is_gap_oracle(const CurveData& c, PlaceRef s, Int a) {
    if (a < Int(1)) throw domain_error("is_gap_oracle: a must be >= 1");
    DimContext ctx(c, {s});
    long long aa = a.to_i64();
    return ctx.dim({aa}) == ctx.dim({aa - 1});
}

// All gaps at Q_s by scanning [1, 2g-1] with the dimension oracle; the
// result always has exactly genus(c) elements.
inline std::vector<Int> brute_force_gaps(const CurveData& c, PlaceRef s) {
    Int g = genus(c);
    DimContext ctx(c, {s});
    std::vector<Int> gaps;
    long long bound = (Int(2) * g - 1).to_i64();
    Int prev = ctx.dim({0});
    for (long long a = 1; a <= bound; ++a) {
        Int cur = ctx.dim({a});
        if (cur == prev) gaps.push_back(Int(a));
        prev = cur;
    }
    if (Int(static_cast<long long>(gaps.size())) != g)
        throw std::logic_error("brute_force_gaps: found " + std::to_string(gaps.size()) +
                               " gaps but genus is " + g.str());
    return gaps;
}

}  // namespace kummer
