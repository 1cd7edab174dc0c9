#pragma once

// Deterministic random-curve corpus for the property and acceptance tests.

#include <vector>

#include "kummer/curve.hpp"
#include "kummer/prng.hpp"

namespace kummer::testing {

struct CorpusParams {
    long long max_m = 20;
    int min_r = 1;
    int max_r = 6;
    long long max_abs_lambda = 20;
    long long max_d = 3;
    long long genus_cap = 60;
    int min_admissible = 1;
};

inline CurveData random_curve(Xorshift64& rng, const CorpusParams& p = {}) {
    while (true) {
        CurveData c;
        c.m = Int(rng.range(2, p.max_m));
        int r = static_cast<int>(rng.range(p.min_r, p.max_r));
        for (int i = 0; i < r; ++i) {
            long long lam = 0;
            while (lam == 0) lam = rng.range(-p.max_abs_lambda, p.max_abs_lambda);
            c.branches.push_back({Int(lam), Int(rng.range(1, p.max_d)), "p" + std::to_string(i + 1)});
        }
        ValidationReport rep = validate(c);
        if (!rep.ok()) continue;
        if (static_cast<int>(rep.ramified_places.size()) < p.min_admissible) continue;
        if (genus(c) > Int(p.genus_cap)) continue;
        return c;
    }
}

inline std::vector<CurveData> make_corpus(uint64_t seed, size_t count, const CorpusParams& p = {}) {
    Xorshift64 rng(seed);
    std::vector<CurveData> out;
    out.reserve(count);
    while (out.size() < count) out.push_back(random_curve(rng, p));
    return out;
}

inline std::vector<PlaceRef> admissible_places(const CurveData& c) {
    return validate(c).ramified_places;
}

}  // namespace kummer::testing
