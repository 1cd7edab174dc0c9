#pragma once

// Finite numerical-semigroup toolkit: sieve a semigroup from generators and
// extract gaps, Frobenius number, genus, minimal generating system and Apery
// sets. Used to cross-check the gap-form and generator-form descriptions of
// the Weierstrass semigroups against each other.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer/intmath.hpp"

namespace kummer {

class NumericalSemigroup {
public:
    // Sieves membership from a generating set with gcd 1. The sieve extends
    // until it sees min(gens) consecutive members; every larger integer is
    // then a member, which bounds the Frobenius number.
    static NumericalSemigroup from_generators(const std::vector<Int>& gens) {
        if (gens.empty()) throw domain_error("from_generators: empty generator list");
        std::vector<long long> gs;
        Int g = 0;
        for (Int x : gens) {
            if (x < Int(1)) throw domain_error("from_generators: generators must be >= 1");
            g = gcd(g, x);
            gs.push_back(x.to_i64());
        }
        if (g != Int(1))
            throw domain_error("from_generators: gcd of generators is " + g.str() +
                               ", the complement would be infinite");
        std::sort(gs.begin(), gs.end());
        gs.erase(std::unique(gs.begin(), gs.end()), gs.end());

        NumericalSemigroup s;
        long long mn = gs.front();
        if (mn == 1) {
            s.conductor_ = 0;
            s.member_ = {true};
            return s;
        }

        std::vector<char>& mem = s.member_;
        mem.assign(1, true);  // 0 is always a member
        long long run = 0;    // current run of consecutive members ending at the last sieved value
        long long x = 0;
        // A run of mn consecutive members at x means every y > x is a member.
        while (run < mn) {
            ++x;
            if (x > (1LL << 24))
                throw overflow_error("from_generators: sieve bound exceeded");
            bool in = false;
            for (long long gen : gs) {
                if (gen > x) break;
                if (mem[static_cast<size_t>(x - gen)]) {
                    in = true;
                    break;
                }
            }
            mem.push_back(in);
            run = in ? run + 1 : 0;
        }
        s.conductor_ = x - mn + 1;  // first member with everything after it a member
        for (long long v = 0; v < s.conductor_; ++v)
            if (!mem[static_cast<size_t>(v)]) s.gaps_.push_back(Int(v));
        return s;
    }

    bool contains(Int x) const {
        if (x < Int(0)) return false;
        long long v = x.to_i64();
        if (v >= conductor_) return true;
        return member_[static_cast<size_t>(v)];
    }

    const std::vector<Int>& gaps() const { return gaps_; }

    Int genus() const { return Int(static_cast<long long>(gaps_.size())); }

    std::optional<Int> frobenius() const {
        if (gaps_.empty()) return std::nullopt;
        return gaps_.back();
    }

    // Smallest nonzero member.
    Int multiplicity() const {
        long long v = 1;
        while (!contains(Int(v))) ++v;
        return Int(v);
    }

    // Members that are not sums of two smaller nonzero members; this is the
    // unique minimal system of generators.
    std::vector<Int> minimal_generators() const {
        std::vector<Int> out;
        long long mn = multiplicity().to_i64();
        long long hi = std::max(conductor_ + mn - 1, mn);  // nothing above conductor+mn-1 can be minimal
        for (long long x = mn; x <= hi; ++x) {
            if (!contains(Int(x))) continue;
            bool decomposable = false;
            for (long long u = mn; u + mn <= x && !decomposable; ++u)
                if (contains(Int(u)) && contains(Int(x - u))) decomposable = true;
            if (!decomposable) out.push_back(Int(x));
        }
        return out;
    }

    // Least member in each residue class mod n; requires n in S, n >= 1.
    std::vector<Int> apery_set(Int n) const {
        if (n < Int(1) || !contains(n))
            throw domain_error("apery_set: n = " + n.str() + " is not a nonzero member");
        long long nn = n.to_i64();
        std::vector<Int> ap;
        ap.reserve(static_cast<size_t>(nn));
        for (long long rho = 0; rho < nn; ++rho) {
            long long x = rho;
            while (!contains(Int(x))) x += nn;
            ap.push_back(Int(x));
        }
        return ap;
    }

    // Frobenius definition of symmetry, F = 2g - 1, cross-checked against the
    // mirror characterization (exactly one of x, F - x is a member).
    bool is_symmetric() const {
        if (gaps_.empty()) throw domain_error("is_symmetric: undefined for genus 0");
        Int F = gaps_.back();
        bool by_frobenius = (F == Int(2) * genus() - 1);
        bool by_mirror = true;
        for (long long x = 0, f = F.to_i64(); x <= f; ++x)
            if (contains(Int(x)) == contains(Int(f - x))) {
                by_mirror = false;
                break;
            }
        if (by_frobenius != by_mirror)
            throw std::logic_error("is_symmetric: Frobenius and mirror checks disagree");
        return by_frobenius;
    }

private:
    std::vector<char> member_;  // membership below conductor_
    long long conductor_ = 0;   // least c with [c, inf) all members
    std::vector<Int> gaps_;
};

}  // namespace kummer
