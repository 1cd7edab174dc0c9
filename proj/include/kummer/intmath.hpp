#pragma once

// Exact integer arithmetic on 128-bit values with loud overflow detection,
// plus the floor/ceil division and closed-form sum identities that every
// gap-set and semigroup formula in this library is built from.

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kummer {

class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Signed 128-bit integer. Every operator either returns the mathematically
// exact result or throws overflow_error; silent wraparound is never allowed.
class Int {
public:
    constexpr Int() : v_(0) {}
    constexpr Int(int x) : v_(x) {}
    constexpr Int(long x) : v_(x) {}
    constexpr Int(long long x) : v_(x) {}
    constexpr Int(unsigned x) : v_(x) {}
    constexpr Int(unsigned long x) : v_(x) {}
    constexpr Int(unsigned long long x) : v_(x) {}

    static constexpr Int from_raw(__int128 v) {
        Int x;
        x.v_ = v;
        return x;
    }

    constexpr __int128 raw() const { return v_; }

    Int operator+(Int o) const {
        __int128 r;
        if (__builtin_add_overflow(v_, o.v_, &r)) throw overflow_error("Int: + overflow");
        return from_raw(r);
    }
    Int operator-(Int o) const {
        __int128 r;
        if (__builtin_sub_overflow(v_, o.v_, &r)) throw overflow_error("Int: - overflow");
        return from_raw(r);
    }
    Int operator*(Int o) const {
        __int128 r;
        if (__builtin_mul_overflow(v_, o.v_, &r)) throw overflow_error("Int: * overflow");
        return from_raw(r);
    }
    Int operator-() const { return Int(0) - *this; }

    Int& operator+=(Int o) { return *this = *this + o; }
    Int& operator-=(Int o) { return *this = *this - o; }
    Int& operator*=(Int o) { return *this = *this * o; }

    friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Int a, Int b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Int a, Int b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Int a, Int b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Int a, Int b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Int a, Int b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_ == 0; }
    Int abs() const { return v_ < 0 ? -*this : *this; }

    // Exact conversion to int64; throws when the value does not fit.
    long long to_i64() const {
        if (v_ > __int128(INT64_MAX) || v_ < __int128(INT64_MIN))
            throw overflow_error("Int: value does not fit in 64 bits");
        return static_cast<long long>(v_);
    }

    std::string str() const {
        if (v_ == 0) return "0";
        unsigned __int128 u = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
        std::string s;
        while (u > 0) {
            s.push_back(char('0' + int(u % 10)));
            u /= 10;
        }
        if (v_ < 0) s.push_back('-');
        return std::string(s.rbegin(), s.rend());
    }

    friend std::ostream& operator<<(std::ostream& os, Int x) { return os << x.str(); }

private:
    __int128 v_;
};

// gcd on absolute values; gcd(0, 0) = 0 and gcd(a, 0) = |a|.
inline Int gcd(Int a, Int b) {
    __int128 x = a.abs().raw(), y = b.abs().raw();
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    return Int::from_raw(x);
}

namespace detail {
constexpr __int128 int128_min = static_cast<__int128>(static_cast<unsigned __int128>(1) << 127);
}

// Mathematical floor division, rounding toward -infinity.
inline Int floor_div(Int a, Int b) {
    if (b.is_zero()) throw domain_error("floor_div: division by zero");
    if (a.raw() == detail::int128_min && b.raw() == -1)
        throw overflow_error("floor_div: overflow");
    __int128 q = a.raw() / b.raw();
    __int128 rem = a.raw() % b.raw();
    if (rem != 0 && ((rem < 0) != (b.raw() < 0))) --q;
    return Int::from_raw(q);
}

// Mathematical ceiling division; ceil_div(a, b) == -floor_div(-a, b).
inline Int ceil_div(Int a, Int b) {
    if (b.is_zero()) throw domain_error("ceil_div: division by zero");
    if (a.raw() == detail::int128_min && b.raw() == -1)
        throw overflow_error("ceil_div: overflow");
    __int128 q = a.raw() / b.raw();
    __int128 rem = a.raw() % b.raw();
    if (rem != 0 && ((rem < 0) == (b.raw() < 0))) ++q;
    return Int::from_raw(q);
}

// Sum_{k=1}^{b-1} floor(k*a/b) for positive a, b, via the closed form
// ((a-1)(b-1) + gcd(a,b) - 1) / 2.
inline Int floor_partial_sum(Int a, Int b) {
    if (a < Int(1) || b < Int(1)) throw domain_error("floor_partial_sum: inputs must be positive");
    Int num = (a - 1) * (b - 1) + gcd(a, b) - 1;
    return floor_div(num, 2);
}

// Sum_{i=1}^{m-1} ceil(i*lambda/m) for m >= 2 and any integer lambda, via
// (m(lambda+1) - lambda - gcd(m,lambda)) / 2, with gcd(m, 0) taken as m so
// the identity also holds at lambda = 0.
inline Int ceil_partial_sum(Int m, Int lambda) {
    if (m < Int(2)) throw domain_error("ceil_partial_sum: m must be >= 2");
    Int g = lambda.is_zero() ? m : gcd(m, lambda);
    Int num = m * (lambda + 1) - lambda - g;
    return floor_div(num, 2);
}

// Unique u in [1, m-1] with a*u == 1 (mod m); requires gcd(a, m) = 1.
inline Int mod_inverse(Int a, Int m) {
    if (m < Int(2)) throw domain_error("mod_inverse: modulus must be >= 2");
    if (gcd(a, m) != Int(1)) throw domain_error("mod_inverse: arguments are not coprime");
    // Extended Euclid on (a mod m, m).
    __int128 mm = m.raw();
    __int128 r0 = a.raw() % mm;
    if (r0 < 0) r0 += mm;
    __int128 r1 = mm, t0 = 1, t1 = 0;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    __int128 u = t0 % mm;
    if (u < 0) u += mm;
    return Int::from_raw(u);
}

// a mod m reduced into [0, m-1]; m must be positive.
inline Int mod_reduce(Int a, Int m) {
    if (m <= Int(0)) throw domain_error("mod_reduce: modulus must be positive");
    __int128 r = a.raw() % m.raw();
    if (r < 0) r += m.raw();
    return Int::from_raw(r);
}

}  // namespace kummer
