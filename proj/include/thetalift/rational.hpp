#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "thetalift/errors.hpp"

namespace thetalift {

// Exact rational on int64. Torsion coordinates, matrix entries and preimage
// enumeration all stay in this type; nothing combinatorial is ever floated.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // value reduced into [0, 1)
    Rat mod1() const {
        long long r = num % den;
        if (r < 0) r += den;
        return Rat(r, den);
    }

    long long floor_ll() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
};

namespace detail {
inline long long narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw DomainError(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}
}  // namespace detail

inline Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    // reduce in 128 bits before narrowing
    __int128 x = n < 0 ? -n : n, y = d;
    while (y) { __int128 t = x % y; x = y; y = t; }
    if (x > 1) { n /= x; d /= x; }
    return Rat(detail::narrow(n, "add"), detail::narrow(d, "add"));
}

inline Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
inline Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

inline Rat operator*(const Rat& a, const Rat& b) {
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    __int128 n = (__int128)(a.num / (g1 ? g1 : 1)) * (b.num / (g2 ? g2 : 1));
    __int128 d = (__int128)(a.den / (g2 ? g2 : 1)) * (b.den / (g1 ? g1 : 1));
    return Rat(detail::narrow(n, "mul"), detail::narrow(d, "mul"));
}

inline Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return a * Rat(b.den, b.num);
}

inline bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
inline bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

inline Rat rat_from_string(const std::string& s);  // in format.hpp

}  // namespace thetalift
