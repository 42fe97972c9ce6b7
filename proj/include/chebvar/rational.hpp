#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "chebvar/errors.hpp"

namespace chebvar {

/// Exact rational over 64-bit integers with 128-bit intermediates.
/// Polytope coordinates stay tiny, so overflow is a hard error rather
/// than something we try to survive.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw internal_consistency_error("Rat: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = __int128(1) << 62;
        if (n >= lim || n <= -lim || d >= lim)
            throw internal_consistency_error("Rat: overflow");
        num = static_cast<long long>(n);
        den = static_cast<long long>(d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        r.assign(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        r.assign(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        r.assign(__int128(a.num) * b.num, __int128(a.den) * b.den);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw internal_consistency_error("Rat: division by zero");
        Rat r;
        r.assign(__int128(a.num) * b.den, __int128(a.den) * b.num);
        return r;
    }
    Rat operator-() const {
        Rat r;
        r.num = -num;
        r.den = den;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return __int128(a.num) * b.den < __int128(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    long long floor() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace chebvar
