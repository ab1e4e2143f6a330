#pragma once

#include <numeric>
#include <ostream>
#include <string>

namespace tsic {

// Exact nonnegative rational used for rates: typically (integer bits)/t.
// Stored unreduced so reports can echo the original bits/t pair.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {}

    static Rational of(long long n, long long d = 1) { return Rational(n, d); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den == b.den) return Rational(a.num + b.num, a.den);
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den == b.den) return Rational(a.num - b.num, a.den);
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Smallest p with 2^p >= n, for n >= 1.
inline int ceil_log2(long long n) {
    int p = 0;
    long long v = 1;
    while (v < n) { v <<= 1; ++p; }
    return p;
}

}  // namespace tsic
