#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "cnls/errors.hpp"

namespace cnls {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (inv) acc = Rational(1) / acc;
    return acc;
}

// Exact n-th root of a nonnegative integer, if it exists.
inline std::optional<BigInt> int_nth_root_exact(const BigInt& v, unsigned n) {
    if (v < 0) return std::nullopt;
    if (v == 0 || v == 1 || n == 1) return v;
    // bisection on [1, v]
    BigInt lo = 1, hi = v;
    while (lo <= hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt p = 1;
        bool over = false;
        for (unsigned i = 0; i < n; ++i) {
            p *= mid;
            if (p > v) { over = true; break; }
        }
        if (!over && p == v) return mid;
        if (over || p > v) hi = mid - 1; else lo = mid + 1;
    }
    return std::nullopt;
}

// Exact rational q-th root of r (q > 0), honoring sign for odd q.
inline std::optional<Rational> rat_nth_root_exact(const Rational& r, unsigned q) {
    if (q == 0) return std::nullopt;
    if (q == 1) return r;
    bool neg = r < 0;
    if (neg && q % 2 == 0) return std::nullopt;
    Rational a = neg ? Rational(-r) : r;
    auto nr = int_nth_root_exact(rat_num(a), q);
    if (!nr) return std::nullopt;
    auto dr = int_nth_root_exact(rat_den(a), q);
    if (!dr) return std::nullopt;
    Rational out(*nr, *dr);
    return neg ? Rational(-out) : out;
}

} // namespace cnls
