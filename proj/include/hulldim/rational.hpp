#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hulldim/numth.hpp"

namespace hulldim {

// Exact rational on checked 64-bit integers, always reduced with a positive
// denominator.  All averages handled here are tiny; overflow throws rather
// than wrapping.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw DivisionByZero("rational division by zero");
        return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    friend Rational operator-(const Rational& a) { return Rational(checked_sub(0, a.num), a.den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    double approx() const { return double(num) / double(den); }
};

} // namespace hulldim
