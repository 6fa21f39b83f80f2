#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace zczkit {

// Exact fraction on long long, kept unreduced as constructed (callers may want
// the raw numerator/denominator, e.g. 57/81 rather than 19/27).  Equality is
// cross-multiplied, so reduction never affects comparisons.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
    }
    Rational(long long n) : num(n), den(1) {}

    Rational reduced() const {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) return {0, 1};
        return {num / g, den / g};
    }
    bool is_integer() const { return num % den == 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // reduce cross factors first to keep products in range
        Rational x = Rational(a.num, b.den).reduced();
        Rational y = Rational(b.num, a.den).reduced();
        return {x.num * y.num, x.den * y.den};
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den).reduced();
    }

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace zczkit
