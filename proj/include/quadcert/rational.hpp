#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace quadcert {

// Exact rational with positive denominator and reduced terms. Rule weights
// and bound coefficients are kept in this form so the constants stay exact
// until the moment they are converted to double.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        num = g > 1 ? n / g : n;
        den = g > 1 ? d / g : d;
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational operator*(const Rational& a, const Rational& b) {
    const long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    const long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
}

inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return a * Rational(b.den, b.num);
}

inline Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

}  // namespace quadcert
