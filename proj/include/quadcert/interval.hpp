#pragma once

#include <string>

namespace quadcert {

// Closed interval [lo, hi] with finite endpoints and lo <= hi.
//
// Arithmetic is outward-widened double arithmetic: every computed endpoint
// pair is inflated by a relative 16*eps plus an absolute 1e-300 before it is
// returned, so results remain enclosures without directed-rounding mode
// switches. This is rigorous up to the usual floating-point model
// assumption that a single libm/arithmetic operation is good to a few ulps;
// it is not last-ulp validated.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_);
    static Interval point(double v) { return Interval(v, v); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator-(const Interval& x);  // exact, no widening
Interval operator*(const Interval& x, const Interval& y);
Interval operator/(const Interval& x, const Interval& y);  // requires 0 not in y

Interval sqr(const Interval& x);  // tighter than x*x when x straddles zero
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);   // requires x.lo > 0
Interval sqrt(const Interval& x);  // requires x.lo > 0
Interval pow_int(const Interval& x, long long k);  // k < 0 requires 0 not in x
Interval pow_real(const Interval& x, double r);    // requires x.lo > 0

Interval hull(const Interval& x, const Interval& y);
// Largest interval contained in both; falls back to x when rounding has
// made the inputs (which must overlap mathematically) appear disjoint.
Interval intersect(const Interval& x, const Interval& y);
bool contains(const Interval& outer, const Interval& inner);

std::string to_string(const Interval& x);

}  // namespace quadcert
