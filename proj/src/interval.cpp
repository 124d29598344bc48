#include "quadcert/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quadcert/errors.hpp"
#include "quadcert/real_format.hpp"

namespace quadcert {
namespace {

constexpr double kRelPad = 16.0 * std::numeric_limits<double>::epsilon();
constexpr double kAbsPad = 1e-300;

double pad_down(double v) { return v - kRelPad * std::fabs(v) - kAbsPad; }
double pad_up(double v) { return v + kRelPad * std::fabs(v) + kAbsPad; }

// Outward inflation applied to every computed endpoint pair.
Interval enclose(double lo, double hi, const char* op) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError(std::string(op) + ": enclosure endpoint overflowed");
    return Interval(pad_down(lo), pad_up(hi));
}

// Is offset + 2*pi*k inside [lo, hi] for some integer k? Errs toward "yes":
// claiming an extremum is inside only widens the result.
bool has_critical_point(double lo, double hi, double offset) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double slack = 1e-9 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    const double k = std::ceil((lo - offset - slack) / two_pi);
    return offset + two_pi * k <= hi + slack;
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("Interval: endpoints must be finite");
    if (lo > hi)
        throw std::invalid_argument("Interval: lo must not exceed hi");
}

Interval operator+(const Interval& x, const Interval& y) {
    return enclose(x.lo + y.lo, x.hi + y.hi, "add");
}

Interval operator-(const Interval& x, const Interval& y) {
    return enclose(x.lo - y.hi, x.hi - y.lo, "sub");
}

Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }

Interval operator*(const Interval& x, const Interval& y) {
    const double p1 = x.lo * y.lo;
    const double p2 = x.lo * y.hi;
    const double p3 = x.hi * y.lo;
    const double p4 = x.hi * y.hi;
    return enclose(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}), "mul");
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero())
        throw DomainError("division by an interval containing zero");
    const double q1 = x.lo / y.lo;
    const double q2 = x.lo / y.hi;
    const double q3 = x.hi / y.lo;
    const double q4 = x.hi / y.hi;
    return enclose(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}), "div");
}

Interval sqr(const Interval& x) {
    const double p1 = x.lo * x.lo;
    const double p2 = x.hi * x.hi;
    if (x.contains_zero()) return enclose(0.0, std::max(p1, p2), "sqr");
    return enclose(std::min(p1, p2), std::max(p1, p2), "sqr");
}

Interval sin(const Interval& x) {
    constexpr double pi = std::numbers::pi;
    if (x.width() >= 2.0 * pi) return Interval(-1.0, 1.0);
    const double s1 = std::sin(x.lo);
    const double s2 = std::sin(x.hi);
    double lo = has_critical_point(x.lo, x.hi, -pi / 2.0)
                    ? -1.0
                    : std::max(pad_down(std::min(s1, s2)), -1.0);
    double hi = has_critical_point(x.lo, x.hi, pi / 2.0)
                    ? 1.0
                    : std::min(pad_up(std::max(s1, s2)), 1.0);
    return Interval(lo, hi);
}

Interval cos(const Interval& x) {
    constexpr double pi = std::numbers::pi;
    if (x.width() >= 2.0 * pi) return Interval(-1.0, 1.0);
    const double c1 = std::cos(x.lo);
    const double c2 = std::cos(x.hi);
    double lo = has_critical_point(x.lo, x.hi, pi)
                    ? -1.0
                    : std::max(pad_down(std::min(c1, c2)), -1.0);
    double hi = has_critical_point(x.lo, x.hi, 0.0)
                    ? 1.0
                    : std::min(pad_up(std::max(c1, c2)), 1.0);
    return Interval(lo, hi);
}

Interval exp(const Interval& x) {
    return enclose(std::exp(x.lo), std::exp(x.hi), "exp");
}

Interval log(const Interval& x) {
    if (!(x.lo > 0.0))
        throw DomainError("log requires a strictly positive interval");
    return enclose(std::log(x.lo), std::log(x.hi), "log");
}

Interval sqrt(const Interval& x) {
    if (!(x.lo > 0.0))
        throw DomainError("sqrt requires a strictly positive interval "
                          "(its derivative bounds blow up at 0)");
    return enclose(std::sqrt(x.lo), std::sqrt(x.hi), "sqrt");
}

Interval pow_int(const Interval& x, long long k) {
    if (k == 0) return Interval(1.0, 1.0);
    if (k == 1) return x;
    if (k < 0 && x.contains_zero())
        throw DomainError("negative integer power of an interval containing zero");
    const double kd = static_cast<double>(k);
    const double p1 = std::pow(x.lo, kd);
    const double p2 = std::pow(x.hi, kd);
    if (k > 0 && k % 2 == 0 && x.contains_zero())
        return enclose(0.0, std::max(p1, p2), "pow_int");
    return enclose(std::min(p1, p2), std::max(p1, p2), "pow_int");
}

Interval pow_real(const Interval& x, double r) {
    if (r == 0.0) return Interval(1.0, 1.0);
    if (!(x.lo > 0.0))
        throw DomainError("non-integer power requires a strictly positive base interval");
    const double p1 = std::pow(x.lo, r);
    const double p2 = std::pow(x.hi, r);
    return enclose(std::min(p1, p2), std::max(p1, p2), "pow_real");
}

Interval hull(const Interval& x, const Interval& y) {
    return Interval(std::min(x.lo, y.lo), std::max(x.hi, y.hi));
}

Interval intersect(const Interval& x, const Interval& y) {
    const double lo = std::max(x.lo, y.lo);
    const double hi = std::min(x.hi, y.hi);
    if (lo > hi) return x;
    return Interval(lo, hi);
}

bool contains(const Interval& outer, const Interval& inner) {
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

std::string to_string(const Interval& x) {
    return "[" + format_real(x.lo) + ", " + format_real(x.hi) + "]";
}

}  // namespace quadcert
