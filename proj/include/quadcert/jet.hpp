#pragma once

#include "quadcert/interval.hpp"

namespace quadcert {

// Order-2 taylor enclosure of a function over an interval X:
// val contains f(X), d1 contains f'(X), d2 contains f''(X).
struct Jet2 {
    Interval val;
    Interval d1;
    Interval d2;
};

inline Jet2 jet_const(double c) {
    return {Interval::point(c), Interval::point(0.0), Interval::point(0.0)};
}

inline Jet2 jet_var(const Interval& x) {
    return {x, Interval::point(1.0), Interval::point(0.0)};
}

inline Jet2 operator+(const Jet2& f, const Jet2& g) {
    return {f.val + g.val, f.d1 + g.d1, f.d2 + g.d2};
}

inline Jet2 operator-(const Jet2& f, const Jet2& g) {
    return {f.val - g.val, f.d1 - g.d1, f.d2 - g.d2};
}

inline Jet2 operator-(const Jet2& f) { return {-f.val, -f.d1, -f.d2}; }

inline Jet2 operator*(const Jet2& f, const Jet2& g) {
    // (fg)'' = f''g + 2 f'g' + f g''
    return {f.val * g.val,
            f.d1 * g.val + f.val * g.d1,
            f.d2 * g.val + Interval::point(2.0) * (f.d1 * g.d1) + f.val * g.d2};
}

inline Jet2 operator/(const Jet2& f, const Jet2& g) {
    // h = f/g solved from f = h*g:
    //   h'  = (f'  - h g') / g
    //   h'' = (f'' - 2 h' g' - h g'') / g
    Interval h = f.val / g.val;
    Interval h1 = (f.d1 - h * g.d1) / g.val;
    Interval h2 = (f.d2 - Interval::point(2.0) * (h1 * g.d1) - h * g.d2) / g.val;
    return {h, h1, h2};
}

// phi applied to f by the chain rule:
//   (phi o f)'  = phi'(f) f'
//   (phi o f)'' = phi''(f) f'^2 + phi'(f) f''
inline Jet2 compose(const Interval& phi, const Interval& dphi,
                    const Interval& ddphi, const Jet2& f) {
    return {phi, dphi * f.d1, ddphi * sqr(f.d1) + dphi * f.d2};
}

inline Jet2 sin(const Jet2& f) {
    Interval s = sin(f.val);
    Interval c = cos(f.val);
    return compose(s, c, -s, f);
}

inline Jet2 cos(const Jet2& f) {
    Interval s = sin(f.val);
    Interval c = cos(f.val);
    return compose(c, -s, -c, f);
}

inline Jet2 exp(const Jet2& f) {
    Interval e = exp(f.val);
    return compose(e, e, e, f);
}

inline Jet2 log(const Jet2& f) {
    Interval l = log(f.val);  // validates f.val.lo > 0
    Interval inv = Interval::point(1.0) / f.val;
    return compose(l, inv, -sqr(inv), f);
}

inline Jet2 sqrt(const Jet2& f) {
    Interval s = sqrt(f.val);  // validates f.val.lo > 0
    Interval d = Interval::point(0.5) / s;
    Interval dd = -(Interval::point(0.25) / (f.val * s));
    return compose(s, d, dd, f);
}

inline Jet2 pow_int(const Jet2& f, long long k) {
    if (k == 0) return jet_const(1.0);
    if (k == 1) return f;
    const double kd = static_cast<double>(k);
    Interval p = pow_int(f.val, k);
    Interval d = Interval::point(kd) * pow_int(f.val, k - 1);
    Interval dd = Interval::point(kd * (kd - 1.0)) * pow_int(f.val, k - 2);
    return compose(p, d, dd, f);
}

inline Jet2 pow_real(const Jet2& f, double r) {
    Interval p = pow_real(f.val, r);  // validates f.val.lo > 0
    Interval d = Interval::point(r) * pow_real(f.val, r - 1.0);
    Interval dd = Interval::point(r * (r - 1.0)) * pow_real(f.val, r - 2.0);
    return compose(p, d, dd, f);
}

}  // namespace quadcert
