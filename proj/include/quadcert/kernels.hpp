#pragma once

#include <vector>

#include "quadcert/expr.hpp"
#include "quadcert/rational.hpp"

namespace quadcert {

// Second-order error kernels of the three rules:
// K1 <-> Simpson, K2 <-> 3/8 Simpson, K3 <-> Boole.
enum class KernelId { K1, K2, K3 };

const char* kernel_name(KernelId k);

// p(x, t) on [a, b]: t - a for t <= x, t - b for t > x.
double p_eval(double x, double t, double a, double b);

// q(x, s) = integral over t of p(x, t) p(t, s); closed form, piecewise
// quadratic in s with the branch switch at s = x. Vanishes at s = a and
// s = b for every x.
double q_eval(double x, double s, double a, double b);

// Weighted assembly of q over the rule nodes, e.g.
// K1(s) = 2 q((a+b)/2, s) + q(a, s).
double kernel_eval(KernelId k, double s, double a, double b);

// Complete sorted zero set of the kernel on [a, b], endpoints included.
std::vector<double> kernel_zeros(KernelId k, double a, double b);

// Exact integral of |K| over [a, b]. The kernel is piecewise quadratic with
// constant sign between consecutive breakpoints (rule nodes and kernel
// zeros), so each piece is integrated with the three-point rule, which is
// exact for quadratics.
double kernel_abs_integral(KernelId k, double a, double b);

// Same piecewise integration without the absolute value; analytically zero.
double kernel_integral(KernelId k, double a, double b);

// Independent slow path: composite trapezoid of |K| on n uniform points.
// Converges to kernel_abs_integral as n grows.
double kernel_abs_integral_oracle(KernelId k, double a, double b, long long n);

// kernel_abs_integral(k, a, b) equals coefficient * (b - a)^4 exactly:
// 1/27 for K1, 1/24 for K2, 2036/6075 for K3.
Rational kernel_abs_integral_coefficient(KernelId k);

// Sum of the assembly coefficients (3, 8, 90); the natural magnitude scale
// for kernel values relative to (b - a)^3.
double kernel_scale(KernelId k);

// Both sides of the pointwise error identity
//   f(x)(b-a) - (x - (a+b)/2)[f(b) - f(a)] - integral_a^b f
//     = (1/(b-a)) * double integral of p(x,t) p(t,s) f''(s) ds dt.
// lhs uses the supplied reference integral; rhs is dense two-level
// quadrature split at the kinks of p, with f'' taken from point jets.
struct ResidualPair {
    double lhs;
    double rhs;
};
ResidualPair representation_residual(const Expr& f, double x, double a,
                                     double b, double ref_integral,
                                     int resolution = 400);

}  // namespace quadcert
