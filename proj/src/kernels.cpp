#include "quadcert/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quadcert/errors.hpp"

namespace quadcert {
namespace {

void require_interval(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("kernel domain requires a < b");
}

void require_inside(double v, double a, double b, const char* what) {
    if (!(a <= v && v <= b))
        throw std::invalid_argument(std::string(what) + " must lie in [a, b]");
}

struct Term {
    double coeff;
    double x;
};

std::vector<Term> kernel_terms(KernelId k, double a, double b) {
    const double m = 0.5 * (a + b);
    switch (k) {
        case KernelId::K1:
            return {{2.0, m}, {1.0, a}};
        case KernelId::K2:
            return {{1.0, a},
                    {3.0, (2.0 * a + b) / 3.0},
                    {3.0, (a + 2.0 * b) / 3.0},
                    {1.0, b}};
        case KernelId::K3:
            return {{7.0, a},
                    {32.0, (3.0 * a + b) / 4.0},
                    {12.0, m},
                    {32.0, (a + 3.0 * b) / 4.0},
                    {7.0, b}};
    }
    return {};
}

// Breakpoints between which K is a single quadratic of constant sign:
// the q branch switches (at the assembly points) plus the kernel zeros.
std::vector<double> breakpoints(KernelId k, double a, double b) {
    std::vector<double> pts = kernel_zeros(k, a, b);
    for (const Term& t : kernel_terms(k, a, b)) pts.push_back(t.x);
    std::sort(pts.begin(), pts.end());
    const double tol = 1e-13 * (b - a);
    std::vector<double> out;
    for (double p : pts)
        if (out.empty() || p - out.back() > tol) out.push_back(p);
    out.front() = a;
    out.back() = b;
    return out;
}

// Exact for the quadratic pieces of K.
double piece_integral(KernelId k, double u, double v, double a, double b) {
    const double mid = 0.5 * (u + v);
    return (v - u) / 6.0 *
           (kernel_eval(k, u, a, b) + 4.0 * kernel_eval(k, mid, a, b) +
            kernel_eval(k, v, a, b));
}

template <class F>
double composite_simpson(double u, double v, int segments, F&& g) {
    if (!(v > u)) return 0.0;
    if (segments < 2) segments = 2;
    if (segments % 2 != 0) ++segments;
    const double h = (v - u) / segments;
    double s = g(u) + g(v);
    for (int i = 1; i < segments; ++i)
        s += g(u + h * i) * (i % 2 != 0 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

const char* kernel_name(KernelId k) {
    switch (k) {
        case KernelId::K1: return "K1";
        case KernelId::K2: return "K2";
        case KernelId::K3: return "K3";
    }
    return "?";
}

double p_eval(double x, double t, double a, double b) {
    require_interval(a, b);
    require_inside(x, a, b, "x");
    require_inside(t, a, b, "t");
    return t <= x ? t - a : t - b;
}

double q_eval(double x, double s, double a, double b) {
    require_interval(a, b);
    require_inside(x, a, b, "x");
    require_inside(s, a, b, "s");
    const double w = b - a;
    const double c = x - 0.5 * (a + b);
    const double d = s <= x ? s - a : s - b;
    return w * c * d - 0.5 * w * d * d;
}

double kernel_eval(KernelId k, double s, double a, double b) {
    require_interval(a, b);
    require_inside(s, a, b, "s");
    double acc = 0.0;
    for (const Term& t : kernel_terms(k, a, b))
        acc += t.coeff * q_eval(t.x, s, a, b);
    return acc;
}

std::vector<double> kernel_zeros(KernelId k, double a, double b) {
    require_interval(a, b);
    switch (k) {
        case KernelId::K1:
            return {a, (2.0 * a + b) / 3.0, (a + 2.0 * b) / 3.0, b};
        case KernelId::K2:
            return {a, (3.0 * a + b) / 4.0, 0.5 * (a + b), (a + 3.0 * b) / 4.0, b};
        case KernelId::K3:
            return {a,
                    (38.0 * a + 7.0 * b) / 45.0,
                    (2.0 * a + b) / 3.0,
                    (a + 2.0 * b) / 3.0,
                    (7.0 * a + 38.0 * b) / 45.0,
                    b};
    }
    return {};
}

double kernel_abs_integral(KernelId k, double a, double b) {
    const std::vector<double> bp = breakpoints(k, a, b);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        total += std::fabs(piece_integral(k, bp[i], bp[i + 1], a, b));
    return total;
}

double kernel_integral(KernelId k, double a, double b) {
    const std::vector<double> bp = breakpoints(k, a, b);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        total += piece_integral(k, bp[i], bp[i + 1], a, b);
    return total;
}

double kernel_abs_integral_oracle(KernelId k, double a, double b, long long n) {
    require_interval(a, b);
    if (n < 1000)
        throw std::invalid_argument("oracle needs at least 1000 points");
    const double h = (b - a) / static_cast<double>(n - 1);
    double sum = 0.5 * (std::fabs(kernel_eval(k, a, a, b)) +
                        std::fabs(kernel_eval(k, b, a, b)));
    for (long long i = 1; i + 1 < n; ++i) {
        const double s = std::min(a + h * static_cast<double>(i), b);
        sum += std::fabs(kernel_eval(k, s, a, b));
    }
    return sum * h;
}

Rational kernel_abs_integral_coefficient(KernelId k) {
    switch (k) {
        case KernelId::K1: return {1, 27};
        case KernelId::K2: return {1, 24};
        case KernelId::K3: return {2036, 6075};
    }
    return {0, 1};
}

double kernel_scale(KernelId k) {
    switch (k) {
        case KernelId::K1: return 3.0;
        case KernelId::K2: return 8.0;
        case KernelId::K3: return 90.0;
    }
    return 1.0;
}

ResidualPair representation_residual(const Expr& f, double x, double a,
                                     double b, double ref_integral,
                                     int resolution) {
    require_interval(a, b);
    require_inside(x, a, b, "x");
    if (resolution < 16) throw std::invalid_argument("resolution too small");

    const double fa = eval_real(f, a);
    const double fb = eval_real(f, b);
    const double fx = eval_real(f, x);
    const double lhs =
        fx * (b - a) - (x - 0.5 * (a + b)) * (fb - fa) - ref_integral;

    const auto f2 = [&f](double s) {
        return eval_jet(f, Interval::point(s)).d2.mid();
    };
    const auto segments = [&](double len) {
        return std::max(8, static_cast<int>(std::ceil(resolution * len / (b - a))));
    };
    // integral over s of p(t, s) f''(s); p switches branch at s = t
    const auto inner = [&](double t) {
        return composite_simpson(a, t, segments(t - a),
                                 [&](double s) { return (s - a) * f2(s); }) +
               composite_simpson(t, b, segments(b - t),
                                 [&](double s) { return (s - b) * f2(s); });
    };
    // outer integral over t of p(x, t) * inner(t); p switches at t = x
    const double outer =
        composite_simpson(a, x, segments(x - a),
                          [&](double t) { return (t - a) * inner(t); }) +
        composite_simpson(x, b, segments(b - x),
                          [&](double t) { return (t - b) * inner(t); });
    return {lhs, outer / (b - a)};
}

}  // namespace quadcert
