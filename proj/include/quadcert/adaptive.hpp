#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "quadcert/expr.hpp"
#include "quadcert/result.hpp"
#include "quadcert/rules.hpp"

namespace quadcert {

struct IntegrateOptions {
    int refine_depth = 6;        // whole-interval enclosure subdivision depth
    int panel_refine_depth = 2;  // per-panel enclosures; panels are small
    long long max_panels = 100000;
};

// Thrown when adaptive refinement hits max_panels before reaching the
// tolerance. partial() is the certified state reached so far; its bound is
// valid, just larger than requested.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& message, CertifiedResult partial);
    const CertifiedResult& partial() const noexcept { return partial_; }

private:
    CertifiedResult partial_;
};

// Rule applied on each cell of a strictly increasing partition; sums
// compensated so composite totals do not drift.
double composite_apply(RuleId r, const std::function<double(double)>& f,
                       const std::vector<double>& partition);

// Smallest n >= 1 with C * (Gamma - gamma) * (b - a)^3 / n^2 <= eps: a
// uniform n-panel split certifies the integral to eps a priori.
long long uniform_panel_count(RuleId r, double gamma, double Gamma, double a,
                              double b, double eps);

// Sizes a uniform partition from the whole-interval enclosure, then
// re-encloses every panel (clipped to the global enclosure) and reports the
// tighter per-panel sum. The reported bound never exceeds eps.
CertifiedResult integrate_uniform(const Expr& f, RuleId r, double a, double b,
                                  double eps,
                                  const IntegrateOptions& opts = {});

// Worst-first bisection: repeatedly splits the panel with the largest bound
// until the total certified bound is at most eps. Ties break to the leftmost
// panel, midpoints are exact bisections, so panel lists are reproducible.
CertifiedResult integrate_adaptive(const Expr& f, RuleId r, double a, double b,
                                   double eps,
                                   const IntegrateOptions& opts = {});

}  // namespace quadcert
