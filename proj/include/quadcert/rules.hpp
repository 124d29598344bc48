#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "quadcert/expr.hpp"
#include "quadcert/kernels.hpp"
#include "quadcert/rational.hpp"
#include "quadcert/result.hpp"

namespace quadcert {

enum class RuleId { Simpson, Simpson38, Boole };

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);  // "simpson" | "simpson38" | "boole"

std::vector<double> rule_nodes(RuleId r, double a, double b);
const std::vector<Rational>& rule_weights(RuleId r);  // sum to 1
int rule_degree(RuleId r);                            // polynomial exactness degree
KernelId rule_kernel(RuleId r);

// Coefficient C of the two-sided bound C * (Gamma - gamma) * (b - a)^3:
// 1/162 (Simpson), 1/384 (3/8), 509/273375 (Boole).
Rational peano_like_coefficient(RuleId r);
// Coefficient of the classical sup-norm bound ||f''||_inf * (b - a)^3;
// equals twice the coefficient above.
Rational peano_coefficient(RuleId r);

// Sum of weight_i * (b - a) * f(node_i).
double apply_rule(RuleId r, const std::function<double(double)>& f, double a,
                  double b);

// Two-sided bound from gamma <= f'' <= Gamma on [a, b].
double peano_like_bound(RuleId r, double gamma, double Gamma, double a, double b);

// Classical bound from ||f''||_inf.
double peano_bound(RuleId r, double sup_norm_f2, double a, double b);

// The two bounds side by side, with gamma, Gamma read as inf/sup of f''.
// peano_like <= peano_classic always; equal exactly when Gamma = -gamma.
struct BoundComparison {
    double peano_like;
    double peano_classic;
    double ratio;  // peano_like / peano_classic; 1 when both vanish
    double gamma;
    double Gamma;
    double sup_norm;
};
BoundComparison compare_bounds(RuleId r, double gamma, double Gamma, double a,
                               double b);

// Single-interval certificate: rule estimate plus the bound derived from an
// automatic enclosure of f''. Throws CertificationError when the enclosure
// cannot be computed on [a, b].
CertifiedResult certify_panel(const Expr& f, RuleId r, double a, double b,
                              int refine_depth = 6);

}  // namespace quadcert
