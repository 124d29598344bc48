#include "quadcert/rules.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quadcert/errors.hpp"
#include "quadcert/real_format.hpp"

namespace quadcert {
namespace {

void require_interval(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("rule domain requires a < b");
}

}  // namespace

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::Simpson: return "simpson";
        case RuleId::Simpson38: return "simpson38";
        case RuleId::Boole: return "boole";
    }
    return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
    if (name == "simpson") return RuleId::Simpson;
    if (name == "simpson38") return RuleId::Simpson38;
    if (name == "boole") return RuleId::Boole;
    return std::nullopt;
}

std::vector<double> rule_nodes(RuleId r, double a, double b) {
    const double m = 0.5 * (a + b);
    switch (r) {
        case RuleId::Simpson:
            return {a, m, b};
        case RuleId::Simpson38:
            return {a, (2.0 * a + b) / 3.0, (a + 2.0 * b) / 3.0, b};
        case RuleId::Boole:
            return {a, (3.0 * a + b) / 4.0, m, (a + 3.0 * b) / 4.0, b};
    }
    return {};
}

const std::vector<Rational>& rule_weights(RuleId r) {
    static const std::vector<Rational> simpson{{1, 6}, {4, 6}, {1, 6}};
    static const std::vector<Rational> simpson38{{1, 8}, {3, 8}, {3, 8}, {1, 8}};
    static const std::vector<Rational> boole{
        {7, 90}, {32, 90}, {12, 90}, {32, 90}, {7, 90}};
    switch (r) {
        case RuleId::Simpson: return simpson;
        case RuleId::Simpson38: return simpson38;
        case RuleId::Boole: return boole;
    }
    return simpson;
}

int rule_degree(RuleId r) {
    switch (r) {
        case RuleId::Simpson: return 3;
        case RuleId::Simpson38: return 3;
        case RuleId::Boole: return 5;
    }
    return 0;
}

KernelId rule_kernel(RuleId r) {
    switch (r) {
        case RuleId::Simpson: return KernelId::K1;
        case RuleId::Simpson38: return KernelId::K2;
        case RuleId::Boole: return KernelId::K3;
    }
    return KernelId::K1;
}

Rational peano_like_coefficient(RuleId r) {
    switch (r) {
        case RuleId::Simpson: return {1, 162};
        case RuleId::Simpson38: return {1, 384};
        case RuleId::Boole: return {509, 273375};
    }
    return {0, 1};
}

Rational peano_coefficient(RuleId r) {
    switch (r) {
        case RuleId::Simpson: return {1, 81};
        case RuleId::Simpson38: return {1, 192};
        case RuleId::Boole: return {1018, 273375};
    }
    return {0, 1};
}

double apply_rule(RuleId r, const std::function<double(double)>& f, double a,
                  double b) {
    require_interval(a, b);
    const std::vector<double> nodes = rule_nodes(r, a, b);
    const std::vector<Rational>& weights = rule_weights(r);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double fi = f(nodes[i]);
        if (!std::isfinite(fi))
            throw EvalError(std::string(rule_name(r)) +
                            ": integrand not finite at node " +
                            format_real(nodes[i]));
        acc += weights[i].to_double() * fi;
    }
    return acc * (b - a);
}

double peano_like_bound(RuleId r, double gamma, double Gamma, double a,
                        double b) {
    require_interval(a, b);
    if (!(gamma <= Gamma))
        throw std::invalid_argument("peano_like_bound requires gamma <= Gamma");
    const double w = b - a;
    return peano_like_coefficient(r).to_double() * (Gamma - gamma) * w * w * w;
}

double peano_bound(RuleId r, double sup_norm_f2, double a, double b) {
    require_interval(a, b);
    if (!(sup_norm_f2 >= 0.0))
        throw std::invalid_argument("peano_bound requires a non-negative norm");
    const double w = b - a;
    return peano_coefficient(r).to_double() * sup_norm_f2 * w * w * w;
}

BoundComparison compare_bounds(RuleId r, double gamma, double Gamma, double a,
                               double b) {
    require_interval(a, b);
    if (!(gamma <= Gamma))
        throw std::invalid_argument("compare_bounds requires gamma <= Gamma");
    const double sup = std::max(std::fabs(gamma), std::fabs(Gamma));
    const double like = peano_like_bound(r, gamma, Gamma, a, b);
    const double classic = peano_bound(r, sup, a, b);
    const double ratio = classic > 0.0 ? like / classic : 1.0;
    return {like, classic, ratio, gamma, Gamma, sup};
}

CertifiedResult certify_panel(const Expr& f, RuleId r, double a, double b,
                              int refine_depth) {
    require_interval(a, b);
    Interval enc = Interval::point(0.0);
    try {
        enc = second_derivative_enclosure(f, Interval(a, b), refine_depth);
    } catch (const DomainError& e) {
        throw CertificationError(std::string(rule_name(r)) +
                                 " rule cannot be certified on [" +
                                 format_real(a) + ", " + format_real(b) +
                                 "]: " + e.what());
    }
    const double estimate =
        apply_rule(r, [&f](double t) { return eval_real(f, t); }, a, b);
    const double bound = peano_like_bound(r, enc.lo, enc.hi, a, b);

    CertifiedResult out;
    out.estimate = estimate;
    out.bound = bound;
    out.panels = {{a, b, enc.lo, enc.hi, bound}};
    out.evals = static_cast<long long>(rule_nodes(r, a, b).size());
    return out;
}

}  // namespace quadcert
