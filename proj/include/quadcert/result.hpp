#pragma once

#include <vector>

namespace quadcert {

// One certified subinterval: the enclosure [gamma, Gamma] of f'' on it and
// the error bound C * (Gamma - gamma) * (b - a)^3 it yields.
struct PanelCertificate {
    double a;
    double b;
    double gamma;
    double Gamma;
    double bound;
};

// Integral estimate with a rigorous guarantee |estimate - integral| <= bound.
// panels tile the full interval left to right, consecutive endpoints shared
// bitwise; bound is the sum of the panel bounds; evals counts integrand
// point evaluations spent (rule nodes, not enclosure work).
struct CertifiedResult {
    double estimate = 0.0;
    double bound = 0.0;
    std::vector<PanelCertificate> panels;
    long long evals = 0;
};

}  // namespace quadcert
