#include "quadcert/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <utility>

#include "quadcert/errors.hpp"
#include "quadcert/real_format.hpp"

namespace quadcert {
namespace {

// Neumaier compensated accumulation: composite sums must not drown the
// certified bounds in their own rounding.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void require_args(double a, double b, double eps) {
    if (!(a < b)) throw std::invalid_argument("integrate requires a < b");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
}

// The true range of f'' over a subinterval lies in both enclosures, so the
// intersection is still valid and never looser than the global one.
Interval clip(const Interval& inner, const Interval& outer) {
    const double lo = std::max(inner.lo, outer.lo);
    const double hi = std::min(inner.hi, outer.hi);
    if (lo > hi) return inner;
    return Interval(lo, hi);
}

Interval panel_enclosure(const Expr& f, RuleId r, double lo, double hi,
                         int depth) {
    try {
        return second_derivative_enclosure(f, Interval(lo, hi), depth);
    } catch (const DomainError& e) {
        throw CertificationError(std::string(rule_name(r)) +
                                 " rule cannot be certified on [" +
                                 format_real(lo) + ", " + format_real(hi) +
                                 "]: " + e.what());
    }
}

}  // namespace

BudgetExhausted::BudgetExhausted(const std::string& message,
                                 CertifiedResult partial)
    : std::runtime_error(message), partial_(std::move(partial)) {}

double composite_apply(RuleId r, const std::function<double(double)>& f,
                       const std::vector<double>& partition) {
    if (partition.size() < 2)
        throw std::invalid_argument("partition needs at least two points");
    for (std::size_t i = 0; i + 1 < partition.size(); ++i)
        if (!(partition[i] < partition[i + 1]))
            throw std::invalid_argument("partition must be strictly increasing");
    CompensatedSum acc;
    for (std::size_t i = 0; i + 1 < partition.size(); ++i)
        acc.add(apply_rule(r, f, partition[i], partition[i + 1]));
    return acc.value();
}

long long uniform_panel_count(RuleId r, double gamma, double Gamma, double a,
                              double b, double eps) {
    require_args(a, b, eps);
    const double total = peano_like_bound(r, gamma, Gamma, a, b);
    if (total <= eps) return 1;
    const double root = std::sqrt(total / eps);
    if (!(root < 9.0e15))
        throw std::invalid_argument(
            "tolerance unreachable: uniform panel count overflows");
    long long n = std::max<long long>(1, static_cast<long long>(std::ceil(root)));
    const auto bound_at = [&](long long m) {
        return total / (static_cast<double>(m) * static_cast<double>(m));
    };
    while (bound_at(n) > eps) ++n;
    while (n > 1 && bound_at(n - 1) <= eps) --n;
    return n;
}

CertifiedResult integrate_uniform(const Expr& f, RuleId r, double a, double b,
                                  double eps, const IntegrateOptions& opts) {
    require_args(a, b, eps);
    const Interval global = panel_enclosure(f, r, a, b, opts.refine_depth);
    const long long n = uniform_panel_count(r, global.lo, global.hi, a, b, eps);

    const std::function<double(double)> point_eval = [&f](double t) {
        return eval_real(f, t);
    };
    const long long node_count =
        static_cast<long long>(rule_nodes(r, a, b).size());
    const double w = b - a;

    CertifiedResult out;
    out.panels.reserve(static_cast<std::size_t>(n));
    CompensatedSum estimate;
    CompensatedSum bound;
    double left = a;
    for (long long i = 0; i < n; ++i) {
        const double right =
            (i + 1 == n)
                ? b
                : std::min(a + (w * static_cast<double>(i + 1)) / static_cast<double>(n), b);
        if (!(right > left))
            throw std::invalid_argument("tolerance too small: panels degenerate");
        const Interval local =
            clip(panel_enclosure(f, r, left, right, opts.panel_refine_depth),
                 global);
        const double pb = peano_like_bound(r, local.lo, local.hi, left, right);
        estimate.add(apply_rule(r, point_eval, left, right));
        bound.add(pb);
        out.panels.push_back({left, right, local.lo, local.hi, pb});
        out.evals += node_count;
        left = right;
    }
    out.estimate = estimate.value();
    out.bound = bound.value();
    return out;
}

CertifiedResult integrate_adaptive(const Expr& f, RuleId r, double a, double b,
                                   double eps, const IntegrateOptions& opts) {
    require_args(a, b, eps);
    if (opts.max_panels < 1)
        throw std::invalid_argument("max_panels must be at least 1");

    struct WorkPanel {
        double lo, hi;
        double gamma, Gamma;
        double bound;
        double estimate;
    };

    const std::function<double(double)> point_eval = [&f](double t) {
        return eval_real(f, t);
    };
    const long long node_count =
        static_cast<long long>(rule_nodes(r, a, b).size());
    long long evals = 0;

    std::vector<WorkPanel> store;
    const auto make = [&](double lo, double hi) {
        const Interval enc =
            panel_enclosure(f, r, lo, hi, opts.panel_refine_depth);
        const double pb = peano_like_bound(r, enc.lo, enc.hi, lo, hi);
        const double pe = apply_rule(r, point_eval, lo, hi);
        evals += node_count;
        return WorkPanel{lo, hi, enc.lo, enc.hi, pb, pe};
    };

    const auto assemble = [&]() {
        std::vector<WorkPanel> sorted = store;
        std::sort(sorted.begin(), sorted.end(),
                  [](const WorkPanel& p, const WorkPanel& q) { return p.lo < q.lo; });
        CertifiedResult out;
        out.panels.reserve(sorted.size());
        CompensatedSum estimate;
        CompensatedSum bound;
        for (const WorkPanel& p : sorted) {
            estimate.add(p.estimate);
            bound.add(p.bound);
            out.panels.push_back({p.lo, p.hi, p.gamma, p.Gamma, p.bound});
        }
        out.estimate = estimate.value();
        out.bound = bound.value();
        out.evals = evals;
        return out;
    };

    struct QueueEntry {
        double bound;
        double lo;
        std::size_t index;
    };
    // top = largest bound, ties to the leftmost panel
    const auto before = [](const QueueEntry& p, const QueueEntry& q) {
        if (p.bound != q.bound) return p.bound < q.bound;
        return p.lo > q.lo;
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(before)>
        queue(before);

    store.push_back(make(a, b));
    queue.push({store[0].bound, store[0].lo, 0});
    double approx_total = store[0].bound;

    for (;;) {
        if (approx_total <= eps) {
            // the running total carries incremental rounding; trust only the
            // sum that would actually be reported
            CertifiedResult done = assemble();
            if (done.bound <= eps) return done;
            approx_total = done.bound;
        }
        if (static_cast<long long>(store.size()) >= opts.max_panels) {
            CertifiedResult partial = assemble();
            throw BudgetExhausted(
                "panel budget exhausted at " + std::to_string(store.size()) +
                    " panels: bound " + format_real(partial.bound) +
                    " > eps " + format_real(eps),
                std::move(partial));
        }
        const QueueEntry top = queue.top();
        queue.pop();
        const WorkPanel parent = store[top.index];
        const double mid = 0.5 * (parent.lo + parent.hi);
        if (!(parent.lo < mid && mid < parent.hi)) {
            CertifiedResult partial = assemble();
            throw BudgetExhausted(
                "panel [" + format_real(parent.lo) + ", " +
                    format_real(parent.hi) +
                    "] is too narrow to split further; bound " +
                    format_real(partial.bound) + " > eps " + format_real(eps),
                std::move(partial));
        }
        const WorkPanel left = make(parent.lo, mid);
        const WorkPanel right = make(mid, parent.hi);
        approx_total += left.bound + right.bound - parent.bound;
        store[top.index] = left;
        queue.push({left.bound, left.lo, top.index});
        store.push_back(right);
        queue.push({right.bound, right.lo, store.size() - 1});
    }
}

}  // namespace quadcert
