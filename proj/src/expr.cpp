#include "quadcert/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "quadcert/errors.hpp"
#include "quadcert/real_format.hpp"

namespace quadcert {

ExprPtr Expr::make_const(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Constant;
    e->constant = v;
    return e;
}

ExprPtr Expr::make_var() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Variable;
    return e;
}

ExprPtr Expr::make_unary(UnaryOp op, ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Unary;
    e->uop = op;
    e->lhs = std::move(child);
    return e;
}

ExprPtr Expr::make_binary(BinaryOp op, ExprPtr left, ExprPtr right) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Binary;
    e->bop = op;
    e->lhs = std::move(left);
    e->rhs = std::move(right);
    return e;
}

namespace {

struct FunctionEntry {
    const char* name;
    UnaryOp op;
};

constexpr FunctionEntry kFunctions[] = {
    {"sin", UnaryOp::Sin}, {"cos", UnaryOp::Cos}, {"exp", UnaryOp::Exp},
    {"log", UnaryOp::Log}, {"sqrt", UnaryOp::Sqrt},
};

// Not twice differentiable; rejected with a dedicated message.
constexpr const char* kNonSmooth[] = {"abs", "floor", "min", "max"};

const char* unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "neg";
        case UnaryOp::Sin: return "sin";
        case UnaryOp::Cos: return "cos";
        case UnaryOp::Exp: return "exp";
        case UnaryOp::Log: return "log";
        case UnaryOp::Sqrt: return "sqrt";
    }
    return "?";
}

const char* binary_name(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Pow: return "^";
    }
    return "?";
}

bool is_integral_exponent(double k) {
    return k == std::floor(k) && std::fabs(k) <= 9.0e15;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("empty expression", 0);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < src_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_alpha(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (eat('+')) e = Expr::make_binary(BinaryOp::Add, e, parse_term());
            else if (eat('-')) e = Expr::make_binary(BinaryOp::Sub, e, parse_term());
            else return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (eat('*')) e = Expr::make_binary(BinaryOp::Mul, e, parse_factor());
            else if (eat('/')) e = Expr::make_binary(BinaryOp::Div, e, parse_factor());
            else return e;
        }
    }

    ExprPtr parse_factor() {
        if (eat('-')) return Expr::make_unary(UnaryOp::Neg, parse_factor());
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            skip_ws();
            bool negated = false;
            if (pos_ < src_.size() && src_[pos_] == '-') {
                negated = true;
                ++pos_;
            }
            if (pos_ >= src_.size() ||
                !(is_digit(src_[pos_]) || src_[pos_] == '.'))
                throw SyntaxError("exponent must be a numeric literal", pos_);
            double k = scan_number();
            return Expr::make_binary(BinaryOp::Pow, base,
                                     Expr::make_const(negated ? -k : k));
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size())
            throw SyntaxError("expected a number, 't', or '('", pos_);
        const char c = src_[pos_];
        if (is_digit(c) || c == '.') return Expr::make_const(scan_number());
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (is_alpha(c)) return parse_ident();
        throw SyntaxError("expected a number, 't', or '('", pos_);
    }

    ExprPtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (is_alpha(src_[pos_]) || is_digit(src_[pos_])))
            ++pos_;
        const std::string name(src_.substr(start, pos_ - start));
        if (name == "t") return Expr::make_var();
        if (name == "pi") return Expr::make_const(std::numbers::pi);
        if (name == "e") return Expr::make_const(std::numbers::e);
        for (const auto& fn : kFunctions) {
            if (name == fn.name) {
                if (!eat('('))
                    throw SyntaxError("expected '(' after function '" + name + "'",
                                      pos_);
                ExprPtr arg = parse_expr();
                if (!eat(')')) throw SyntaxError("expected ')'", pos_);
                return Expr::make_unary(fn.op, arg);
            }
        }
        for (const char* rejected : kNonSmooth) {
            if (name == rejected)
                throw SyntaxError("function '" + name +
                                      "' is not supported: integrands must be "
                                      "twice differentiable",
                                  start);
        }
        throw SyntaxError("unknown identifier '" + name + "'", start);
    }

    double scan_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && src_[start] == '.'))
            throw SyntaxError("malformed number", start);
        // exponent part only when digits follow, so "2*e" keeps its 'e'
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t j = pos_ + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
            if (j < src_.size() && is_digit(src_[j])) {
                pos_ = j;
                while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            }
        }
        double value = 0.0;
        const auto result =
            std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (result.ec != std::errc() || result.ptr != src_.data() + pos_)
            throw SyntaxError("malformed number", start);
        return value;
    }
};

double checked(double v, const char* what) {
    if (!std::isfinite(v))
        throw EvalError(std::string(what) + ": evaluation overflowed");
    return v;
}

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant: return e.constant < 0.0 ? 3 : 5;
        case Expr::Kind::Variable: return 5;
        case Expr::Kind::Unary: return e.uop == UnaryOp::Neg ? 3 : 5;
        case Expr::Kind::Binary:
            switch (e.bop) {
                case BinaryOp::Add:
                case BinaryOp::Sub: return 1;
                case BinaryOp::Mul:
                case BinaryOp::Div: return 2;
                case BinaryOp::Pow: return 4;
            }
    }
    return 5;
}

void infix(const Expr& e, std::string& out);

void infix_child(const Expr& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        infix(child, out);
        out += ')';
    } else {
        infix(child, out);
    }
}

void infix(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            out += format_real(e.constant);
            return;
        case Expr::Kind::Variable:
            out += 't';
            return;
        case Expr::Kind::Unary:
            if (e.uop == UnaryOp::Neg) {
                out += '-';
                infix_child(*e.lhs, 3, out);
            } else {
                out += unary_name(e.uop);
                out += '(';
                infix(*e.lhs, out);
                out += ')';
            }
            return;
        case Expr::Kind::Binary: {
            if (e.bop == BinaryOp::Pow) {
                infix_child(*e.lhs, 5, out);
                out += '^';
                out += format_real(e.rhs->constant);
                return;
            }
            const int prec = precedence(e);
            infix_child(*e.lhs, prec, out);
            out += binary_name(e.bop);
            // right operand of -,/ (and of + and * for shape stability)
            // needs parentheses at equal precedence
            infix_child(*e.rhs, prec + 1, out);
            return;
        }
    }
}

}  // namespace

ExprPtr parse(std::string_view src) { return Parser(src).run(); }

double eval_real(const Expr& e, double t) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return e.constant;
        case Expr::Kind::Variable:
            return t;
        case Expr::Kind::Unary: {
            const double v = eval_real(*e.lhs, t);
            switch (e.uop) {
                case UnaryOp::Neg: return -v;
                case UnaryOp::Sin: return std::sin(v);
                case UnaryOp::Cos: return std::cos(v);
                case UnaryOp::Exp: return checked(std::exp(v), "exp");
                case UnaryOp::Log:
                    if (!(v > 0.0)) throw EvalError("log of a non-positive value");
                    return std::log(v);
                case UnaryOp::Sqrt:
                    if (v < 0.0) throw EvalError("sqrt of a negative value");
                    return std::sqrt(v);
            }
            return 0.0;
        }
        case Expr::Kind::Binary: {
            const double l = eval_real(*e.lhs, t);
            if (e.bop == BinaryOp::Pow) {
                const double k = e.rhs->constant;
                if (k == 0.0) return 1.0;
                if (is_integral_exponent(k)) {
                    if (l == 0.0 && k < 0.0)
                        throw EvalError("zero base with a negative exponent");
                    return checked(std::pow(l, k), "pow");
                }
                if (l < 0.0)
                    throw EvalError("negative base with a non-integer exponent");
                if (l == 0.0 && k < 0.0)
                    throw EvalError("zero base with a negative exponent");
                return checked(std::pow(l, k), "pow");
            }
            const double r = eval_real(*e.rhs, t);
            switch (e.bop) {
                case BinaryOp::Add: return checked(l + r, "add");
                case BinaryOp::Sub: return checked(l - r, "sub");
                case BinaryOp::Mul: return checked(l * r, "mul");
                case BinaryOp::Div:
                    if (r == 0.0) throw EvalError("division by zero");
                    return checked(l / r, "div");
                case BinaryOp::Pow: break;  // handled above
            }
            return 0.0;
        }
    }
    return 0.0;
}

Jet2 eval_jet(const Expr& e, const Interval& x) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return jet_const(e.constant);
        case Expr::Kind::Variable:
            return jet_var(x);
        case Expr::Kind::Unary: {
            Jet2 c = eval_jet(*e.lhs, x);
            try {
                switch (e.uop) {
                    case UnaryOp::Neg: return -c;
                    case UnaryOp::Sin: return sin(c);
                    case UnaryOp::Cos: return cos(c);
                    case UnaryOp::Exp: return exp(c);
                    case UnaryOp::Log: return log(c);
                    case UnaryOp::Sqrt: return sqrt(c);
                }
            } catch (const DomainError& err) {
                throw DomainError(std::string(err.what()) + " in '" + to_infix(e) + "'");
            }
            return jet_const(0.0);
        }
        case Expr::Kind::Binary: {
            Jet2 l = eval_jet(*e.lhs, x);
            if (e.bop == BinaryOp::Pow) {
                const double k = e.rhs->constant;
                try {
                    if (is_integral_exponent(k))
                        return pow_int(l, static_cast<long long>(k));
                    return pow_real(l, k);
                } catch (const DomainError& err) {
                    throw DomainError(std::string(err.what()) + " in '" +
                                      to_infix(e) + "'");
                }
            }
            Jet2 r = eval_jet(*e.rhs, x);
            try {
                switch (e.bop) {
                    case BinaryOp::Add: return l + r;
                    case BinaryOp::Sub: return l - r;
                    case BinaryOp::Mul: return l * r;
                    case BinaryOp::Div: return l / r;
                    case BinaryOp::Pow: break;  // handled above
                }
            } catch (const DomainError& err) {
                throw DomainError(std::string(err.what()) + " in '" + to_infix(e) + "'");
            }
            return jet_const(0.0);
        }
    }
    return jet_const(0.0);
}

Interval second_derivative_enclosure(const Expr& e, const Interval& x,
                                     int refine_depth) {
    if (refine_depth < 0 || refine_depth > 24)
        throw std::invalid_argument("refine_depth must be in [0, 24]");
    if (x.width() == 0.0) return eval_jet(e, x).d2;
    const long long n = 1ll << refine_depth;
    const double w = x.width();
    Interval acc = Interval::point(0.0);
    for (long long i = 0; i < n; ++i) {
        const double lo = std::min(x.lo + (w * static_cast<double>(i)) / static_cast<double>(n), x.hi);
        const double hi = (i + 1 == n)
                              ? x.hi
                              : std::min(x.lo + (w * static_cast<double>(i + 1)) / static_cast<double>(n), x.hi);
        const Jet2 jet = eval_jet(e, Interval(lo, hi));
        acc = (i == 0) ? jet.d2 : hull(acc, jet.d2);
    }
    return acc;
}

std::string to_infix(const Expr& e) {
    std::string out;
    infix(e, out);
    return out;
}

std::string to_sexpr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return format_real(e.constant);
        case Expr::Kind::Variable:
            return "t";
        case Expr::Kind::Unary:
            return "(" + std::string(unary_name(e.uop)) + " " + to_sexpr(*e.lhs) + ")";
        case Expr::Kind::Binary:
            return "(" + std::string(binary_name(e.bop)) + " " + to_sexpr(*e.lhs) +
                   " " + to_sexpr(*e.rhs) + ")";
    }
    return "?";
}

bool equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::Constant: return x.constant == y.constant;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Unary: return x.uop == y.uop && equal(*x.lhs, *y.lhs);
        case Expr::Kind::Binary:
            return x.bop == y.bop && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
    }
    return false;
}

}  // namespace quadcert
