#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "quadcert/interval.hpp"
#include "quadcert/jet.hpp"

namespace quadcert {

enum class UnaryOp { Neg, Sin, Cos, Exp, Log, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree in the single variable t. Pow nodes always have
// a Constant right child; the grammar enforces it.
struct Expr {
    enum class Kind { Constant, Variable, Unary, Binary };

    Kind kind = Kind::Constant;
    double constant = 0.0;        // Kind::Constant
    UnaryOp uop = UnaryOp::Neg;   // Kind::Unary
    BinaryOp bop = BinaryOp::Add; // Kind::Binary
    ExprPtr lhs;                  // Unary child / Binary left
    ExprPtr rhs;                  // Binary right

    static ExprPtr make_const(double v);
    static ExprPtr make_var();
    static ExprPtr make_unary(UnaryOp op, ExprPtr child);
    static ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right);
};

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' number)?
//   atom   := number | 't' | 'pi' | 'e' | ident '(' expr ')' | '(' expr ')'
// Whitespace is insignificant. '^' takes a numeric literal exponent only
// (an optional leading '-' is accepted there, e.g. "t^-2"). abs/floor/min/max
// are rejected: integrands must be twice differentiable.
// Throws SyntaxError carrying a 0-based character offset.
ExprPtr parse(std::string_view src);

// Plain IEEE double evaluation; throws EvalError outside the natural domain.
double eval_real(const Expr& e, double t);

// Enclosure evaluation; DomainErrors identify the offending subexpression.
Jet2 eval_jet(const Expr& e, const Interval& x);

// Enclosure [gamma, Gamma] of f'' over x: splits x into 2^refine_depth equal
// pieces, evaluates the jet on each and hulls the d2 components. Deeper
// refinement tightens the result.
Interval second_derivative_enclosure(const Expr& e, const Interval& x,
                                     int refine_depth);

std::string to_infix(const Expr& e);  // reparses to an equal tree
std::string to_sexpr(const Expr& e);  // e.g. "(+ (^ t 2) 1)"
bool equal(const Expr& x, const Expr& y);

}  // namespace quadcert
