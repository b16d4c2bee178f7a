#pragma once

#include "bjcalc/errors.hpp"
#include "bjcalc/poly.hpp"
#include "bjcalc/quantizer.hpp"
#include "bjcalc/weyl_algebra.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace bjcalc {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := uint ['/' uint] | 'i' | 'hbar' | var | '(' expr ')' | '-' atom
//   var    := ('x' | 'p') [uint]
// Bare x and p are accepted only in dimension one. No implicit multiplication.

struct SymbolExpr;
using SymbolExprPtr = std::unique_ptr<SymbolExpr>;

struct SymbolExpr {
  struct Literal {
    Rational value;
  };
  struct ImaginaryUnit {};
  struct Hbar {};
  struct Variable {
    VarKind kind;
    unsigned index;  // one-based; 0 for a bare x or p
  };
  struct Negate {
    SymbolExprPtr operand;
  };
  struct Binary {
    char op;  // '+', '-', '*'
    SymbolExprPtr lhs;
    SymbolExprPtr rhs;
  };
  struct Power {
    SymbolExprPtr base;
    unsigned exponent;
  };

  std::variant<Literal, ImaginaryUnit, Hbar, Variable, Negate, Binary, Power> node;
  std::size_t position = 0;

  SymbolExpr() = default;
  SymbolExpr(SymbolExpr&&) = default;
  SymbolExpr& operator=(SymbolExpr&&) = default;
  ~SymbolExpr();  // iterative, long operator chains would overflow the stack
};

inline constexpr std::size_t kMaxExpressionDepth = 256;

/// Syntax tree of `text`; throws ParseError with a byte offset on failure.
SymbolExprPtr parse_expression(std::string_view text);

/// Expands a syntax tree to a canonical polynomial in dimension n.
SymbolPoly expand(const SymbolExpr& expr, unsigned n);

SymbolPoly parse_symbol(std::string_view text, unsigned n = 1);

/// Canonical text: graded-lex term order, one printed term per (monomial,
/// hbar power), coefficient first, then hbar, then variables.
std::string format_symbol(const SymbolPoly& a);
std::string format_amplitude(const AmplitudePoly& a);
std::string format_op(const OpPoly& a);
std::string format_tau_symbol(const TauSymbolPoly& a);
std::string format_tau_op(const TauOpPoly& a);
std::string format_scalar(const ExactScalar& c);

}  // namespace bjcalc
