#include "bjcalc/symlang.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <vector>

namespace bjcalc {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymbolExprPtr parse() {
    skip_space();
    if (at_end()) fail(ParseError::Kind::syntax, "empty expression");
    SymbolExprPtr e = expr(0);
    skip_space();
    if (!at_end()) {
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      const bool token_start =
          std::isalnum(c) || std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos;
      fail(token_start ? ParseError::Kind::syntax : ParseError::Kind::lexical,
           std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(ParseError::Kind kind, const std::string& message) { fail_at(kind, pos_, message); }
  [[noreturn]] void fail_at(ParseError::Kind kind, std::size_t at, const std::string& message) {
    throw ParseError(kind, at, "at position " + std::to_string(at) + ": " + message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  static SymbolExprPtr make(std::size_t at, decltype(SymbolExpr::node) node) {
    auto e = std::make_unique<SymbolExpr>();
    e->node = std::move(node);
    e->position = at;
    return e;
  }

  void enter(std::size_t depth) {
    if (depth > kMaxExpressionDepth)
      fail(ParseError::Kind::syntax, "expression nested deeper than " + std::to_string(kMaxExpressionDepth));
  }

  SymbolExprPtr expr(std::size_t depth) {
    enter(depth);
    skip_space();
    const std::size_t start = pos_;
    SymbolExprPtr lhs = term(depth);
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      SymbolExprPtr rhs = term(depth);
      lhs = make(start, SymbolExpr::Binary{c, std::move(lhs), std::move(rhs)});
    }
  }

  SymbolExprPtr term(std::size_t depth) {
    enter(depth);
    skip_space();
    const std::size_t start = pos_;
    SymbolExprPtr lhs = factor(depth);
    while (true) {
      skip_space();
      if (peek() != '*') return lhs;
      ++pos_;
      SymbolExprPtr rhs = factor(depth);
      lhs = make(start, SymbolExpr::Binary{'*', std::move(lhs), std::move(rhs)});
    }
  }

  SymbolExprPtr factor(std::size_t depth) {
    enter(depth);
    skip_space();
    const std::size_t start = pos_;
    SymbolExprPtr base = atom(depth);
    skip_space();
    if (peek() != '^') return base;
    const std::size_t caret = pos_;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      if (at_end()) fail(ParseError::Kind::syntax, "expected a non-negative integer exponent after '^'");
      fail_at(ParseError::Kind::syntax, caret,
              std::string("expected a non-negative integer exponent, found '^") + peek() + "'");
    }
    const std::size_t digits_at = pos_;
    const BigInt value = digits();
    if (value > kMaxTotalDegree)
      fail_at(ParseError::Kind::exponent, digits_at,
              "exponent exceeds the maximum degree " + std::to_string(kMaxTotalDegree));
    return make(start, SymbolExpr::Power{std::move(base), value.convert_to<unsigned>()});
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 4096) fail_at(ParseError::Kind::lexical, start, "integer literal too long");
    return parse_decimal(text_.substr(start, pos_ - start));
  }

  SymbolExprPtr atom(std::size_t depth) {
    enter(depth);
    skip_space();
    const std::size_t start = pos_;
    if (at_end()) fail(ParseError::Kind::syntax, "unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = digits();
      BigInt den = 1;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail(ParseError::Kind::syntax, "expected a denominator after '/'");
        const std::size_t den_at = pos_;
        den = digits();
        if (den == 0) fail_at(ParseError::Kind::syntax, den_at, "zero denominator");
      }
      return make(start, SymbolExpr::Literal{Rational(num, den)});
    }
    if (c == '(') {
      ++pos_;
      SymbolExprPtr inner = expr(depth + 1);
      skip_space();
      if (peek() != ')') {
        if (at_end()) fail(ParseError::Kind::syntax, "missing ')'");
        fail(ParseError::Kind::syntax, std::string("expected ')', found '") + peek() + "'");
      }
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return make(start, SymbolExpr::Negate{atom(depth + 1)});
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (static_cast<unsigned char>(c) >= 0x80 || !std::isprint(static_cast<unsigned char>(c)))
      fail(ParseError::Kind::lexical, "invalid byte in input");
    if (std::string_view("+*^/)").find(c) != std::string_view::npos)
      fail(ParseError::Kind::syntax, std::string("unexpected '") + c + "'");
    fail(ParseError::Kind::lexical, std::string("unexpected character '") + c + "'");
  }

  SymbolExprPtr identifier() {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    const bool has_digits = std::isdigit(static_cast<unsigned char>(peek()));
    if (word == "x" || word == "p") {
      const VarKind kind = word == "x" ? VarKind::x : VarKind::p;
      unsigned index = 0;
      if (has_digits) {
        const std::size_t digits_at = pos_;
        const BigInt value = digits();
        if (value == 0 || value > 4096)
          fail_at(ParseError::Kind::dimension, digits_at, "variable index out of range");
        index = value.convert_to<unsigned>();
      }
      return make(start, SymbolExpr::Variable{kind, index});
    }
    if (has_digits) fail_at(ParseError::Kind::lexical, start, "unknown identifier '" + std::string(word) + "<digits>'");
    if (word == "i") return make(start, SymbolExpr::ImaginaryUnit{});
    if (word == "hbar") return make(start, SymbolExpr::Hbar{});
    fail_at(ParseError::Kind::lexical, start, "unknown identifier '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Expander {
 public:
  explicit Expander(unsigned n) : n_(n) {}

  SymbolPoly operator()(const SymbolExpr& e) const {
    return std::visit([&](const auto& node) { return visit(node, e.position); }, e.node);
  }

 private:
  SymbolPoly visit(const SymbolExpr::Literal& l, std::size_t) const {
    return SymbolPoly::constant(n_, ExactScalar(l.value));
  }
  SymbolPoly visit(const SymbolExpr::ImaginaryUnit&, std::size_t) const {
    return SymbolPoly::constant(n_, ExactScalar::i());
  }
  SymbolPoly visit(const SymbolExpr::Hbar&, std::size_t) const {
    return SymbolPoly::constant(n_, ExactScalar::hbar());
  }
  SymbolPoly visit(const SymbolExpr::Variable& v, std::size_t at) const {
    if (v.index == 0 && n_ != 1)
      throw ParseError(ParseError::Kind::dimension, at,
                       "at position " + std::to_string(at) + ": bare variable requires dimension 1, use x1..x" +
                           std::to_string(n_));
    const unsigned j = v.index == 0 ? 0 : v.index - 1;
    if (j >= n_)
      throw ParseError(ParseError::Kind::dimension, at,
                       "at position " + std::to_string(at) + ": variable index " + std::to_string(v.index) +
                           " exceeds dimension " + std::to_string(n_));
    return SymbolPoly::variable(n_, Var{v.kind, j});
  }
  SymbolPoly visit(const SymbolExpr::Negate& neg, std::size_t) const { return -(*this)(*neg.operand); }
  // Operator chains are left-leaning, so walk the spine instead of recursing.
  SymbolPoly visit(const SymbolExpr::Binary& b, std::size_t) const {
    const bool additive = b.op != '*';
    const SymbolExpr* head = nullptr;
    const SymbolExpr::Binary* cur = &b;
    std::vector<const SymbolExpr::Binary*> ops;
    while (true) {
      ops.push_back(cur);
      const SymbolExpr& left = *cur->lhs;
      const auto* next = std::get_if<SymbolExpr::Binary>(&left.node);
      if (!next || (next->op != '*') != additive) {
        head = &left;
        break;
      }
      cur = next;
    }
    SymbolPoly acc = (*this)(*head);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const SymbolExpr::Binary& op = **it;
      SymbolPoly rhs = (*this)(*op.rhs);
      if (op.op == '+')
        acc = acc + rhs;
      else if (op.op == '-')
        acc = acc - rhs;
      else
        acc = guarded(op.rhs->position, [&] { return acc * rhs; });
    }
    return acc;
  }
  SymbolPoly visit(const SymbolExpr::Power& pw, std::size_t at) const {
    const SymbolPoly base = (*this)(*pw.base);
    if (!base.is_zero() && base.total_degree() * pw.exponent > kMaxTotalDegree)
      throw ParseError(ParseError::Kind::exponent, at,
                       "at position " + std::to_string(at) + ": power exceeds the maximum degree " +
                           std::to_string(kMaxTotalDegree));
    return guarded(at, [&] { return base.pow(pw.exponent); });
  }

  template <class F>
  static SymbolPoly guarded(std::size_t at, const F& f) {
    try {
      return f();
    } catch (const ResourceError& e) {
      throw ParseError(ParseError::Kind::exponent, at, "at position " + std::to_string(at) + ": " + e.what());
    }
  }

  unsigned n_;
};

// ---- formatting ----

struct Entry {
  Exponents exponents;
  unsigned tau_power;
  unsigned hbar_power;
  GaussianRational value;
};

std::string rational_factor(const Rational& magnitude) {
  const std::string s = to_string(magnitude);
  return boost::multiprecision::denominator(magnitude) == 1 ? s : "(" + s + ")";
}

std::string imaginary_text(const Rational& magnitude) {
  return magnitude == 1 ? "i" : to_string(magnitude) + "*i";
}

/// Splits a coefficient into its sign and an unsigned printed factor; `unit`
/// means the factor is 1 and may be elided next to other factors.
struct CoefficientText {
  bool negative = false;
  bool unit = false;
  std::string text;
};

CoefficientText coefficient_text(const GaussianRational& g) {
  CoefficientText out;
  if (g.im == 0) {
    out.negative = g.re < 0;
    const Rational m = out.negative ? Rational(-g.re) : g.re;
    out.unit = m == 1;
    out.text = rational_factor(m);
  } else if (g.re == 0) {
    out.negative = g.im < 0;
    const Rational m = out.negative ? Rational(-g.im) : g.im;
    out.text = m == 1 ? "i" : rational_factor(m) + "*i";
  } else {
    out.negative = g.re < 0;
    const GaussianRational h = out.negative ? -g : g;
    out.text = "(" + to_string(h.re) + (h.im < 0 ? "-" : "+") + imaginary_text(h.im < 0 ? Rational(-h.im) : h.im) + ")";
  }
  return out;
}

std::string power_text(const std::string& name, unsigned power) {
  return power == 1 ? name : name + "^" + std::to_string(power);
}

std::string format_entries(std::vector<Entry> entries, const std::vector<std::string>& names) {
  if (entries.empty()) return "0";
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.exponents != b.exponents) return GradedLexGreater{}(a.exponents, b.exponents);
    return std::tie(a.tau_power, a.hbar_power) < std::tie(b.tau_power, b.hbar_power);
  });
  std::string out;
  bool first = true;
  for (const Entry& entry : entries) {
    const CoefficientText coeff = coefficient_text(entry.value);
    std::vector<std::string> factors;
    if (entry.hbar_power) factors.push_back(power_text("hbar", entry.hbar_power));
    if (entry.tau_power) factors.push_back(power_text("tau", entry.tau_power));
    for (std::size_t k = 0; k < entry.exponents.size(); ++k)
      if (entry.exponents[k]) factors.push_back(power_text(names[k], entry.exponents[k]));
    // A leading "-" binds tighter than "^", so "-x^2" would read as (-x)^2.
    const bool keep_unit = !coeff.unit || factors.empty() ||
                           (first && coeff.negative && factors.front().find('^') != std::string::npos);
    if (keep_unit) factors.insert(factors.begin(), coeff.text);
    std::string body;
    for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
    if (first)
      out += (coeff.negative ? "-" : "") + body;
    else
      out += (coeff.negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::vector<std::string> variable_names(const std::vector<std::string>& prefixes, unsigned n) {
  std::vector<std::string> names;
  for (const std::string& prefix : prefixes)
    for (unsigned j = 0; j < n; ++j) names.push_back(n == 1 ? prefix : prefix + std::to_string(j + 1));
  return names;
}

template <class Terms>
void collect(const Terms& terms, unsigned tau_power, std::vector<Entry>& out) {
  for (const auto& [e, c] : terms)
    for (const auto& [power, value] : c.terms()) out.push_back({e, tau_power, power, value});
}

}  // namespace

SymbolExpr::~SymbolExpr() {
  std::vector<SymbolExprPtr> pending;
  auto take = [&](SymbolExpr& e) {
    if (auto* n = std::get_if<Negate>(&e.node)) pending.push_back(std::move(n->operand));
    if (auto* b = std::get_if<Binary>(&e.node)) {
      pending.push_back(std::move(b->lhs));
      pending.push_back(std::move(b->rhs));
    }
    if (auto* pw = std::get_if<Power>(&e.node)) pending.push_back(std::move(pw->base));
  };
  take(*this);
  while (!pending.empty()) {
    SymbolExprPtr next = std::move(pending.back());
    pending.pop_back();
    if (next) take(*next);
  }
}

SymbolExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

SymbolPoly expand(const SymbolExpr& expr, unsigned n) { return Expander(n)(expr); }

SymbolPoly parse_symbol(std::string_view text, unsigned n) {
  if (n == 0) throw DimensionError("dimension must be positive");
  return expand(*parse_expression(text), n);
}

std::string format_symbol(const SymbolPoly& a) {
  std::vector<Entry> entries;
  collect(a.terms(), 0, entries);
  return format_entries(std::move(entries), variable_names({"x", "p"}, a.dimension()));
}

std::string format_amplitude(const AmplitudePoly& a) {
  std::vector<Entry> entries;
  collect(a.terms(), 0, entries);
  return format_entries(std::move(entries), variable_names({"x", "y", "p"}, a.dimension()));
}

std::string format_op(const OpPoly& a) {
  std::vector<Entry> entries;
  collect(a.terms(), 0, entries);
  return format_entries(std::move(entries), variable_names({"xhat", "phat"}, a.dimension()));
}

std::string format_tau_symbol(const TauSymbolPoly& a) {
  std::vector<Entry> entries;
  for (const auto& [k, c] : a.coefficients()) collect(c.terms(), k, entries);
  return format_entries(std::move(entries), variable_names({"x", "p"}, a.zero().dimension()));
}

std::string format_tau_op(const TauOpPoly& a) {
  std::vector<Entry> entries;
  for (const auto& [k, c] : a.coefficients()) collect(c.terms(), k, entries);
  return format_entries(std::move(entries), variable_names({"xhat", "phat"}, a.zero().dimension()));
}

std::string format_scalar(const ExactScalar& c) {
  std::vector<Entry> entries;
  for (const auto& [power, value] : c.terms()) entries.push_back({Exponents{}, 0, power, value});
  return format_entries(std::move(entries), {});
}

}  // namespace bjcalc
