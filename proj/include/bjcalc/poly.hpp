#pragma once

#include "bjcalc/errors.hpp"
#include "bjcalc/exact_scalar.hpp"
#include "bjcalc/multi_index.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace bjcalc {

enum class VarKind { x, y, p };

/// A coordinate variable: kind plus zero-based dimension index.
struct Var {
  VarKind kind;
  unsigned index = 0;

  static Var x(unsigned j = 0) { return {VarKind::x, j}; }
  static Var y(unsigned j = 0) { return {VarKind::y, j}; }
  static Var p(unsigned j = 0) { return {VarKind::p, j}; }
  friend bool operator==(const Var&, const Var&) = default;
};

struct SymbolLayout {
  static constexpr std::array<VarKind, 2> blocks{VarKind::x, VarKind::p};
};
struct AmplitudeLayout {
  static constexpr std::array<VarKind, 3> blocks{VarKind::x, VarKind::y, VarKind::p};
};

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest first: higher total degree precedes,
/// ties broken lexicographically on the concatenated exponent blocks.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

inline constexpr unsigned kMaxTotalDegree = 64;

/// Sparse commutative polynomial over ExactScalar. Exponent vectors are the
/// concatenation of one block of `dimension` entries per VarKind in Layout.
template <class Layout>
class Poly {
 public:
  using Terms = std::map<Exponents, ExactScalar, GradedLexGreater>;
  static constexpr std::size_t kBlocks = Layout::blocks.size();

  explicit Poly(unsigned dimension = 1) : dimension_(dimension) {
    if (dimension == 0) throw DimensionError("polynomial dimension must be positive");
  }

  static Poly constant(unsigned dimension, const ExactScalar& c) {
    Poly out(dimension);
    out.add_term(Exponents(kBlocks * dimension, 0), c);
    return out;
  }
  static Poly variable(unsigned dimension, Var v) {
    Poly out(dimension);
    Exponents e(kBlocks * dimension, 0);
    e[out.slot(v)] = 1;
    out.add_term(std::move(e), ExactScalar(1));
    return out;
  }
  static Poly monomial(unsigned dimension, Exponents e, const ExactScalar& c = ExactScalar(1)) {
    Poly out(dimension);
    out.add_term(std::move(e), c);
    return out;
  }

  unsigned dimension() const { return dimension_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Position of a variable inside an exponent vector.
  std::size_t slot(Var v) const {
    for (std::size_t b = 0; b < kBlocks; ++b)
      if (Layout::blocks[b] == v.kind) {
        if (v.index >= dimension_)
          throw UnknownVariableError("variable index " + std::to_string(v.index + 1) +
                                     " exceeds dimension " + std::to_string(dimension_));
        return b * dimension_ + v.index;
      }
    throw UnknownVariableError("variable kind not present in this polynomial layout");
  }
  bool has_kind(VarKind kind) const {
    return std::find(Layout::blocks.begin(), Layout::blocks.end(), kind) != Layout::blocks.end();
  }

  void add_term(Exponents e, const ExactScalar& c) {
    if (e.size() != kBlocks * dimension_) throw DimensionError("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  ExactScalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar() : it->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }
  unsigned degree_in(Var v) const {
    const std::size_t s = slot(v);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[s]);
    return d;
  }
  /// Componentwise maximum of one exponent block, e.g. the largest power of
  /// each x_j. Bounds the multi-indices that survive differentiation.
  MultiIndex block_degrees(VarKind kind) const {
    MultiIndex out(dimension_);
    for (unsigned j = 0; j < dimension_; ++j) out[j] = degree_in(Var{kind, j});
    return out;
  }

  Poly conj() const {
    Poly out(dimension_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
    return out;
  }

  Poly& operator+=(const Poly& other) {
    check_same(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& other) {
    check_same(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const ExactScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    Terms scaled;
    for (auto& [e, c] : terms_) {
      ExactScalar v = c * s;
      if (!v.is_zero()) scaled.emplace(e, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= ExactScalar(-1); }
  friend Poly operator*(Poly a, const ExactScalar& s) { return a *= s; }
  friend Poly operator*(const ExactScalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (!a.is_zero() && !b.is_zero() && a.total_degree() + b.total_degree() > kMaxTotalDegree)
      throw ResourceError("polynomial product exceeds total degree " + std::to_string(kMaxTotalDegree));
    Poly out(a.dimension_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned exponent) const {
    Poly result = constant(dimension_, ExactScalar(1));
    Poly factor = *this;
    while (exponent != 0) {
      if (exponent & 1u) result *= factor;
      exponent >>= 1;
      if (exponent != 0) factor *= factor;
    }
    return result;
  }

 private:
  void check_same(const Poly& other) const {
    if (other.dimension_ != dimension_)
      throw DimensionError("dimension mismatch: " + std::to_string(dimension_) + " vs " +
                           std::to_string(other.dimension_));
  }

  unsigned dimension_;
  Terms terms_;
};

using SymbolPoly = Poly<SymbolLayout>;
using AmplitudePoly = Poly<AmplitudeLayout>;

/// Exact partial derivative of the given order in one variable.
template <class Layout>
Poly<Layout> differentiate(const Poly<Layout>& a, Var var, unsigned order = 1) {
  const std::size_t s = a.slot(var);
  Poly<Layout> out(a.dimension());
  for (const auto& [e, c] : a.terms()) {
    if (e[s] < order) continue;
    // e!/(e-order)! falling factorial
    BigInt falling = 1;
    for (unsigned k = 0; k < order; ++k) falling *= e[s] - k;
    Exponents d = e;
    d[s] -= order;
    out.add_term(std::move(d), c * ExactScalar(Rational(falling)));
  }
  return out;
}

/// Applies the diagonal derivative d_x^alpha d_p^alpha used by every
/// symbol expansion.
inline SymbolPoly differentiate_diagonal(const SymbolPoly& a, const MultiIndex& alpha) {
  SymbolPoly out = a;
  for (unsigned j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    out = differentiate(out, Var::x(j), alpha[j]);
    out = differentiate(out, Var::p(j), alpha[j]);
  }
  return out;
}

/// Re-expresses a polynomial in a layout that contains all of its variable
/// kinds (e.g. a symbol a(x,p) viewed as an amplitude in (x,y,p)).
template <class Target, class Source>
Poly<Target> embed(const Poly<Source>& a) {
  Poly<Target> out(a.dimension());
  const unsigned n = a.dimension();
  for (const auto& [e, c] : a.terms()) {
    Exponents t(Poly<Target>::kBlocks * n, 0);
    for (std::size_t b = 0; b < Poly<Source>::kBlocks; ++b)
      for (unsigned j = 0; j < n; ++j)
        if (e[b * n + j] != 0) t[out.slot(Var{Source::blocks[b], j})] = e[b * n + j];
    out.add_term(std::move(t), c);
  }
  return out;
}

/// Restriction of an amplitude to the diagonal y = x.
inline SymbolPoly restrict_diagonal(const AmplitudePoly& b) {
  const unsigned n = b.dimension();
  SymbolPoly out(n);
  for (const auto& [e, c] : b.terms()) {
    Exponents t(2 * n, 0);
    for (unsigned j = 0; j < n; ++j) {
      t[j] = e[j] + e[n + j];
      t[n + j] = e[2 * n + j];
    }
    out.add_term(std::move(t), c);
  }
  return out;
}

}  // namespace bjcalc
