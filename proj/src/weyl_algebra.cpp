#include "bjcalc/weyl_algebra.hpp"

#include <string>
#include <vector>

namespace bjcalc {
namespace {

void check_degree(unsigned degree) {
  if (degree > kMaxTotalDegree)
    throw ResourceError("operator product of total degree " + std::to_string(degree) +
                        " exceeds the limit of " + std::to_string(kMaxTotalDegree));
}

/// Normal form of phat^b xhat^c in one dimension, as coefficients r[k] of
/// xhat^(c-k) phat^(b-k). Built from phat xhat^c = xhat^c phat - i hbar c xhat^(c-1):
///   R(b, c)[k] = R(b-1, c)[k] - i hbar c R(b-1, c-1)[k-1].
class ReorderTable {
 public:
  const std::vector<ExactScalar>& get(unsigned b, unsigned c) {
    const std::size_t key = static_cast<std::size_t>(b) * (kMaxTotalDegree + 1) + c;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<ExactScalar> out(std::min(b, c) + 1);
    if (b == 0 || c == 0) {
      out[0] = ExactScalar(1);
    } else {
      const std::vector<ExactScalar> keep = get(b - 1, c);
      const std::vector<ExactScalar> lowered = get(b - 1, c - 1);
      const ExactScalar step = -ExactScalar::i_hbar(1) * ExactScalar(static_cast<long>(c));
      for (std::size_t k = 0; k < keep.size(); ++k) out[k] += keep[k];
      for (std::size_t k = 0; k < lowered.size(); ++k) out[k + 1] += step * lowered[k];
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<ExactScalar>> memo_;
};

}  // namespace

OpPoly OpPoly::constant(unsigned dimension, const ExactScalar& c) {
  return OpPoly(SymbolPoly::constant(dimension, c));
}

OpPoly OpPoly::xhat(unsigned dimension, unsigned j) {
  return OpPoly(SymbolPoly::variable(dimension, Var::x(j)));
}

OpPoly OpPoly::phat(unsigned dimension, unsigned j) {
  return OpPoly(SymbolPoly::variable(dimension, Var::p(j)));
}

OpPoly OpPoly::normal_monomial(unsigned dimension, Exponents e, const ExactScalar& c) {
  return OpPoly(SymbolPoly::monomial(dimension, std::move(e), c));
}

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  const unsigned n = a.dimension();
  if (b.dimension() != n)
    throw DimensionError("operator dimension mismatch: " + std::to_string(n) + " vs " +
                         std::to_string(b.dimension()));
  if (a.is_zero() || b.is_zero()) return OpPoly(n);
  check_degree(a.total_degree() + b.total_degree());

  ReorderTable table;
  SymbolPoly out(n);
  // Per term pair: xhat^a1 phat^b1 xhat^a2 phat^b2, reordered one dimension at a
  // time (distinct dimensions commute), then tensored together.
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<std::pair<Exponents, ExactScalar>> partial{{Exponents(2 * n, 0), ca * cb}};
      for (unsigned j = 0; j < n; ++j) {
        const unsigned x_left = ea[j], p_mid = ea[n + j], x_mid = eb[j], p_right = eb[n + j];
        const std::vector<ExactScalar>& reorder = table.get(p_mid, x_mid);
        std::vector<std::pair<Exponents, ExactScalar>> next;
        next.reserve(partial.size() * reorder.size());
        for (const auto& [e, c] : partial)
          for (std::size_t k = 0; k < reorder.size(); ++k) {
            if (reorder[k].is_zero()) continue;
            Exponents f = e;
            f[j] = x_left + x_mid - static_cast<unsigned>(k);
            f[n + j] = p_mid + p_right - static_cast<unsigned>(k);
            next.emplace_back(std::move(f), c * reorder[k]);
          }
        partial = std::move(next);
      }
      for (auto& [e, c] : partial) out.add_term(std::move(e), c);
    }
  return OpPoly::from_normal_symbol(out);
}

OpPoly multiply(const OpPoly& a, const OpPoly& b) { return a * b; }

OpPoly commutator(const OpPoly& a, const OpPoly& b) { return a * b - b * a; }

bool equals(const OpPoly& a, const OpPoly& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("operator dimension mismatch");
  return a == b;
}

OpPoly adjoint(const OpPoly& a) {
  const unsigned n = a.dimension();
  OpPoly out(n);
  for (const auto& [e, c] : a.terms()) {
    // (c xhat^alpha phat^beta)^* = conj(c) phat^beta xhat^alpha
    Exponents xs(2 * n, 0), ps(2 * n, 0);
    for (unsigned j = 0; j < n; ++j) {
      xs[j] = e[j];
      ps[n + j] = e[n + j];
    }
    out += OpPoly::normal_monomial(n, ps, c.conj()) * OpPoly::normal_monomial(n, xs);
  }
  return out;
}

OpPoly embed(const OpPoly& one_dimensional, unsigned dimension, unsigned j) {
  if (one_dimensional.dimension() != 1) throw DimensionError("embed expects a one-dimensional operator");
  if (j >= dimension) throw DimensionError("target dimension index out of range");
  OpPoly out(dimension);
  for (const auto& [e, c] : one_dimensional.terms()) {
    Exponents f(2 * dimension, 0);
    f[j] = e[0];
    f[dimension + j] = e[1];
    out += OpPoly::normal_monomial(dimension, std::move(f), c);
  }
  return out;
}

}  // namespace bjcalc
