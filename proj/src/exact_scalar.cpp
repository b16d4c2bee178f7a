#include "bjcalc/exact_scalar.hpp"

namespace bjcalc {

ExactScalar ExactScalar::i_hbar(unsigned power) {
  // i^k cycles through 1, i, -1, -i.
  static constexpr int re_part[4] = {1, 0, -1, 0};
  static constexpr int im_part[4] = {0, 1, 0, -1};
  return ExactScalar(GaussianRational{re_part[power % 4], im_part[power % 4]}, power);
}

bool ExactScalar::is_real() const {
  for (const auto& [power, value] : terms_)
    if (value.im != 0) return false;
  return true;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out;
  for (const auto& [power, value] : terms_) out.terms_.emplace(power, value.conj());
  return out;
}

void ExactScalar::accumulate(unsigned power, const GaussianRational& value) {
  if (value.is_zero()) return;
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    terms_.emplace(power, value);
    return;
  }
  it->second = it->second + value;
  if (it->second.is_zero()) terms_.erase(it);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  for (const auto& [power, value] : other.terms_) accumulate(power, value);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  for (const auto& [power, value] : other.terms_) accumulate(power, -value);
  return *this;
}

ExactScalar operator-(const ExactScalar& a) {
  ExactScalar out;
  for (const auto& [power, value] : a.terms_) out.terms_.emplace(power, -value);
  return out;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar out;
  for (const auto& [pa, va] : a.terms_)
    for (const auto& [pb, vb] : b.terms_) out.accumulate(pa + pb, va * vb);
  return out;
}

}  // namespace bjcalc
