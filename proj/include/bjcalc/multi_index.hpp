#pragma once

#include "bjcalc/rational.hpp"

#include <functional>
#include <numeric>
#include <vector>

namespace bjcalc {

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimension) : entries_(dimension, 0) {}
  MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  unsigned& operator[](std::size_t j) { return entries_[j]; }
  unsigned operator[](std::size_t j) const { return entries_[j]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<unsigned>& entries() const { return entries_; }

  /// |alpha|
  unsigned order() const { return std::accumulate(entries_.begin(), entries_.end(), 0u); }
  /// alpha!
  BigInt factorial() const {
    BigInt out = 1;
    for (unsigned e : entries_) out *= bjcalc::factorial(e);
    return out;
  }
  bool is_zero() const { return order() == 0; }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (std::size_t j = 0; j < a.size(); ++j) a.entries_[j] += b.entries_[j];
    return a;
  }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> entries_;
};

/// Calls f(alpha) for every alpha with 0 <= alpha_j <= bound_j, in
/// lexicographic order.
inline void for_each_below(const MultiIndex& bound, const std::function<void(const MultiIndex&)>& f) {
  MultiIndex alpha(bound.size());
  while (true) {
    f(alpha);
    std::size_t j = bound.size();
    while (j > 0) {
      --j;
      if (alpha[j] < bound[j]) {
        ++alpha[j];
        break;
      }
      alpha[j] = 0;
      if (j == 0) return;
    }
    if (bound.size() == 0) return;
  }
}

}  // namespace bjcalc
