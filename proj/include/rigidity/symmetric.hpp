#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Elementary symmetric polynomial e_p(values) over any commutative ring type
/// constructible from an integer. e_0 = 1. Computed with the one-pass
/// recurrence e_j <- e_j + e_{j-1} * v, so the cost is O(len * p) ring
/// operations rather than one per subset.
template <typename Ring>
Ring elem_sym(std::span<const Ring> values, long p) {
  if (p < 0 || p > static_cast<long>(values.size())) {
    throw std::domain_error("elem_sym: degree " + std::to_string(p) + " outside [0, " +
                            std::to_string(values.size()) + "]");
  }
  std::vector<Ring> e(static_cast<std::size_t>(p) + 1, Ring(0));
  e[0] = Ring(1);
  std::size_t seen = 0;
  for (const Ring& v : values) {
    ++seen;
    for (std::size_t j = std::min<std::size_t>(seen, e.size() - 1); j >= 1; --j) {
      e[j] += e[j - 1] * v;
    }
  }
  return e.back();
}

/// All of e_0 .. e_len in one pass.
template <typename Ring>
std::vector<Ring> elem_sym_all(std::span<const Ring> values) {
  std::vector<Ring> e(values.size() + 1, Ring(0));
  e[0] = Ring(1);
  std::size_t seen = 0;
  for (const Ring& v : values) {
    ++seen;
    for (std::size_t j = seen; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e;
}

/// Right-hand side of the shift identity
///   e_k(x_1 + 1, ..., x_n + 1) = sum_{i=0}^{k} C(n - i, n - k) e_i(x_1, ..., x_n).
template <typename Ring>
Ring elem_sym_shift(std::span<const Ring> values, long k) {
  const long n = static_cast<long>(values.size());
  if (k < 0 || k > n) {
    throw std::domain_error("elem_sym_shift: degree " + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
  }
  const std::vector<Ring> e = elem_sym_all(values);
  Ring total(0);
  for (long i = 0; i <= k; ++i) {
    total += Ring(Rational(binomial(n - i, n - k))) * e[static_cast<std::size_t>(i)];
  }
  return total;
}

template <typename Ring>
Ring elem_sym(const std::vector<Ring>& values, long p) {
  return elem_sym(std::span<const Ring>(values), p);
}

template <typename Ring>
Ring elem_sym_shift(const std::vector<Ring>& values, long k) {
  return elem_sym_shift(std::span<const Ring>(values), k);
}

}  // namespace rigidity
