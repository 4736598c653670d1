#pragma once

// Deterministic generators of Seifert matrices, curve classes and group ring
// elements for the randomized invariant suites.

#include <cstdint>
#include <random>

#include "lagrangia/curve.hpp"
#include "lagrangia/groupring.hpp"
#include "lagrangia/matrix.hpp"
#include "lagrangia/seifert.hpp"

namespace lagrangia::random {

using Engine = std::mt19937_64;

inline long long uniform(Engine& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Random unimodular matrix: a product of elementary row operations.
inline IntMatrix unimodular(Engine& rng, std::size_t n, int steps = 6) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) return p;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
    if (j >= i) ++j;
    const Integer k = uniform(rng, -2, 2);
    for (std::size_t c = 0; c < n; ++c) p(i, c) += k * p(j, c);
  }
  return p;
}

/// V = P^T (S + A) P with S symmetric and A the upper half of the standard
/// symplectic form, so V^T - V = -P^T (A - A^T) P has determinant 1.
inline SeifertMatrix seifert(Engine& rng, std::size_t genus, long long bound = 3) {
  const std::size_t n = 2 * genus;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, -bound, bound);
  for (std::size_t b = 0; b < genus; ++b) m(2 * b, 2 * b + 1) += 1;
  const IntMatrix p = unimodular(rng, n);
  return SeifertMatrix(p.transpose() * m * p);
}

/// Fibered Seifert matrix: block sum of trefoil / figure-eight forms in a
/// random basis (|det V| = 1 is basis independent).
inline SeifertMatrix fibered_seifert(Engine& rng, std::size_t genus) {
  const std::size_t n = 2 * genus;
  IntMatrix m(n, n);
  for (std::size_t b = 0; b < genus; ++b) {
    const bool fig8 = uniform(rng, 0, 1) == 1;
    m(2 * b, 2 * b) = fig8 ? 1 : -1;
    m(2 * b, 2 * b + 1) = 1;
    m(2 * b + 1, 2 * b + 1) = -1;
  }
  const IntMatrix p = unimodular(rng, n);
  return SeifertMatrix(p.transpose() * m * p);
}

inline CurveClass curve(Engine& rng, std::size_t dim, long long bound) {
  std::vector<Integer> x(dim);
  for (auto& v : x) v = uniform(rng, -bound, bound);
  return CurveClass(std::move(x));
}

inline CurveClass primitive_curve(Engine& rng, std::size_t dim, long long bound) {
  for (;;) {
    CurveClass c = curve(rng, dim, bound);
    if (c.primitive()) return c;
  }
}

/// Group ring element on `basis` with up to `terms` monomials.
inline GroupRingElement element(Engine& rng, const GroupRingElement::Basis& basis, int terms,
                                long long degree = 3, long long coeff = 5) {
  GroupRingElement x(basis);
  for (int t = 0; t < terms; ++t) {
    Exponent e(basis.size());
    for (auto& v : e) v = uniform(rng, -degree, degree);
    x.add_term(e, uniform(rng, -coeff, coeff));
  }
  return x;
}

inline GroupRingElement nonzero_element(Engine& rng, const GroupRingElement::Basis& basis,
                                        int terms, long long degree = 3, long long coeff = 5) {
  for (;;) {
    GroupRingElement x = element(rng, basis, terms, degree, coeff);
    if (!x.is_zero()) return x;
  }
}

}  // namespace lagrangia::random
