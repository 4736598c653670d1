#pragma once

// Lagrangian framing defect of loops on a Seifert fiber, framing difference
// classes of the product tori S^1 x gamma, and families of loops with
// unbounded defect.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lagrangia/curve.hpp"
#include "lagrangia/error.hpp"
#include "lagrangia/seifert.hpp"

namespace lagrangia {

using Rational = boost::multiprecision::cpp_rational;

/// Linking number of c with its Lagrangian (= Seifert surface) pushoff: c^T V c.
inline Integer lambda_defect(const SeifertMatrix& v, const CurveClass& c) {
  return v.pairing(c, c);
}

/// lambda(e) + n^2 lambda(c) + n (lk(c, e') + lk(e, c')).
inline Integer lambda_bilinear_expand(const SeifertMatrix& v, const CurveClass& e,
                                      const CurveClass& c, const Integer& n) {
  return lambda_defect(v, e) + n * n * lambda_defect(v, c) +
         n * (v.pairing(c, e) + v.pairing(e, c));
}

/// delta(phi_N, phi_L) evaluated on the basis [S^1 x {x}], [{1} x gamma].
struct FramingDifference {
  Integer on_circle_factor;
  Integer on_curve_factor;

  friend bool operator==(const FramingDifference&, const FramingDifference&) = default;
};

/// For T = S^1 x gamma the nullhomologous framing is S^1 x l(gamma), so the
/// circle factor pairs to zero and the curve factor is lambda(gamma).
inline FramingDifference framing_difference(const SeifertMatrix& v, const CurveClass& c) {
  if (c.is_zero()) throw error(errc::degenerate_curve, "framing difference of the zero class");
  return {0, lambda_defect(v, c)};
}

/// gcd of the absolute values of the difference class on a basis of H_1(T).
inline Integer lambda_of_torus(const FramingDifference& d) {
  return gcd(d.on_circle_factor, d.on_curve_factor);
}

/// First b_i, then b_i + b_j (i < j), with nonzero defect. One always exists
/// when |det(V^T - V)| = 1: otherwise V^T = -V and det(V^T - V) = 2^{2g} det V^T.
inline CurveClass find_nonzero_lambda(const SeifertMatrix& v) {
  const std::size_t n = v.dim();
  if (n == 0) throw error(errc::no_curves, "genus 0 fiber has no essential loops");
  for (std::size_t i = 0; i < n; ++i) {
    CurveClass b = CurveClass::basis(n, i);
    if (lambda_defect(v, b) != 0) return b;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CurveClass b = CurveClass::basis(n, i) + CurveClass::basis(n, j);
      if (lambda_defect(v, b) != 0) return b;
    }
  throw error(errc::invalid_seifert_data, "Seifert form is antisymmetric on basis pairs");
}

struct FamilyRow {
  Integer n;
  CurveClass curve;  // e + n c
  bool primitive = false;
  Integer lambda;
};

/// Rows n = 1..count of the family e + n c.
inline std::vector<FamilyRow> generate_family(const SeifertMatrix& v, const CurveClass& e,
                                              const CurveClass& c, long long count) {
  if (e.dim() != v.dim() || c.dim() != v.dim())
    throw error(errc::dimension, "family curves must live in H_1 of the fiber");
  if (count < 0) throw error(errc::invalid_argument, "family length must be nonnegative");
  if (!e.primitive() || !c.primitive())
    throw error(errc::invalid_argument, "family seeds must be primitive");
  if (lambda_defect(v, c) == 0)
    throw error(errc::unusable_direction, "lambda(c) = 0, the family is not unbounded");
  if (e.is_multiple_of(c)) throw error(errc::degenerate_family, "e is a multiple of c");

  std::vector<FamilyRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long long k = 1; k <= count; ++k) {
    FamilyRow row;
    row.n = k;
    row.curve = e + Integer(k) * c;
    row.primitive = row.curve.primitive();
    row.lambda = lambda_defect(v, row.curve);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Summary used to certify a family as pairwise inequivalent tori.
struct FamilyCertificate {
  std::size_t primitive_rows = 0;
  /// Index (into the primitive rows) from which |lambda| strictly increases.
  std::size_t monotone_from = 0;
  /// Primitive rows from monotone_from on; their |lambda| are pairwise distinct.
  std::size_t certified = 0;
};

inline FamilyCertificate certify_family(const std::vector<FamilyRow>& rows) {
  std::vector<Integer> mags;
  for (const auto& r : rows)
    if (r.primitive) mags.push_back(abs(r.lambda));
  FamilyCertificate cert;
  cert.primitive_rows = mags.size();
  std::size_t start = mags.size();
  while (start > 0 && (start == mags.size() || mags[start - 1] < mags[start])) --start;
  cert.monotone_from = mags.empty() ? 0 : start;
  cert.certified = mags.size() - cert.monotone_from;
  return cert;
}

/// Lagrangian 1/p surgery on a loop with defect lambda is (p lambda + 1)/p
/// surgery with respect to the Seifert framing in S^3.
inline Rational framing_conversion(const Integer& lambda, const Integer& p) {
  if (p == 0) throw error(errc::invalid_argument, "surgery coefficient 1/p needs p != 0");
  return Rational(p * lambda + 1, p);
}

/// Nullhomologous Lagrangian torus S^1 x gamma in S^1 x M_K (or X_K).
struct TorusRecord {
  KnotModel knot;
  CurveClass curve;
  Integer lambda;
  bool nullhomologous = true;
  bool circle_summed = false;
};

inline TorusRecord make_torus_record(const KnotModel& k, const CurveClass& c) {
  if (c.is_zero()) throw error(errc::degenerate_curve, "torus over the zero class");
  return {k, c, lambda_defect(k.seifert(), c), true, false};
}

/// Connected sum of gamma with the meridian mu_1 of m_1. The result is
/// isotopic to gamma in M_K, so lambda is unchanged while the torus becomes
/// homologically primitive.
inline TorusRecord circle_sum(const TorusRecord& t) {
  if (t.circle_summed) throw error(errc::idempotence, "torus is already circle-summed");
  if (!t.nullhomologous) throw error(errc::hypothesis_unmet, "circle sum needs a nullhomologous torus");
  TorusRecord r = t;
  r.circle_summed = true;
  r.nullhomologous = false;
  return r;
}

}  // namespace lagrangia
