#pragma once

// Seifert matrices of knots, Alexander polynomials, homology monodromy of
// fibered knots and its composition with Dehn twists.

#include <optional>
#include <string>
#include <utility>

#include "lagrangia/curve.hpp"
#include "lagrangia/error.hpp"
#include "lagrangia/groupring.hpp"
#include "lagrangia/matrix.hpp"

namespace lagrangia {

/// Sign s of the transvection x -> x + s (x^T J c) c; Lagrangian 1/p surgery
/// composes the monodromy with its p-th power. With s = -1 the surgered
/// manifold satisfies Delta_Z(1) = eps (1 + p lambda).
inline constexpr int kTwistSign = -1;

/// Seifert pairing V_ij = lk(b_i, b_j') on a symplectic basis of H_1(Sigma).
class SeifertMatrix {
 public:
  /// Validates shape and |det(V^T - V)| = 1.
  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (!v_.square()) throw error(errc::dimension, "Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw error(errc::dimension, "Seifert matrix must have even dimension");
    const Integer d = determinant(intersection_form());
    if (abs(d) != 1)
      throw error(errc::invalid_seifert_data,
                  "|det(V^T - V)| = " + abs(d).str() + ", expected 1");
    fibered_ = abs(determinant(v_)) == 1;
  }

  const IntMatrix& matrix() const noexcept { return v_; }
  std::size_t dim() const noexcept { return v_.rows(); }
  std::size_t genus() const noexcept { return v_.rows() / 2; }
  bool fibered() const noexcept { return fibered_; }

  /// J = V^T - V.
  IntMatrix intersection_form() const { return v_.transpose() - v_; }

  /// x^T V y.
  Integer pairing(const CurveClass& x, const CurveClass& y) const {
    if (x.dim() != dim() || y.dim() != dim())
      throw error(errc::dimension, "curve class has dimension " + std::to_string(x.dim()) +
                                       ", expected " + std::to_string(dim()));
    Integer s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += x[i] * v_(i, j) * y[j];
    }
    return s;
  }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix v_;
  bool fibered_ = false;
};

/// Homology monodromy (or any 2g x 2g integer automorphism built from it).
struct MonodromyMatrix {
  IntMatrix h;

  Integer det() const { return determinant(h); }
  Integer trace() const { return h.trace(); }

  /// det(tI - h), ascending coefficients.
  std::vector<Integer> characteristic_polynomial() const {
    return lagrangia::characteristic_polynomial(h);
  }

  friend bool operator==(const MonodromyMatrix&, const MonodromyMatrix&) = default;
};

/// Symmetrization of an ascending coefficient vector of even degree 2g:
/// divides by t^g and makes the top nonzero coefficient positive. The
/// discarded unit is sign * t^g.
struct NormalizedPoly {
  LaurentPoly poly;
  int unit_sign = 1;
  std::int64_t unit_shift = 0;
};

inline NormalizedPoly symmetrize(const std::vector<Integer>& ascending) {
  const auto g = static_cast<std::int64_t>(ascending.size() / 2);
  NormalizedPoly out{LaurentPoly::from_ascending(ascending, -g), 1, g};
  if (!out.poly.is_zero() && out.poly.leading_coefficient() < 0) {
    out.poly = -out.poly;
    out.unit_sign = -1;
  }
  return out;
}

/// det(V - t V^T) with the unit sign * t^g removed.
inline NormalizedPoly alexander_normalized(const SeifertMatrix& v) {
  return symmetrize(pencil_determinant(v.matrix(), Integer(-1) * v.matrix().transpose()));
}

/// Symmetrized Alexander polynomial, t^g coefficient normalized positive.
inline LaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  return alexander_normalized(v).poly;
}

/// Delta^sym(1), which must be +-1.
inline int epsilon_of(const LaurentPoly& alex_sym) {
  const Integer e = alex_sym.at_one();
  if (e != 1 && e != -1)
    throw error(errc::invalid_seifert_data, "Delta(1) = " + e.str() + ", expected +-1");
  return e == 1 ? 1 : -1;
}

class KnotModel {
 public:
  KnotModel(std::string name, SeifertMatrix seifert)
      : name_(std::move(name)), seifert_(std::move(seifert)) {
    auto n = alexander_normalized(seifert_);
    alex_sym_ = std::move(n.poly);
    unit_sign_ = n.unit_sign;
    epsilon_ = lagrangia::epsilon_of(alex_sym_);
  }

  const std::string& name() const noexcept { return name_; }
  const SeifertMatrix& seifert() const noexcept { return seifert_; }
  const LaurentPoly& alex_sym() const noexcept { return alex_sym_; }
  int epsilon() const noexcept { return epsilon_; }
  std::size_t genus() const noexcept { return seifert_.genus(); }
  bool fibered() const noexcept { return seifert_.fibered(); }
  /// Sign of the unit stripped from det(V - tV^T).
  int unit_sign() const noexcept { return unit_sign_; }

 private:
  std::string name_;
  SeifertMatrix seifert_;
  LaurentPoly alex_sym_;
  int epsilon_ = 1;
  int unit_sign_ = 1;
};

inline int epsilon_of(const KnotModel& k) { return epsilon_of(k.alex_sym()); }

/// h = V^{-1} V^T; requires |det V| = 1.
inline MonodromyMatrix monodromy(const SeifertMatrix& v) {
  if (!v.fibered()) throw error(errc::not_fibered, "|det V| != 1");
  return {inverse_unimodular(v.matrix()) * v.matrix().transpose()};
}

/// Symmetrized characteristic polynomial of an automorphism of Z^{2g}.
inline LaurentPoly symmetrized_charpoly(const MonodromyMatrix& m) {
  return symmetrize(m.characteristic_polynomial()).poly;
}

/// p-th power of the transvection x -> x + s (x^T J c) c, J = V^T - V.
/// The transvection is unipotent, so its p-th power is I + p s c (Jc)^T.
inline MonodromyMatrix dehn_twist_matrix(const SeifertMatrix& v, const CurveClass& c,
                                         const Integer& p, int sign = kTwistSign) {
  if (c.dim() != v.dim()) throw error(errc::dimension, "curve class dimension mismatch");
  if (c.is_zero()) throw error(errc::degenerate_curve, "Dehn twist about the zero class");
  if (!c.primitive()) throw error(errc::invalid_argument, "twist curve must be primitive");
  const IntMatrix j = v.intersection_form();
  const auto jc = j.apply(c.coords());
  IntMatrix d = IntMatrix::identity(v.dim());
  const Integer f = p * sign;
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t s = 0; s < v.dim(); ++s) d(r, s) += f * c[r] * jc[s];
  return {std::move(d)};
}

enum class SurgeryBranch {
  regular,     // b_1(Z) = 1: the characteristic polynomial is Delta^sym_Z
  degenerate,  // 1 + p lambda = 0: b_1(Z) = 2, divide by (t^{1/2} - t^{-1/2})^2
};

struct SurgeredAlexander {
  LaurentPoly charpoly;  // symmetrized char poly of D^p h
  SurgeryBranch branch = SurgeryBranch::regular;
  std::optional<LaurentPoly> reduced;  // Delta-bar^sym_Z on the degenerate branch
  Integer lambda;                      // c^T V c

  /// The polynomial playing the role of Delta_Z in downstream formulas.
  const LaurentPoly& delta() const { return reduced ? *reduced : charpoly; }
};

/// Alexander data of the Lagrangian 1/p surgery on c: the monodromy h is
/// composed with the p-th twist as D^p * h.
inline SurgeredAlexander surgered_alexander(const SeifertMatrix& v, const CurveClass& c,
                                            const Integer& p, int sign = kTwistSign) {
  SurgeredAlexander out;
  out.lambda = v.pairing(c, c);
  const MonodromyMatrix h = monodromy(v);
  if (p == 0) {
    out.charpoly = symmetrized_charpoly(h);
  } else {
    const MonodromyMatrix d = dehn_twist_matrix(v, c, p, sign);
    out.charpoly = symmetrized_charpoly({d.h * h.h});
  }
  if (p * out.lambda + 1 == 0) {
    out.branch = SurgeryBranch::degenerate;
    auto q = exact_divide(out.charpoly, LaurentPoly::half_twist_square());
    if (!q)
      throw error(errc::convention_violation,
                  "characteristic polynomial " + out.charpoly.str() +
                      " is not divisible by (t^(1/2) - t^(-1/2))^2; check the twist sign");
    out.reduced = std::move(*q);
  }
  return out;
}

/// |delta(1)|: order of the torsion of H_1 for a b_1 = 1 manifold.
inline Integer torsion_order(const LaurentPoly& delta) { return abs(delta.at_one()); }

}  // namespace lagrangia
