#pragma once

// Seiberg-Witten invariants as elements of integral group rings: knot
// surgery, Meng-Taubes quotients, the three-generator torus surgery
// combination, and recovery of the framing defect from the invariant set.
//
// Vanishing statements that rest on geometric arguments enter only as
// witness flags set by the constructors below; nothing here computes them.

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lagrangia/curve.hpp"
#include "lagrangia/error.hpp"
#include "lagrangia/framing.hpp"
#include "lagrangia/groupring.hpp"
#include "lagrangia/seifert.hpp"

namespace lagrangia {

/// Symbolic closed 4-manifold: its SW polynomial and the hypotheses the
/// surgery formulas need.
struct SWState {
  std::string name;
  GroupRingElement::Basis basis;
  std::variant<GroupRingElement, RationalGRE> sw;
  int parity = 0;           // (e + sign) / 4 mod 2
  bool b_plus_big = true;   // b2+(X) > 1 and b2+(X \ T) > 1
  bool vanishing_cycle = false;
  std::string fiber_class = "F";

  bool is_polynomial() const {
    if (std::holds_alternative<GroupRingElement>(sw)) return true;
    return std::get<RationalGRE>(sw).is_polynomial();
  }

  GroupRingElement polynomial() const {
    if (const auto* p = std::get_if<GroupRingElement>(&sw)) return *p;
    return std::get<RationalGRE>(sw).polynomial();
  }
};

/// SW = 1 with an elliptic fiber F carrying a vanishing cycle (the K3 surface).
inline SWState unit_fixture() {
  GroupRingElement::Basis b{"F"};
  return {"E(2)", b, GroupRingElement::constant(b, 1), 0, true, true, "F"};
}

/// Elliptic surface E(n), n >= 2: SW = (t_F - t_F^{-1})^{n-2}, (e+sign)/4 = n.
inline SWState elliptic_fixture(int n) {
  if (n < 2) throw error(errc::invalid_argument, "E(n) needs n >= 2 for b2+ > 1");
  GroupRingElement::Basis b{"F"};
  const GroupRingElement step =
      GroupRingElement::generator(b, "F", 1) - GroupRingElement::generator(b, "F", -1);
  GroupRingElement sw = GroupRingElement::constant(b, 1);
  for (int i = 2; i < n; ++i) sw = sw * step;
  return {"E(" + std::to_string(n) + ")", b, sw, n % 2, true, true, "F"};
}

inline bool conjugation_ok(const SWState& x) {
  return x.is_polynomial() && conjugation_check(x.polynomial(), x.parity);
}

/// SW_{X_K} = Delta^sym_K(t_F^2) * SW_X.
inline SWState knot_surgery_sw(const SWState& x, const KnotModel& k, const std::string& f) {
  if (!x.b_plus_big) throw error(errc::hypothesis_unmet, "knot surgery formula needs b2+ > 1");
  if (std::find(x.basis.begin(), x.basis.end(), f) == x.basis.end())
    throw error(errc::untracked_class, "class '" + f + "' is not tracked by " + x.name);
  const GroupRingElement factor = substitute_square(k.alex_sym(), x.basis, f);
  SWState out = x;
  out.name = x.name + "_" + k.name();
  if (const auto* p = std::get_if<GroupRingElement>(&x.sw))
    out.sw = factor * *p;
  else
    out.sw = std::get<RationalGRE>(x.sw) * factor;
  return out;
}

/// Meng-Taubes: SW_M = Delta(t^2) (t - t^{-1})^{-2} if b_1 = 1, Delta if b_1 > 1.
inline RationalGRE meng_taubes(const LaurentPoly& delta, int b1, const std::string& var = "t") {
  if (b1 <= 0) throw error(errc::invalid_argument, "Meng-Taubes needs b_1 >= 1");
  const GroupRingElement::Basis b{var};
  if (b1 > 1) {
    if (delta.has_half_integer_exponents())
      throw error(errc::non_embeddable, "half-integer exponent in " + delta.str());
    GroupRingElement num(b);
    for (const auto& [d, c] : delta.terms()) num.add_term({d / 2}, c);
    return RationalGRE(std::move(num));
  }
  const GroupRingElement step =
      GroupRingElement::generator(b, var, 1) - GroupRingElement::generator(b, var, -1);
  return {substitute_square(delta, b, var), step * step};
}

/// Torus with its framing basis ([S^1 x {y}], [gamma'], [dD^2]) and the three
/// generator invariants of the surgery combination.
struct MarkedTorus {
  std::array<std::string, 3> labels{"[S^1 x {y}]", "[gamma']", "[dD^2]"};
  GroupRingElement gen_100;
  GroupRingElement gen_010;
  GroupRingElement gen_001;
  bool vanishing_100_witness = false;
  bool vanishing_010_witness = false;
  GroupRingElement base_sw;  // SW_X the generators are multiples of
  std::string fiber_class = "F";
};

/// p gen_100 + q gen_010 + r gen_001.
inline GroupRingElement surgery_combine(const MarkedTorus& t, const Integer& p,
                                        const Integer& q, const Integer& r) {
  return p * t.gen_100 + q * t.gen_010 + r * t.gen_001;
}

/// SW of the (0,1,0) surgery on T_gamma in X_K: (Delta_Z - Delta_K)(t_F^2) SW_X,
/// or on the degenerate branch (Delta-bar_Z(t_F^2)(t_F - t_F^{-1})^2 - Delta_K(t_F^2)) SW_X.
inline GroupRingElement lemma_dd_generator(const SWState& x, const KnotModel& k,
                                           const CurveClass& c, int sign = kTwistSign) {
  // A genus-0 fiber has only the empty loop; the twist is trivial and Delta_Z = Delta_K.
  if (k.genus() == 0 && c.dim() == 0) return GroupRingElement::zero(x.basis);
  const SurgeredAlexander z = surgered_alexander(k.seifert(), c, 1, sign);
  const GroupRingElement sw_x = x.polynomial();
  const GroupRingElement delta_k = substitute_square(k.alex_sym(), x.basis, x.fiber_class);
  if (z.branch == SurgeryBranch::regular)
    return (substitute_square(z.charpoly, x.basis, x.fiber_class) - delta_k) * sw_x;
  const GroupRingElement step = GroupRingElement::generator(x.basis, x.fiber_class, 1) -
                                GroupRingElement::generator(x.basis, x.fiber_class, -1);
  return (substitute_square(*z.reduced, x.basis, x.fiber_class) * step * step - delta_k) * sw_x;
}

/// Marked torus T_gamma = S^1 x gamma in X_K.
inline MarkedTorus build_marked_torus(const SWState& x, const KnotModel& k, const CurveClass& c,
                                      int sign = kTwistSign) {
  if (!x.vanishing_cycle)
    throw error(errc::hypothesis_unmet, x.name + " has no fiber with a vanishing cycle");
  if (c.is_zero() && k.genus() > 0) throw error(errc::degenerate_curve, "torus over the zero class");
  MarkedTorus t;
  t.base_sw = x.polynomial();
  t.fiber_class = x.fiber_class;
  t.vanishing_100_witness = true;  // (1,0,0) surgery contains a -1 sphere dual to a rim torus
  t.gen_100 = GroupRingElement::zero(x.basis);
  t.gen_001 = knot_surgery_sw(x, k, x.fiber_class).polynomial();
  t.gen_010 = lemma_dd_generator(x, k, c, sign);
  return t;
}

/// Rim torus T_mu = S^1 x mu_1 in X_K. Its (0,1,0) surgery splits along
/// S^2 x S^1, so both non-trivial generators vanish.
inline MarkedTorus build_meridian_torus(const SWState& x, const KnotModel& k) {
  if (!x.vanishing_cycle)
    throw error(errc::hypothesis_unmet, x.name + " has no fiber with a vanishing cycle");
  MarkedTorus t;
  t.labels = {"[S^1 x {y}]", "[mu_1']", "[dD^2]"};
  t.base_sw = x.polynomial();
  t.fiber_class = x.fiber_class;
  t.vanishing_100_witness = true;
  t.vanishing_010_witness = true;
  t.gen_100 = GroupRingElement::zero(x.basis);
  t.gen_010 = GroupRingElement::zero(x.basis);
  t.gen_001 = knot_surgery_sw(x, k, x.fiber_class).polynomial();
  return t;
}

/// I(X, T): the Z-span of the three generators.
inline GRESubmodule invariant_set(const MarkedTorus& t) {
  return {t.gen_001.basis(), {t.gen_100, t.gen_010, t.gen_001}};
}

struct RecoverySample {
  Integer p, q;
  Integer sigma;  // coefficient sum of (0,p,q)/SW_X outside degrees +-2g
  Integer tau;    // coefficient of t_F^{2g}
};

struct LambdaRecovery {
  Integer value;
  std::vector<RecoverySample> samples;
};

/// gcd over a generating set of (p, q) of |sigma + (2 - eps) tau|.
inline LambdaRecovery recover_lambda_detailed(const MarkedTorus& t, std::int64_t g, int epsilon) {
  if (g < 1) throw error(errc::invalid_argument, "recovery needs a knot of genus >= 1");
  if (epsilon != 1 && epsilon != -1) throw error(errc::invalid_argument, "epsilon must be +-1");
  if (t.base_sw.is_zero()) throw error(errc::inconsistent_state, "SW_X is zero");
  const std::size_t f = t.base_sw.index_of(t.fiber_class);
  static constexpr std::array<std::array<int, 2>, 4> kSamples{{{1, 0}, {0, 1}, {1, 1}, {2, 1}}};

  LambdaRecovery out;
  out.value = 0;
  for (const auto& [p, q] : kSamples) {
    const GroupRingElement combined = surgery_combine(t, 0, p, q);
    const auto quotient = exact_divide(combined, t.base_sw);
    if (!quotient)
      throw error(errc::inconsistent_state, "SW_X does not divide " + combined.str());
    RecoverySample s{p, q, 0, 0};
    for (const auto& [e, c] : quotient->terms()) {
      if (e[f] == 2 * g)
        s.tau += c;
      else if (e[f] != -2 * g)
        s.sigma += c;
    }
    out.value = gcd(out.value, s.sigma + (2 - epsilon) * s.tau);
    out.samples.push_back(std::move(s));
  }
  return out;
}

inline Integer recover_lambda(const MarkedTorus& t, std::int64_t g, int epsilon) {
  return recover_lambda_detailed(t, g, epsilon).value;
}

/// Alexander polynomial of M_K(gamma) read off the (0,1,0) generator:
/// Delta_{M_K(gamma)}(t^2) = gen_010 / SW_X. For lambda = 0 the b_1 = 2 case
/// reports the s = 1 specialization, divided by (t^{1/2} - t^{-1/2})^2.
struct SurgeredLinkAlexander {
  LaurentPoly delta;
  bool divided = false;
};

inline SurgeredLinkAlexander mk_gamma_alexander(const KnotModel& k, const CurveClass& c,
                                                int sign = kTwistSign) {
  const SurgeredAlexander z = surgered_alexander(k.seifert(), c, 1, sign);
  LaurentPoly diff = z.charpoly - k.alex_sym();
  if (z.lambda != 0) return {std::move(diff), false};
  auto q = exact_divide(diff, LaurentPoly::half_twist_square());
  if (!q)
    throw error(errc::convention_violation,
                "lambda = 0 difference " + diff.str() + " is not divisible by (t^(1/2) - t^(-1/2))^2");
  return {std::move(*q), true};
}

struct ScenarioReport {
  std::string scenario;
  std::string knot;
  std::vector<CurveClass> curves;
  std::vector<std::string> generators;  // three per torus, canonical strings
  std::vector<std::vector<std::string>> invariant_sets;  // HNF rows per torus
  std::vector<Integer> lambda;          // |lambda| per torus
  bool sw_distinguishes = false;
  bool lambda_distinguishes = false;
};

/// Z_K = X_K #_{S'=C} Y, spin, with SW = t_kappa + (-1)^g t_kappa^{-1}.
inline SWState zk_fixture(const KnotModel& k) {
  const GroupRingElement::Basis b{"kappa"};
  const int g = static_cast<int>(k.genus());
  GroupRingElement sw = GroupRingElement::generator(b, "kappa", 1) +
                        Integer(g % 2 ? -1 : 1) * GroupRingElement::generator(b, "kappa", -1);
  return {"Z_" + k.name(), b, sw, g % 2, true, true, "kappa"};
}

/// T_gamma in Z_K: the (1,0,0) generator vanishes as in X_K, and the (0,1,0)
/// surgery leaves H_2 unchanged (lambda != 0), so its SW equals SW_{Z_K}.
inline MarkedTorus build_zk_torus(const KnotModel& k, const CurveClass& c) {
  if (lambda_defect(k.seifert(), c) == 0)
    throw error(errc::hypothesis_unmet, "Z_K generator rule needs lambda(gamma) != 0");
  const SWState z = zk_fixture(k);
  MarkedTorus t;
  t.base_sw = z.polynomial();
  t.fiber_class = z.fiber_class;
  t.vanishing_100_witness = true;
  t.gen_100 = GroupRingElement::zero(z.basis);
  t.gen_010 = z.polynomial();
  t.gen_001 = z.polynomial();
  return t;
}

/// Two tori in Z_K whose invariant sets coincide although their framing
/// defects differ.
inline ScenarioReport selt_scenario(const KnotModel& k, const CurveClass& c1, const CurveClass& c2) {
  ScenarioReport r;
  r.scenario = "selt";
  r.knot = k.name();
  std::vector<GRESubmodule> sets;
  for (const CurveClass* c : {&c1, &c2}) {
    const MarkedTorus t = build_zk_torus(k, *c);
    r.curves.push_back(*c);
    for (const auto* gen : {&t.gen_100, &t.gen_010, &t.gen_001}) r.generators.push_back(gen->str());
    sets.push_back(invariant_set(t));
    std::vector<std::string> rows;
    for (const auto& row : sets.back().canonical_form()) rows.push_back(row.str());
    r.invariant_sets.push_back(std::move(rows));
    r.lambda.push_back(abs(lambda_defect(k.seifert(), *c)));
  }
  r.sw_distinguishes = !submodule_equal(sets[0], sets[1]);
  r.lambda_distinguishes = r.lambda[0] != r.lambda[1];
  return r;
}

/// Default fixture: trefoil with the loops of defect magnitude 1 and 3.
inline ScenarioReport selt_scenario() {
  const KnotModel trefoil("trefoil", SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}}));
  return selt_scenario(trefoil, CurveClass{1, 0}, CurveClass{1, -1});
}

}  // namespace lagrangia
