#pragma once

// Randomized invariant suites behind `lagrangia verify`. Every suite is
// deterministic for a fixed seed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lagrangia/catalog.hpp"
#include "lagrangia/framing.hpp"
#include "lagrangia/groupring.hpp"
#include "lagrangia/random.hpp"
#include "lagrangia/seifert.hpp"
#include "lagrangia/swcalc.hpp"

namespace lagrangia {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> diagnostics;

  bool ok() const { return passed == total; }

  void record(bool ok, const std::function<std::string()>& why) {
    ++total;
    if (ok) {
      ++passed;
    } else if (diagnostics.size() < 5) {
      diagnostics.push_back(why());
    }
  }
};

struct VerifyOptions {
  std::uint64_t seed = 20021;
  int twist_sign = kTwistSign;
};

namespace detail {

/// Runs one case; a thrown lagrangia::error counts as a failure.
inline void run_case(SuiteResult& s, const std::function<bool(std::string&)>& body) {
  std::string why;
  bool ok = false;
  try {
    ok = body(why);
  } catch (const error& e) {
    why = e.what();
  }
  s.record(ok, [&] { return why; });
}

/// Primitive class on `k` with lambda outside {0, -1}.
inline CurveClass generic_curve(random::Engine& rng, const KnotModel& k, long long bound) {
  for (;;) {
    CurveClass c = random::primitive_curve(rng, k.seifert().dim(), bound);
    const Integer l = lambda_defect(k.seifert(), c);
    if (l != 0 && l != -1) return c;
  }
}

}  // namespace detail

inline std::vector<SuiteResult> run_verify(const Catalog& catalog, const VerifyOptions& opt = {}) {
  using detail::run_case;
  random::Engine rng(opt.seed);
  std::vector<SuiteResult> out;
  const KnotModel k31 = trefoil();
  const KnotModel k41 = figure_eight();
  const std::vector<const KnotModel*> small{&k31, &k41};

  {
    SuiteResult s{"alexander", 0, 0, {}};
    for (const auto& k : catalog.knots()) {
      run_case(s, [&](std::string& why) {
        why = k.name() + ": Delta = " + k.alex_sym().str();
        const Integer at1 = k.alex_sym().at_one();
        if (!(at1 == 1 || at1 == -1) || !k.alex_sym().is_symmetric()) return false;
        if (!k.fibered()) return true;
        const MonodromyMatrix h = monodromy(k.seifert());
        const LaurentPoly cp = symmetrized_charpoly(h);
        why += ", monodromy char poly = " + cp.str();
        return abs(h.det()) == 1 && cp == k.alex_sym();
      });
    }
    out.push_back(std::move(s));
  }

  {
    SuiteResult s{"lambda-expansion", 0, 0, {}};
    for (int i = 0; i < 500; ++i) {
      const int which = static_cast<int>(random::uniform(rng, 0, 2));
      const SeifertMatrix v = which == 0   ? k31.seifert()
                              : which == 1 ? k41.seifert()
                                           : random::seifert(rng, random::uniform(rng, 1, 5));
      const CurveClass e = random::curve(rng, v.dim(), 6);
      const CurveClass c = random::curve(rng, v.dim(), 6);
      const Integer n = random::uniform(rng, -20, 20);
      run_case(s, [&](std::string& why) {
        why = "e=" + e.str() + " c=" + c.str() + " n=" + n.str();
        return lambda_bilinear_expand(v, e, c, n) == lambda_defect(v, e + n * c);
      });
    }
    out.push_back(std::move(s));
  }

  {
    SuiteResult s{"framing", 0, 0, {}};
    for (int i = 0; i < 200; ++i) {
      const SeifertMatrix v = random::seifert(rng, random::uniform(rng, 1, 4));
      CurveClass c = random::curve(rng, v.dim(), 8);
      if (c.is_zero()) c = CurveClass::basis(v.dim(), 0);
      run_case(s, [&](std::string& why) {
        why = "c=" + c.str();
        const FramingDifference d = framing_difference(v, c);
        return d.on_circle_factor == 0 && lambda_of_torus(d) == abs(lambda_defect(v, c)) &&
               lambda_defect(v, -c) == lambda_defect(v, c);
      });
      run_case(s, [&](std::string& why) {
        const CurveClass b = find_nonzero_lambda(v);
        why = "find_nonzero_lambda returned " + b.str();
        return lambda_defect(v, b) != 0;
      });
    }
    out.push_back(std::move(s));
  }

  {
    SuiteResult s{"dehn-twist", 0, 0, {}};
    for (int i = 0; i < 100; ++i) {
      const SeifertMatrix v = random::seifert(rng, random::uniform(rng, 1, 3));
      const CurveClass c = random::primitive_curve(rng, v.dim(), 5);
      const Integer p = random::uniform(rng, -3, 3);
      run_case(s, [&](std::string& why) {
        why = "c=" + c.str() + " p=" + p.str();
        const MonodromyMatrix d = dehn_twist_matrix(v, c, p, opt.twist_sign);
        const auto dc = d.h.apply(c.coords());
        if (d.det() != 1 || CurveClass(dc) != c) return false;
        const CurveClass x = random::curve(rng, v.dim(), 5);
        const Integer xjc = v.pairing(x, c) - v.pairing(c, x);  // x^T (V^T - V) c
        if (xjc == 0 && CurveClass(d.h.apply(x.coords())) != x) return false;
        IntMatrix power = IntMatrix::identity(v.dim());
        const MonodromyMatrix one = dehn_twist_matrix(v, c, p < 0 ? -1 : 1, opt.twist_sign);
        for (Integer k = 0; k < abs(p); ++k) power = power * one.h;
        return power == d.h;
      });
    }
    out.push_back(std::move(s));
  }

  {
    SuiteResult s{"twist-sign", 0, 0, {}};
    for (const KnotModel* k : small) {
      for (int i = 0; i < 200; ++i) {
        const CurveClass c = detail::generic_curve(rng, *k, 6);
        run_case(s, [&](std::string& why) {
          const SurgeredAlexander z = surgered_alexander(k->seifert(), c, 1, opt.twist_sign);
          const Integer at1 = z.delta().at_one();
          why = "convention violation: " + k->name() + " c=" + c.str() + " lambda=" + z.lambda.str() +
                ": Delta_Z = " + z.delta().str();
          return abs(at1 - k->epsilon()) == abs(z.lambda) &&
                 torsion_order(z.delta()) == abs(z.lambda + 1) && z.delta().is_symmetric() &&
                 z.delta().leading_coefficient() == 1 &&
                 z.delta().top_doubled() == 2 * static_cast<std::int64_t>(k->genus());
        });
      }
    }
    // lambda = -1 loops: (1,0) on the trefoil, (0,1) on the figure-eight.
    for (const auto& [k, c] : {std::pair{&k31, CurveClass{1, 0}}, std::pair{&k41, CurveClass{0, 1}}}) {
      run_case(s, [&](std::string& why) {
        why = "convention violation: " + k->name() + " c=" + c.str() + " is not divisible";
        const SurgeredAlexander z = surgered_alexander(k->seifert(), c, 1, opt.twist_sign);
        return z.branch == SurgeryBranch::degenerate && z.reduced.has_value();
      });
    }
    out.push_back(std::move(s));
  }

  const std::vector<SWState> bases{unit_fixture(), elliptic_fixture(3)};
  {
    SuiteResult recover{"recover-lambda", 0, 0, {}};
    SuiteResult mt{"meng-taubes", 0, 0, {}};
    SuiteResult conj{"conjugation", 0, 0, {}};
    for (const KnotModel* k : small) {
      for (int i = 0; i < 50; ++i) {
        const CurveClass c = detail::generic_curve(rng, *k, 6);
        const SWState& x = bases[static_cast<std::size_t>(i % 2)];
        run_case(recover, [&](std::string& why) {
          const MarkedTorus t = build_marked_torus(x, *k, c, opt.twist_sign);
          const Integer got = recover_lambda(t, static_cast<std::int64_t>(k->genus()), k->epsilon());
          const Integer want = abs(lambda_defect(k->seifert(), c));
          why = k->name() + " c=" + c.str() + ": recovered " + got.str() + ", Seifert " + want.str();
          return got == want;
        });
        run_case(mt, [&](std::string& why) {
          const SurgeredAlexander z = surgered_alexander(k->seifert(), c, 1, opt.twist_sign);
          const RationalGRE diff = meng_taubes(z.delta(), 1) - meng_taubes(k->alex_sym(), 1);
          const GroupRingElement::Basis b{"t"};
          const GroupRingElement step =
              GroupRingElement::generator(b, "t") - GroupRingElement::generator(b, "t", -1);
          const RationalGRE cleared = diff * (step * step);
          const GroupRingElement want =
              substitute_square(z.delta(), b, "t") - substitute_square(k->alex_sym(), b, "t");
          const GroupRingElement gen = lemma_dd_generator(unit_fixture(), *k, c, opt.twist_sign);
          why = k->name() + " c=" + c.str() + ": " + cleared.str() + " vs " + want.str();
          const GroupRingElement want_f = substitute_square(z.delta(), "F") -
                                          substitute_square(k->alex_sym(), "F");
          return cleared.is_polynomial() && cleared.polynomial() == want && gen == want_f;
        });
        run_case(conj, [&](std::string& why) {
          const MarkedTorus t = build_marked_torus(x, *k, c, opt.twist_sign);
          why = k->name() + " c=" + c.str();
          for (const auto* g : {&t.gen_010, &t.gen_001})
            if (!conjugation_check(*g, x.parity)) return false;
          return conjugation_ok(knot_surgery_sw(x, *k, x.fiber_class));
        });
      }
    }
    out.push_back(std::move(recover));
    out.push_back(std::move(mt));
    out.push_back(std::move(conj));
  }

  {
    SuiteResult s{"family", 0, 0, {}};
    for (const KnotModel* k : small) {
      run_case(s, [&](std::string& why) {
        const CurveClass c = k == &k31 ? CurveClass{1, -1} : find_nonzero_lambda(k->seifert());
        const CurveClass e{0, 1};
        const auto rows = generate_family(k->seifert(), e, c, 100);
        const FamilyCertificate cert = certify_family(rows);
        why = k->name() + ": certified " + std::to_string(cert.certified);
        for (const auto& r : rows)
          if (r.lambda != lambda_defect(k->seifert(), r.curve)) return false;
        return cert.certified >= 30;
      });
    }
    out.push_back(std::move(s));
  }

  {
    SuiteResult s{"scenarios", 0, 0, {}};
    run_case(s, [&](std::string& why) {
      const SWState x = unit_fixture();
      const MarkedTorus t = build_meridian_torus(x, k31);
      const GRESubmodule want(x.basis, {knot_surgery_sw(x, k31, "F").polynomial()});
      why = "meridian torus";
      return submodule_equal(invariant_set(t), want) && recover_lambda(t, 1, k31.epsilon()) == 0;
    });
    run_case(s, [&](std::string& why) {
      const ScenarioReport r = selt_scenario();
      why = "selt";
      return !r.sw_distinguishes && r.lambda_distinguishes && r.lambda[0] == 1 && r.lambda[1] == 3;
    });
    out.push_back(std::move(s));
  }

  {
    SuiteResult s{"group-ring", 0, 0, {}};
    const GroupRingElement::Basis b{"F", "kappa"};
    for (int i = 0; i < 500; ++i) {
      const GroupRingElement x = random::element(rng, b, 4);
      const GroupRingElement y = random::nonzero_element(rng, b, 3);
      const GroupRingElement z = random::element(rng, b, 3);
      run_case(s, [&](std::string& why) {
        why = "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
        const auto q = exact_divide(x * y, y);
        return q && *q == x && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
               x * y == y * x;
      });
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lagrangia
