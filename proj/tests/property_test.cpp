// Randomized properties. Each test sweeps a fixed-seed sample so failures
// reproduce exactly.

#include <gtest/gtest.h>

#include <set>

#include "lagrangia/catalog.hpp"
#include "lagrangia/framing.hpp"
#include "lagrangia/random.hpp"
#include "lagrangia/swcalc.hpp"
#include "support.hpp"

using namespace lagrangia;

namespace {

const GroupRingElement::Basis kFK{"F", "kappa"};

CurveClass generic_curve(random::Engine& rng, const KnotModel& k) {
  for (;;) {
    CurveClass c = random::primitive_curve(rng, k.seifert().dim(), 6);
    const Integer l = lambda_defect(k.seifert(), c);
    if (l != 0 && l != -1) return c;
  }
}

}  // namespace

TEST(Property, RingLaws) {
  random::Engine rng(101);
  for (int i = 0; i < 300; ++i) {
    const auto x = random::element(rng, kFK, 4), y = random::element(rng, kFK, 4), z = random::element(rng, kFK, 4);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x + y, y + x);
  }
}

TEST(Property, ExactDivisionInvertsMultiplication) {
  random::Engine rng(103);
  for (int i = 0; i < 500; ++i) {
    const auto a = random::element(rng, kFK, 4);
    const auto b = random::nonzero_element(rng, kFK, 3);
    const auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q.has_value()) << a << " / " << b;
    EXPECT_EQ(*q, a);
  }
}

TEST(Property, HnfIdempotentAndPermutationInvariant) {
  random::Engine rng(107);
  for (int i = 0; i < 100; ++i) {
    std::vector<GroupRingElement> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random::element(rng, kFK, 3, 2, 4));
    const GRESubmodule m(kFK, gens);
    const auto canon = m.canonical_form();
    EXPECT_EQ(GRESubmodule(kFK, canon).canonical_form(), canon);
    std::vector<GroupRingElement> rev(gens.rbegin(), gens.rend());
    EXPECT_EQ(GRESubmodule(kFK, rev).canonical_form(), canon);
  }
}

TEST(Property, LambdaEvenAndExpansion) {
  random::Engine rng(109);
  for (int i = 0; i < 500; ++i) {
    const SeifertMatrix v = random::seifert(rng, static_cast<std::size_t>(random::uniform(rng, 1, 5)));
    const CurveClass e = random::curve(rng, v.dim(), 6), c = random::curve(rng, v.dim(), 6);
    const Integer n = random::uniform(rng, -20, 20);
    EXPECT_EQ(lambda_bilinear_expand(v, e, c, n), lambda_defect(v, e + n * c));
    EXPECT_EQ(lambda_defect(v, -c), lambda_defect(v, c));
    if (!c.is_zero()) {
      EXPECT_EQ(lambda_of_torus(framing_difference(v, c)), abs(lambda_defect(v, c)));
    }
  }
}

TEST(Property, DehnTwistFixesJOrthogonalComplement) {
  random::Engine rng(113);
  for (int i = 0; i < 200; ++i) {
    const SeifertMatrix v = random::seifert(rng, static_cast<std::size_t>(random::uniform(rng, 1, 3)));
    const CurveClass c = random::primitive_curve(rng, v.dim(), 5);
    const MonodromyMatrix d = dehn_twist_matrix(v, c, random::uniform(rng, -3, 3));
    EXPECT_EQ(d.det(), 1);
    const CurveClass x = random::curve(rng, v.dim(), 5);
    const CurveClass image(d.h.apply(x.coords()));
    const IntMatrix j = v.intersection_form();
    const std::vector<Integer> xs(x.coords().begin(), x.coords().end()), cs(c.coords().begin(), c.coords().end());
    if (oracle::bilinear(j, xs, cs) == 0) {
      EXPECT_EQ(image, x);
    }
    // Always: image - x is a multiple of c.
    const CurveClass delta = image + -x;
    EXPECT_TRUE(delta.is_zero() || delta.is_multiple_of(c));
  }
}

TEST(Property, SurgeredAlexanderShape) {
  random::Engine rng(127);
  for (const KnotModel& k : {trefoil(), figure_eight()}) {
    for (int i = 0; i < 200; ++i) {
      const CurveClass c = generic_curve(rng, k);
      const SurgeredAlexander z = surgered_alexander(k.seifert(), c, 1);
      EXPECT_TRUE(z.delta().is_symmetric());
      EXPECT_EQ(z.delta().leading_coefficient(), 1);
      EXPECT_EQ(z.delta().top_doubled(), 2);
      EXPECT_EQ(abs(z.delta().at_one() - k.epsilon()), abs(z.lambda));
      EXPECT_EQ(torsion_order(z.delta()), abs(z.lambda + 1));
    }
  }
}

TEST(Property, SurgeryCombineIsLinear) {
  random::Engine rng(131);
  const MarkedTorus t = build_marked_torus(elliptic_fixture(3), trefoil(), {2, -1});
  for (int i = 0; i < 100; ++i) {
    const Integer p1 = random::uniform(rng, -9, 9), q1 = random::uniform(rng, -9, 9), r1 = random::uniform(rng, -9, 9);
    const Integer p2 = random::uniform(rng, -9, 9), q2 = random::uniform(rng, -9, 9), r2 = random::uniform(rng, -9, 9);
    const Integer k = random::uniform(rng, -5, 5);
    EXPECT_EQ(surgery_combine(t, p1 + k * p2, q1 + k * q2, r1 + k * r2),
              surgery_combine(t, p1, q1, r1) + k * surgery_combine(t, p2, q2, r2));
  }
}

TEST(Property, RecoveryAndConjugationAcrossBases) {
  random::Engine rng(137);
  for (const KnotModel& k : {trefoil(), figure_eight()}) {
    for (int n = 2; n <= 4; ++n) {
      const SWState x = elliptic_fixture(n);
      EXPECT_TRUE(conjugation_ok(knot_surgery_sw(x, k, "F")));
      for (int i = 0; i < 20; ++i) {
        const CurveClass c = generic_curve(rng, k);
        const MarkedTorus t = build_marked_torus(x, k, c);
        EXPECT_EQ(recover_lambda(t, 1, k.epsilon()), abs(lambda_defect(k.seifert(), c)));
        EXPECT_TRUE(conjugation_check(t.gen_010, x.parity));
        EXPECT_TRUE(conjugation_check(t.gen_001, x.parity));
      }
    }
  }
}

TEST(Property, FamiliesOverRandomDirections) {
  random::Engine rng(139);
  for (const KnotModel& k : {trefoil(), figure_eight()}) {
    int tested = 0;
    while (tested < 20) {
      const CurveClass e = random::primitive_curve(rng, 2, 4), c = random::primitive_curve(rng, 2, 4);
      if (lambda_defect(k.seifert(), c) == 0 || e.is_multiple_of(c)) continue;
      ++tested;
      const auto rows = generate_family(k.seifert(), e, c, 100);
      std::vector<Integer> mags;
      for (const auto& r : rows) {
        EXPECT_EQ(r.lambda, lambda_defect(k.seifert(), r.curve));
        if (r.primitive) mags.push_back(abs(r.lambda));
      }
      const FamilyCertificate cert = certify_family(rows);
      const std::set<Integer> tail(mags.begin() + static_cast<std::ptrdiff_t>(cert.monotone_from), mags.end());
      EXPECT_EQ(tail.size(), cert.certified);
      // When (e, c) extends to a basis every e + n c is primitive.
      if (abs(e[0] * c[1] - e[1] * c[0]) == 1) {
        EXPECT_EQ(cert.primitive_rows, 100u);
        EXPECT_GE(cert.certified, 30u);
      }
    }
  }
}
