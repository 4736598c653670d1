#include <gtest/gtest.h>

#include "lagrangia/catalog.hpp"
#include "lagrangia/random.hpp"
#include "lagrangia/seifert.hpp"
#include "support.hpp"

using namespace lagrangia;
using testing_support::c;
using testing_support::t;

namespace {

// Delta from the cofactor oracle: det(V - t V^T) / t^g with positive top coefficient.
LaurentPoly oracle_alexander(const SeifertMatrix& v) {
  oracle::Poly p = oracle::seifert_pencil(v.matrix());
  if (!p.empty() && p.back() < 0) p = oracle::scale(p, -1);
  return testing_support::from_oracle(p, -static_cast<std::int64_t>(v.genus()));
}

LaurentPoly oracle_charpoly_sym(const IntMatrix& h) {
  oracle::Poly p = oracle::charpoly(h);
  if (!p.empty() && p.back() < 0) p = oracle::scale(p, -1);
  return testing_support::from_oracle(p, -static_cast<std::int64_t>(h.rows() / 2));
}

}  // namespace

TEST(SeifertMatrix, ValidatesShapeAndUnimodularity) {
  EXPECT_ERRC(SeifertMatrix(IntMatrix(2, 3)), errc::dimension);
  EXPECT_ERRC(SeifertMatrix(IntMatrix{{1}}), errc::dimension);
  EXPECT_ERRC(SeifertMatrix(IntMatrix{{1, 0}, {0, 1}}), errc::invalid_seifert_data);
  EXPECT_TRUE(SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}}).fibered());
  EXPECT_FALSE(SeifertMatrix(IntMatrix{{-1, 1}, {0, -2}}).fibered());
}

TEST(Alexander, SeedKnots) {
  EXPECT_EQ(trefoil().alex_sym(), t(1) - c(1) + t(-1));
  EXPECT_EQ(figure_eight().alex_sym(), t(1) - c(3) + t(-1));
  EXPECT_EQ(unknot().alex_sym(), c(1));
  EXPECT_EQ(trefoil().alex_sym().str(), "t - 1 + t^-1");
  EXPECT_EQ(trefoil().epsilon(), 1);
  EXPECT_EQ(figure_eight().epsilon(), -1);
  EXPECT_EQ(unknot().epsilon(), 1);
  EXPECT_EQ(epsilon_of(trefoil()), 1);
}

TEST(Alexander, AgreesWithCofactorOracle) {
  random::Engine rng(3);
  for (int i = 0; i < 60; ++i) {
    const SeifertMatrix v = random::seifert(rng, static_cast<std::size_t>(random::uniform(rng, 1, 3)));
    EXPECT_EQ(alexander_from_seifert(v), oracle_alexander(v)) << v.matrix().str();
  }
  for (const KnotModel& k : {trefoil(), figure_eight()})
    EXPECT_EQ(k.alex_sym(), oracle_alexander(k.seifert()));
}

TEST(Alexander, EpsilonRejectsNonUnitValues) {
  EXPECT_ERRC(epsilon_of(t(1) - c(4) + t(-1)), errc::invalid_seifert_data);
}

TEST(Monodromy, Trefoil) {
  const MonodromyMatrix h = monodromy(trefoil().seifert());
  EXPECT_EQ(h.h, (IntMatrix{{0, 1}, {-1, 1}}));
  EXPECT_EQ(h.characteristic_polynomial(), (std::vector<Integer>{1, -1, 1}));
  EXPECT_EQ(symmetrized_charpoly(h), trefoil().alex_sym());
}

TEST(Monodromy, FigureEightAgainstBruteForce) {
  const IntMatrix v{{1, 1}, {0, -1}};
  const MonodromyMatrix h = monodromy(SeifertMatrix(v));
  // V h = V^T checks h = V^{-1} V^T without inverting.
  EXPECT_EQ(v * h.h, v.transpose());
  EXPECT_EQ(h.trace(), 3);
  EXPECT_EQ(abs(h.det()), 1);
  EXPECT_EQ(h.characteristic_polynomial(), oracle::charpoly(h.h));
  EXPECT_EQ(symmetrized_charpoly(h), figure_eight().alex_sym());
}

TEST(Monodromy, UnknotAndNonFibered) {
  const MonodromyMatrix h = monodromy(unknot().seifert());
  EXPECT_EQ(h.h.rows(), 0u);
  EXPECT_EQ(symmetrized_charpoly(h), c(1));
  EXPECT_ERRC(monodromy(SeifertMatrix(IntMatrix{{-1, 1}, {0, -2}})), errc::not_fibered);
}

TEST(Monodromy, FiberedCharpolyMatchesAlexander) {
  random::Engine rng(5);
  for (int i = 0; i < 40; ++i) {
    const SeifertMatrix v = random::fibered_seifert(rng, static_cast<std::size_t>(random::uniform(rng, 1, 3)));
    const MonodromyMatrix h = monodromy(v);
    EXPECT_EQ(oracle_charpoly_sym(h.h), alexander_from_seifert(v)) << v.matrix().str();
    EXPECT_EQ(symmetrized_charpoly(h), alexander_from_seifert(v));
  }
}

TEST(DehnTwist, Examples) {
  const SeifertMatrix v = trefoil().seifert();
  EXPECT_EQ(dehn_twist_matrix(v, {1, 0}, 1).h, (IntMatrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(dehn_twist_matrix(v, {1, -1}, 1).h, (IntMatrix{{0, -1}, {1, 2}}));
  EXPECT_EQ(dehn_twist_matrix(v, {1, -1}, 0).h, IntMatrix::identity(2));
  EXPECT_ERRC(dehn_twist_matrix(v, {0, 0}, 1), errc::degenerate_curve);
  EXPECT_ERRC(dehn_twist_matrix(v, {1, 0, 0}, 1), errc::dimension);
}

TEST(DehnTwist, PowersAndFixedVectors) {
  random::Engine rng(8);
  for (int i = 0; i < 50; ++i) {
    const SeifertMatrix v = random::seifert(rng, static_cast<std::size_t>(random::uniform(rng, 1, 3)));
    const CurveClass cc = random::primitive_curve(rng, v.dim(), 4);
    const auto p = static_cast<unsigned>(random::uniform(rng, 0, 4));
    const MonodromyMatrix d = dehn_twist_matrix(v, cc, p);
    EXPECT_EQ(d.det(), 1);
    EXPECT_EQ(d.h, oracle::power(dehn_twist_matrix(v, cc, 1).h, p));
    EXPECT_EQ(CurveClass(d.h.apply(cc.coords())), cc);
    // Transvection formula x -> x + p s (x^T J c) c checked on basis vectors.
    const IntMatrix j = v.intersection_form();
    for (std::size_t b = 0; b < v.dim(); ++b) {
      const CurveClass x = CurveClass::basis(v.dim(), b);
      const Integer xjc = oracle::bilinear(j, {x.coords().begin(), x.coords().end()},
                                           {cc.coords().begin(), cc.coords().end()});
      EXPECT_EQ(CurveClass(d.h.apply(x.coords())), x + (Integer(p) * kTwistSign * xjc) * cc);
    }
  }
}

TEST(SurgeredAlexander, TrefoilExamples) {
  const SeifertMatrix v = trefoil().seifert();
  const SurgeredAlexander a = surgered_alexander(v, {1, -1}, 1);
  EXPECT_EQ(a.branch, SurgeryBranch::regular);
  EXPECT_EQ(a.lambda, -3);
  EXPECT_EQ(a.delta(), t(1) - c(4) + t(-1));
  EXPECT_EQ(oracle_charpoly_sym(IntMatrix{{1, -1}, {-2, 3}}), a.delta());

  const SurgeredAlexander b = surgered_alexander(v, {1, 0}, 1);
  EXPECT_EQ(b.branch, SurgeryBranch::degenerate);
  EXPECT_EQ(b.charpoly, t(1) - c(2) + t(-1));
  ASSERT_TRUE(b.reduced.has_value());
  EXPECT_EQ(*b.reduced, c(1));

  EXPECT_EQ(surgered_alexander(v, {1, -1}, 0).delta(), trefoil().alex_sym());
}

TEST(SurgeredAlexander, FlippedSignBreaksDegenerateBranch) {
  EXPECT_ERRC(surgered_alexander(trefoil().seifert(), {1, 0}, 1, +1), errc::convention_violation);
}

TEST(SurgeredAlexander, TorsionOrder) {
  EXPECT_EQ(torsion_order(t(1) - c(4) + t(-1)), 2);
  EXPECT_EQ(torsion_order(t(1) - c(1) + t(-1)), 1);
  EXPECT_EQ(torsion_order(c(0)), 0);
}
