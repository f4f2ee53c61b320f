#include <gtest/gtest.h>

#include "betti_cone/catalog.hpp"
#include "betti_cone/cone.hpp"
#include "betti_cone/functionals.hpp"

using namespace betti;

namespace {

const RingSpec kQ = RingSpec::quadric(1, 0, 0);
const RingSpec kA3 = RingSpec::embdim1(3);

std::vector<DegreeSequence> sequences_near(const RingSpec& ring, int reach) {
  std::vector<DegreeSequence> out;
  for (int d0 = -reach; d0 <= reach; ++d0) {
    out.push_back(DegreeSequence::pd0(d0));
    for (int d1 = d0 + 1; d1 <= reach; ++d1) {
      if (ring.is_quadric()) out.push_back(DegreeSequence::pd1(d0, d1));
      if (ring.is_quadric() || d1 < d0 + ring.n()) out.push_back(DegreeSequence::inf(d0, d1));
    }
  }
  return out;
}

BettiDiagram single(const RingSpec& ring, int i, int j, const Rational& x) {
  std::vector<Column> c(i + 1);
  c[i][j] = x;
  return BettiDiagram::make(ring, c, std::nullopt);
}

}  // namespace

TEST(Functionals, GammaAndEtaCoefficientPatterns) {
  // Dot products with unit diagrams: gamma_2 weighs rows <= 2 by (2, -2, 1),
  // eta_3 weighs rows <= 2 by (0, 1, -1, 0).
  for (int row = -1; row <= 3; ++row) {
    const std::vector<int> gamma = row <= 2 ? std::vector<int>{2, -2, 1} : std::vector<int>{0, 0, 0};
    for (int i = 0; i < 3; ++i) EXPECT_EQ(eval(Gamma{2}, single(kQ, i, row + i, 1)), Rational(gamma[i]));
    const std::vector<int> eta = row <= 2 ? std::vector<int>{0, 1, -1, 0} : std::vector<int>{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) EXPECT_EQ(eval(Eta{3}, single(kA3, i, row + i, 1)), Rational(eta[i]));
  }
}

TEST(Functionals, ValuesOnSmallDiagrams) {
  EXPECT_EQ(eval(Gamma{2}, pure_diagram(kQ, DegreeSequence::inf(0, 3))), Rational(0));
  EXPECT_EQ(eval(AlphaQ{3}, BettiDiagram(kQ)), Rational(0));
  EXPECT_EQ(eval(AlphaA{0, 0}, pure_diagram(kA3, DegreeSequence::inf(0, 1))), Rational(0));
  EXPECT_EQ(eval(AlphaA{0, 0}, pure_diagram(kA3, DegreeSequence::pd0(0))), Rational(1));
  EXPECT_EQ(eval(EtaInf{}, pure_diagram(kA3, DegreeSequence::inf(0, 1))), Rational(0));
  EXPECT_THROW(check_family(Gamma{0}, kA3), FamilyMismatch);
  EXPECT_THROW(check_family(Theta{0}, kQ), FamilyMismatch);
}

TEST(Functionals, EveryPureDiagramSatisfiesEveryHalfspace) {
  for (const RingSpec& ring : {kQ, RingSpec::quadric(0, 1, 0), RingSpec::embdim1(2), kA3, RingSpec::embdim1(4)}) {
    for (const auto& d : sequences_near(ring, 3)) {
      const auto v = pure_diagram(ring, d);
      for (const auto& f : active_functionals(ring, {&v})) {
        const Rational x = eval(f, v);
        if (is_equality(f)) EXPECT_EQ(sgn(x), 0) << describe(f) << " on " << d.describe(ring);
        else EXPECT_GE(sgn(x), 0) << describe(f) << " on " << d.describe(ring);
      }
      EXPECT_FALSE(membership(ring, v).has_value()) << d.describe(ring);
    }
  }
}

TEST(Membership, NamesTheFirstViolation) {
  const auto neg = membership(kQ, single(kQ, 0, 0, -1));
  ASSERT_TRUE(neg.has_value());
  EXPECT_EQ(neg->functional, FunctionalId(Eps{0, 0}));
  EXPECT_EQ(neg->value, Rational(-1));

  const auto v = BettiDiagram::make(kQ, {{}, {{2, 1}}, {{3, 2}}}, ShiftPeriodic{1, 1, 2});
  const auto alpha = membership(kQ, v);
  ASSERT_TRUE(alpha.has_value());
  EXPECT_EQ(alpha->functional, FunctionalId(AlphaQ{2}));
  EXPECT_EQ(alpha->value, Rational(-1));

  EXPECT_FALSE(membership(kQ, BettiDiagram(kQ)).has_value());
  EXPECT_THROW(membership(kA3, single(kQ, 0, 0, 1)), FamilyMismatch);
}

TEST(Decompose, StoredExamples) {
  const auto dec = decompose(kQ, two_generator_diagram());
  ASSERT_EQ(dec.terms.size(), 3u);
  EXPECT_EQ(dec.terms[0].coefficient, make_rational(1, 2));
  EXPECT_EQ(dec.terms[0].sequence, DegreeSequence::inf(0, 1));
  EXPECT_EQ(dec.terms[1].coefficient, Rational(1));
  EXPECT_EQ(dec.terms[1].sequence, DegreeSequence::pd1(0, 3));
  EXPECT_EQ(dec.terms[2].coefficient, make_rational(1, 2));
  EXPECT_EQ(dec.terms[2].sequence, DegreeSequence::inf(0, 4));

  const auto intro = decompose(kQ, ideal_x_diagram());
  ASSERT_EQ(intro.terms.size(), 2u);
  EXPECT_EQ(intro.terms[1].sequence, DegreeSequence::pd0(0));
}

TEST(Decompose, GreedyStepsMatchTheWorkedExample) {
  const auto v = two_generator_diagram();
  EXPECT_EQ(minimal_compatible(kQ, v), DegreeSequence::inf(0, 1));
  EXPECT_EQ(max_step(kQ, v, DegreeSequence::inf(0, 1)), make_rational(1, 2));
  const auto rest = v - pure_diagram(kQ, DegreeSequence::inf(0, 1)).scaled(make_rational(1, 2));
  EXPECT_EQ(max_step(kQ, rest, DegreeSequence::pd1(0, 3)), Rational(1));
  const auto last = rest - pure_diagram(kQ, DegreeSequence::pd1(0, 3));
  EXPECT_EQ(minimal_compatible(kQ, last), DegreeSequence::inf(0, 4));
  EXPECT_EQ(minimal_compatible(kQ, pure_diagram(kQ, DegreeSequence::pd0(2))), DegreeSequence::pd0(2));
}

TEST(Decompose, PureDiagramsAreTheirOwnDecomposition) {
  for (const RingSpec& ring : {kQ, kA3}) {
    for (const auto& d : sequences_near(ring, 2)) {
      const auto v = pure_diagram(ring, d);
      EXPECT_EQ(max_step(ring, v, d), Rational(1));
      const auto dec = decompose(ring, v);
      ASSERT_EQ(dec.terms.size(), 1u) << d.describe(ring);
      EXPECT_EQ(dec.terms[0].sequence, d);
      EXPECT_EQ(dec.terms[0].coefficient, Rational(1));
    }
  }
}

TEST(Decompose, ChainsAreStrictAndScaleLinearly) {
  // Positive combinations along a chain decompose back into that chain.
  const std::vector<std::vector<DegreeSequence>> chains = {
      {DegreeSequence::inf(0, 1), DegreeSequence::pd1(0, 3), DegreeSequence::inf(0, 4), DegreeSequence::pd0(0)},
      {DegreeSequence::pd1(-1, 0), DegreeSequence::inf(-1, 1), DegreeSequence::pd1(-1, 1), DegreeSequence::pd0(-1)},
  };
  for (const auto& chain : chains) {
    BettiDiagram v(kQ);
    int k = 1;
    for (const auto& d : chain) v = v + pure_diagram(kQ, d).scaled(make_rational(k++, 3));
    const auto dec = decompose(kQ, v);
    ASSERT_EQ(dec.terms.size(), chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
      EXPECT_EQ(dec.terms[i].sequence, chain[i]);
      EXPECT_EQ(dec.terms[i].coefficient, make_rational(static_cast<long>(i) + 1, 3));
      if (i) EXPECT_TRUE(precedes(kQ, dec.terms[i - 1].sequence, dec.terms[i].sequence));
    }
    EXPECT_EQ(reassemble(kQ, dec), v);
    const auto scaled = decompose(kQ, v.scaled(7));
    for (std::size_t i = 0; i < chain.size(); ++i) {
      EXPECT_EQ(scaled.terms[i].coefficient, dec.terms[i].coefficient * 7);
    }
  }
}

TEST(Decompose, RejectsPointsOutsideTheCone) {
  try {
    decompose(kQ, single(kQ, 1, 1, 1));
    FAIL() << "expected NotInCone";
  } catch (const NotInCone& e) {
    EXPECT_EQ(family_name(e.violation().functional), "gamma");
  }
}

TEST(Hilbert, ValuesFromDiagrams) {
  const std::vector<int> ring_values{1, 2, 2};
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(hilbert_function(kQ, pure_diagram(kQ, DegreeSequence::pd0(0)), k), Rational(ring_values[k]));
  }
  const std::vector<int> cyclic{1, 2, 2, 1, 0};
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(hilbert_function(kQ, pure_diagram(kQ, DegreeSequence::pd1(0, 3)), k), Rational(cyclic[k]));
  }
  const std::vector<int> artinian{1, 1, 1, 0};
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(hilbert_function(kA3, pure_diagram(kA3, DegreeSequence::pd0(0)), k), Rational(artinian[k]));
  }
}

TEST(Multiplicity, PureDiagramsAndBounds) {
  for (int d1 = 1; d1 <= 5; ++d1) {
    EXPECT_EQ(multiplicity(kQ, pure_diagram(kQ, DegreeSequence::pd1(0, d1))), Rational(2 * d1));
    EXPECT_EQ(multiplicity(kQ, pure_diagram(kQ, DegreeSequence::inf(0, d1))), Rational(2 * d1 - 1));
  }
  EXPECT_EQ(multiplicity(kQ, pure_diagram(kQ, DegreeSequence::pd0(0))), Rational(2));

  const auto r = multiplicity_bounds(kQ, two_generator_diagram());
  EXPECT_EQ(r.min_compatible, DegreeSequence::inf(0, 1));
  EXPECT_EQ(r.max_compatible, DegreeSequence::inf(0, 4));
  ASSERT_TRUE(r.lower.has_value());
  EXPECT_EQ(*r.lower, Rational(2));
  EXPECT_EQ(r.upper, Rational(14));
  EXPECT_EQ(r.e, Rational(10));
  EXPECT_FALSE(r.lower_equal || r.upper_equal || r.extremes_coincide);

  const auto intro = multiplicity_bounds(kQ, ideal_x_diagram());
  EXPECT_EQ(intro.max_compatible, DegreeSequence::pd0(0));
  EXPECT_FALSE(intro.lower.has_value());
  EXPECT_EQ(intro.upper, Rational(2));
  EXPECT_EQ(intro.e, Rational(1));

  const auto pure = multiplicity_bounds(kQ, pure_diagram(kQ, DegreeSequence::inf(0, 3)));
  EXPECT_TRUE(pure.lower_equal && pure.upper_equal && pure.extremes_coincide);

  const auto two_degrees = BettiDiagram::make(kQ, {{{0, 1}, {1, 1}}}, std::nullopt);
  EXPECT_THROW(multiplicity_bounds(kQ, two_degrees), MultipleGeneratorDegrees);
}
