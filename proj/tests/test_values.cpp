#include <gtest/gtest.h>

#include <random>

#include "betti_cone/betti_diagram.hpp"
#include "betti_cone/errors.hpp"
#include "betti_cone/linalg.hpp"

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

}  // namespace

TEST(Rational, PrintsAndParsesCanonically) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5", "/2", "2/"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Linalg, RankNullspaceAndSolveAgree) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    linalg::Matrix m(4, 5);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = coeff(rng);
    }
    if (trial % 3 == 0) {
      for (std::size_t c = 0; c < 5; ++c) m(3, c) = m(0, c) + m(1, c);
    }
    const auto kernel = linalg::nullspace(m);
    EXPECT_EQ(linalg::rank(m) + kernel.size(), 5u);
    for (const auto& v : kernel) {
      for (const auto& x : m.apply(v)) EXPECT_EQ(sgn(x), 0);
    }
    linalg::Vector x(5);
    for (auto& xi : x) xi = coeff(rng);
    const auto b = m.apply(x);
    const auto sol = linalg::solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
}

TEST(Linalg, InconsistentSystemHasNoSolution) {
  linalg::Matrix m(2, 1);
  m(0, 0) = 1;
  m(1, 0) = 1;
  const linalg::Vector b{1, 2};
  EXPECT_FALSE(linalg::solve(m, b).has_value());
}

TEST(Linalg, NonnegativeFeasibilityMatchesEnumeration) {
  // Right-hand sides built from known nonnegative points must be feasible.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    linalg::Matrix a(2, 3);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = coeff(rng);
    }
    linalg::Vector x(3);
    for (auto& xi : x) xi = make_rational(std::uniform_int_distribution<int>(0, 4)(rng), 2);
    const auto b = a.apply(x);
    EXPECT_TRUE(linalg::nonnegative_feasible(a, b));
  }
  linalg::Matrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  const linalg::Vector b{-1};
  EXPECT_FALSE(linalg::nonnegative_feasible(a, b));
}

TEST(Ring, RejectsDegenerateInput) {
  EXPECT_THROW(RingSpec::embdim1(1), InvalidArgument);
  EXPECT_THROW(RingSpec::quadric(0, 0, 0), InvalidArgument);
  EXPECT_EQ(kQ.hilbert(0), 1);
  EXPECT_EQ(kQ.hilbert(5), 2);
  EXPECT_EQ(kA3.hilbert(2), 1);
  EXPECT_EQ(kA3.hilbert(3), 0);
}

TEST(DegreeSequence, ValidatesShapes) {
  EXPECT_THROW(DegreeSequence::inf(2, 2).validate(kQ), InvalidArgument);
  EXPECT_THROW(DegreeSequence::pd1(0, 2).validate(kA3), InvalidArgument);
  EXPECT_THROW(DegreeSequence::inf(0, 3).validate(kA3), InvalidArgument);
  EXPECT_NO_THROW(DegreeSequence::inf(0, 2).validate(kA3));
  EXPECT_EQ(DegreeSequence::inf(0, 3).describe(kQ), "(0,3,4,5,...)");
  EXPECT_EQ(DegreeSequence::pd1(0, 3).describe(kQ), "(0,3,inf,...)");
  EXPECT_EQ(DegreeSequence::inf(0, 1).describe(kA3), "(0,1,3,4,...)");
  EXPECT_EQ(DegreeSequence::inf(0, 1).degree(kA3, 5), 7);
  EXPECT_FALSE(DegreeSequence::pd1(0, 1).degree(kQ, 2).has_value());
}

TEST(DegreeSequence, QuadricOrderExamples) {
  EXPECT_EQ(compare(kQ, DegreeSequence::pd1(0, 1), DegreeSequence::inf(0, 2)), Order::Less);
  EXPECT_EQ(compare(kQ, DegreeSequence::inf(0, 2), DegreeSequence::pd1(0, 2)), Order::Less);
  EXPECT_EQ(compare(kQ, DegreeSequence::pd1(0, 3), DegreeSequence::pd1(1, 2)), Order::Incomparable);
  EXPECT_EQ(compare(kQ, DegreeSequence::pd0(1), DegreeSequence::pd0(1)), Order::Equal);
}

TEST(DegreeSequence, EmbDim1PutsInfiniteDimensionBelow) {
  EXPECT_EQ(compare(kA3, DegreeSequence::inf(5, 6), DegreeSequence::pd0(-5)), Order::Less);
  EXPECT_EQ(compare(kA3, DegreeSequence::inf(0, 1), DegreeSequence::inf(0, 2)), Order::Less);
  EXPECT_EQ(compare(kA3, DegreeSequence::inf(0, 2), DegreeSequence::inf(1, 2)), Order::Less);
  EXPECT_EQ(compare(kA3, DegreeSequence::inf(0, 2), DegreeSequence::inf(1, 1 + 1)), Order::Less);
  EXPECT_EQ(compare(kA3, DegreeSequence::inf(0, 2), DegreeSequence::inf(1, 1 + 2)), Order::Less);
}

TEST(DegreeSequence, OrderIsAStrictPartialOrder) {
  for (const RingSpec& ring : {kQ, kA3}) {
    const auto all = sequences_near(ring, 3);
    for (const auto& a : all) {
      EXPECT_FALSE(precedes(ring, a, a));
      for (const auto& b : all) {
        if (precedes(ring, a, b)) {
          EXPECT_FALSE(precedes(ring, b, a));
          for (const auto& c : all) {
            if (precedes(ring, b, c)) EXPECT_TRUE(precedes(ring, a, c));
          }
        }
      }
    }
  }
}

TEST(BettiDiagram, PureDiagramsFollowTheirTails) {
  const auto v = pure_diagram(kQ, DegreeSequence::inf(0, 3));
  EXPECT_EQ(v.entry(7, 9), Rational(2));
  EXPECT_EQ(v.entry(0, 0), Rational(1));
  EXPECT_EQ(v.entry(3, 4), Rational(0));
  EXPECT_EQ(pure_diagram(kA3, DegreeSequence::inf(0, 1)).entry(4, 6), Rational(1));
  const auto p = pure_diagram(kQ, DegreeSequence::pd0(5));
  EXPECT_EQ(p.entry(0, 5), Rational(1));
  EXPECT_FALSE(p.tail().has_value());
  EXPECT_EQ(BettiDiagram(kQ).entry(4, 2), Rational(0));
}

TEST(BettiDiagram, InconsistentTailIsReported) {
  try {
    BettiDiagram::make(kQ, {{{0, 1}}, {{1, 2}}, {{2, 2}}, {{3, 1}}}, ShiftPeriodic{1, 1, 2});
    FAIL() << "expected TailInconsistency";
  } catch (const TailInconsistency& e) {
    EXPECT_EQ(e.column(), 2);
    EXPECT_EQ(e.degree(), 2);
  }
  EXPECT_THROW(BettiDiagram::make(kQ, {{{0, 1}}}, ShiftPeriodic{0, 1, 2}), InvalidArgument);
}

TEST(BettiDiagram, NormalisationMakesEqualityExact) {
  const auto a = BettiDiagram::make(kQ, {{{0, 1}}, {{1, 2}}, {{2, 2}}}, ShiftPeriodic{1, 1, 2});
  const auto b = BettiDiagram::make(kQ, {{{0, 1}}, {{1, 2}}, {{2, 2}}, {{3, 2}}, {{4, 2}}}, ShiftPeriodic{1, 1, 2});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, pure_diagram(kQ, DegreeSequence::inf(0, 1)));
}

TEST(BettiDiagram, LinearCombination) {
  const auto a = pure_diagram(kQ, DegreeSequence::inf(0, 1));
  const auto b = pure_diagram(kQ, DegreeSequence::pd0(0));
  std::vector<std::pair<Rational, BettiDiagram>> half{{make_rational(1, 2), a}, {make_rational(1, 2), b}};
  const auto v = linear_combine(half);
  EXPECT_EQ(v.entry(0, 0), Rational(1));
  for (int i = 1; i < 8; ++i) EXPECT_EQ(v.entry(i, i), Rational(1));
  std::vector<std::pair<Rational, BettiDiagram>> trivial{{Rational(1), a}, {Rational(0), b}};
  EXPECT_EQ(linear_combine(trivial), a);
  EXPECT_EQ(a - a, BettiDiagram(kQ));
  std::vector<std::pair<Rational, BettiDiagram>> mixed{{Rational(1), a},
                                                       {Rational(1), pure_diagram(kA3, DegreeSequence::pd0(0))}};
  EXPECT_THROW(linear_combine(mixed), FamilyMismatch);
}

TEST(BettiDiagram, RenderMarksTheOrigin) {
  const std::string text = render(pure_diagram(kQ, DegreeSequence::pd1(0, 2)), 3);
  EXPECT_NE(text.find("*1"), std::string::npos);
  EXPECT_NE(text.find('-'), std::string::npos);
}
