#include <gtest/gtest.h>

#include <algorithm>

#include "betti_cone/fan.hpp"

using namespace betti;

namespace {

const RingSpec kQ = RingSpec::quadric(1, 0, 0);

}  // namespace

TEST(Fan, QuadricWindowOne) {
  const auto w = enumerate_window(kQ, 1);
  EXPECT_EQ(w.elements.size(), 15u);
  EXPECT_TRUE(std::is_sorted(w.elements.begin(), w.elements.end(), canonical_less));
  const auto chains = maximal_chains(w);
  EXPECT_EQ(chains.size(), 12u);
  for (const auto& c : chains) {
    EXPECT_EQ(c.size(), 9u);
    EXPECT_TRUE(is_chain(kQ, c));
    EXPECT_TRUE(check_chain_independence(kQ, c));
  }
  EXPECT_EQ(window_coordinates(kQ, 1, w.elements.front()).size(), 9u);
}

TEST(Fan, WindowZeroIsASingleCone) {
  for (const RingSpec& ring : {kQ, RingSpec::embdim1(3)}) {
    const auto w = enumerate_window(ring, 0);
    const auto chains = maximal_chains(w);
    EXPECT_EQ(chains.size(), 1u);
    EXPECT_TRUE(verify_fan(ring, 0).ok());
  }
}

TEST(Fan, IndependenceRejectsNonChains) {
  const Chain dup{DegreeSequence::inf(0, 1), DegreeSequence::inf(0, 1)};
  EXPECT_FALSE(check_chain_independence(kQ, dup));
  const Chain unordered{DegreeSequence::pd1(0, 1), DegreeSequence::inf(-1, 0)};
  EXPECT_FALSE(is_chain(kQ, unordered));
}

TEST(Fan, QuadricReportAndFacetCases) {
  const auto r = verify_fan(kQ, 1);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.maximal_cones, 12u);
  EXPECT_EQ(r.ambient_dimension, 9u);
  EXPECT_EQ(summary(r), "12 maximal cones, dim 9, all facets matched");
  EXPECT_EQ(case_vector(r), (std::vector<std::size_t>{0, 2, 2, 0, 1, 1, 0, 1}));
}

TEST(Fan, SubmaximalChains) {
  const auto w = enumerate_window(kQ, 1);
  const auto chain = maximal_chains(w).front();
  std::size_t boundary = 0;
  for (std::size_t drop = 0; drop < chain.size(); ++drop) {
    Chain c = chain;
    c.erase(c.begin() + static_cast<long>(drop));
    const auto report = classify_submaximal(w, c);
    if (!report) continue;
    ++boundary;
    EXPECT_EQ(report->extension, chain[drop]);
    EXPECT_NE(report->case_tag, '?');
    EXPECT_TRUE(report->matched.has_value());
  }
  EXPECT_GT(boundary, 0u);
  const Chain too_short(chain.begin(), chain.begin() + 3);
  EXPECT_THROW(classify_submaximal(w, too_short), NotSubmaximal);
}

TEST(Fan, EmbDim1Windows) {
  for (int n : {2, 3}) {
    for (int m : {1, 2}) {
      const auto r = verify_fan(RingSpec::embdim1(n), m);
      EXPECT_TRUE(r.ok()) << "n=" << n << " m=" << m << ": "
                          << (r.failures.empty() ? "" : r.failures.front());
    }
  }
}
