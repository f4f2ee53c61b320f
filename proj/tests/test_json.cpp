#include <gtest/gtest.h>

#include "betti_cone/catalog.hpp"
#include "betti_cone/json_io.hpp"

using namespace betti;
namespace bj = betti::json;

TEST(Json, RoundTrips) {
  const RingSpec q = RingSpec::quadric(1, 0, 0);
  const RingSpec a = RingSpec::embdim1(3);
  EXPECT_EQ(bj::ring_from_json(bj::ring_to_json(q)), q);
  EXPECT_EQ(bj::ring_from_json(bj::ring_to_json(a)), a);
  EXPECT_EQ(bj::rational_from_json(bj::rational_to_json(make_rational(-7, 3))), make_rational(-7, 3));
  for (const auto& d : {DegreeSequence::pd0(2), DegreeSequence::pd1(0, 3), DegreeSequence::inf(-1, 1)}) {
    EXPECT_EQ(bj::sequence_from_json(q, bj::sequence_to_json(d)), d);
  }
  const auto v = two_generator_diagram();
  EXPECT_EQ(bj::diagram_from_json(bj::diagram_to_json(v)), v);
  const auto dec = decompose(q, v);
  const auto back = bj::decomposition_from_json(q, bj::decomposition_to_json(q, dec));
  EXPECT_EQ(reassemble(q, back), v);
  for (const FunctionalId& f : {FunctionalId(Eps{1, 2}), FunctionalId(Gamma{3}), FunctionalId(EtaInf{})}) {
    EXPECT_EQ(bj::functional_from_json(bj::functional_to_json(f)), f);
  }
  const auto p = pure_module(q, DegreeSequence::inf(0, 2));
  EXPECT_EQ(bj::presentation_from_json(bj::presentation_to_json(p)), p);
}

TEST(Json, MalformedInputIsAParseError) {
  EXPECT_THROW(bj::parse("{\"family\": "), ParseError);
  EXPECT_THROW(bj::ring_from_json(bj::parse("{\"family\": \"cubic\"}")), ParseError);
  EXPECT_THROW(bj::ring_from_json(bj::parse("[1, 2]")), ParseError);
  EXPECT_THROW(bj::rational_from_json(bj::parse("\"1/0\"")), ParseError);
  EXPECT_THROW(bj::diagram_from_json(bj::parse("{\"ring\": {\"family\": \"embdim1\", \"n\": 3}}")), ParseError);
}

TEST(Catalog, EveryStoredExampleMatches) {
  for (const auto& e : run_catalog()) EXPECT_TRUE(e.pass()) << e.name << ": got " << e.actual;
}
