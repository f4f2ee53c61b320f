#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betti_cone/resolver.hpp"

namespace betti::testing {

struct CorpusModule {
  std::string name;
  RingSpec ring;
  GradedPresentation presentation;
  std::optional<DegreeSequence> pure;  // set for modules built to realise pi_d
};

RingSpec x_squared();
RingSpec xy();

/// a x^2 + b xy + c y^2 for a quadric ring.
Poly defining_quadric(const RingSpec& ring);

/// The same module presented over Q[x,y]: the relations plus q times each generator.
GradedPresentation lift_to_polynomial_ring(const GradedPresentation& p);

/// Pure-diagram modules with d0 = 0 < d1 <= max_d1 over x^2 and xy, plus (0,inf,...).
std::vector<CorpusModule> pure_family(int max_d1 = 5);

/// Seeded random presentations with monomial entries over the given rings.
std::vector<CorpusModule> random_monomial_modules(const std::vector<RingSpec>& rings, int count,
                                                  unsigned seed);

/// Dimension of the degree-t piece of the module, for t in [lo, hi].
std::vector<int> hilbert_values(const GradedPresentation& p, int lo, int hi);

}  // namespace betti::testing
