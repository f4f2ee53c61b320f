#pragma once

#include <string>
#include <vector>

#include "betti_cone/betti_diagram.hpp"

namespace betti {

/// One stored reference example: the expected text is written down by hand,
/// the actual text is recomputed on every run.
struct CatalogEntry {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass() const { return expected == actual; }
};

std::vector<CatalogEntry> run_catalog();

/// "i,j=v" cells of the first `columns` columns, column-major, space separated.
std::string cells(const BettiDiagram& v, int columns);

/// The two-generator module used throughout the examples, as a diagram:
/// beta_{0,0} = 2, beta_{i,i} = 1 (i >= 1), beta_{1,3} = beta_{1,4} = 1,
/// beta_{i,i+3} = 1 (i >= 2).
BettiDiagram two_generator_diagram();

/// beta_{0,0} = 1, beta_{i,i} = 1 (i >= 1): the ideal <x> over k[x,y]/<x^2>,
/// shifted to be generated in degree 0.
BettiDiagram ideal_x_diagram();

}  // namespace betti
