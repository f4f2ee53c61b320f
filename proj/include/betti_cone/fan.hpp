#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betti_cone/degree_sequence.hpp"
#include "betti_cone/errors.hpp"
#include "betti_cone/functionals.hpp"
#include "betti_cone/linalg.hpp"

namespace betti {

class NotSubmaximal : public Error {
 public:
  using Error::Error;
};

/// P_m: the degree sequences whose (first three columns of) pi_d lie in
/// V_m = { v : v_{i,j} = 0 unless -m + i <= j <= m + i }.
struct PosetWindow {
  RingSpec ring;
  int m = 0;
  std::vector<DegreeSequence> elements;  // sorted by canonical_less
};

using Chain = std::vector<DegreeSequence>;

PosetWindow enumerate_window(const RingSpec& ring, int m);

/// All maximal chains, each listed bottom to top.
std::vector<Chain> maximal_chains(const PosetWindow& w);

bool is_chain(const RingSpec& ring, const Chain& c);

/// Exact linear independence of { pi_d : d in c } plus the staircase
/// property. False for anything that is not a strictly increasing chain.
bool check_chain_independence(const RingSpec& ring, const Chain& c);

/// Coordinates of the first three columns of pi_d in V_m, ordered
/// (i, j) with i = 0..2 and j = -m + i .. m + i.
linalg::Vector window_coordinates(const RingSpec& ring, int m, const DegreeSequence& d);

/// The defining halfspaces of the projected cone inside V_m (the truncated
/// gamma / theta / eta sums coincide with the untruncated functionals there).
std::vector<FunctionalId> window_halfspaces(const RingSpec& ring, int m);

struct BoundaryFacetReport {
  Chain chain;                      // the submaximal chain
  DegreeSequence extension;         // unique element completing it
  std::optional<DegreeSequence> below;  // neighbour d' < extension
  std::optional<DegreeSequence> above;  // neighbour d'' > extension
  char case_tag = '?';              // 'a'..'h' (quadric), 'a'..'i' (embdim1), '?' unrecognised
  std::optional<FunctionalId> matched;  // vanishes on the chain, positive on the extension
  bool predicted = false;           // matched is the halfspace the case analysis names
};

/// nullopt when c lies in more than one maximal chain (interior facet).
/// Throws NotSubmaximal when no single element completes c to a maximal chain.
std::optional<BoundaryFacetReport> classify_submaximal(const PosetWindow& w, const Chain& c);

/// The maximal chain along the lower-left boundary of the Hasse diagram:
/// from the bottom, always step to the cover with the largest d0.
Chain lower_left_chain(const PosetWindow& w);

struct FanReport {
  FanReport(RingSpec r, int window) : ring(std::move(r)), m(window) {}

  RingSpec ring;
  int m = 0;
  std::size_t elements = 0;
  std::size_t maximal_cones = 0;
  std::size_t ambient_dimension = 0;      // dim of V_m-bar, or W_m-bar for embdim1
  std::size_t expected_chain_length = 0;  // 6m + 3 for the quadric
  bool chain_lengths_ok = true;
  bool independence_ok = true;
  bool staircase_ok = true;
  bool inside_ambient_ok = true;
  bool facets_matched = true;
  bool intersections_checked = false;
  bool intersections_ok = true;
  std::size_t boundary_facets = 0;  // counted with multiplicity over maximal chains
  std::map<char, std::size_t> case_counts;
  std::map<char, std::size_t> lower_left_counts;
  std::vector<std::string> failures;

  bool ok() const {
    return chain_lengths_ok && independence_ok && staircase_ok && inside_ambient_ok &&
           facets_matched && intersections_ok;
  }
};

/// Exhaustive verification of the simplicial fan on the window P_m.
FanReport verify_fan(const RingSpec& ring, int m, bool check_intersections = true);

/// Counts of lower-left boundary facets in case order 'a', 'b', ...
std::vector<std::size_t> case_vector(const FanReport& r);

/// e.g. "12 maximal cones, dim 9, all facets matched".
std::string summary(const FanReport& r);

}  // namespace betti
