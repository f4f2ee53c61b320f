#pragma once

#include <optional>
#include <string>

#include "betti_cone/ring.hpp"

namespace betti {

/// Shape of an R-degree sequence. Only the free parameters d0, d1 are stored.
///   Pd0: (d0, inf, inf, ...)
///   Pd1: (d0, d1, inf, ...)                      quadric only
///   Inf: quadric (d0, d1, d1+1, d1+2, ...)
///        embdim1 (d0, d1, d0+n, d1+n, d0+2n, ...)
enum class SeqKind { Pd0, Pd1, Inf };

struct DegreeSequence {
  SeqKind kind = SeqKind::Pd0;
  int d0 = 0;
  int d1 = 0;  // ignored (kept 0) for Pd0

  static DegreeSequence pd0(int d0) { return {SeqKind::Pd0, d0, 0}; }
  static DegreeSequence pd1(int d0, int d1) { return {SeqKind::Pd1, d0, d1}; }
  static DegreeSequence inf(int d0, int d1) { return {SeqKind::Inf, d0, d1}; }

  bool finite_projective_dimension() const { return kind != SeqKind::Inf; }

  /// d_i, or nullopt for infinity.
  std::optional<int> degree(const RingSpec& ring, int i) const;

  /// Throws InvalidArgument if this is not an R-degree sequence for ring.
  void validate(const RingSpec& ring) const;

  /// e.g. "(0,3,4,5,...)" or "(0,inf,...)".
  std::string describe(const RingSpec& ring) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

enum class Order { Less, Equal, Greater, Incomparable };

/// The partial order on R-degree sequences that realises the simplicial fan.
/// Quadric: (d0, d1) compared termwise, and on a tie in d1 the tails are
/// compared termwise. Embdim1: infinite projective dimension sits below
/// finite, termwise within each class.
Order compare(const RingSpec& ring, const DegreeSequence& a, const DegreeSequence& b);

inline bool precedes(const RingSpec& ring, const DegreeSequence& a, const DegreeSequence& b) {
  return compare(ring, a, b) == Order::Less;
}

/// Deterministic total order used for sorting and tie-breaking:
/// smaller d0, then smaller d1 (Pd0 last), then Inf before Pd1.
bool canonical_less(const DegreeSequence& a, const DegreeSequence& b);

const char* to_string(Order o);

}  // namespace betti
