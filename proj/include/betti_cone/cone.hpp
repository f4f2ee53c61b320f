#pragma once

#include <optional>
#include <vector>

#include "betti_cone/betti_diagram.hpp"
#include "betti_cone/errors.hpp"
#include "betti_cone/functionals.hpp"

namespace betti {

class NotInCone : public Error {
 public:
  explicit NotInCone(Violation v)
      : Error("diagram is not in the cone: " + describe(v.functional) + " = " + to_string(v.value)),
        violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// The greedy loop exceeded its iteration cap or made no progress.
class NonTermination : public Error {
 public:
  using Error::Error;
};

class MultipleGeneratorDegrees : public Error {
 public:
  using Error::Error;
};

class NotEventuallyConstant : public Error {
 public:
  using Error::Error;
};

struct DecompositionTerm {
  Rational coefficient;
  DegreeSequence sequence;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Positive combination of pure diagrams along a strictly increasing chain.
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Sum of coefficient * pi_d over the terms (the zero diagram when empty).
BettiDiagram reassemble(const RingSpec& ring, const Decomposition& dec);

/// Every degree sequence d with supp(pi_d) contained in supp(v), sorted by canonical_less.
std::vector<DegreeSequence> compatible_sequences(const RingSpec& ring, const BettiDiagram& v);

/// Least compatible sequence; ties broken by canonical_less.
/// Throws NotInCone when nothing is compatible.
DegreeSequence minimal_compatible(const RingSpec& ring, const BettiDiagram& v);
DegreeSequence maximal_compatible(const RingSpec& ring, const BettiDiagram& v);

/// max { c >= 0 : v - c pi_d stays in the cone }.
Rational max_step(const RingSpec& ring, const BettiDiagram& v, const DegreeSequence& d);

/// Greedy decomposition into pure diagrams. Throws NotInCone or NonTermination.
Decomposition decompose(const RingSpec& ring, const BettiDiagram& v);

/// h_k of any module with Betti diagram v, from the alternating sum against h(R).
Rational hilbert_function(const RingSpec& ring, const BettiDiagram& v, int k);

/// Length when the Hilbert function is eventually zero, otherwise its
/// eventual constant value.
Rational multiplicity(const RingSpec& ring, const BettiDiagram& v);

struct MultiplicityReport {
  Rational e;
  std::optional<Rational> lower;  // only when the maximal compatible d has d1 < inf
  Rational upper;
  DegreeSequence min_compatible;
  DegreeSequence max_compatible;
  bool lower_equal = false;
  bool upper_equal = false;
  bool extremes_coincide = false;
};

/// Multiplicity bounds from the extremal compatible sequences, for diagrams
/// generated in a single degree. Throws MultipleGeneratorDegrees, NotInCone.
MultiplicityReport multiplicity_bounds(const RingSpec& ring, const BettiDiagram& v);

}  // namespace betti
