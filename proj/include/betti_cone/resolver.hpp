#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "betti_cone/betti_diagram.hpp"
#include "betti_cone/errors.hpp"
#include "betti_cone/graded.hpp"

namespace betti {

/// Generators of degree close to the bound were found, so the bound cannot
/// certify that no further generators exist.
class DegreeBoundTooSmall : public Error {
 public:
  DegreeBoundTooSmall(int step, int degree, int bound)
      : Error("step " + std::to_string(step) + " has a generator in degree " + std::to_string(degree) +
              ", too close to the degree bound " + std::to_string(bound)),
        step_(step), degree_(degree), bound_(bound) {}
  int step() const { return step_; }
  int degree() const { return degree_; }
  int bound() const { return bound_; }

 private:
  int step_, degree_, bound_;
};

class PeriodicityNotObserved : public Error {
 public:
  using Error::Error;
};

/// q does not annihilate the module, so no homotopy exists.
class InfeasibleHomotopy : public Error {
 public:
  using Error::Error;
};

class ExactnessFailure : public Error {
 public:
  using Error::Error;
};

/// coker(relations: F1 -> F0) over a ring R or a polynomial ring S.
struct GradedPresentation {
  GradedBase base = GradedBase::polynomial(2);
  std::optional<RingSpec> ring;  // set when base is one of the two families
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  PolyMatrix relations;  // rows = generators, cols = relations

  /// Validates shapes and homogeneity; relation degrees are inferred from
  /// the nonzero entries. Throws InvalidArgument.
  static GradedPresentation over_ring(const RingSpec& ring, std::vector<int> generator_degrees,
                                      std::vector<std::vector<Poly>> relation_columns);
  static GradedPresentation over_polynomial(int nvars, std::vector<int> generator_degrees,
                                            std::vector<std::vector<Poly>> relation_columns);
  void validate() const;
  friend bool operator==(const GradedPresentation& l, const GradedPresentation& r) {
    return l.base == r.base && l.ring == r.ring && l.generator_degrees == r.generator_degrees &&
           l.relation_degrees == r.relation_degrees && l.relations == r.relations;
  }
};

/// F0 <- F1 <- F2 <- ... ; maps[i] : F_{i+1} -> F_i.
struct ResolutionData {
  GradedBase base = GradedBase::polynomial(2);
  std::vector<std::vector<int>> degrees;
  std::vector<PolyMatrix> maps;
  std::vector<bool> minimal;  // per map: no nonzero scalar entries
  std::optional<ShiftPeriodic> tail;
  int degree_bound = 0;  // Betti numbers are exact in degrees <= degree_bound

  std::size_t length() const { return degrees.empty() ? 0 : degrees.size() - 1; }
  /// count of generators of F_i in degree j
  int betti(std::size_t i, int j) const;
};

struct KernelStep {
  std::vector<int> degrees;
  PolyMatrix map;  // new generators -> source of the input map
};

/// Minimal generators of ker(map: src -> tgt) in degrees [lo, bound].
KernelStep graded_kernel_step(const GradedBase& base, const std::vector<int>& src,
                              const std::vector<int>& tgt, const PolyMatrix& map, int lo, int bound);

/// Minimal presentation of the same module (generators and relations up to bound).
GradedPresentation minimal_presentation(const GradedPresentation& p, int bound);

/// Minimal resolution with `steps` maps, exact in degrees <= bound.
/// Throws DegreeBoundTooSmall when a generator lies within the guard of the bound.
ResolutionData resolve(const GradedPresentation& p, int steps, int bound);

/// The automatic degree bound; BETTI_CONE_MAX_DEGREE overrides the slack.
int automatic_bound(const GradedPresentation& p, int steps, int slack);

/// Betti diagram of coker(p) over ring, with a certified periodic tail.
/// Throws PeriodicityNotObserved, InvalidArgument.
BettiDiagram minimal_betti(const RingSpec& ring, const GradedPresentation& p, int steps, int slack = 0);

/// Minimal free resolution over the polynomial ring (length <= number of variables).
ResolutionData s_resolution(const GradedPresentation& p);

/// s1 : G0(-2) -> G1 and s2 : G1(-2) -> G2 with d1 s1 = q, d2 s2 + s1 d1 = q.
struct Homotopies {
  PolyMatrix s1;
  PolyMatrix s2;
};

Homotopies compute_homotopies(const ResolutionData& res, const Poly& q);

/// The periodic standard complex over S/(q) with `steps` maps, checked for
/// d o d = 0 and for exactness in degrees <= res.degree_bound + window.
ResolutionData shamash_resolution(const ResolutionData& res, const Homotopies& s, const Poly& q,
                                  int steps);

struct MinimizedResolution {
  ResolutionData resolution;
  std::map<std::pair<int, int>, int> cancellations;  // (step of the dropped source, degree) -> count
};

MinimizedResolution minimize_resolution(const ResolutionData& res);

/// Rank of the scalar block of s_i from generators of G_{i-1} in degree k
/// to generators of G_i in degree k + 2.
int sigma_rank(const ResolutionData& res, const Homotopies& s, int i, int k);

/// Betti diagram of the first `columns` steps of a resolution (no tail).
BettiDiagram diagram_of(const RingSpec& ring, const ResolutionData& res, std::size_t columns);

/// A linear form that is a nonzerodivisor on the quadric ring: y, x, x + y in order.
Poly nonzerodivisor_form(const RingSpec& ring);

/// The modules with pure diagrams from the quadric construction:
/// R(-d0)/<l^(d1-d0)> realises (d0,d1,inf,...) and
/// R(-d0)/<l^(d1-d0), m l^(d1-d0-1)> realises (d0,d1,d1+1,...).
GradedPresentation pure_module(const RingSpec& ring, const DegreeSequence& d);

/// Truncation used for the gamma identity: from a minimal presentation keep
/// generators of degree <= k and relations of degree <= k + 1.
GradedPresentation truncate_presentation(const GradedPresentation& minimal, int k);

/// dim_Q of the degree-t piece of coker(p).
int presentation_hilbert(const GradedPresentation& p, int t);

/// Betti diagram of a module over Q[x]/<x^n> from its decomposition into
/// shifted cyclic modules R(-a)/<x^c>, read off from ranks of powers of x.
BettiDiagram structure_theorem_betti(const RingSpec& ring, const GradedPresentation& p);

}  // namespace betti
