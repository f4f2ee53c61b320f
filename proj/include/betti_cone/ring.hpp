#pragma once

#include <array>
#include <string>

#include "betti_cone/rational.hpp"

namespace betti {

enum class Family { EmbDim1, Quadric };

/// One of the two hypersurface families: k[x]/<x^n> or k[x,y]/<q>, q a quadric.
class RingSpec {
 public:
  /// k[x]/<x^n>, n >= 2.
  static RingSpec embdim1(int n);
  /// k[x,y]/<a x^2 + b xy + c y^2>, (a,b,c) != 0.
  static RingSpec quadric(Rational a, Rational b, Rational c);

  Family family() const { return family_; }
  bool is_quadric() const { return family_ == Family::Quadric; }

  /// n for k[x]/<x^n>.
  int n() const { return n_; }
  /// Degree of the defining relation (n, or 2 for the quadric).
  int relation_degree() const { return family_ == Family::Quadric ? 2 : n_; }
  const std::array<Rational, 3>& quadric_coeffs() const { return q_; }

  // Shape of the eventual periodicity of every minimal resolution:
  // entry(i + period, j + shift) = entry(i, j) for i >= anchor.
  int tail_period() const { return family_ == Family::Quadric ? 1 : 2; }
  int tail_shift() const { return family_ == Family::Quadric ? 1 : n_; }
  int tail_anchor() const { return family_ == Family::Quadric ? 2 : 1; }

  /// Hilbert function of the ring itself.
  int hilbert(int t) const;

  std::string describe() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec() = default;

  Family family_ = Family::EmbDim1;
  int n_ = 2;
  std::array<Rational, 3> q_{};
};

}  // namespace betti
