#include "betti_cone/ring.hpp"

#include "betti_cone/errors.hpp"

namespace betti {

RingSpec RingSpec::embdim1(int n) {
  if (n < 2) throw InvalidArgument("k[x]/<x^n> requires n >= 2, got " + std::to_string(n));
  RingSpec r;
  r.family_ = Family::EmbDim1;
  r.n_ = n;
  return r;
}

RingSpec RingSpec::quadric(Rational a, Rational b, Rational c) {
  if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) {
    throw InvalidArgument("quadric coefficients must not all vanish");
  }
  RingSpec r;
  r.family_ = Family::Quadric;
  r.n_ = 2;
  r.q_ = {std::move(a), std::move(b), std::move(c)};
  return r;
}

int RingSpec::hilbert(int t) const {
  if (t < 0) return 0;
  if (family_ == Family::Quadric) return t == 0 ? 1 : 2;
  return t < n_ ? 1 : 0;
}

std::string RingSpec::describe() const {
  if (family_ == Family::EmbDim1) return "k[x]/<x^" + std::to_string(n_) + ">";
  std::string q;
  const char* monomials[] = {"x^2", "xy", "y^2"};
  for (int k = 0; k < 3; ++k) {
    if (sgn(q_[k]) == 0) continue;
    if (!q.empty()) q += sgn(q_[k]) > 0 ? " + " : " - ";
    else if (sgn(q_[k]) < 0) q += "-";
    Rational mag = abs(q_[k]);
    if (mag != 1) q += to_string(mag) + "*";
    q += monomials[k];
  }
  return "k[x,y]/<" + q + ">";
}

}  // namespace betti
