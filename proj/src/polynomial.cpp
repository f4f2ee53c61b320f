#include "betti_cone/polynomial.hpp"

#include "betti_cone/errors.hpp"

namespace betti {

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  if (m.a < 0 || m.b < 0) throw InvalidArgument("negative exponent");
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<int> Poly::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

Rational Poly::constant() const { return coefficient({}); }

Rational Poly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::uses_y() const {
  for (const auto& [m, c] : terms_) {
    if (m.b > 0) return true;
  }
  return false;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
  Poly out;
  for (const auto& [ml, cl] : l.terms_) {
    for (const auto& [mr, cr] : r.terms_) out.add_term({ml.a + mr.a, ml.b + mr.b}, cl * cr);
  }
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative power");
  Poly out(1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    auto var = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", m.a);
    var("y", m.b);
    if (mono.empty()) s += betti::to_string(mag);
    else if (mag == 1) s += mono;
    else s += betti::to_string(mag) + "*" + mono;
  }
  return s;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("polynomial matrix shapes do not match");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

}  // namespace betti
