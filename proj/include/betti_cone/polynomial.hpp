#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "betti_cone/rational.hpp"

namespace betti {

/// x^a y^b. Ordered by degree, then by the power of x (higher x first is
/// "larger"), which makes x^t the leading monomial of degree t.
struct Monomial {
  int a = 0;
  int b = 0;
  int degree() const { return a + b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& l, const Monomial& r) {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    return l.a < r.a;
  }
};

/// Polynomial in at most two variables with rational coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  static Poly monomial(Monomial m, const Rational& c = 1);
  static Poly x() { return monomial({1, 0}); }
  static Poly y() { return monomial({0, 1}); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous polynomial.
  std::optional<int> degree() const;
  /// Coefficient of the constant monomial.
  Rational constant() const;
  Rational coefficient(Monomial m) const;
  /// True when y occurs in some term.
  bool uses_y() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(const Poly& l, const Poly& r);
  friend Poly operator*(Poly l, const Rational& c) { return l *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(int e) const;
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Matrix of polynomials; column c is the image of source generator c.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Plain product over the polynomial ring, no reduction.
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace betti
