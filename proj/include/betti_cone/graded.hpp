#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betti_cone/linalg.hpp"
#include "betti_cone/polynomial.hpp"
#include "betti_cone/ring.hpp"

namespace betti {

/// S = Q[x] or Q[x,y], optionally modulo one homogeneous relation f.
/// Each graded piece is a finite dimensional vector space; the basis of the
/// quotient piece is the set of standard monomials (non-pivots after row
/// reducing f * S_{t - deg f}).
class GradedBase {
 public:
  static GradedBase polynomial(int nvars);
  static GradedBase quotient(int nvars, Poly f);
  static GradedBase of(const RingSpec& ring);

  int nvars() const { return nvars_; }
  const std::optional<Poly>& relation() const { return relation_; }
  /// The polynomial ring this base is a quotient of.
  GradedBase cover() const { return polynomial(nvars_); }

  int dim(int t) const;
  const std::vector<Monomial>& basis(int t) const;
  /// Coordinates of a homogeneous degree-t polynomial in the basis of piece t.
  linalg::Vector coords(const Poly& p, int t) const;
  Poly from_coords(const linalg::Vector& v, int t) const;
  /// Normal form (identity over a polynomial ring).
  Poly reduce(const Poly& p) const;
  std::vector<Poly> variables() const;
  std::string describe() const;

  friend bool operator==(const GradedBase& l, const GradedBase& r) {
    return l.nvars_ == r.nvars_ && l.relation_ == r.relation_;
  }

 private:
  struct Piece {
    std::vector<Monomial> all;        // monomials of S_t
    std::vector<linalg::Vector> rows;  // reduced relation rows over `all`
    std::vector<std::size_t> pivots;
    std::vector<Monomial> basis;      // standard monomials
    std::vector<std::size_t> basis_index;
  };
  GradedBase(int nvars, std::optional<Poly> f);
  const Piece& piece(int t) const;
  linalg::Vector reduced_full(const Poly& p, int t) const;

  int nvars_ = 2;
  std::optional<Poly> relation_;
  std::shared_ptr<std::map<int, Piece>> cache_;
};

/// Graded free module over a base: generator degrees g_i, so that the
/// piece of degree t is the sum of base pieces of degree t - g_i.
class FreeModule {
 public:
  FreeModule(const GradedBase& base, std::vector<int> degrees);
  const GradedBase& base() const { return base_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  int dim(int t) const;
  /// Coordinates of the element sum_i column[i] e_i, homogeneous of degree t.
  linalg::Vector coords(const std::vector<Poly>& column, int t) const;
  std::vector<Poly> from_coords(const linalg::Vector& v, int t) const;
  /// Matrix of multiplication by p (homogeneous of degree e) from piece t - e to piece t.
  linalg::Matrix multiplication(const Poly& p, int e, int t) const;

 private:
  GradedBase base_;
  std::vector<int> degrees_;
};

/// The degree-t piece of the homogeneous map src -> tgt given by a (rows =
/// tgt generators, cols = src generators).
linalg::Matrix degree_piece(const FreeModule& src, const FreeModule& tgt, const PolyMatrix& a, int t);

/// Product followed by normal form over the base.
PolyMatrix multiply(const GradedBase& base, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix reduce(const GradedBase& base, const PolyMatrix& a);

/// Checks that entry (r, c) is zero or homogeneous of degree src[c] - tgt[r].
bool is_homogeneous_map(const PolyMatrix& a, const std::vector<int>& src, const std::vector<int>& tgt);

}  // namespace betti
