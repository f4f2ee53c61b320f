#include "betti_cone/graded.hpp"

#include "betti_cone/errors.hpp"

namespace betti {

GradedBase::GradedBase(int nvars, std::optional<Poly> f)
    : nvars_(nvars), relation_(std::move(f)), cache_(std::make_shared<std::map<int, Piece>>()) {
  if (nvars_ != 1 && nvars_ != 2) throw InvalidArgument("only one or two variables are supported");
  if (relation_) {
    if (relation_->is_zero() || !relation_->is_homogeneous()) {
      throw InvalidArgument("the relation must be a nonzero homogeneous polynomial");
    }
    if (nvars_ == 1 && relation_->uses_y()) throw InvalidArgument("relation uses y over Q[x]");
  }
}

GradedBase GradedBase::polynomial(int nvars) { return GradedBase(nvars, std::nullopt); }

GradedBase GradedBase::quotient(int nvars, Poly f) { return GradedBase(nvars, std::move(f)); }

GradedBase GradedBase::of(const RingSpec& ring) {
  if (!ring.is_quadric()) return quotient(1, Poly::monomial({ring.n(), 0}));
  const auto& q = ring.quadric_coeffs();
  Poly f = Poly::monomial({2, 0}, q[0]) + Poly::monomial({1, 1}, q[1]) + Poly::monomial({0, 2}, q[2]);
  return quotient(2, std::move(f));
}

const GradedBase::Piece& GradedBase::piece(int t) const {
  auto it = cache_->find(t);
  if (it != cache_->end()) return it->second;
  Piece p;
  if (t >= 0) {
    if (nvars_ == 1) p.all.push_back({t, 0});
    else
      for (int a = t; a >= 0; --a) p.all.push_back({a, t - a});
  }
  if (relation_ && t >= *relation_->degree()) {
    const int e = *relation_->degree();
    const Piece& lower = piece(t - e);
    std::vector<linalg::Vector> rows;
    for (const auto& m : lower.all) {
      const Poly g = *relation_ * Poly::monomial(m);
      linalg::Vector v(p.all.size());
      for (const auto& [mono, c] : g.terms()) v[nvars_ == 1 ? 0 : t - mono.a] = c;
      rows.push_back(std::move(v));
    }
    linalg::Matrix m = linalg::Matrix::from_rows(rows, p.all.size());
    p.pivots = linalg::rref(m);
    for (std::size_t r = 0; r < p.pivots.size(); ++r) {
      auto row = m.row(r);
      p.rows.emplace_back(row.begin(), row.end());
    }
  }
  std::vector<bool> pivot(p.all.size(), false);
  for (auto c : p.pivots) pivot[c] = true;
  for (std::size_t k = 0; k < p.all.size(); ++k) {
    if (pivot[k]) continue;
    p.basis.push_back(p.all[k]);
    p.basis_index.push_back(k);
  }
  return cache_->emplace(t, std::move(p)).first->second;
}

int GradedBase::dim(int t) const { return static_cast<int>(piece(t).basis.size()); }

const std::vector<Monomial>& GradedBase::basis(int t) const { return piece(t).basis; }

linalg::Vector GradedBase::reduced_full(const Poly& poly, int t) const {
  const Piece& p = piece(t);
  linalg::Vector v(p.all.size());
  for (const auto& [m, c] : poly.terms()) {
    if (m.degree() != t) {
      throw InvalidArgument("term " + Poly::monomial(m).to_string() + " is not of degree " +
                            std::to_string(t));
    }
    if (nvars_ == 1 && m.b > 0) throw InvalidArgument("y used over Q[x]");
    v[nvars_ == 1 ? 0 : t - m.a] = c;
  }
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const Rational lead = v[p.pivots[r]];
    if (sgn(lead) == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(p.rows[r][k]) != 0) v[k] -= lead * p.rows[r][k];
    }
  }
  return v;
}

linalg::Vector GradedBase::coords(const Poly& poly, int t) const {
  const linalg::Vector full = reduced_full(poly, t);
  const Piece& p = piece(t);
  linalg::Vector out;
  out.reserve(p.basis_index.size());
  for (auto k : p.basis_index) out.push_back(full[k]);
  return out;
}

Poly GradedBase::from_coords(const linalg::Vector& v, int t) const {
  const Piece& p = piece(t);
  if (v.size() != p.basis.size()) throw InvalidArgument("coordinate vector has the wrong length");
  Poly out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) out += Poly::monomial(p.basis[k], v[k]);
  }
  return out;
}

Poly GradedBase::reduce(const Poly& poly) const {
  if (!relation_) return poly;
  std::map<int, Poly> parts;
  for (const auto& [m, c] : poly.terms()) parts[m.degree()] += Poly::monomial(m, c);
  Poly out;
  for (const auto& [t, part] : parts) out += from_coords(coords(part, t), t);
  return out;
}

std::vector<Poly> GradedBase::variables() const {
  if (nvars_ == 1) return {Poly::x()};
  return {Poly::x(), Poly::y()};
}

std::string GradedBase::describe() const {
  std::string s = nvars_ == 1 ? "Q[x]" : "Q[x,y]";
  if (relation_) s += "/<" + relation_->to_string() + ">";
  return s;
}

FreeModule::FreeModule(const GradedBase& base, std::vector<int> degrees)
    : base_(base), degrees_(std::move(degrees)) {}

int FreeModule::dim(int t) const {
  int d = 0;
  for (int g : degrees_) d += base_.dim(t - g);
  return d;
}

linalg::Vector FreeModule::coords(const std::vector<Poly>& column, int t) const {
  if (column.size() != degrees_.size()) throw InvalidArgument("column length does not match module rank");
  linalg::Vector out;
  out.reserve(dim(t));
  for (std::size_t i = 0; i < column.size(); ++i) {
    const int s = t - degrees_[i];
    if (s < 0) {
      if (!column[i].is_zero()) throw InvalidArgument("entry of negative degree");
      continue;
    }
    auto v = base_.coords(column[i], s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<Poly> FreeModule::from_coords(const linalg::Vector& v, int t) const {
  std::vector<Poly> out;
  std::size_t at = 0;
  for (int g : degrees_) {
    const int d = base_.dim(t - g);
    linalg::Vector part(v.begin() + static_cast<std::ptrdiff_t>(at),
                        v.begin() + static_cast<std::ptrdiff_t>(at + d));
    out.push_back(d == 0 ? Poly() : base_.from_coords(part, t - g));
    at += d;
  }
  return out;
}

linalg::Matrix FreeModule::multiplication(const Poly& p, int e, int t) const {
  linalg::Matrix m(dim(t), dim(t - e));
  std::size_t col = 0;
  std::size_t row_at = 0;
  for (int g : degrees_) {
    for (const auto& mono : base_.basis(t - e - g)) {
      auto v = base_.coords(p * Poly::monomial(mono), t - g);
      for (std::size_t k = 0; k < v.size(); ++k) m(row_at + k, col) = v[k];
      ++col;
    }
    row_at += base_.dim(t - g);
  }
  return m;
}

linalg::Matrix degree_piece(const FreeModule& src, const FreeModule& tgt, const PolyMatrix& a, int t) {
  if (a.rows() != tgt.rank() || a.cols() != src.rank()) {
    throw InvalidArgument("map shape does not match its modules");
  }
  const GradedBase& base = src.base();
  linalg::Matrix m(tgt.dim(t), src.dim(t));
  std::size_t col = 0;
  for (std::size_t c = 0; c < src.rank(); ++c) {
    for (const auto& mono : base.basis(t - src.degrees()[c])) {
      std::vector<Poly> image(tgt.rank());
      const Poly x = Poly::monomial(mono);
      for (std::size_t r = 0; r < tgt.rank(); ++r) {
        if (!a(r, c).is_zero()) image[r] = a(r, c) * x;
      }
      auto v = tgt.coords(image, t);
      for (std::size_t k = 0; k < v.size(); ++k) m(k, col) = v[k];
      ++col;
    }
  }
  return m;
}

PolyMatrix reduce(const GradedBase& base, const PolyMatrix& a) {
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = base.reduce(a(r, c));
  }
  return out;
}

PolyMatrix multiply(const GradedBase& base, const PolyMatrix& a, const PolyMatrix& b) {
  return reduce(base, a * b);
}

bool is_homogeneous_map(const PolyMatrix& a, const std::vector<int>& src, const std::vector<int>& tgt) {
  if (a.rows() != tgt.size() || a.cols() != src.size()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Poly& p = a(r, c);
      if (p.is_zero()) continue;
      auto d = p.degree();
      if (!d || *d != src[c] - tgt[r]) return false;
    }
  }
  return true;
}

}  // namespace betti
