#include "betti_cone/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace betti::linalg {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(std::span<const Rational> x) const {
  assert(x.size() == cols_);
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) acc += (*this)(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  assert(cols_ == other.rows_);
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        if (sgn(other(k, c)) != 0) out(r, c) += a * other(k, c);
      }
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    }
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= factor * m(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

std::vector<Vector> nullspace(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  assert(b.size() == m.rows());
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Vector SpanBuilder::reduce(std::span<const Rational> v) const {
  Vector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (sgn(rows_[k][c]) != 0) w[c] -= f * rows_[k][c];
    }
  }
  return w;
}

bool SpanBuilder::add(std::span<const Rational> v) {
  assert(v.size() == dim_);
  Vector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (it == w.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - w.begin());
  const Rational inv = 1 / w[p];
  for (auto& q : w) q *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (sgn(w[c]) != 0) row[c] -= f * w[c];
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(std::span<const Rational> v) const {
  Vector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool nonnegative_feasible(const Matrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  assert(b.size() == m);
  // Tableau [A | I | b] with artificial basis; rows flipped so that b >= 0.
  const std::size_t width = n + m + 1;
  Matrix t(m, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const int s = sgn(b[r]) < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) t(r, c) = s * a(r, c);
    t(r, n + r) = 1;
    t(r, width - 1) = s * b[r];
    basis[r] = n + r;
  }
  // Reduced costs for minimising the sum of artificials; last entry holds -objective.
  Vector cost(width);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) cost[c] -= t(r, c);
    cost[width - 1] -= t(r, width - 1);
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (sgn(cost[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t(r, enter)) <= 0) continue;
      Rational ratio = t(r, width - 1) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    const Rational inv = 1 / t(leave, enter);
    for (std::size_t c = 0; c < width; ++c) t(leave, c) *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || sgn(t(r, enter)) == 0) continue;
      const Rational f = t(r, enter);
      for (std::size_t c = 0; c < width; ++c) {
        if (sgn(t(leave, c)) != 0) t(r, c) -= f * t(leave, c);
      }
    }
    const Rational f = cost[enter];
    for (std::size_t c = 0; c < width; ++c) {
      if (sgn(t(leave, c)) != 0) cost[c] -= f * t(leave, c);
    }
    basis[leave] = enter;
  }
  return sgn(cost[width - 1]) == 0;
}

}  // namespace betti::linalg
