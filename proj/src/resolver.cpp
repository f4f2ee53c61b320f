#include "betti_cone/resolver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "betti_cone/functionals.hpp"

namespace betti {

namespace {

using linalg::Matrix;
using linalg::Vector;

PolyMatrix from_columns(std::size_t rows, const std::vector<std::vector<Poly>>& cols) {
  PolyMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidArgument("relation column has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Poly> column(const PolyMatrix& m, std::size_t c) {
  std::vector<Poly> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

GradedPresentation build(GradedBase base, std::optional<RingSpec> ring, std::vector<int> gens,
                         std::vector<std::vector<Poly>> cols) {
  GradedPresentation p;
  p.base = std::move(base);
  p.ring = std::move(ring);
  p.generator_degrees = std::move(gens);
  std::vector<std::vector<Poly>> kept;
  for (auto& col : cols) {
    if (col.size() != p.generator_degrees.size()) {
      throw InvalidArgument("relation column has " + std::to_string(col.size()) + " entries for " +
                            std::to_string(p.generator_degrees.size()) + " generators");
    }
    std::optional<int> degree;
    for (std::size_t r = 0; r < col.size(); ++r) {
      col[r] = p.base.reduce(col[r]);
      if (col[r].is_zero()) continue;
      auto d = col[r].degree();
      if (!d) throw InvalidArgument("relation entry " + col[r].to_string() + " is not homogeneous");
      const int total = *d + p.generator_degrees[r];
      if (degree && *degree != total) throw InvalidArgument("relation column is not homogeneous");
      degree = total;
    }
    if (!degree) continue;
    p.relation_degrees.push_back(*degree);
    kept.push_back(std::move(col));
  }
  p.relations = from_columns(p.generator_degrees.size(), kept);
  return p;
}

int guard(const GradedBase& base) {
  const int e = base.relation() ? *base.relation()->degree() : 1;
  return 2 * std::max(e, 1);
}

int step_width(const GradedBase& base) {
  const int e = base.relation() ? *base.relation()->degree() : 2;
  return std::max(e, 2);
}

// Rows spanning the annihilator of the image of the relations in degree t,
// i.e. a matrix whose kernel is exactly that image.
Matrix cokernel_projection(const FreeModule& f0, const FreeModule& f1, const PolyMatrix& rel, int t) {
  const Matrix image = degree_piece(f1, f0, rel, t);
  auto ann = linalg::nullspace(linalg::transpose(image));
  return Matrix::from_rows(ann, f0.dim(t));
}

struct KernelGenerator {
  int degree;
  Vector coords;
};

std::vector<KernelGenerator> kernel_generators(const FreeModule& f, const std::function<Matrix(int)>& map_t,
                                               int lo, int bound) {
  std::vector<KernelGenerator> out;
  std::vector<Vector> previous;
  const auto vars = f.base().variables();
  for (int t = lo; t <= bound; ++t) {
    const int dim = f.dim(t);
    std::vector<Vector> kernel;
    if (dim > 0) kernel = linalg::nullspace(map_t(t));
    linalg::SpanBuilder span(dim);
    if (!previous.empty()) {
      for (const auto& v : vars) {
        const Matrix x = f.multiplication(v, 1, t);
        for (const auto& k : previous) span.add(x.apply(k));
      }
    }
    for (const auto& k : kernel) {
      if (span.add(k)) out.push_back({t, k});
    }
    previous = std::move(kernel);
  }
  return out;
}

KernelStep to_step(const FreeModule& f, const std::vector<KernelGenerator>& gens) {
  KernelStep step;
  std::vector<std::vector<Poly>> cols;
  for (const auto& g : gens) {
    step.degrees.push_back(g.degree);
    cols.push_back(f.from_coords(g.coords, g.degree));
  }
  step.map = from_columns(f.rank(), cols);
  return step;
}

bool has_unit_entry(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && m(r, c).degree() == 0) return true;
    }
  }
  return false;
}

Column column_of(const std::vector<int>& degrees) {
  Column c;
  for (int d : degrees) c[d] += 1;
  return c;
}

Column shifted(const Column& c, int s) {
  Column out;
  for (const auto& [j, v] : c) out[j + s] = v;
  return out;
}

void check_ring(const RingSpec& ring, const GradedPresentation& p) {
  if (p.ring ? !(*p.ring == ring) : !(p.base == GradedBase::of(ring))) {
    throw FamilyMismatch("presentation over " + p.base.describe() + " used with " + ring.describe());
  }
}

template <class F>
auto with_growing_bound(const GradedPresentation& p, int steps, int slack, F&& run) {
  const int widen = steps * step_width(p.base);
  for (int attempt = 0;; ++attempt) {
    try {
      return run(automatic_bound(p, steps, slack + attempt * widen));
    } catch (const DegreeBoundTooSmall&) {
      if (attempt >= 3) throw;
    }
  }
}

}  // namespace

int ResolutionData::betti(std::size_t i, int j) const {
  if (i >= degrees.size()) return 0;
  return static_cast<int>(std::count(degrees[i].begin(), degrees[i].end(), j));
}

GradedPresentation GradedPresentation::over_ring(const RingSpec& ring, std::vector<int> generator_degrees,
                                                 std::vector<std::vector<Poly>> relation_columns) {
  return build(GradedBase::of(ring), ring, std::move(generator_degrees), std::move(relation_columns));
}

GradedPresentation GradedPresentation::over_polynomial(int nvars, std::vector<int> generator_degrees,
                                                       std::vector<std::vector<Poly>> relation_columns) {
  return build(GradedBase::polynomial(nvars), std::nullopt, std::move(generator_degrees),
               std::move(relation_columns));
}

void GradedPresentation::validate() const {
  if (relations.rows() != generator_degrees.size() || relations.cols() != relation_degrees.size()) {
    throw InvalidArgument("presentation matrix shape does not match its degree lists");
  }
  if (!is_homogeneous_map(relations, relation_degrees, generator_degrees)) {
    throw InvalidArgument("presentation matrix is not homogeneous");
  }
}

KernelStep graded_kernel_step(const GradedBase& base, const std::vector<int>& src,
                              const std::vector<int>& tgt, const PolyMatrix& map, int lo, int bound) {
  const FreeModule s(base, src);
  const FreeModule t(base, tgt);
  auto gens = kernel_generators(s, [&](int d) { return degree_piece(s, t, map, d); }, lo, bound);
  return to_step(s, gens);
}

GradedPresentation minimal_presentation(const GradedPresentation& p, int bound) {
  p.validate();
  const FreeModule f0(p.base, p.generator_degrees);
  const FreeModule f1(p.base, p.relation_degrees);

  std::vector<std::size_t> kept;
  std::set<int> gen_degrees(p.generator_degrees.begin(), p.generator_degrees.end());
  for (int t : gen_degrees) {
    linalg::SpanBuilder span(f0.dim(t));
    for (const auto& v : p.base.variables()) {
      const Matrix x = f0.multiplication(v, 1, t);
      for (std::size_t c = 0; c < x.cols(); ++c) span.add(x.column(c));
    }
    const Matrix image = degree_piece(f1, f0, p.relations, t);
    for (std::size_t c = 0; c < image.cols(); ++c) span.add(image.column(c));
    for (std::size_t i = 0; i < p.generator_degrees.size(); ++i) {
      if (p.generator_degrees[i] != t) continue;
      std::vector<Poly> e(p.generator_degrees.size());
      e[i] = Poly(1);
      if (span.add(f0.coords(e, t))) kept.push_back(i);
    }
  }

  GradedPresentation out;
  out.base = p.base;
  out.ring = p.ring;
  for (auto i : kept) out.generator_degrees.push_back(p.generator_degrees[i]);
  if (kept.empty()) return out;

  PolyMatrix incl(p.generator_degrees.size(), kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) incl(kept[k], k) = Poly(1);
  const FreeModule g0(p.base, out.generator_degrees);
  const int lo = *std::min_element(out.generator_degrees.begin(), out.generator_degrees.end());
  auto gens = kernel_generators(
      g0,
      [&](int t) { return cokernel_projection(f0, f1, p.relations, t) * degree_piece(g0, f0, incl, t); },
      lo, bound);
  KernelStep step = to_step(g0, gens);
  out.relation_degrees = step.degrees;
  out.relations = step.map;
  return out;
}

int automatic_bound(const GradedPresentation& p, int steps, int slack) {
  if (const char* env = std::getenv("BETTI_CONE_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) {
      throw InvalidArgument("BETTI_CONE_MAX_DEGREE must be a nonnegative integer");
    }
    slack = std::max(slack, static_cast<int>(v));
  }
  int max_gen = 0;
  int max_rel = 0;
  if (!p.generator_degrees.empty()) {
    max_gen = *std::max_element(p.generator_degrees.begin(), p.generator_degrees.end());
    max_rel = max_gen;
  }
  if (!p.relation_degrees.empty()) {
    max_rel = *std::max_element(p.relation_degrees.begin(), p.relation_degrees.end());
  }
  return max_gen + max_rel + steps * step_width(p.base) + slack;
}

ResolutionData resolve(const GradedPresentation& p, int steps, int bound) {
  if (steps < 1) throw InvalidArgument("need at least one step");
  const GradedPresentation mp = minimal_presentation(p, bound);
  ResolutionData res;
  res.base = p.base;
  res.degree_bound = bound;
  res.degrees = {mp.generator_degrees, mp.relation_degrees};
  res.maps = {mp.relations};
  for (int i = 1; i < steps; ++i) {
    const auto& src = res.degrees[i];
    if (src.empty()) {
      res.degrees.emplace_back();
      res.maps.emplace_back(0, 0);
      continue;
    }
    const int lo = *std::min_element(src.begin(), src.end());
    KernelStep step = graded_kernel_step(p.base, src, res.degrees[i - 1], res.maps[i - 1], lo, bound);
    res.degrees.push_back(std::move(step.degrees));
    res.maps.push_back(std::move(step.map));
  }
  const int g = guard(p.base);
  for (std::size_t i = 0; i < res.degrees.size(); ++i) {
    for (int d : res.degrees[i]) {
      if (d > bound - g) throw DegreeBoundTooSmall(static_cast<int>(i), d, bound);
    }
  }
  for (const auto& m : res.maps) res.minimal.push_back(!has_unit_entry(m));
  return res;
}

BettiDiagram diagram_of(const RingSpec& ring, const ResolutionData& res, std::size_t columns) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < columns && i < res.degrees.size(); ++i) cols.push_back(column_of(res.degrees[i]));
  return BettiDiagram::make(ring, std::move(cols), std::nullopt);
}

BettiDiagram minimal_betti(const RingSpec& ring, const GradedPresentation& p, int steps, int slack) {
  check_ring(ring, p);
  const int needed = ring.is_quadric() ? 4 : 3;
  if (steps < needed) {
    throw InvalidArgument("need at least " + std::to_string(needed) + " steps over " + ring.describe());
  }
  if (slack < 0) throw InvalidArgument("slack must be >= 0");
  const ResolutionData res =
      with_growing_bound(p, steps, slack, [&](int bound) { return resolve(p, steps, bound); });

  std::vector<Column> cols;
  for (int i = 0; i <= steps; ++i) cols.push_back(column_of(res.degrees[i]));
  const int period = ring.tail_period();
  const int shift = ring.tail_shift();
  for (int i = ring.tail_anchor(); i + period <= steps; ++i) {
    if (cols[i + period] != shifted(cols[i], shift)) {
      throw PeriodicityNotObserved("columns " + std::to_string(i) + " and " + std::to_string(i + period) +
                                   " are not related by a shift of " + std::to_string(shift) +
                                   "; raise the step count or the degree bound");
    }
  }
  try {
    return BettiDiagram::make(ring, std::move(cols), ShiftPeriodic{period, shift, ring.tail_anchor()});
  } catch (const TailInconsistency& e) {
    throw PeriodicityNotObserved(e.what());
  }
}

ResolutionData s_resolution(const GradedPresentation& p) {
  if (p.base.relation()) throw InvalidArgument("s_resolution needs a presentation over a polynomial ring");
  const int n = p.base.nvars();
  ResolutionData res =
      with_growing_bound(p, n + 1, 0, [&](int bound) { return resolve(p, n + 1, bound); });
  if (!res.degrees.back().empty()) throw ExactnessFailure("resolution longer than the number of variables");
  while (res.degrees.size() > 1 && res.degrees.back().empty()) {
    res.degrees.pop_back();
    res.maps.pop_back();
    res.minimal.pop_back();
  }
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    if (!(res.maps[i] * res.maps[i + 1]).is_zero()) throw ExactnessFailure("d o d != 0");
  }
  return res;
}

Homotopies compute_homotopies(const ResolutionData& res, const Poly& q) {
  const GradedBase& base = res.base;
  if (base.relation()) throw InvalidArgument("homotopies need a resolution over a polynomial ring");
  auto e = q.degree();
  if (!e) throw InvalidArgument("q must be a nonzero homogeneous polynomial");
  auto degs = [&](std::size_t i) { return i < res.degrees.size() ? res.degrees[i] : std::vector<int>{}; };
  auto dmap = [&](std::size_t i) {
    return i < res.maps.size() ? res.maps[i] : PolyMatrix(degs(i).size(), degs(i + 1).size());
  };
  const FreeModule g0(base, degs(0)), g1(base, degs(1)), g2(base, degs(2));
  const PolyMatrix d1 = dmap(0), d2 = dmap(1);

  auto lift = [&](const FreeModule& src, const FreeModule& tgt, const PolyMatrix& d,
                  const std::vector<Poly>& rhs, int t, const std::string& what) {
    const Vector b = tgt.coords(rhs, t);
    if (src.rank() == 0) {
      if (std::any_of(b.begin(), b.end(), [](const Rational& x) { return sgn(x) != 0; })) {
        throw InfeasibleHomotopy(what + " has no solution in degree " + std::to_string(t));
      }
      return std::vector<Poly>{};
    }
    auto x = linalg::solve(degree_piece(src, tgt, d, t), b);
    if (!x) throw InfeasibleHomotopy(what + " has no solution in degree " + std::to_string(t));
    return src.from_coords(*x, t);
  };

  Homotopies h{PolyMatrix(g1.rank(), g0.rank()), PolyMatrix(g2.rank(), g1.rank())};
  for (std::size_t c = 0; c < g0.rank(); ++c) {
    std::vector<Poly> rhs(g0.rank());
    rhs[c] = q;
    auto col = lift(g1, g0, d1, rhs, g0.degrees()[c] + *e, "d1 s1 = q");
    for (std::size_t r = 0; r < col.size(); ++r) h.s1(r, c) = col[r];
  }
  const PolyMatrix s1d1 = h.s1 * d1;
  for (std::size_t c = 0; c < g1.rank(); ++c) {
    std::vector<Poly> rhs = column(s1d1, c);
    for (auto& p : rhs) p *= Rational(-1);
    rhs[c] += q;
    auto col = lift(g2, g1, d2, rhs, g1.degrees()[c] + *e, "d2 s2 = q - s1 d1");
    for (std::size_t r = 0; r < col.size(); ++r) h.s2(r, c) = col[r];
  }
  return h;
}

ResolutionData shamash_resolution(const ResolutionData& res, const Homotopies& s, const Poly& q, int steps) {
  if (res.base.relation()) throw InvalidArgument("the standard complex starts from a resolution over S");
  if (res.degrees.size() > 3) throw InvalidArgument("expected a resolution of length at most 2");
  if (steps < 1) throw InvalidArgument("need at least one step");
  const int e = *q.degree();
  const GradedBase rbase = GradedBase::quotient(res.base.nvars(), q);
  const int len = static_cast<int>(res.degrees.size()) - 1;

  // H_i is the sum of G_j(-k e) over j + 2k = i, listed with j descending.
  struct Summand {
    int j, k;
    std::size_t offset;
  };
  auto summands = [&](int i) {
    std::vector<Summand> out;
    std::size_t at = 0;
    for (int j = std::min(len, i); j >= 0; --j) {
      if ((i - j) % 2 != 0) continue;
      out.push_back({j, (i - j) / 2, at});
      at += res.degrees[j].size();
    }
    return out;
  };

  ResolutionData out;
  out.base = rbase;
  for (int i = 0; i <= steps; ++i) {
    std::vector<int> d;
    for (const auto& sm : summands(i)) {
      for (int g : res.degrees[sm.j]) d.push_back(g + sm.k * e);
    }
    out.degrees.push_back(std::move(d));
  }
  for (int i = 1; i <= steps; ++i) {
    PolyMatrix m(out.degrees[i - 1].size(), out.degrees[i].size());
    const auto rows = summands(i - 1);
    auto place = [&](const PolyMatrix& block, int j, int k, std::size_t col_offset) {
      for (const auto& r : rows) {
        if (r.j != j || r.k != k) continue;
        for (std::size_t a = 0; a < block.rows(); ++a) {
          for (std::size_t b = 0; b < block.cols(); ++b) m(r.offset + a, col_offset + b) = rbase.reduce(block(a, b));
        }
      }
    };
    for (const auto& c : summands(i)) {
      if (c.j >= 1) place(res.maps[c.j - 1], c.j - 1, c.k, c.offset);
      if (c.k >= 1 && c.j + 1 <= len) place(c.j == 0 ? s.s1 : s.s2, c.j + 1, c.k - 1, c.offset);
    }
    out.maps.push_back(std::move(m));
  }

  for (std::size_t i = 0; i + 1 < out.maps.size(); ++i) {
    if (!multiply(rbase, out.maps[i], out.maps[i + 1]).is_zero()) {
      throw ExactnessFailure("d o d != 0 at step " + std::to_string(i + 1));
    }
  }
  int top = 0, bottom = 0;
  bool any = false;
  for (const auto& d : out.degrees) {
    for (int g : d) {
      top = any ? std::max(top, g) : g;
      bottom = any ? std::min(bottom, g) : g;
      any = true;
    }
  }
  out.degree_bound = top;
  std::vector<FreeModule> mods;
  for (const auto& d : out.degrees) mods.emplace_back(rbase, d);
  for (int i = 1; i < steps; ++i) {
    for (int t = bottom; t <= top; ++t) {
      const auto in = linalg::rank(degree_piece(mods[i + 1], mods[i], out.maps[i], t));
      const auto outr = linalg::rank(degree_piece(mods[i], mods[i - 1], out.maps[i - 1], t));
      if (static_cast<std::size_t>(mods[i].dim(t)) != in + outr) {
        throw ExactnessFailure("homology at step " + std::to_string(i) + " in degree " + std::to_string(t));
      }
    }
  }
  for (const auto& m : out.maps) out.minimal.push_back(!has_unit_entry(m));
  return out;
}

MinimizedResolution minimize_resolution(const ResolutionData& res) {
  MinimizedResolution out{res, {}};
  ResolutionData& r = out.resolution;
  const GradedBase& base = r.base;
  for (;;) {
    bool found = false;
    std::size_t i = 0, row = 0, col = 0;
    for (i = 0; i < r.maps.size() && !found; ++i) {
      const PolyMatrix& m = r.maps[i];
      for (row = 0; row < m.rows() && !found; ++row) {
        for (col = 0; col < m.cols() && !found; ++col) {
          if (!m(row, col).is_zero() && m(row, col).degree() == 0) found = true;
        }
      }
    }
    if (!found) break;
    --i, --row, --col;
    const PolyMatrix& a = r.maps[i];
    const Rational inv = 1 / a(row, col).constant();
    PolyMatrix reduced(a.rows() - 1, a.cols() - 1);
    for (std::size_t rr = 0, nr = 0; rr < a.rows(); ++rr) {
      if (rr == row) continue;
      for (std::size_t cc = 0, nc = 0; cc < a.cols(); ++cc) {
        if (cc == col) continue;
        Poly v = a(rr, cc);
        if (!a(rr, col).is_zero() && !a(row, cc).is_zero()) v -= a(rr, col) * a(row, cc) * inv;
        reduced(nr, nc++) = base.reduce(v);
      }
      ++nr;
    }
    const int degree = r.degrees[i + 1][col];
    ++out.cancellations[{static_cast<int>(i + 1), degree}];
    if (i + 1 < r.maps.size()) {
      const PolyMatrix& next = r.maps[i + 1];
      PolyMatrix dropped(next.rows() - 1, next.cols());
      for (std::size_t rr = 0, nr = 0; rr < next.rows(); ++rr) {
        if (rr == col) continue;
        for (std::size_t cc = 0; cc < next.cols(); ++cc) dropped(nr, cc) = next(rr, cc);
        ++nr;
      }
      r.maps[i + 1] = std::move(dropped);
    }
    if (i > 0) {
      const PolyMatrix& prev = r.maps[i - 1];
      PolyMatrix dropped(prev.rows(), prev.cols() - 1);
      for (std::size_t rr = 0; rr < prev.rows(); ++rr) {
        for (std::size_t cc = 0, nc = 0; cc < prev.cols(); ++cc) {
          if (cc != row) dropped(rr, nc++) = prev(rr, cc);
        }
      }
      r.maps[i - 1] = std::move(dropped);
    }
    r.maps[i] = std::move(reduced);
    r.degrees[i + 1].erase(r.degrees[i + 1].begin() + static_cast<std::ptrdiff_t>(col));
    r.degrees[i].erase(r.degrees[i].begin() + static_cast<std::ptrdiff_t>(row));
  }
  r.minimal.assign(r.maps.size(), true);
  return out;
}

int sigma_rank(const ResolutionData& res, const Homotopies& s, int i, int k) {
  if (i != 1 && i != 2) throw InvalidArgument("sigma is defined for steps 1 and 2");
  const PolyMatrix& si = i == 1 ? s.s1 : s.s2;
  auto degs = [&](int j) { return j < static_cast<int>(res.degrees.size()) ? res.degrees[j] : std::vector<int>{}; };
  const auto src = degs(i - 1);
  const auto tgt = degs(i);
  std::vector<Vector> rows;
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < src.size(); ++c) {
    if (src[c] == k) cols.push_back(c);
  }
  for (std::size_t r = 0; r < tgt.size(); ++r) {
    if (tgt[r] != k + 2) continue;
    Vector row;
    for (auto c : cols) row.push_back(si(r, c).constant());
    rows.push_back(std::move(row));
  }
  if (rows.empty() || cols.empty()) return 0;
  return static_cast<int>(linalg::rank(Matrix::from_rows(rows, cols.size())));
}

Poly nonzerodivisor_form(const RingSpec& ring) {
  if (!ring.is_quadric()) throw InvalidArgument("no linear nonzerodivisor over " + ring.describe());
  const GradedBase base = GradedBase::of(ring);
  const FreeModule r(base, {0});
  for (const Poly& l : {Poly::y(), Poly::x(), Poly::x() + Poly::y()}) {
    bool injective = true;
    for (int t = 1; t <= 2 && injective; ++t) {
      injective = linalg::rank(r.multiplication(l, 1, t)) == static_cast<std::size_t>(r.dim(t - 1));
    }
    if (injective) return l;
  }
  throw InvalidArgument("no nonzerodivisor among y, x, x + y");
}

GradedPresentation pure_module(const RingSpec& ring, const DegreeSequence& d) {
  d.validate(ring);
  if (d.kind == SeqKind::Pd0) return GradedPresentation::over_ring(ring, {d.d0}, {});
  const int a = d.d1 - d.d0;
  if (!ring.is_quadric()) {
    if (a >= ring.n()) {
      throw InvalidArgument(d.describe(ring) + " is not realised by a cyclic module");
    }
    return GradedPresentation::over_ring(ring, {d.d0}, {{Poly::x().pow(a)}});
  }
  const Poly l = nonzerodivisor_form(ring);
  if (d.kind == SeqKind::Pd1) return GradedPresentation::over_ring(ring, {d.d0}, {{l.pow(a)}});
  const Poly m = l == Poly::x() ? Poly::y() : Poly::x();
  return GradedPresentation::over_ring(ring, {d.d0}, {{l.pow(a)}, {m * l.pow(a - 1)}});
}

GradedPresentation truncate_presentation(const GradedPresentation& minimal, int k) {
  minimal.validate();
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < minimal.generator_degrees.size(); ++r) {
    if (minimal.generator_degrees[r] <= k) rows.push_back(r);
  }
  GradedPresentation out;
  out.base = minimal.base;
  out.ring = minimal.ring;
  for (auto r : rows) out.generator_degrees.push_back(minimal.generator_degrees[r]);
  std::vector<std::vector<Poly>> cols;
  for (std::size_t c = 0; c < minimal.relation_degrees.size(); ++c) {
    if (minimal.relation_degrees[c] > k + 1) continue;
    for (std::size_t r = 0; r < minimal.generator_degrees.size(); ++r) {
      if (minimal.generator_degrees[r] > k && !minimal.relations(r, c).is_zero()) {
        throw InvalidArgument("presentation is not minimal");
      }
    }
    std::vector<Poly> col;
    for (auto r : rows) col.push_back(minimal.relations(r, c));
    out.relation_degrees.push_back(minimal.relation_degrees[c]);
    cols.push_back(std::move(col));
  }
  out.relations = from_columns(rows.size(), cols);
  return out;
}

int presentation_hilbert(const GradedPresentation& p, int t) {
  p.validate();
  const FreeModule f0(p.base, p.generator_degrees);
  const FreeModule f1(p.base, p.relation_degrees);
  return f0.dim(t) - static_cast<int>(linalg::rank(degree_piece(f1, f0, p.relations, t)));
}

BettiDiagram structure_theorem_betti(const RingSpec& ring, const GradedPresentation& p) {
  if (ring.is_quadric()) throw InvalidArgument("the structure theorem applies over Q[x]/<x^n> only");
  check_ring(ring, p);
  p.validate();
  if (p.generator_degrees.empty()) return BettiDiagram(ring);
  const int n = ring.n();
  const FreeModule f0(p.base, p.generator_degrees);
  const FreeModule f1(p.base, p.relation_degrees);
  const int lo = *std::min_element(p.generator_degrees.begin(), p.generator_degrees.end());
  const int hi = *std::max_element(p.generator_degrees.begin(), p.generator_degrees.end()) + n - 1;

  std::map<int, Matrix> proj;
  auto projection = [&](int t) -> const Matrix& {
    auto it = proj.find(t);
    if (it == proj.end()) it = proj.emplace(t, cokernel_projection(f0, f1, p.relations, t)).first;
    return it->second;
  };
  // rank of x^c : M_t -> M_{t+c}
  auto r = [&](int t, int c) -> int {
    if (t < lo || t > hi || c >= n) return 0;
    if (c == 0) return static_cast<int>(projection(t).rows());
    return static_cast<int>(linalg::rank(projection(t + c) * f0.multiplication(Poly::x().pow(c), c, t + c)));
  };

  std::vector<std::pair<Rational, BettiDiagram>> parts;
  for (int a = lo; a <= hi; ++a) {
    for (int c = 1; c <= n; ++c) {
      const int count = r(a, c - 1) - r(a - 1, c) - r(a, c) + r(a - 1, c + 1);
      if (count == 0) continue;
      const DegreeSequence d = c == n ? DegreeSequence::pd0(a) : DegreeSequence::inf(a, a + c);
      parts.emplace_back(Rational(count), pure_diagram(ring, d));
    }
  }
  if (parts.empty()) return BettiDiagram(ring);
  return linear_combine(parts);
}

}  // namespace betti
