#include "betti_cone/betti_diagram.hpp"

#include <algorithm>
#include <sstream>

#include "betti_cone/errors.hpp"

namespace betti {

namespace {

Column shifted(const Column& c, int s) {
  Column out;
  for (const auto& [j, v] : c) out.emplace_hint(out.end(), j + s, v);
  return out;
}

void drop_zeros(Column& c) { std::erase_if(c, [](const auto& kv) { return sgn(kv.second) == 0; }); }

// Raw lookup through a tail rule on an unnormalised window.
Rational lookup(const std::vector<Column>& cols, const std::optional<ShiftPeriodic>& tail, int i,
                int j) {
  const int last = static_cast<int>(cols.size()) - 1;
  if (i <= last) {
    auto it = cols[i].find(j);
    return it == cols[i].end() ? Rational(0) : it->second;
  }
  if (!tail) return 0;
  const int k = (i - last + tail->period - 1) / tail->period;
  return lookup(cols, tail, i - k * tail->period, j - k * tail->shift);
}

Column lookup_column(const std::vector<Column>& cols, const std::optional<ShiftPeriodic>& tail,
                     int i) {
  const int last = static_cast<int>(cols.size()) - 1;
  if (i <= last) return cols[i];
  if (!tail) return {};
  const int k = (i - last + tail->period - 1) / tail->period;
  return shifted(lookup_column(cols, tail, i - k * tail->period), k * tail->shift);
}

}  // namespace

BettiDiagram::BettiDiagram(RingSpec ring) : ring_(std::move(ring)) {}

BettiDiagram BettiDiagram::make(RingSpec ring, std::vector<Column> columns,
                                std::optional<ShiftPeriodic> tail) {
  for (auto& c : columns) drop_zeros(c);

  if (!tail) {
    while (!columns.empty() && columns.back().empty()) columns.pop_back();
    return BettiDiagram(std::move(ring), std::move(columns), std::nullopt);
  }

  const int p = tail->period;
  const int s = tail->shift;
  const int a = tail->anchor;
  if (p < 1 || s < 1 || a < 0) {
    throw InvalidArgument("tail needs period >= 1, shift >= 1, anchor >= 0");
  }
  const int last = static_cast<int>(columns.size()) - 1;
  if (last < a + p - 1) {
    throw InvalidArgument("explicit window ends at column " + std::to_string(last) +
                          " but the tail needs columns through " + std::to_string(a + p - 1));
  }
  for (int i = a; i + p <= last; ++i) {
    if (shifted(columns[i], s) != columns[i + p]) {
      // First degree at which the two columns disagree.
      Column lhs = shifted(columns[i], s);
      const Column& rhs = columns[i + p];
      int j = 0;
      auto li = lhs.begin();
      auto ri = rhs.begin();
      for (;;) {
        if (li == lhs.end()) { j = ri->first - s; break; }
        if (ri == rhs.end()) { j = li->first - s; break; }
        if (li->first != ri->first) { j = std::min(li->first, ri->first) - s; break; }
        if (li->second != ri->second) { j = li->first - s; break; }
        ++li;
        ++ri;
      }
      throw TailInconsistency(i, j);
    }
  }

  // Lower the anchor as far as the relation allows, never below the ring's
  // canonical anchor; then keep exactly one period of explicit columns.
  const int floor_anchor = (p == ring.tail_period() && s == ring.tail_shift()) ? ring.tail_anchor() : 0;
  const int reach = std::max({last, a + p - 1, floor_anchor + p - 1}) + p;
  std::vector<Column> full;
  full.reserve(reach + 1);
  for (int i = 0; i <= reach; ++i) full.push_back(lookup_column(columns, tail, i));

  int anchor = std::max(a, floor_anchor);
  while (anchor - 1 >= floor_anchor && shifted(full[anchor - 1], s) == full[anchor - 1 + p]) --anchor;

  bool zero_tail = true;
  for (int i = anchor; i < anchor + p; ++i) zero_tail = zero_tail && full[i].empty();
  if (zero_tail) {
    full.resize(anchor);
    while (!full.empty() && full.back().empty()) full.pop_back();
    return BettiDiagram(std::move(ring), std::move(full), std::nullopt);
  }
  full.resize(anchor + p);
  return BettiDiagram(std::move(ring), std::move(full), ShiftPeriodic{p, s, anchor});
}

Rational BettiDiagram::entry(int i, int j) const {
  if (i < 0) throw InvalidArgument("column index must be >= 0");
  return lookup(columns_, tail_, i, j);
}

Column BettiDiagram::column(int i) const {
  if (i < 0) throw InvalidArgument("column index must be >= 0");
  return lookup_column(columns_, tail_, i);
}

int BettiDiagram::horizon() const { return last_column() + (tail_ ? tail_->period : 0); }

std::optional<std::pair<int, int>> BettiDiagram::row_range() const {
  std::optional<std::pair<int, int>> out;
  for (int i = 0; i <= horizon(); ++i) {
    for (const auto& [j, v] : column(i)) {
      const int r = j - i;
      if (!out) out = {r, r};
      out->first = std::min(out->first, r);
      out->second = std::max(out->second, r);
    }
  }
  return out;
}

BettiDiagram BettiDiagram::scaled(const Rational& c) const {
  if (sgn(c) == 0) return BettiDiagram(ring_);
  BettiDiagram out = *this;
  for (auto& col : out.columns_) {
    for (auto& [j, v] : col) v *= c;
  }
  return out;
}

BettiDiagram pure_diagram(const RingSpec& ring, const DegreeSequence& d) {
  d.validate(ring);
  std::vector<Column> cols;
  std::optional<ShiftPeriodic> tail;
  cols.push_back(Column{{d.d0, Rational(1)}});
  if (d.kind == SeqKind::Pd1) {
    cols.push_back(Column{{d.d1, Rational(1)}});
  } else if (d.kind == SeqKind::Inf) {
    const Rational weight = ring.is_quadric() ? 2 : 1;
    const int last = ring.tail_anchor() + ring.tail_period() - 1;
    for (int i = 1; i <= last; ++i) cols.push_back(Column{{*d.degree(ring, i), weight}});
    tail = ShiftPeriodic{ring.tail_period(), ring.tail_shift(), ring.tail_anchor()};
  }
  return BettiDiagram::make(ring, std::move(cols), tail);
}

BettiDiagram linear_combine(std::span<const std::pair<Rational, BettiDiagram>> terms) {
  if (terms.empty()) throw InvalidArgument("linear_combine needs at least one term");
  const RingSpec& ring = terms.front().second.ring();
  std::optional<ShiftPeriodic> shape;
  int reach = 0;
  for (const auto& [c, v] : terms) {
    if (!(v.ring() == ring)) throw FamilyMismatch("linear_combine over different rings");
    reach = std::max(reach, v.last_column());
    if (!v.tail()) continue;
    reach = std::max(reach, v.tail()->anchor);
    if (shape && (shape->period != v.tail()->period || shape->shift != v.tail()->shift)) {
      throw InvalidArgument("linear_combine: incompatible tail rules");
    }
    shape = v.tail();
  }
  if (!shape) {
    std::vector<Column> cols(std::max(reach + 1, 0));
    for (const auto& [c, v] : terms) {
      if (sgn(c) == 0) continue;
      for (int i = 0; i <= v.last_column(); ++i) {
        for (const auto& [j, x] : v.columns()[i]) cols[i][j] += c * x;
      }
    }
    return BettiDiagram::make(ring, std::move(cols), std::nullopt);
  }
  // Past every window and anchor only tails contribute, so the sum obeys the
  // shared rule from column reach + 1 on; make() lowers the anchor again.
  const int p = shape->period;
  const int last = reach + p;
  std::vector<Column> cols(last + 1);
  for (const auto& [c, v] : terms) {
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= last; ++i) {
      for (const auto& [j, x] : v.column(i)) cols[i][j] += c * x;
    }
  }
  return BettiDiagram::make(ring, std::move(cols), ShiftPeriodic{p, shape->shift, reach + 1});
}

BettiDiagram operator+(const BettiDiagram& a, const BettiDiagram& b) {
  std::pair<Rational, BettiDiagram> terms[] = {{1, a}, {1, b}};
  return linear_combine(terms);
}

BettiDiagram operator-(const BettiDiagram& a, const BettiDiagram& b) {
  std::pair<Rational, BettiDiagram> terms[] = {{1, a}, {-1, b}};
  return linear_combine(terms);
}

std::string render(const BettiDiagram& v, int min_columns) {
  const int ncols = std::max(v.horizon() + 1, min_columns);
  auto rows = v.row_range();
  int lo = 0, hi = 0;
  if (rows) {
    lo = std::min(rows->first, 0);
    hi = std::max(rows->second, 0);
  }
  std::vector<std::vector<std::string>> cells(hi - lo + 1, std::vector<std::string>(ncols));
  std::size_t width = 1;
  for (int r = lo; r <= hi; ++r) {
    for (int i = 0; i < ncols; ++i) {
      Rational x = v.entry(i, r + i);
      std::string s = sgn(x) == 0 ? "-" : to_string(x);
      if (i == 0 && r == 0) s = "*" + s;
      width = std::max(width, s.size());
      cells[r - lo][i] = std::move(s);
    }
  }
  std::ostringstream os;
  for (int r = lo; r <= hi; ++r) {
    for (int i = 0; i < ncols; ++i) {
      const auto& s = cells[r - lo][i];
      if (i > 0) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    if (v.tail()) os << " ...";
    os << '\n';
  }
  return os.str();
}

}  // namespace betti
