#include "betti_cone/cone.hpp"

#include <algorithm>

namespace betti {

BettiDiagram reassemble(const RingSpec& ring, const Decomposition& dec) {
  if (dec.terms.empty()) return BettiDiagram(ring);
  std::vector<std::pair<Rational, BettiDiagram>> parts;
  parts.reserve(dec.terms.size());
  for (const auto& t : dec.terms) parts.emplace_back(t.coefficient, pure_diagram(ring, t.sequence));
  return linear_combine(parts);
}

std::vector<DegreeSequence> compatible_sequences(const RingSpec& ring, const BettiDiagram& v) {
  std::vector<DegreeSequence> out;
  if (v.is_zero()) return out;
  const Column col0 = v.column(0);
  const Column col1 = v.column(1);
  // Two full periods past the window settle every infinite sequence.
  const int reach = v.horizon() + 2 * ring.tail_period() + 2;
  auto supported = [&](const DegreeSequence& d) {
    for (int i = 1; i <= reach; ++i) {
      auto deg = d.degree(ring, i);
      if (!deg) break;
      if (sgn(v.entry(i, *deg)) == 0) return false;
    }
    return true;
  };
  for (const auto& [d0, x0] : col0) {
    out.push_back(DegreeSequence::pd0(d0));
    for (const auto& [d1, x1] : col1) {
      if (d1 <= d0) continue;
      if (ring.is_quadric()) out.push_back(DegreeSequence::pd1(d0, d1));
      auto inf = DegreeSequence::inf(d0, d1);
      if (supported(inf)) out.push_back(inf);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

std::vector<DegreeSequence> extremes(const RingSpec& ring, const std::vector<DegreeSequence>& all,
                                     Order beaten_by) {
  std::vector<DegreeSequence> out;
  for (const auto& d : all) {
    bool extreme = true;
    for (const auto& e : all) {
      if (compare(ring, e, d) == beaten_by) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(d);
  }
  return out;
}

}  // namespace

DegreeSequence minimal_compatible(const RingSpec& ring, const BettiDiagram& v) {
  auto mins = extremes(ring, compatible_sequences(ring, v), Order::Less);
  if (mins.empty()) {
    throw NotInCone(Violation{Eps{0, 0}, v.entry(0, 0)});
  }
  return mins.front();
}

DegreeSequence maximal_compatible(const RingSpec& ring, const BettiDiagram& v) {
  auto maxs = extremes(ring, compatible_sequences(ring, v), Order::Greater);
  if (maxs.empty()) {
    throw NotInCone(Violation{Eps{0, 0}, v.entry(0, 0)});
  }
  return maxs.back();
}

Rational max_step(const RingSpec& ring, const BettiDiagram& v, const DegreeSequence& d) {
  const BettiDiagram pure = pure_diagram(ring, d);
  std::optional<Rational> best;
  for (const auto& f : active_functionals(ring, {&v, &pure})) {
    if (is_equality(f)) continue;
    const Rational on_pure = eval(f, pure);
    if (sgn(on_pure) <= 0) continue;
    Rational ratio = eval(f, v) / on_pure;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  if (!best) throw NonTermination("unbounded step along " + d.describe(ring));
  return *best;
}

Decomposition decompose(const RingSpec& ring, const BettiDiagram& v) {
  if (auto violation = membership(ring, v)) throw NotInCone(*violation);

  Decomposition dec;
  BettiDiagram rest = v;
  int area = 1;
  if (auto rows = v.row_range()) area = (v.horizon() + 1) * (rows->second - rows->first + 1);
  const int cap = 4 * area;
  while (!rest.is_zero()) {
    if (static_cast<int>(dec.terms.size()) >= cap) {
      throw NonTermination("greedy decomposition exceeded " + std::to_string(cap) + " steps");
    }
    const DegreeSequence d = minimal_compatible(ring, rest);
    const Rational c = max_step(ring, rest, d);
    if (sgn(c) <= 0) {
      throw NonTermination("greedy decomposition stalled at " + d.describe(ring));
    }
    if (!dec.terms.empty() && !precedes(ring, dec.terms.back().sequence, d)) {
      throw NonTermination("greedy decomposition left its chain at " + d.describe(ring));
    }
    rest = rest - pure_diagram(ring, d).scaled(c);
    dec.terms.push_back({c, d});
  }
  return dec;
}

Rational hilbert_function(const RingSpec& ring, const BettiDiagram& v, int k) {
  Rational h = 0;
  const int p = v.tail() ? v.tail()->period : 1;
  int quiet = 0;  // consecutive columns past the window with nothing in degree <= k
  for (int i = 0;; ++i) {
    const Column c = v.column(i);
    bool contributes = false;
    for (auto it = c.begin(); it != c.end() && it->first <= k; ++it) {
      contributes = true;
      const int hr = ring.hilbert(k - it->first);
      if (hr == 0) continue;
      if (i % 2 == 0) h += it->second * hr;
      else h -= it->second * hr;
    }
    if (i > v.last_column()) {
      quiet = contributes ? 0 : quiet + 1;
      if (quiet >= p) break;
    }
  }
  return h;
}

Rational multiplicity(const RingSpec& ring, const BettiDiagram& v) {
  auto rows = v.row_range();
  if (!rows) return 0;
  int lo = rows->first;
  int hi = rows->second + v.horizon();
  const int settle = ring.relation_degree() + 4;
  const int last = hi + 2 * settle;
  std::vector<Rational> h;
  for (int k = lo; k <= last; ++k) h.push_back(hilbert_function(ring, v, k));
  const Rational& tail_value = h.back();
  for (int t = 0; t < settle; ++t) {
    if (h[h.size() - 1 - t] != tail_value) {
      throw NotEventuallyConstant("Hilbert function has not settled by degree " +
                                  std::to_string(last));
    }
  }
  if (sgn(tail_value) != 0) return tail_value;
  Rational length = 0;
  for (const auto& x : h) length += x;
  return length;
}

MultiplicityReport multiplicity_bounds(const RingSpec& ring, const BettiDiagram& v) {
  const Column gens = v.column(0);
  if (gens.size() != 1) {
    throw MultipleGeneratorDegrees("multiplicity bounds need generators in a single degree, found " +
                                   std::to_string(gens.size()));
  }
  if (auto violation = membership(ring, v)) throw NotInCone(*violation);
  const Rational beta0 = gens.begin()->second;

  MultiplicityReport r;
  r.e = multiplicity(ring, v);
  // The extremes are the ends of the decomposition chain; the largest
  // compatible sequence overall would always be (d0, inf, ...).
  const Decomposition dec = decompose(ring, v);
  r.min_compatible = dec.terms.front().sequence;
  r.max_compatible = dec.terms.back().sequence;
  r.upper = beta0 * multiplicity(ring, pure_diagram(ring, r.max_compatible));
  if (r.max_compatible.kind != SeqKind::Pd0) {
    r.lower = beta0 * multiplicity(ring, pure_diagram(ring, r.min_compatible));
    r.lower_equal = r.e == *r.lower;
  }
  r.upper_equal = r.e == r.upper;
  r.extremes_coincide = r.min_compatible == r.max_compatible;
  return r;
}

}  // namespace betti
