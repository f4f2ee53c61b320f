#include "betti_cone/degree_sequence.hpp"

#include <limits>
#include <tuple>

#include "betti_cone/errors.hpp"

namespace betti {

std::optional<int> DegreeSequence::degree(const RingSpec& ring, int i) const {
  if (i < 0) return std::nullopt;
  if (i == 0) return d0;
  switch (kind) {
    case SeqKind::Pd0:
      return std::nullopt;
    case SeqKind::Pd1:
      if (i == 1) return d1;
      return std::nullopt;
    case SeqKind::Inf:
      if (ring.is_quadric()) return d1 + i - 1;
      return (i % 2 == 0 ? d0 : d1) + (i / 2) * ring.n();
  }
  return std::nullopt;
}

void DegreeSequence::validate(const RingSpec& ring) const {
  if (kind == SeqKind::Pd0) {
    if (d1 != 0) throw InvalidArgument("Pd0 sequence carries a d1 value");
    return;
  }
  if (kind == SeqKind::Pd1 && !ring.is_quadric()) {
    throw InvalidArgument("(d0,d1,inf,...) is not a degree sequence over " + ring.describe());
  }
  if (d0 >= d1) {
    throw InvalidArgument("degree sequence requires d0 < d1, got d0=" + std::to_string(d0) +
                          ", d1=" + std::to_string(d1));
  }
  if (!ring.is_quadric() && d1 >= d0 + ring.n()) {
    throw InvalidArgument("degree sequence over " + ring.describe() + " requires d1 < d0 + n, got d0=" +
                          std::to_string(d0) + ", d1=" + std::to_string(d1));
  }
}

std::string DegreeSequence::describe(const RingSpec& ring) const {
  std::string s = "(" + std::to_string(d0);
  switch (kind) {
    case SeqKind::Pd0:
      s += ",inf,...";
      break;
    case SeqKind::Pd1:
      s += "," + std::to_string(d1) + ",inf,...";
      break;
    case SeqKind::Inf:
      for (int i = 1; i <= 3; ++i) s += "," + std::to_string(*degree(ring, i));
      s += ",...";
      break;
  }
  return s + ")";
}

namespace {

constexpr long kInfinity = std::numeric_limits<long>::max();

// Quadric sequences embed as (d0, e) with e = 2 d1 (Inf), 2 d1 + 1 (Pd1),
// infinity (Pd0); the order is termwise on that pair.
long quadric_key(const DegreeSequence& d) {
  switch (d.kind) {
    case SeqKind::Inf:
      return 2L * d.d1;
    case SeqKind::Pd1:
      return 2L * d.d1 + 1;
    case SeqKind::Pd0:
      return kInfinity;
  }
  return kInfinity;
}

bool leq(const RingSpec& ring, const DegreeSequence& a, const DegreeSequence& b) {
  if (ring.is_quadric()) return a.d0 <= b.d0 && quadric_key(a) <= quadric_key(b);
  if (a.kind != b.kind) return a.kind == SeqKind::Inf;
  if (a.kind == SeqKind::Pd0) return a.d0 <= b.d0;
  return a.d0 <= b.d0 && a.d1 <= b.d1;
}

}  // namespace

Order compare(const RingSpec& ring, const DegreeSequence& a, const DegreeSequence& b) {
  a.validate(ring);
  b.validate(ring);
  if (a == b) return Order::Equal;
  if (leq(ring, a, b)) return Order::Less;
  if (leq(ring, b, a)) return Order::Greater;
  return Order::Incomparable;
}

bool canonical_less(const DegreeSequence& a, const DegreeSequence& b) {
  auto key = [](const DegreeSequence& d) {
    const long d1 = d.kind == SeqKind::Pd0 ? kInfinity : d.d1;
    const int kind_rank = d.kind == SeqKind::Inf ? 0 : (d.kind == SeqKind::Pd1 ? 1 : 2);
    return std::tuple(d.d0, d1, kind_rank);
  };
  return key(a) < key(b);
}

const char* to_string(Order o) {
  switch (o) {
    case Order::Less:
      return "Less";
    case Order::Equal:
      return "Equal";
    case Order::Greater:
      return "Greater";
    case Order::Incomparable:
      return "Incomparable";
  }
  return "?";
}

}  // namespace betti
