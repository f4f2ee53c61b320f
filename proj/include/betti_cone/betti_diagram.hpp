#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betti_cone/degree_sequence.hpp"
#include "betti_cone/rational.hpp"
#include "betti_cone/ring.hpp"

namespace betti {

/// entry(i + period, j + shift) == entry(i, j) for every i >= anchor.
struct ShiftPeriodic {
  int period = 1;
  int shift = 1;
  int anchor = 0;

  friend bool operator==(const ShiftPeriodic&, const ShiftPeriodic&) = default;
};

/// Degree j -> value; zero values are never stored.
using Column = std::map<int, Rational>;

/// A column-finite rational matrix indexed by (homological step i, degree j),
/// stored as a finite window of explicit columns plus an optional periodic
/// tail. Values are kept in a canonical form, so == is exact equality of the
/// represented (infinite) matrices.
class BettiDiagram {
 public:
  /// The zero diagram.
  explicit BettiDiagram(RingSpec ring);

  /// Validates the tail against the window and normalises.
  /// Throws TailInconsistency naming the first (i, j) with
  /// entry(i + p, j + s) != entry(i, j) inside the window, or
  /// InvalidArgument for a malformed tail.
  static BettiDiagram make(RingSpec ring, std::vector<Column> columns,
                           std::optional<ShiftPeriodic> tail);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Column>& columns() const { return columns_; }
  const std::optional<ShiftPeriodic>& tail() const { return tail_; }

  /// Index of the last explicit column, -1 for the zero diagram.
  int last_column() const { return static_cast<int>(columns_.size()) - 1; }

  bool is_zero() const { return columns_.empty(); }

  /// Tail-aware lookup; i >= 0.
  Rational entry(int i, int j) const;

  /// Column i with the tail rule applied.
  Column column(int i) const;

  /// Enough columns to see every distinct column at least once and one full
  /// period of the tail: explicit window plus one period.
  int horizon() const;

  /// Smallest / largest degree j - i over the support of columns [0, horizon()].
  std::optional<std::pair<int, int>> row_range() const;

  BettiDiagram scaled(const Rational& c) const;

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  BettiDiagram(RingSpec ring, std::vector<Column> columns, std::optional<ShiftPeriodic> tail)
      : ring_(std::move(ring)), columns_(std::move(columns)), tail_(tail) {}

  RingSpec ring_;
  std::vector<Column> columns_;
  std::optional<ShiftPeriodic> tail_;
};

/// The normalised pure diagram pi_d.
BettiDiagram pure_diagram(const RingSpec& ring, const DegreeSequence& d);

/// Exact pointwise combination. Terms must share the ring and any
/// nonzero tails must have the same (period, shift).
BettiDiagram linear_combine(std::span<const std::pair<Rational, BettiDiagram>> terms);

BettiDiagram operator+(const BettiDiagram& a, const BettiDiagram& b);
BettiDiagram operator-(const BettiDiagram& a, const BettiDiagram& b);

/// Display in the usual convention: row j - i, '-' for zero, '*' on (0,0).
/// Display only; never parsed back.
std::string render(const BettiDiagram& v, int min_columns = 4);

}  // namespace betti
