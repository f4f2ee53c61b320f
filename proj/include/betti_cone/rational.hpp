#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace betti {

using Rational = mpq_class;

/// Canonical "num/den" text; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "a", "-a" or "a/b" (b != 0). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace betti
