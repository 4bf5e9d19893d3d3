#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mrsk/errors.hpp"

namespace mrsk {

// All times and masses in the core are exact rationals; no floating point.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (q > 0 after reduction). Throws ParseError on garbage.
Rational rat_parse(const std::string& text);

// Formats as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rational& r);

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

// Floor / ceil to Integer.
Integer rat_floor(const Rational& r);
Integer rat_ceil(const Rational& r);

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Extended value lattice: nullopt encodes -infinity (no path exists).
using ExtValue = std::optional<Rational>;

inline ExtValue ext_max(const ExtValue& a, const ExtValue& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? b : a;
}

inline ExtValue ext_add(const ExtValue& a, const Rational& b) {
  if (!a) return std::nullopt;
  return Rational(*a + b);
}

std::string ext_to_string(const ExtValue& v);

// Sorted deduplicated union of two sorted vectors.
std::vector<Rational> merge_sorted_times(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b);

}  // namespace mrsk
