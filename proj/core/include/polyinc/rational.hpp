#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polyinc {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Closest rational with denominator at most `max_den` (continued fractions).
Rat approximate(double value, std::uint64_t max_den);

}  // namespace polyinc
