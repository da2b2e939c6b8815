#pragma once

#include "polyinc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyinc {

/// Dense univariate polynomial over Q, lowest degree first. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  /// The monomial t.
  static UniPoly identity() { return UniPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& t) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Number of distinct real roots of q in the open interval (lo, hi), by Sturm
/// sequences. Throws std::invalid_argument when q is zero, lo >= hi, or an
/// endpoint is a root.
std::size_t sturm_count(const UniPoly& q, const Rat& lo, const Rat& hi);

/// A positive rational B with every real root of q inside (-B, B)
/// (Cauchy bound plus one). Precondition: q nonzero.
Rat root_bound(const UniPoly& q);

}  // namespace polyinc
