#pragma once

#include "polyinc/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyinc {

inline constexpr std::size_t kMaxArity = 6;

/// Exponent vector. Unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxArity> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxArity; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  /// Precondition: this->divides(num).
  Monomial quotient_of(const Monomial& num) const;

  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: total degree first, then the larger exponent
/// of the earliest variable wins.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q in `arity` variables. Zero
/// coefficients are never stored; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity);

  static MultiPoly constant(std::size_t arity, const Rat& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(std::size_t arity, const Monomial& m, const Rat& c);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Highest exponent of `var` over all terms; -1 for zero.
  int degree_in(std::size_t var) const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rat coefficient(const Monomial& m) const;
  /// Adds c·m in place.
  void add_term(const Monomial& m, const Rat& c);

  /// Greatest term under grlex. Precondition: nonzero.
  const std::pair<const Monomial, Rat>& leading_term() const { return *terms_.rbegin(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const;

  /// Same terms viewed in a polynomial ring with more (or equally many)
  /// variables. Throws when a dropped variable occurs.
  MultiPoly with_arity(std::size_t arity) const;

  /// Human-readable form using the given variable names (default x, y, z, v1, v2, v3).
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t arity_ = 0;
  TermMap terms_;
};

/// Exact evaluation. Throws std::invalid_argument on arity mismatch.
Rat poly_eval(const MultiPoly& p, std::span<const Rat> point);

/// Formal partial derivative in variable `var`.
MultiPoly poly_partial(const MultiPoly& p, std::size_t var);

/// Substitutes polynomials (all of one common arity) for each variable.
MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> values);

/// Multivariate division by a single divisor under grlex. Returns the
/// quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<MultiPoly> exact_quotient(const MultiPoly& dividend, const MultiPoly& divisor);

/// True iff q = p·h for some polynomial h. Precondition: p nonzero.
bool divides(const MultiPoly& p, const MultiPoly& q);

/// Writes p as a polynomial in `var` with coefficients free of `var`
/// (lowest power first). Coefficients keep the arity of p.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);

/// All monomials in `arity` variables of total degree in [min_degree, max_degree]:
/// by degree, and within a degree the earliest variable's power first
/// (1, x, y, z, x², xy, xz, y², yz, z², ...).
std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned max_degree, unsigned min_degree = 0);

/// Value of a single monomial at a point.
Rat monomial_value(const Monomial& m, std::span<const Rat> point);

}  // namespace polyinc
