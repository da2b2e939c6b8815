#include "polyinc/resultant.hpp"

#include <stdexcept>
#include <unordered_map>

namespace polyinc {

namespace {

std::size_t check_square(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) throw std::invalid_argument("determinant: empty matrix");
  return n;
}

}  // namespace

MultiPoly determinant_expansion(const PolyMatrix& m) {
  const std::size_t n = check_square(m);
  if (n > 20) throw std::invalid_argument("determinant_expansion: matrix too large");
  const std::size_t arity = m[0][0].arity();
  // minors[mask] = determinant of the submatrix using the rows in `mask`
  // and the first popcount(mask) columns.
  std::unordered_map<std::uint32_t, MultiPoly> minors{{0u, MultiPoly::constant(arity, Rat(1))}};
  for (std::size_t col = 0; col < n; ++col) {
    std::unordered_map<std::uint32_t, MultiPoly> next;
    for (const auto& [mask, minor] : minors) {
      if (minor.is_zero()) continue;
      // Each used row with a larger index than the chosen one is an inversion.
      int above = 0;
      for (std::size_t row = n; row-- > 0;) {
        std::uint32_t bit = 1u << row;
        if (mask & bit) {
          ++above;
          continue;
        }
        if (m[row][col].is_zero()) continue;
        MultiPoly term = m[row][col] * minor;
        if (above % 2 == 1) term = -term;
        auto [it, inserted] = next.try_emplace(mask | bit, term);
        if (!inserted) it->second += term;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((1u << n) - 1u);
  return it == minors.end() ? MultiPoly(arity) : it->second;
}

MultiPoly determinant_bareiss(const PolyMatrix& input) {
  const std::size_t n = check_square(input);
  const std::size_t arity = input[0][0].arity();
  PolyMatrix a = input;
  MultiPoly prev = MultiPoly::constant(arity, Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(arity);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = exact_quotient(num, prev);
        if (!q) throw std::logic_error("determinant_bareiss: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MultiPoly(arity);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly determinant(const PolyMatrix& m) {
  return check_square(m) <= 10 ? determinant_expansion(m) : determinant_bareiss(m);
}

MultiPoly sylvester_resultant(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
  auto all_zero = [](const std::vector<MultiPoly>& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };
  if (f.size() < 2 || g.size() < 2) throw std::invalid_argument("sylvester_resultant: degree must be >= 1");
  if (all_zero(f) || all_zero(g)) throw std::invalid_argument("sylvester_resultant: zero input polynomial");
  const std::size_t arity = f[0].arity();
  for (const auto& c : f)
    if (c.arity() != arity) throw std::invalid_argument("sylvester_resultant: mixed arities");
  for (const auto& c : g)
    if (c.arity() != arity) throw std::invalid_argument("sylvester_resultant: mixed arities");

  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  PolyMatrix s(n, std::vector<MultiPoly>(n, MultiPoly(arity)));
  // Rows hold shifted copies of the coefficient lists, leading coefficient first.
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) s[r][r + k] = f[df - k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) s[dg + r][r + k] = g[dg - k];
  return determinant(s);
}

bool has_common_factor(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) throw std::invalid_argument("has_common_factor: zero first argument");
  if (p.arity() != q.arity()) throw std::invalid_argument("has_common_factor: arity mismatch");
  if (q.is_zero()) return !p.is_constant();
  if (p.is_constant() || q.is_constant()) return false;
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (p.degree_in(v) < 1 || q.degree_in(v) < 1) continue;
    if (sylvester_resultant(coefficients_in(p, v), coefficients_in(q, v)).is_zero()) return true;
  }
  return false;
}

}  // namespace polyinc
