#pragma once

#include "polyinc/multipoly.hpp"
#include "polyinc/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace polyinc::test {

inline MultiPoly var(std::size_t i, std::size_t arity = 3) { return MultiPoly::variable(arity, i); }
inline MultiPoly cst(const Rat& c, std::size_t arity = 3) { return MultiPoly::constant(arity, c); }
inline MultiPoly X() { return var(0); }
inline MultiPoly Y() { return var(1); }
inline MultiPoly Z() { return var(2); }

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rat small_rat(std::mt19937_64& rng, long range = 5, long max_den = 3) {
  return rat(uniform_int(rng, -range, range), uniform_int(rng, 1, max_den));
}

/// Random polynomial in `arity` variables with up to `terms` terms of degree <= max_degree.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t arity, unsigned max_degree, int terms) {
  MultiPoly p(arity);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned left = static_cast<unsigned>(uniform_int(rng, 0, max_degree));
    for (std::size_t i = 0; i < arity && left > 0; ++i) {
      auto e = static_cast<unsigned>(uniform_int(rng, 0, left));
      m.exp[i] = static_cast<std::uint16_t>(e);
      left -= e;
    }
    p.add_term(m, small_rat(rng));
  }
  return p;
}

/// Rank by textbook Gaussian elimination over Q, independent of the library's
/// fraction-free routine.
inline std::size_t gauss_rank(std::vector<std::vector<Rat>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace polyinc::test
