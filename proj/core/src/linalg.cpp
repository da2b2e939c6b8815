#include "polyinc/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace polyinc {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RatMatrix::append_row(const std::vector<Rat>& row) {
  if (row.size() != cols_) throw std::invalid_argument("RatMatrix: row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rat> RatMatrix::multiply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::multiply: size mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Int>>;

IntRows integer_rows(const RatMatrix& m) {
  IntRows rows(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
  }
  return rows;
}

// Fraction-free elimination to row echelon form in place. Every entry stays
// an integer minor of the input, so the division by the previous pivot is exact.
// Pivots are searched only in the first `pivot_cols` columns; updates cover
// whole rows (augmented columns included).
EchelonForm bareiss_echelon(IntRows& a, std::size_t pivot_cols) {
  EchelonForm ef;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < a[i].size(); ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ef.pivot_cols.push_back(c);
    ++r;
  }
  ef.rank = r;
  return ef;
}


// ---- modular fast paths ----------------------------------------------------
// Rank mod p never exceeds rank over Q, so a full rank mod p is a certificate.
// A nullspace candidate built from the mod-p pivot structure is accepted only
// after M·v = 0 has been checked exactly; otherwise the Bareiss path runs.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL};
// Below this many entries plain Bareiss is already fast.
constexpr std::size_t kModularMinEntries = 400;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, b = mul_mod(b, b, p))
    if (e & 1) r = mul_mod(r, b, p);
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce(const Int& x, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

struct ModularScan {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // original row of each pivot, in column order
  std::optional<std::size_t> first_free;
};

// Gaussian elimination mod p over the columns in order. With stop_at_free the
// scan ends at the first column that depends on the earlier ones.
ModularScan modular_scan(const IntRows& a, std::size_t cols, u64 p, bool stop_at_free) {
  std::vector<std::vector<u64>> m(a.size(), std::vector<u64>(cols));
  std::vector<std::size_t> origin(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    origin[r] = r;
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = reduce(a[r][c], p);
  }
  ModularScan scan;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) {
      if (!scan.first_free) scan.first_free = c;
      if (stop_at_free) break;
      continue;
    }
    std::swap(m[r], m[pivot]);
    std::swap(origin[r], origin[pivot]);
    const u64 inv = inv_mod(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul_mod(m[r][j], inv, p);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const u64 f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub_mod(m[i][j], mul_mod(f, m[r][j], p), p);
    }
    scan.pivot_rows.push_back(origin[r]);
    ++r;
  }
  scan.rank = r;
  if (!scan.first_free && r < cols) scan.first_free = r;  // rows ran out first
  return scan;
}

// Inverse of a square matrix mod p; nullopt when singular mod p.
std::optional<std::vector<std::vector<u64>>> inverse_mod(std::vector<std::vector<u64>> m, u64 p) {
  const std::size_t n = m.size();
  std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[c], m[pivot]);
    std::swap(inv[c], inv[pivot]);
    const u64 s = inv_mod(m[c][c], p);
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = mul_mod(m[c][j], s, p);
      inv[c][j] = mul_mod(inv[c][j], s, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const u64 f = m[i][c];
      if (i == c || f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = sub_mod(m[i][j], mul_mod(f, m[c][j], p), p);
        inv[i][j] = sub_mod(inv[i][j], mul_mod(f, inv[c][j], p), p);
      }
    }
  }
  return inv;
}

// Smallest |n|/d with n ≡ d·x (mod P), |n| <= bound, 0 < d <= bound.
bool rational_reconstruct(const Int& x, const Int& modulus, const Int& bound, Int& num, Int& den) {
  Int r0 = modulus, r1 = x, s0 = 0, s1 = 1, q, t;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    t = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(t);
    t = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(t);
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  num = sgn(s1) < 0 ? Int(-r1) : r1;
  den = abs(s1);
  return true;
}

// Solves A·x = b over Q by p-adic (Dixon) lifting. A is square and invertible
// mod p. Returns x as integers w over one common denominator.
bool dixon_solve(const IntRows& a, const std::vector<Int>& b, u64 p, std::vector<Int>& w, Int& denom) {
  const std::size_t n = a.size();
  std::vector<std::vector<u64>> am(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) am[i][j] = reduce(a[i][j], p);
  auto inv = inverse_mod(std::move(am), p);
  if (!inv) return false;

  // Hadamard bound B >= |det A| and >= every Cramer numerator.
  double log2_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t bits = mpz_sizeinbase(b[i].get_mpz_t(), 2);
    for (const auto& v : a[i]) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    log2_bound += static_cast<double>(bits) + 0.5 * std::log2(static_cast<double>(n + 1));
  }
  const auto bound_bits = static_cast<std::size_t>(std::ceil(log2_bound)) + 1;
  const double log2_p = std::log2(static_cast<double>(p));
  const auto steps = static_cast<std::size_t>(std::ceil((2.0 * static_cast<double>(bound_bits) + 2.0) / log2_p)) + 1;

  std::vector<std::vector<u64>> digits(steps, std::vector<u64>(n));
  std::vector<Int> residual = b;
  std::vector<u64> rm(n);
  for (std::size_t k = 0; k < steps; ++k) {
    for (std::size_t i = 0; i < n; ++i) rm[i] = reduce(residual[i], p);
    auto& x = digits[k];
    for (std::size_t i = 0; i < n; ++i) {
      u128 acc = 0;
      u64 s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        acc += static_cast<u128>((*inv)[i][j]) * rm[j];
        if ((j & 31) == 31) { s = static_cast<u64>((s + acc % p) % p); acc = 0; }
      }
      x[i] = static_cast<u64>((s + acc % p) % p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      mpz_ptr t = residual[i].get_mpz_t();
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] != 0) mpz_submul_ui(t, a[i][j].get_mpz_t(), x[j]);
      mpz_divexact_ui(t, t, p);
    }
  }

  Int modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, steps);
  Int bound;
  mpz_setbit(bound.get_mpz_t(), bound_bits);
  const Int half = modulus / 2;

  std::vector<Int> nums(n), dens(n);
  denom = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int xi = 0;
    for (std::size_t k = steps; k-- > 0;) {
      mpz_mul_ui(xi.get_mpz_t(), xi.get_mpz_t(), p);
      mpz_add_ui(xi.get_mpz_t(), xi.get_mpz_t(), digits[k][i]);
    }
    Int y = xi * denom % modulus;
    if (y > half) y -= modulus;
    if (abs(y) <= bound) {
      nums[i] = y;
      dens[i] = denom;
      continue;
    }
    Int num, den;
    if (!rational_reconstruct(xi, modulus, bound, num, den)) return false;
    nums[i] = num;
    dens[i] = den;
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), den.get_mpz_t());
  }
  w.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) w[i] = nums[i] * (denom / dens[i]);
  return true;
}

std::vector<Rat> normalized(std::vector<Rat> x) {
  Int lcm_den = 1, g = 0;
  for (const auto& v : x) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
  for (auto& v : x) {
    v *= lcm_den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  int last_sign = 0;
  for (const auto& v : x)
    if (v != 0) last_sign = sgn(v);
  Rat scale(g * last_sign);
  for (auto& v : x) v /= scale;
  return x;
}

enum class ModularVerdict { FullRank, Found, Unknown };

// The candidate is the dependency of the first non-pivot column on the
// earlier columns, which is exactly the vector the Bareiss path returns.
ModularVerdict modular_nullspace(const IntRows& a, std::size_t cols, u64 p, std::vector<Rat>& out) {
  ModularScan scan = modular_scan(a, cols, p, true);
  if (scan.rank == cols) return ModularVerdict::FullRank;
  const std::size_t f = scan.first_free ? *scan.first_free : scan.rank;

  std::vector<Int> w(cols, 0);
  if (f == 0) {
    w[0] = 1;
  } else {
    IntRows sub(f, std::vector<Int>(f));
    std::vector<Int> rhs(f);
    for (std::size_t i = 0; i < f; ++i) {
      const auto& row = a[scan.pivot_rows[i]];
      for (std::size_t j = 0; j < f; ++j) sub[i][j] = row[j];
      rhs[i] = -row[f];
    }
    std::vector<Int> sol;
    Int denom;
    if (!dixon_solve(sub, rhs, p, sol, denom)) return ModularVerdict::Unknown;
    for (std::size_t j = 0; j < f; ++j) w[j] = std::move(sol[j]);
    w[f] = denom;
  }

  Int acc;
  for (const auto& row : a) {
    acc = 0;
    for (std::size_t j = 0; j <= f; ++j)
      if (w[j] != 0) mpz_addmul(acc.get_mpz_t(), row[j].get_mpz_t(), w[j].get_mpz_t());
    if (acc != 0) return ModularVerdict::Unknown;
  }
  out.assign(cols, Rat(0));
  for (std::size_t j = 0; j <= f; ++j) out[j] = Rat(w[j]);
  out = normalized(std::move(out));
  return ModularVerdict::Found;
}

}  // namespace

std::size_t matrix_rank(const RatMatrix& m) {
  IntRows a = integer_rows(m);
  if (m.rows() * m.cols() >= kModularMinEntries) {
    const std::size_t cap = std::min(m.rows(), m.cols());
    if (modular_scan(a, m.cols(), kPrimes[0], false).rank == cap) return cap;
  }
  return bareiss_echelon(a, m.cols()).rank;
}

std::optional<std::vector<Rat>> nullspace_vector(const RatMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return std::nullopt;
  IntRows a = integer_rows(m);
  if (m.rows() * n >= kModularMinEntries) {
    for (u64 p : kPrimes) {
      std::vector<Rat> x;
      const ModularVerdict v = modular_nullspace(a, n, p, x);
      if (v == ModularVerdict::FullRank) return std::nullopt;
      if (v == ModularVerdict::Found) return x;
    }
  }
  EchelonForm ef = bareiss_echelon(a, n);
  if (ef.rank == n) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rat> x(n);
  x[free_col] = 1;
  for (std::size_t k = ef.rank; k-- > 0;) {
    std::size_t pc = ef.pivot_cols[k];
    if (pc > free_col) continue;  // no dependence on the chosen free column
    Rat acc(0);
    for (std::size_t j = pc + 1; j < n; ++j)
      if (x[j] != 0 && a[k][j] != 0) acc += Rat(a[k][j]) * x[j];
    x[pc] = -acc / Rat(a[k][pc]);
  }

  return normalized(std::move(x));
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: need a square system");
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  IntRows rows = integer_rows(aug);
  EchelonForm ef = bareiss_echelon(rows, n);
  if (ef.rank < n) return std::nullopt;
  std::vector<Rat> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rat acc(rows[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rat(rows[k][j]) * x[j];
    x[k] = acc / Rat(rows[k][k]);
  }
  return x;
}

}  // namespace polyinc
