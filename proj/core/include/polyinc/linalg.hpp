#pragma once

#include "polyinc/rational.hpp"

#include <optional>
#include <vector>

namespace polyinc {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rat>& row);
  std::vector<Rat> multiply(const std::vector<Rat>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Row echelon data from fraction-free (Bareiss) elimination.
struct EchelonForm {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Rank by fraction-free elimination over Z after clearing row denominators.
std::size_t matrix_rank(const RatMatrix& m);

/// A nonzero v with M·v = 0, or nullopt when the nullspace is trivial.
/// The vector is scaled to primitive integers with its last nonzero entry
/// positive, so the result is deterministic.
std::optional<std::vector<Rat>> nullspace_vector(const RatMatrix& m);

/// Solves the square system A·x = b exactly; nullopt when A is singular.
std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace polyinc
