#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gordan/rational.hpp"

namespace gordan {

/// Sparse rational matrix with exact rank and kernel computations.
///
/// Kernel output is canonical: vectors are derived from the reduced row
/// echelon form, one per free column in increasing column order, scaled to
/// coprime integers with positive entry at the free column.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, Rat v);
  Rat get(std::size_t r, std::size_t c) const;

  std::size_t rank() const;
  /// Basis of {v : M v = 0}; deterministic for a fixed input.
  std::vector<std::vector<Rat>> kernel() const;

  /// Residual check helper: exact M*v.
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

 private:
  std::vector<std::vector<Rat>> rref(std::vector<std::size_t>& pivot_cols) const;
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rat> entries_;
};

}  // namespace gordan
