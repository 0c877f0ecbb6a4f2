#pragma once

#include <cstddef>
#include <vector>

#include "gordan/rational.hpp"

namespace gordan {

/// Incremental exact row space: rows are reduced against an integer echelon
/// basis with fraction-free elimination, so rank growth decisions are exact.
class RankTracker {
 public:
  explicit RankTracker(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the current basis; if a nonzero remainder survives it
  /// joins the basis. Returns true exactly when the rank grew.
  bool add(std::vector<Int> v);

  /// Reduction without insertion: true iff v lies in the current row space.
  bool in_span(std::vector<Int> v) const;

  RankTracker clone() const { return *this; }

 private:
  void reduce(std::vector<Int>& v) const;
  std::size_t dim_;
  std::vector<std::vector<Int>> rows_;  // primitive, pivots strictly increasing
  std::vector<std::size_t> pivots_;
};

}  // namespace gordan
