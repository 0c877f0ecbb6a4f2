#include "gordan/rank_tracker.hpp"

#include <algorithm>

namespace gordan {

namespace {
std::size_t first_nonzero(const std::vector<Int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}
}  // namespace

void RankTracker::reduce(std::vector<Int>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivots_[i];
    if (v[p] == 0) continue;
    const auto& row = rows_[i];
    Int g = gcd(v[p], row[p]);
    Int a = row[p] / g;  // multiplier for v
    Int b = v[p] / g;    // multiplier for row
    // the whole vector is rescaled, not just the tail past the pivot
    for (std::size_t c = 0; c < p; ++c) v[c] *= a;
    for (std::size_t c = p; c < dim_; ++c) v[c] = a * v[c] - b * row[c];
  }
}

bool RankTracker::add(std::vector<Int> v) {
  if (v.size() != dim_) throw UsageError("rank tracker row length mismatch");
  reduce(v);
  std::size_t p = first_nonzero(v);
  if (p == dim_) return false;
  make_primitive(v);
  // keep pivot order strictly increasing for deterministic reduction
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RankTracker::in_span(std::vector<Int> v) const {
  if (v.size() != dim_) throw UsageError("rank tracker row length mismatch");
  reduce(v);
  return first_nonzero(v) == dim_;
}

}  // namespace gordan
