#include "gordan/exact_matrix.hpp"

#include <algorithm>

namespace gordan {

void ExactMatrix::set(std::size_t r, std::size_t c, Rat v) {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(v);
}

Rat ExactMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

std::vector<std::vector<Rat>> ExactMatrix::rref(
    std::vector<std::size_t>& pivot_cols) const {
  std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_, Rat(0)));
  for (const auto& [rc, v] : entries_) m[rc.first][rc.second] = v;
  pivot_cols.clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m[sel][col] == 0) ++sel;
    if (sel == rows_) continue;
    std::swap(m[sel], m[row]);
    Rat inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols_; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = col; c < cols_; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return m;
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(pivots);
  return pivots.size();
}

std::vector<std::vector<Rat>> ExactMatrix::kernel() const {
  std::vector<std::size_t> pivots;
  auto m = rref(pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    // scale to coprime integers, positive at the free column
    Int den_lcm = 1;
    for (const auto& x : v) {
      Int d = x.get_den();
      den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    Int num_gcd = 0;
    for (auto& x : v) {
      x *= Rat(den_lcm);
      x.canonicalize();
      num_gcd = gcd(num_gcd, x.get_num());
    }
    if (num_gcd > 1)
      for (auto& x : v) {
        x /= Rat(num_gcd);
        x.canonicalize();
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> ExactMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw UsageError("vector length mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (const auto& [rc, val] : entries_) out[rc.first] += val * v[rc.second];
  return out;
}

}  // namespace gordan
