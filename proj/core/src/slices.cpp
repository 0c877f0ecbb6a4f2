#include "gordan/slices.hpp"

#include <functional>

namespace gordan {

bool SliceKey::operator<(const SliceKey& o) const {
  long ta = total_degree(), tb = o.total_degree();
  if (ta != tb) return ta < tb;
  if (order != o.order) return order < o.order;
  return multidegree < o.multidegree;
}

SliceBasis::SliceBasis(FormSpacePtr space, SliceKey key)
    : space_(std::move(space)), key_(std::move(key)) {
  if (static_cast<int>(key_.multidegree.size()) != space_->summands())
    throw UsageError("slice multidegree length mismatch");
  const auto& vars = space_->vars();
  // enumerate family by family; prune by the achievable weight window of the
  // remaining families
  int s_count = space_->summands();
  std::vector<long> tail_span(s_count + 1, 0);  // max |weight| of families > s
  for (int s = s_count - 1; s >= 0; --s)
    tail_span[s] = tail_span[s + 1] +
                   static_cast<long>(space_->order(s)) * key_.multidegree[s];

  Exp current(vars->size(), 0);
  std::function<void(int, long)> per_family = [&](int s, long weight_so_far) {
    if (s == s_count) {
      if (weight_so_far == key_.order) {
        index_.emplace(current, monomials_.size());
        monomials_.push_back(current);
      }
      return;
    }
    int n = space_->order(s), d = key_.multidegree[s];
    // choose exponents e_0..e_n with sum d; weight contribution
    // sum (n - 2j) e_j
    std::function<void(int, int, long)> per_coeff = [&](int j, int rem, long w) {
      long span = tail_span[s + 1];
      if (j == n) {
        current[space_->coeff_index(s, j)] = static_cast<std::uint16_t>(rem);
        long total = w + static_cast<long>(n - 2 * j) * rem;
        if (std::abs(weight_so_far + total - key_.order) <= span)
          per_family(s + 1, weight_so_far + total);
        current[space_->coeff_index(s, j)] = 0;
        return;
      }
      // weight still achievable from the remaining coefficients of this
      // family: within [-(n) rem, n rem] roughly; cheap window check
      for (int e = 0; e <= rem; ++e) {
        long w2 = w + static_cast<long>(n - 2 * j) * e;
        long rest = rem - e;
        long lo = w2 - static_cast<long>(n) * rest;
        long hi = w2 + static_cast<long>(n) * rest;
        long need = key_.order - weight_so_far;
        if (need < lo - span || need > hi + span) continue;
        current[space_->coeff_index(s, j)] = static_cast<std::uint16_t>(e);
        per_coeff(j + 1, rest, w2);
        current[space_->coeff_index(s, j)] = 0;
      }
    };
    per_coeff(0, d, 0);
  };
  per_family(0, 0);
}

std::vector<Int> SliceBasis::row_of(const MultiPoly& source) const {
  std::vector<Rat> coords(monomials_.size(), Rat(0));
  for (const auto& t : source.terms()) {
    auto it = index_.find(t.exp);
    if (it == index_.end())
      throw InternalError("source term outside the slice basis");
    coords[it->second] = t.coef;
  }
  Int den_lcm = 1;
  for (const auto& c : coords) {
    Int d = c.get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  std::vector<Int> row(monomials_.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Rat scaled = coords[i] * Rat(den_lcm);
    scaled.canonicalize();
    row[i] = scaled.get_num();
  }
  make_primitive(row);
  return row;
}

Int SliceBasis::dimension() const {
  return covariant_dimension({space_->orders(), key_.multidegree, key_.order});
}

}  // namespace gordan
