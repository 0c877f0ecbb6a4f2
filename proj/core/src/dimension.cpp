#include "gordan/dimension.hpp"

#include <functional>

#include <json.hpp>

namespace gordan {

std::vector<Int> gaussian_binomial(int n, int d) {
  if (n < 0 || d < 0) throw UsageError("negative Gaussian binomial parameters");
  // Pascal-type recurrence on the partitions-in-a-box generating function:
  // [n+d, d]_q = [n+d-1, d-1]_q + q^d [n+d-1, d]_q, division free.
  std::vector<std::vector<Int>> row(d + 1);
  row[0] = {Int(1)};
  for (int m = 1; m <= n + d; ++m) {
    for (int j = std::min(d, m); j >= 1; --j) {
      if (j == m) {
        // [m, m]_q = 1
        row[j] = {Int(1)};
        continue;
      }
      const auto& a = row[j - 1];           // [m-1, j-1]
      const auto& b = row[j];               // [m-1, j]
      std::size_t blen = b.size() + static_cast<std::size_t>(j);
      std::vector<Int> next(std::max(a.size(), blen), 0);
      for (std::size_t i = 0; i < a.size(); ++i) next[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) next[i + j] += b[i];
      row[j] = std::move(next);
    }
  }
  auto out = row[d];
  out.resize(static_cast<std::size_t>(n) * d + 1, 0);
  return out;
}

Int covariant_dimension(const DimQuery& q) {
  if (q.orders.size() != q.multidegree.size())
    throw UsageError("orders and multidegree lengths differ");
  for (int n : q.orders)
    if (n < 0) throw UsageError("negative order");
  for (int d : q.multidegree)
    if (d < 0) throw UsageError("negative degree");
  if (q.order < 0) return 0;
  long W = 0;
  for (std::size_t i = 0; i < q.orders.size(); ++i)
    W += static_cast<long>(q.orders[i]) * q.multidegree[i];
  long diff = W - q.order;
  if (diff < 0 || diff % 2) return 0;
  long w = diff / 2;

  std::vector<Int> N{Int(1)};
  for (std::size_t i = 0; i < q.orders.size(); ++i) {
    auto g = gaussian_binomial(q.orders[i], q.multidegree[i]);
    std::vector<Int> next(N.size() + g.size() - 1, 0);
    for (std::size_t a = 0; a < N.size(); ++a) {
      if (N[a] == 0) continue;
      for (std::size_t b = 0; b < g.size(); ++b)
        if (g[b] != 0) next[a + b] += N[a] * g[b];
    }
    N = std::move(next);
  }
  auto at = [&](long m) -> Int {
    if (m < 0 || m >= static_cast<long>(N.size())) return 0;
    return N[static_cast<std::size_t>(m)];
  };
  return at(w) - at(w - 1);
}

SeriesTruncation hilbert_series(const std::vector<int>& orders,
                                SeriesGrading grading, int bound,
                                bool invariants_only) {
  if (bound < 0) throw UsageError("negative series bound");
  SeriesTruncation out;
  out.orders = orders;
  out.grading = grading;
  out.bound = bound;
  out.invariants_only = invariants_only;

  long max_order_per_degree = 0;
  for (int n : orders) max_order_per_degree = std::max<long>(max_order_per_degree, n);

  auto each_multidegree = [&](int total, auto&& fn) {
    std::vector<int> degs(orders.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
      if (idx + 1 == orders.size()) {
        degs[idx] = rem;
        fn(degs);
        return;
      }
      for (int d = 0; d <= rem; ++d) {
        degs[idx] = d;
        rec(idx + 1, rem - d);
      }
    };
    if (orders.empty()) return;
    rec(0, total);
  };

  if (grading == SeriesGrading::Multigraded) {
    for (int total = 0; total <= bound; ++total) {
      each_multidegree(total, [&](const std::vector<int>& degs) {
        long W = 0;
        for (std::size_t i = 0; i < degs.size(); ++i)
          W += static_cast<long>(orders[i]) * degs[i];
        int kmax = invariants_only ? 0 : static_cast<int>(W);
        for (int k = 0; k <= kmax; ++k) {
          DimQuery q{orders, degs, k};
          Int dim = covariant_dimension(q);
          if (dim != 0) out.slices.emplace_back(std::move(q), std::move(dim));
        }
      });
    }
    return out;
  }

  out.coefficients.assign(bound + 1, 0);
  for (int total = 0; total <= bound; ++total) {
    each_multidegree(total, [&](const std::vector<int>& degs) {
      long W = 0;
      for (std::size_t i = 0; i < degs.size(); ++i)
        W += static_cast<long>(orders[i]) * degs[i];
      if (grading == SeriesGrading::Degree) {
        int kmax = invariants_only ? 0 : static_cast<int>(W);
        for (int k = 0; k <= kmax; ++k)
          out.coefficients[total] += covariant_dimension({orders, degs, k});
      } else {
        // graded by d + k: the slice (degs, k) lands at total + k
        int kmax = invariants_only ? 0 : static_cast<int>(std::min<long>(W, bound - total));
        for (int k = 0; k <= kmax; ++k)
          out.coefficients[total + k] += covariant_dimension({orders, degs, k});
      }
    });
  }
  return out;
}

std::string SeriesTruncation::to_json() const {
  nlohmann::json j;
  j["orders"] = orders;
  j["grading"] = grading == SeriesGrading::TotalDegree ? "total-degree"
                 : grading == SeriesGrading::Degree    ? "degree"
                                                       : "multigraded";
  j["invariants_only"] = invariants_only;
  j["bound"] = bound;
  if (grading == SeriesGrading::Multigraded) {
    auto arr = nlohmann::json::array();
    for (const auto& [q, dim] : slices) {
      nlohmann::json s;
      s["multidegree"] = q.multidegree;
      s["order"] = q.order;
      s["dim"] = dim.get_str();
      arr.push_back(std::move(s));
    }
    j["slices"] = std::move(arr);
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& c : coefficients) arr.push_back(c.get_str());
    j["coefficients"] = std::move(arr);
  }
  return j.dump();
}

}  // namespace gordan
