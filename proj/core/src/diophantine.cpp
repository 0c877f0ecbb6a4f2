#include "gordan/diophantine.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace gordan {

void DiophantineSystem::validate() const {
  for (int a : row1)
    if (a <= 0) throw UsageError("row coefficients must be positive");
  for (int b : row2)
    if (b <= 0) throw UsageError("row coefficients must be positive");
}

std::vector<long> DiophantineSystem::eq1() const {
  std::vector<long> c(unknowns(), 0);
  for (std::size_t i = 0; i < row1.size(); ++i) c[i] = row1[i];
  c[row1.size() + row2.size()] = -1;      // u
  c[row1.size() + row2.size() + 2] = -1;  // r
  return c;
}

std::vector<long> DiophantineSystem::eq2() const {
  std::vector<long> c(unknowns(), 0);
  for (std::size_t j = 0; j < row2.size(); ++j) c[row1.size() + j] = row2[j];
  c[row1.size() + row2.size() + 1] = -1;  // v
  c[row1.size() + row2.size() + 2] = -1;  // r
  return c;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool dominates(const std::vector<int>& small, const std::vector<int>& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

HilbertBasis hilbert_basis(const DiophantineSystem& sys) {
  sys.validate();
  const std::size_t n = sys.unknowns();
  auto c1 = sys.eq1();
  auto c2 = sys.eq2();
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < n; ++j) {
    if (sys.invariants_only &&
        (j == sys.row1.size() + sys.row2.size() ||
         j == sys.row1.size() + sys.row2.size() + 1))
      continue;  // u and v pinned to zero
    active.push_back(j);
  }

  struct Node {
    std::vector<int> v;
    long s1, s2;
  };
  std::vector<Node> frontier;
  std::vector<std::vector<int>> minimal;
  for (auto j : active) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    frontier.push_back({std::move(e), c1[j], c2[j]});
  }

  while (!frontier.empty()) {
    std::vector<Node> next;
    std::unordered_set<std::vector<int>, VecHash> seen;
    std::vector<std::vector<int>> found;
    for (auto& node : frontier) {
      if (node.s1 == 0 && node.s2 == 0) {
        bool dominated = false;
        for (const auto& m : minimal)
          if (dominates(m, node.v)) {
            dominated = true;
            break;
          }
        if (!dominated) {
          minimal.push_back(node.v);
          found.push_back(std::move(node.v));
        }
        continue;
      }
      for (auto j : active) {
        // move only toward the zero of the value map
        if (node.s1 * c1[j] + node.s2 * c2[j] >= 0) continue;
        std::vector<int> child = node.v;
        child[j] += 1;
        if (seen.count(child)) continue;
        bool dominated = false;
        for (const auto& m : minimal)
          if (dominates(m, child)) {
            dominated = true;
            break;
          }
        if (dominated) continue;
        seen.insert(child);
        next.push_back({std::move(child), node.s1 + c1[j], node.s2 + c2[j]});
      }
    }
    // solutions found this round prune the freshly built frontier too
    if (!found.empty()) {
      std::vector<Node> kept;
      kept.reserve(next.size());
      for (auto& node : next) {
        bool dominated = false;
        for (const auto& m : found)
          if (dominates(m, node.v)) {
            dominated = true;
            break;
          }
        if (!dominated) kept.push_back(std::move(node));
      }
      next = std::move(kept);
    }
    frontier = std::move(next);
  }

  const std::size_t r_idx = n - 1;
  std::sort(minimal.begin(), minimal.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (a[r_idx] != b[r_idx]) return a[r_idx] < b[r_idx];
              long ta = 0, tb = 0;
              for (int x : a) ta += x;
              for (int x : b) tb += x;
              if (ta != tb) return ta < tb;
              return a < b;
            });
  return HilbertBasis{sys, std::move(minimal)};
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

HilbertBasis reduced_expand(const std::vector<std::vector<int>>& reduced_solutions,
                            const std::vector<int>& reduced_row1,
                            const std::vector<int>& mult1,
                            const std::vector<int>& reduced_row2,
                            const std::vector<int>& mult2, bool invariants_only) {
  if (mult1.size() != reduced_row1.size() || mult2.size() != reduced_row2.size())
    throw UsageError("one multiplicity required per collapsed order");
  for (int m : mult1)
    if (m < 1) throw UsageError("multiplicities must be positive");
  for (int m : mult2)
    if (m < 1) throw UsageError("multiplicities must be positive");

  DiophantineSystem full;
  full.invariants_only = invariants_only;
  for (std::size_t i = 0; i < reduced_row1.size(); ++i)
    full.row1.insert(full.row1.end(), mult1[i], reduced_row1[i]);
  for (std::size_t j = 0; j < reduced_row2.size(); ++j)
    full.row2.insert(full.row2.end(), mult2[j], reduced_row2[j]);
  full.validate();

  const std::size_t rp = reduced_row1.size(), rq = reduced_row2.size();
  std::vector<std::vector<int>> out;
  for (const auto& sol : reduced_solutions) {
    if (sol.size() != rp + rq + 3)
      throw UsageError("reduced solution has the wrong length");
    // distribute block by block
    std::vector<std::vector<int>> partial{{}};
    auto expand_block = [&](int total, int parts) {
      std::vector<std::vector<int>> next;
      std::vector<int> cur;
      compositions(total, parts, cur, [&](const std::vector<int>& comp) {
        for (const auto& head : partial) {
          auto v = head;
          v.insert(v.end(), comp.begin(), comp.end());
          next.push_back(std::move(v));
        }
      });
      partial = std::move(next);
    };
    for (std::size_t i = 0; i < rp; ++i) expand_block(sol[i], mult1[i]);
    for (std::size_t j = 0; j < rq; ++j) expand_block(sol[rp + j], mult2[j]);
    for (auto& v : partial) {
      v.push_back(sol[rp + rq]);      // u
      v.push_back(sol[rp + rq + 1]);  // v
      v.push_back(sol[rp + rq + 2]);  // r
      out.push_back(std::move(v));
    }
  }

  const std::size_t r_idx = full.unknowns() - 1;
  std::sort(out.begin(), out.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (a[r_idx] != b[r_idx]) return a[r_idx] < b[r_idx];
              long ta = 0, tb = 0;
              for (int x : a) ta += x;
              for (int x : b) tb += x;
              if (ta != tb) return ta < tb;
              return a < b;
            });

  HilbertBasis basis{full, std::move(out)};
  // cheap guard: on small systems the expansion must agree with direct
  // computation
  if (full.unknowns() <= 12) {
    auto direct = hilbert_basis(full);
    if (direct.solutions != basis.solutions)
      throw InternalError("reduced-system expansion disagrees with direct solve");
  }
  return basis;
}

Int reduced_expand_count(const std::vector<std::vector<int>>& reduced_solutions,
                         const std::vector<int>& mult1,
                         const std::vector<int>& mult2) {
  Int total = 0;
  for (const auto& sol : reduced_solutions) {
    if (sol.size() != mult1.size() + mult2.size() + 3)
      throw UsageError("reduced solution has the wrong length");
    Int ways = 1;
    for (std::size_t i = 0; i < mult1.size(); ++i)
      ways *= binomial(sol[i] + mult1[i] - 1, mult1[i] - 1);
    for (std::size_t j = 0; j < mult2.size(); ++j)
      ways *= binomial(sol[mult1.size() + j] + mult2[j] - 1, mult2[j] - 1);
    total += ways;
  }
  return total;
}

bool decomposes_over(const std::vector<int>& v,
                     const std::vector<std::vector<int>>& basis) {
  bool zero = true;
  for (int x : v) zero = zero && x == 0;
  if (zero) return true;
  std::unordered_set<std::vector<int>, VecHash> dead;
  std::function<bool(const std::vector<int>&)> rec =
      [&](const std::vector<int>& rest) -> bool {
    bool z = true;
    for (int x : rest) z = z && x == 0;
    if (z) return true;
    if (dead.count(rest)) return false;
    for (const auto& b : basis) {
      if (!dominates(b, rest)) continue;
      auto next = rest;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= b[i];
      if (rec(next)) return true;
    }
    dead.insert(rest);
    return false;
  };
  return rec(v);
}

std::string DiophantineSystem::to_json() const {
  nlohmann::json j;
  j["row1"] = row1;
  j["row2"] = row2;
  if (invariants_only) j["invariants_only"] = true;
  return j.dump();
}

DiophantineSystem DiophantineSystem::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  DiophantineSystem s;
  s.row1 = j.at("row1").get<std::vector<int>>();
  s.row2 = j.at("row2").get<std::vector<int>>();
  s.invariants_only = j.value("invariants_only", false);
  s.validate();
  return s;
}

std::string HilbertBasis::to_json() const {
  nlohmann::json j;
  j["row1"] = system.row1;
  j["row2"] = system.row2;
  if (system.invariants_only) j["invariants_only"] = true;
  j["solutions"] = solutions;
  return j.dump();
}

}  // namespace gordan
