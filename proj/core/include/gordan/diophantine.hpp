#pragma once

#include <string>
#include <vector>

#include "gordan/rational.hpp"

namespace gordan {

/// The two-row nonnegative linear system
///   a_1 alpha_1 + ... + a_p alpha_p = u + r
///   b_1 beta_1  + ... + b_q beta_q  = v + r
/// over unknowns (alpha, beta, u, v, r). With `invariants_only` the slack
/// unknowns u and v are pinned to zero (order-zero targets).
struct DiophantineSystem {
  std::vector<int> row1;  // a_i, positive
  std::vector<int> row2;  // b_j, positive
  bool invariants_only = false;

  std::size_t unknowns() const { return row1.size() + row2.size() + 3; }
  void validate() const;

  /// Signed coefficients of the two equations over the full unknown layout
  /// [alpha | beta | u | v | r].
  std::vector<long> eq1() const;
  std::vector<long> eq2() const;

  std::string to_json() const;
  static DiophantineSystem from_json(const std::string& text);
};

struct HilbertBasis {
  DiophantineSystem system;
  /// Irreducible solutions in the full layout, sorted lexicographically by
  /// (r, total degree, vector).
  std::vector<std::vector<int>> solutions;

  std::string to_json() const;
};

/// All irreducible (componentwise-minimal nonzero) solutions, by graded
/// completion from the unit vectors with subsumption pruning.
HilbertBasis hilbert_basis(const DiophantineSystem& sys);

/// Expands Hilbert-basis solutions of an order-collapsed system back to the
/// full system in which order `i` of row 1 occurs `mult1[i]` times (and
/// likewise row 2): every composition of each collapsed coordinate across its
/// generator block, unioned over the reduced solutions.
HilbertBasis reduced_expand(const std::vector<std::vector<int>>& reduced_solutions,
                            const std::vector<int>& reduced_row1,
                            const std::vector<int>& mult1,
                            const std::vector<int>& reduced_row2,
                            const std::vector<int>& mult2, bool invariants_only);

/// Cardinality of reduced_expand's output without materializing it.
Int reduced_expand_count(const std::vector<std::vector<int>>& reduced_solutions,
                         const std::vector<int>& mult1,
                         const std::vector<int>& mult2);

/// True when v decomposes as a nonnegative integer combination of basis
/// elements (exhaustive search over the small support).
bool decomposes_over(const std::vector<int>& v,
                     const std::vector<std::vector<int>>& basis);

}  // namespace gordan
