#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gordan/rational.hpp"

namespace gordan::reference {

/// Published degree/order count grids and totals of the classical minimal
/// bases; the reproduction suites check computed bases against these.
using CountTable = std::map<std::pair<int, int>, int>;

const CountTable& cov_s3s4_table();  // 63 generators
const CountTable& cov_s6_table();    // 26 generators
const CountTable& cov_s6s2_table();  // 99 generators
const CountTable& cov_s6s4_table();  // 194 generators

inline constexpr int cov_s3s4_candidates = 104;
inline constexpr int cov_s6s4_candidates = 1732;
inline constexpr int cov_s6s4_candidates_filtered = 1134;
inline constexpr int cov_s5_size = 23;
inline constexpr int cov_s8_size = 69;

/// Invariant slice dimensions of S8+S4+S4 in total degree 12.
const std::vector<std::pair<std::vector<int>, long>>& inv844_degree12_dims();

/// Count of degree-49 invariants of S8+S4+S4.
Int inv844_degree49_count();

/// Scalar Hilbert series of Cov(S4+S3) by total degree d+k, through 18.
const std::vector<long>& cov_s4s3_series();

/// Irreducible solution count of the order-collapsed invariant system of
/// S8+S4+S4 after expansion to generator level.
inline constexpr long inv844_solution_count = 695754;

/// Collapsed orders and generator multiplicities of that system.
const std::vector<int>& inv844_reduced_row1();
const std::vector<int>& inv844_mult1();
const std::vector<int>& inv844_reduced_row2();
const std::vector<int>& inv844_mult2();

}  // namespace gordan::reference
