#pragma once

#include <string>
#include <vector>

#include "gordan/rational.hpp"

namespace gordan {

struct DimQuery {
  std::vector<int> orders;       // n_1..n_s
  std::vector<int> multidegree;  // d_1..d_s
  int order = 0;                 // k
};

/// Coefficients of the Gaussian binomial [n+d choose d]_q, i.e. partition
/// counts inside a d x n box. Exact integers.
std::vector<Int> gaussian_binomial(int n, int d);

/// Cayley-Sylvester count: with W = sum d_i n_i, the dimension is
/// N((W-k)/2) - N((W-k)/2 - 1) where N(m) is the coefficient of q^m in the
/// product of the per-summand Gaussian binomials; zero when W-k is odd or
/// negative.
Int covariant_dimension(const DimQuery& q);

enum class SeriesGrading {
  TotalDegree,  // by d + k; this is the scalar grading the classical series use
  Degree,       // by d alone
  Multigraded,  // one slice per (multidegree, order)
};

struct SeriesTruncation {
  std::vector<int> orders;
  SeriesGrading grading = SeriesGrading::TotalDegree;
  bool invariants_only = false;
  int bound = 0;
  std::vector<Int> coefficients;  // index = graded slice, scalar gradings only
  // multigraded output: parallel arrays of (multidegree, order, dim)
  std::vector<std::pair<DimQuery, Int>> slices;

  std::string to_json() const;
};

SeriesTruncation hilbert_series(const std::vector<int>& orders,
                                SeriesGrading grading, int bound,
                                bool invariants_only = false);

}  // namespace gordan
