#include "gordan/reference.hpp"

#include <tuple>

namespace gordan::reference {

namespace {

CountTable make_table(const std::vector<std::tuple<int, int, int>>& entries) {
  CountTable t;
  for (const auto& [d, k, n] : entries) t[{d, k}] = n;
  return t;
}

}  // namespace

const CountTable& cov_s3s4_table() {
  static const CountTable t = make_table({
      {1, 3, 1},  {1, 4, 1},
      {2, 0, 1},  {2, 1, 1},  {2, 2, 1},  {2, 3, 1}, {2, 4, 1}, {2, 5, 1},
      {3, 0, 1},  {3, 1, 1},  {3, 2, 2},  {3, 3, 2}, {3, 4, 1}, {3, 5, 1}, {3, 6, 1},
      {4, 0, 1},  {4, 1, 2},  {4, 2, 2},  {4, 3, 2}, {4, 4, 1},
      {5, 0, 2},  {5, 1, 3},  {5, 2, 3},  {5, 3, 1}, {5, 4, 1},
      {6, 0, 2},  {6, 1, 3},  {6, 2, 2},  {6, 3, 1},
      {7, 0, 3},  {7, 1, 3},  {7, 2, 1},
      {8, 0, 3},  {8, 1, 2},
      {9, 0, 4},  {9, 1, 1},
      {10, 0, 2},
      {11, 0, 1},
  });
  return t;
}

const CountTable& cov_s6_table() {
  static const CountTable t = make_table({
      {1, 6, 1},
      {2, 0, 1},  {2, 4, 1},  {2, 8, 1},
      {3, 2, 1},  {3, 6, 1},  {3, 8, 1},  {3, 12, 1},
      {4, 0, 1},  {4, 4, 1},  {4, 6, 1},  {4, 10, 1},
      {5, 2, 1},  {5, 4, 1},  {5, 8, 1},
      {6, 0, 1},  {6, 6, 2},
      {7, 2, 1},  {7, 4, 1},
      {8, 2, 1},
      {9, 4, 1},
      {10, 0, 1}, {10, 2, 1},
      {12, 2, 1},
      {15, 0, 1},
  });
  return t;
}

const CountTable& cov_s6s2_table() {
  static const CountTable t = make_table({
      {1, 2, 1},  {1, 6, 1},
      {2, 0, 2},  {2, 4, 2},  {2, 6, 1},  {2, 8, 1},
      {3, 2, 3},  {3, 4, 2},  {3, 6, 2},  {3, 8, 2},  {3, 12, 1},
      {4, 0, 4},  {4, 2, 3},  {4, 4, 3},  {4, 6, 4},  {4, 10, 2},
      {5, 2, 4},  {5, 4, 6},  {5, 8, 3},
      {6, 0, 5},  {6, 2, 7},  {6, 6, 5},
      {7, 0, 3},  {7, 2, 1},  {7, 4, 6},
      {8, 0, 1},  {8, 2, 8},
      {9, 0, 7},  {9, 4, 1},
      {10, 0, 1}, {10, 2, 2},
      {11, 0, 2},
      {12, 2, 1},
      {13, 0, 1},
      {15, 0, 1},
  });
  return t;
}

const CountTable& cov_s6s4_table() {
  static const CountTable t = make_table({
      {1, 4, 1},   {1, 6, 1},
      {2, 0, 2},   {2, 2, 1},  {2, 4, 3},  {2, 6, 1},  {2, 8, 2},
      {3, 0, 2},   {3, 2, 4},  {3, 4, 4},  {3, 6, 5},  {3, 8, 3},
      {3, 10, 1},  {3, 12, 1},
      {4, 0, 4},   {4, 2, 6},  {4, 4, 9},  {4, 6, 5},  {4, 8, 2},  {4, 10, 1},
      {5, 0, 4},   {5, 2, 12}, {5, 4, 11}, {5, 6, 3},  {5, 8, 1},
      {6, 0, 9},   {6, 2, 14}, {6, 4, 6},  {6, 6, 2},
      {7, 0, 9},   {7, 2, 17}, {7, 4, 2},
      {8, 0, 9},   {8, 2, 7},  {8, 4, 1},
      {9, 0, 8},   {9, 2, 3},  {9, 4, 1},
      {10, 0, 5},  {10, 2, 2},
      {11, 0, 3},  {11, 2, 1},
      {12, 0, 2},  {12, 2, 1},
      {13, 0, 1},
      {14, 0, 1},
      {15, 0, 1},
  });
  return t;
}

const std::vector<std::pair<std::vector<int>, long>>& inv844_degree12_dims() {
  static const std::vector<std::pair<std::vector<int>, long>> dims = {
      {{4, 4, 4}, 1004}, {{6, 3, 3}, 1003}, {{8, 2, 2}, 544},
      {{10, 1, 1}, 135}, {{4, 8, 0}, 91},   {{3, 4, 5}, 695},
      {{3, 8, 1}, 157},  {{3, 7, 2}, 350},  {{3, 6, 3}, 558},
      {{3, 9, 0}, 44},   {{5, 7, 0}, 126},  {{5, 6, 1}, 414},
      {{4, 6, 2}, 611},  {{4, 5, 3}, 872},  {{4, 7, 1}, 290},
      {{5, 5, 2}, 788},  {{5, 3, 4}, 1046}, {{7, 5, 0}, 176},
      {{8, 4, 0}, 176},  {{6, 5, 1}, 494},  {{6, 4, 2}, 871},
      {{7, 4, 1}, 488},  {{9, 3, 0}, 131},  {{10, 2, 0}, 95},
      {{7, 2, 3}, 747},  {{8, 3, 1}, 404},  {{9, 1, 2}, 271},
  };
  return dims;
}

Int inv844_degree49_count() { return Int("103947673173"); }

const std::vector<long>& cov_s4s3_series() {
  static const std::vector<long> s = {1,   0,   1,   2,   5,    10,  18,
                                      31,  55,  92,  144, 223,  341, 499,
                                      725, 1031, 1436, 1978, 2685};
  return s;
}

const std::vector<int>& inv844_reduced_row1() {
  static const std::vector<int> v = {2, 4, 6, 8, 10, 12, 14, 18};
  return v;
}
const std::vector<int>& inv844_mult1() {
  static const std::vector<int> v = {14, 13, 12, 6, 7, 3, 3, 2};
  return v;
}
const std::vector<int>& inv844_reduced_row2() {
  static const std::vector<int> v = {2, 4, 6};
  return v;
}
const std::vector<int>& inv844_mult2() {
  static const std::vector<int> v = {8, 7, 5};
  return v;
}

}  // namespace gordan::reference
