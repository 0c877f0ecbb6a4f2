#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gordan/multipoly.hpp"
#include "gordan/rational.hpp"
#include "gordan/varspace.hpp"

namespace gordan {

class Covariant;

/// Direct sum S_{n_1} + ... + S_{n_s} with one coefficient symbol family per
/// summand (a0..a_{n_1}, b0.., ...) plus the ambient pair x, y.
class FormSpace {
 public:
  static std::shared_ptr<const FormSpace> make(std::vector<int> orders);

  int summands() const { return static_cast<int>(orders_.size()); }
  int order(int slot) const;
  const std::vector<int>& orders() const { return orders_; }
  const VarSpacePtr& vars() const { return vars_; }

  std::size_t coeff_index(int slot, int j) const;
  std::size_t x_index() const { return x_; }
  std::size_t y_index() const { return y_; }

  /// Torus weight n_s - 2j of a coefficient variable; throws for x, y.
  int coeff_weight(std::size_t var) const;
  /// Summand owning a coefficient variable, -1 for x and y.
  int slot_of(std::size_t var) const;
  int coeff_offset_in_slot(std::size_t var) const;

  bool same_as(const FormSpace& other) const { return orders_ == other.orders_; }

 private:
  explicit FormSpace(std::vector<int> orders);
  std::vector<int> orders_;
  std::vector<std::size_t> base_;  // first var index of each family
  std::size_t x_, y_;
  VarSpacePtr vars_;
};

using FormSpacePtr = std::shared_ptr<const FormSpace>;

/// Integer 2x2 matrix with determinant exactly 1.
struct UnimodularMatrix {
  Int a{1}, b{0}, c{0}, d{1};

  UnimodularMatrix() = default;
  UnimodularMatrix(Int a_, Int b_, Int c_, Int d_);

  static UnimodularMatrix identity() { return {}; }
  UnimodularMatrix inverse() const { return UnimodularMatrix(d, -b, -c, a); }
  UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;
  bool operator==(const UnimodularMatrix& rhs) const;

  /// Product of elementary shears with entries kept <= bound in magnitude.
  static UnimodularMatrix random(std::mt19937_64& rng, long bound = 10);
};

struct BinaryForm {
  int slot = 0;
  int order = 0;
  std::shared_ptr<Covariant> cov;
};

/// The generic form of the given summand, with binomial multipliers:
/// a0 x^n + C(n,1) a1 x^{n-1} y + ... + an y^n.
BinaryForm generic_form(const FormSpacePtr& space, int slot);

}  // namespace gordan
