#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gordan/forms.hpp"
#include "gordan/multipoly.hpp"
#include "gordan/recipe.hpp"

namespace gordan {

/// A polynomial in the form coefficients and (x,y), homogeneous of multidegree
/// d per summand and of order k in (x,y).
///
/// Internally a covariant is carried by its leading coefficient in x (the
/// classical seminvariant source); the full polynomial is materialized on
/// demand. The two views coincide because a covariant of order k is uniquely
/// determined by its x^k coefficient, the lower layers following from the
/// derivation a_j -> (n-j) a_{j+1} layer by layer.
class Covariant {
 public:
  Covariant() = default;

  static Covariant zero(FormSpacePtr space, std::vector<int> multidegree = {},
                        int order = 0);
  /// Builds from a full polynomial; derives multidegree and order and audits
  /// homogeneity.
  static Covariant from_value(FormSpacePtr space, MultiPoly value,
                              std::optional<Recipe> recipe = std::nullopt);
  /// Builds from a source polynomial (coefficient variables only).
  static Covariant from_source(FormSpacePtr space, MultiPoly source,
                               std::vector<int> multidegree, int order,
                               std::optional<Recipe> recipe = std::nullopt);

  const FormSpacePtr& space() const { return space_; }
  const std::vector<int>& multidegree() const { return multidegree_; }
  int order() const { return order_; }
  long total_degree() const;
  bool is_zero() const { return value_ ? value_->is_zero() : source_.is_zero(); }

  /// The source faithfully represents the covariant only when it actually
  /// depends on the form coefficients (or has order zero); otherwise the full
  /// value is authoritative.
  bool source_faithful() const { return total_degree() > 0 || order_ == 0; }

  const MultiPoly& source() const { return source_; }
  /// Full polynomial including x and y; reconstructed lazily and cached.
  const MultiPoly& value() const;
  bool has_value() const { return value_.has_value(); }

  /// Coefficient of x^{k-j} y^j as a polynomial in the form coefficients.
  MultiPoly layer(int j) const;

  const std::optional<Recipe>& recipe() const { return recipe_; }
  void set_recipe(Recipe r) { recipe_ = std::move(r); }

  Covariant operator*(const Covariant& rhs) const;
  Covariant operator*(const Rat& c) const;
  Covariant operator+(const Covariant& rhs) const;
  Covariant operator-(const Covariant& rhs) const;
  /// Structural equality of polynomials (bookkeeping aside).
  bool same_polynomial(const Covariant& rhs) const;
  /// True when rhs is a nonzero rational multiple of *this.
  bool proportional_to(const Covariant& rhs) const;

  /// Homogeneity audit: the value is homogeneous of the declared multidegree
  /// in each coefficient family and of the declared order in (x,y), and every
  /// term is isobaric of weight equal to the order.
  bool homogeneous() const;
  /// Full consistency audit: homogeneity plus the layer recursion closing
  /// after exactly order+1 layers.
  bool covariant_consistent() const;

 private:
  FormSpacePtr space_;
  std::vector<int> multidegree_;
  int order_ = 0;
  MultiPoly source_;
  std::optional<Recipe> recipe_;
  mutable std::optional<MultiPoly> value_;
  mutable std::vector<MultiPoly> layers_;  // cache, layers_[j] = layer j
};

/// The derivation a_j -> (n-j) a_{j+1} extended to polynomials; maps layer
/// j-1 of a covariant to j times layer j.
MultiPoly layer_derivation(const FormSpace& space, const MultiPoly& p);

/// Exact coordinates of c against an ordered monomial list (exponent vectors
/// over the full variable space). A term of c outside the list is a
/// consistency error.
std::vector<Rat> coefficient_vector(const Covariant& c,
                                    const std::vector<Exp>& basis_monomials);

/// Applies g to a covariant: substitutes the induced linear action on every
/// coefficient family and on (x,y). Preserves multidegree and order.
Covariant sl2_act(const UnimodularMatrix& g, const Covariant& c);

}  // namespace gordan
