#pragma once

#include <map>
#include <vector>

#include "gordan/covariant.hpp"
#include "gordan/dimension.hpp"

namespace gordan {

/// One bigraded slice: multidegree per summand plus order.
struct SliceKey {
  std::vector<int> multidegree;
  int order = 0;

  long total_degree() const {
    long t = 0;
    for (int d : multidegree) t += d;
    return t;
  }
  bool operator==(const SliceKey& o) const {
    return order == o.order && multidegree == o.multidegree;
  }
  /// Processing order: total degree, then order, then lexicographic.
  bool operator<(const SliceKey& o) const;
};

/// Monomial basis of the sources of a slice: exponent vectors over the
/// coefficient variables with the given per-summand degrees and total torus
/// weight equal to the order. A covariant in the slice is faithfully
/// represented by its source coordinates against this list.
class SliceBasis {
 public:
  SliceBasis(FormSpacePtr space, SliceKey key);

  const SliceKey& key() const { return key_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exp>& monomials() const { return monomials_; }

  /// Integer coordinate row of a source polynomial, scaled primitive; row
  /// scaling never affects rank decisions. Terms outside the slice raise
  /// InternalError.
  std::vector<Int> row_of(const MultiPoly& source) const;

  Int dimension() const;  // covariant_dimension of the slice

 private:
  FormSpacePtr space_;
  SliceKey key_;
  std::vector<Exp> monomials_;
  std::map<Exp, std::size_t> index_;
};

}  // namespace gordan
