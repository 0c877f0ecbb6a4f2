#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gordan/rational.hpp"
#include "gordan/varspace.hpp"

namespace gordan {

using Exp = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a fixed graded-lexicographic order and never carry zero
/// coefficients, so equality is structural. All arithmetic is exact.
class MultiPoly {
 public:
  struct Term {
    Exp exp;
    Rat coef;
  };

  MultiPoly() = default;
  explicit MultiPoly(VarSpacePtr space) : space_(std::move(space)) {}

  static MultiPoly zero(VarSpacePtr space) { return MultiPoly(std::move(space)); }
  static MultiPoly constant(VarSpacePtr space, const Rat& c);
  static MultiPoly variable(VarSpacePtr space, std::size_t var);
  static MultiPoly monomial(VarSpacePtr space, Exp e, Rat c);

  const VarSpacePtr& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree. Undefined on the zero polynomial (throws UsageError).
  long total_degree() const;
  /// Degree in one variable; -1 convention is not used, zero poly throws.
  long degree_in(std::size_t var) const;
  /// Degree in a set of variables (max over terms of the exponent sum).
  long degree_in(const std::vector<std::size_t>& vars) const;

  bool homogeneous_in(const std::vector<std::size_t>& vars, long deg) const;

  Rat coefficient(const Exp& e) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
  MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  MultiPoly pow(unsigned e) const;

  /// Exact partial derivative with respect to a declared variable.
  MultiPoly diff(std::size_t var) const;
  MultiPoly diff(const std::string& var) const;

  /// Ring homomorphism determined by variable bindings. Unbound variables map
  /// to their namesake in `target` (which may be the same space).
  MultiPoly substitute(const std::map<std::size_t, MultiPoly>& bindings,
                       VarSpacePtr target) const;

  /// Reinterprets the polynomial in another space via a positional index map;
  /// `var_map[i]` is the index in `target` of this space's variable i.
  MultiPoly remap(const std::vector<std::size_t>& var_map, VarSpacePtr target) const;

  /// Divides by the rational content: result has coprime integer
  /// coefficients with positive leading coefficient. Zero stays zero.
  MultiPoly primitive_part() const;

  std::string str() const;

  /// Canonical graded-lex ascending comparison of exponent vectors.
  static bool exp_less(const Exp& a, const Exp& b);

  /// Builds from an unsorted list of (exponent, coefficient) pairs.
  static MultiPoly from_terms(VarSpacePtr space, std::vector<Term> terms);

 private:
  void check_same_space(const MultiPoly& rhs) const;
  VarSpacePtr space_;
  std::vector<Term> terms_;  // sorted by exp_less, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace gordan
