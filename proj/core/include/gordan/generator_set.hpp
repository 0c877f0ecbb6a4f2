#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gordan/covariant.hpp"

namespace gordan {

struct Generator {
  std::string name;
  Covariant cov;
  std::string provenance;
};

/// A finite generating family with bookkeeping. Counts are always recomputed
/// from the generators so the table can never drift.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(FormSpacePtr space) : space_(std::move(space)) {}

  const FormSpacePtr& space() const { return space_; }
  std::vector<Generator>& gens() { return gens_; }
  const std::vector<Generator>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  const Generator* find(const std::string& name) const;
  void add(Covariant cov, std::string provenance, std::string name = "");

  /// (total degree, order) -> count
  std::map<std::pair<int, int>, int> counts() const;
  /// order -> count
  std::map<int, int> order_totals() const;

  std::vector<const Generator*> invariants() const;
  std::vector<const Generator*> noninvariants() const;

  /// Names like h<degree>_<order>, suffixed a, b, ... on collision.
  void assign_names();

  std::string to_json(bool expand_values = false) const;
  /// Parses and re-evaluates every recipe; values are rebuilt, not trusted.
  static GeneratorSet from_json(const std::string& text);

 private:
  FormSpacePtr space_;
  std::vector<Generator> gens_;
};

/// Evaluates a recipe over a form space against named generators.
Covariant eval_recipe(const Recipe& r, const FormSpacePtr& space,
                      const std::map<std::string, Covariant>& env);

/// Same, with the base slot form f1 replaced by an arbitrary covariant;
/// used to instantiate a known basis of S_p at a covariant of order p.
Covariant eval_recipe_with_base(const Recipe& r, const Covariant& base);

/// Re-embeds a generator set into a larger direct sum whose summands
/// `slot_map[s]` correspond to this set's summands s.
GeneratorSet embed(const GeneratorSet& g, const FormSpacePtr& target,
                   const std::vector<int>& slot_map);

/// The classical basis of Cov(S_2): the form itself and its discriminant.
GeneratorSet cov_s2_basis();

}  // namespace gordan
