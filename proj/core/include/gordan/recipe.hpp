#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gordan {

/// Symbolic construction history of a covariant in the grammar
///
///   expr   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := 'T(' expr ',' expr ',' int ')'   transvectant
///           | 'tri(' atom ',' int ')'          triangle molecule, equal weights
///           | ident                            slot form f1.. or generator name
///
/// Recipes are printable and re-parsable; evaluation is defined in
/// pipeline.cpp against a named generator environment.
class Recipe {
 public:
  enum class Kind { SlotForm, GenRef, Trans, Prod, Tri };

  static Recipe slot_form(int slot);
  static Recipe gen_ref(std::string name);
  static Recipe trans(Recipe lhs, Recipe rhs, int r);
  static Recipe prod(std::vector<std::pair<Recipe, unsigned>> factors);
  static Recipe tri(Recipe base, int weight);

  Kind kind() const { return kind_; }
  int slot() const { return slot_; }
  const std::string& name() const { return name_; }
  int index() const { return index_; }  // r for Trans, weight for Tri
  const Recipe& lhs() const { return *children_[0].first; }
  const Recipe& rhs() const { return *children_[1].first; }
  const std::vector<std::pair<std::shared_ptr<Recipe>, unsigned>>& factors() const {
    return children_;
  }

  std::string str() const;
  static Recipe parse(const std::string& text);

  bool operator==(const Recipe& rhs) const { return str() == rhs.str(); }

 private:
  Kind kind_ = Kind::SlotForm;
  int slot_ = 0;
  std::string name_;
  int index_ = 0;
  std::vector<std::pair<std::shared_ptr<Recipe>, unsigned>> children_;
};

}  // namespace gordan
