#include "gordan/generator_set.hpp"

#include <algorithm>

#include <json.hpp>

#include "gordan/transvectant.hpp"

namespace gordan {

const Generator* GeneratorSet::find(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return &g;
  return nullptr;
}

void GeneratorSet::add(Covariant cov, std::string provenance, std::string name) {
  gens_.push_back({std::move(name), std::move(cov), std::move(provenance)});
}

std::map<std::pair<int, int>, int> GeneratorSet::counts() const {
  std::map<std::pair<int, int>, int> c;
  for (const auto& g : gens_)
    c[{static_cast<int>(g.cov.total_degree()), g.cov.order()}] += 1;
  return c;
}

std::map<int, int> GeneratorSet::order_totals() const {
  std::map<int, int> c;
  for (const auto& g : gens_) c[g.cov.order()] += 1;
  return c;
}

std::vector<const Generator*> GeneratorSet::invariants() const {
  std::vector<const Generator*> out;
  for (const auto& g : gens_)
    if (g.cov.order() == 0) out.push_back(&g);
  return out;
}

std::vector<const Generator*> GeneratorSet::noninvariants() const {
  std::vector<const Generator*> out;
  for (const auto& g : gens_)
    if (g.cov.order() > 0) out.push_back(&g);
  return out;
}

void GeneratorSet::assign_names() {
  std::map<std::pair<long, int>, std::vector<Generator*>> by_slice;
  for (auto& g : gens_)
    by_slice[{g.cov.total_degree(), g.cov.order()}].push_back(&g);
  for (auto& [slice, list] : by_slice) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string name =
          "h" + std::to_string(slice.first) + "_" + std::to_string(slice.second);
      if (list.size() > 1) name += static_cast<char>('a' + i);
      list[i]->name = std::move(name);
    }
  }
}

std::string GeneratorSet::to_json(bool expand_values) const {
  nlohmann::json j;
  j["spaces"] = space_ ? space_->orders() : std::vector<int>{};
  auto arr = nlohmann::json::array();
  for (const auto& g : gens_) {
    nlohmann::json e;
    e["name"] = g.name;
    e["recipe"] = g.cov.recipe() ? g.cov.recipe()->str() : "";
    e["multidegree"] = g.cov.multidegree();
    e["order"] = g.cov.order();
    e["provenance"] = g.provenance;
    if (expand_values) e["value"] = g.cov.value().str();
    arr.push_back(std::move(e));
  }
  j["generators"] = std::move(arr);
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [slice, n] : counts())
    table[std::to_string(slice.first) + "," + std::to_string(slice.second)] = n;
  j["counts"] = std::move(table);
  return j.dump(2);
}

GeneratorSet GeneratorSet::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto orders = j.at("spaces").get<std::vector<int>>();
  if (orders.empty()) throw UsageError("generator set without a form space");
  GeneratorSet out(FormSpace::make(orders));
  std::map<std::string, Covariant> env;
  for (const auto& e : j.at("generators")) {
    std::string name = e.at("name").get<std::string>();
    std::string recipe_text = e.at("recipe").get<std::string>();
    if (recipe_text.empty())
      throw UsageError("generator " + name + " has no recipe to re-evaluate");
    Recipe r = Recipe::parse(recipe_text);
    Covariant cov = eval_recipe(r, out.space(), env);
    cov.set_recipe(std::move(r));
    if (cov.order() != e.at("order").get<int>() ||
        cov.multidegree() != e.at("multidegree").get<std::vector<int>>())
      throw UsageError("generator " + name + " does not match its bookkeeping");
    env.emplace(name, cov);
    out.add(std::move(cov), e.value("provenance", std::string{}), name);
  }
  return out;
}

Covariant eval_recipe(const Recipe& r, const FormSpacePtr& space,
                      const std::map<std::string, Covariant>& env) {
  switch (r.kind()) {
    case Recipe::Kind::SlotForm: {
      int slot = r.slot() - 1;
      return *generic_form(space, slot).cov;
    }
    case Recipe::Kind::GenRef: {
      auto it = env.find(r.name());
      if (it == env.end()) throw UsageError("unknown generator name: " + r.name());
      return it->second;
    }
    case Recipe::Kind::Trans:
      return transvectant(eval_recipe(r.lhs(), space, env),
                          eval_recipe(r.rhs(), space, env), r.index());
    case Recipe::Kind::Tri:
      return triangle_invariant(eval_recipe(*r.factors()[0].first, space, env),
                                r.index());
    case Recipe::Kind::Prod: {
      MultiPoly one = MultiPoly::constant(space->vars(), 1);
      Covariant acc = Covariant::from_value(space, std::move(one));
      for (const auto& [f, e] : r.factors()) {
        Covariant base = eval_recipe(*f, space, env);
        for (unsigned i = 0; i < e; ++i) acc = acc * base;
      }
      acc.set_recipe(r);
      return acc;
    }
  }
  throw InternalError("unhandled recipe kind");
}

namespace {

Recipe substitute_slot(const Recipe& r, const Recipe& base) {
  switch (r.kind()) {
    case Recipe::Kind::SlotForm:
      return base;
    case Recipe::Kind::GenRef:
      return r;
    case Recipe::Kind::Trans:
      return Recipe::trans(substitute_slot(r.lhs(), base),
                           substitute_slot(r.rhs(), base), r.index());
    case Recipe::Kind::Tri:
      return Recipe::tri(substitute_slot(*r.factors()[0].first, base), r.index());
    case Recipe::Kind::Prod: {
      std::vector<std::pair<Recipe, unsigned>> fs;
      for (const auto& [f, e] : r.factors())
        fs.emplace_back(substitute_slot(*f, base), e);
      return Recipe::prod(std::move(fs));
    }
  }
  throw InternalError("unhandled recipe kind");
}

}  // namespace

Covariant eval_recipe_with_base(const Recipe& r, const Covariant& base) {
  const auto& space = base.space();
  Covariant out = [&]() -> Covariant {
    switch (r.kind()) {
      case Recipe::Kind::SlotForm:
        if (r.slot() != 1)
          throw UsageError(
              "base instantiation only supports single-summand recipes");
        return base;
      case Recipe::Kind::GenRef:
        throw UsageError("named reference in a base-instantiated recipe");
      case Recipe::Kind::Trans:
        return transvectant(eval_recipe_with_base(r.lhs(), base),
                            eval_recipe_with_base(r.rhs(), base), r.index());
      case Recipe::Kind::Tri:
        return triangle_invariant(
            eval_recipe_with_base(*r.factors()[0].first, base), r.index());
      case Recipe::Kind::Prod: {
        MultiPoly one = MultiPoly::constant(space->vars(), 1);
        Covariant acc = Covariant::from_value(space, std::move(one));
        for (const auto& [f, e] : r.factors()) {
          Covariant b = eval_recipe_with_base(*f, base);
          for (unsigned i = 0; i < e; ++i) acc = acc * b;
        }
        return acc;
      }
    }
    throw InternalError("unhandled recipe kind");
  }();
  if (base.recipe()) out.set_recipe(substitute_slot(r, *base.recipe()));
  return out;
}

namespace {

Recipe remap_recipe(const Recipe& r, const std::vector<int>& slot_map) {
  switch (r.kind()) {
    case Recipe::Kind::SlotForm:
      return Recipe::slot_form(slot_map[r.slot() - 1] + 1);
    case Recipe::Kind::GenRef:
      return r;
    case Recipe::Kind::Trans:
      return Recipe::trans(remap_recipe(r.lhs(), slot_map),
                           remap_recipe(r.rhs(), slot_map), r.index());
    case Recipe::Kind::Tri:
      return Recipe::tri(remap_recipe(*r.factors()[0].first, slot_map), r.index());
    case Recipe::Kind::Prod: {
      std::vector<std::pair<Recipe, unsigned>> fs;
      for (const auto& [f, e] : r.factors())
        fs.emplace_back(remap_recipe(*f, slot_map), e);
      return Recipe::prod(std::move(fs));
    }
  }
  throw InternalError("unhandled recipe kind");
}

}  // namespace

GeneratorSet embed(const GeneratorSet& g, const FormSpacePtr& target,
                   const std::vector<int>& slot_map) {
  const auto& src_space = g.space();
  if (static_cast<int>(slot_map.size()) != src_space->summands())
    throw UsageError("slot map length mismatch");
  for (int s = 0; s < src_space->summands(); ++s)
    if (target->order(slot_map[s]) != src_space->order(s))
      throw UsageError("slot map sends a summand to a different order");

  std::vector<std::size_t> var_map(src_space->vars()->size());
  for (int s = 0; s < src_space->summands(); ++s)
    for (int j = 0; j <= src_space->order(s); ++j)
      var_map[src_space->coeff_index(s, j)] = target->coeff_index(slot_map[s], j);
  var_map[src_space->x_index()] = target->x_index();
  var_map[src_space->y_index()] = target->y_index();

  GeneratorSet out(target);
  for (const auto& gen : g.gens()) {
    std::vector<int> deg(target->summands(), 0);
    for (int s = 0; s < src_space->summands(); ++s)
      deg[slot_map[s]] = gen.cov.multidegree()[s];
    MultiPoly src = gen.cov.source().remap(var_map, target->vars());
    std::optional<Recipe> recipe;
    if (gen.cov.recipe()) recipe = remap_recipe(*gen.cov.recipe(), slot_map);
    Covariant cov = Covariant::from_source(target, std::move(src), std::move(deg),
                                           gen.cov.order(), std::move(recipe));
    out.add(std::move(cov), gen.provenance, gen.name);
  }
  return out;
}

GeneratorSet cov_s2_basis() {
  auto space = FormSpace::make({2});
  auto u = generic_form(space, 0);
  GeneratorSet out(space);
  out.add(*u.cov, "input form");
  out.add(transvectant(u, u, 2), "quadratic discriminant");
  out.assign_names();
  return out;
}

}  // namespace gordan
