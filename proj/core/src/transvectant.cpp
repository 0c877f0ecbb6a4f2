#include "gordan/transvectant.hpp"

#include <algorithm>
#include <map>

namespace gordan {

namespace {

std::vector<int> sum_multidegree(const Covariant& f, const Covariant& g) {
  std::vector<int> d(f.multidegree().size());
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = f.multidegree()[i] + g.multidegree()[i];
  return d;
}

std::optional<Recipe> trans_recipe(const Covariant& f, const Covariant& g, int r) {
  if (f.recipe() && g.recipe()) return Recipe::trans(*f.recipe(), *g.recipe(), r);
  return std::nullopt;
}

}  // namespace

Covariant transvectant(const Covariant& f, const Covariant& g, int r) {
  if (r < 0) throw UsageError("negative transvectant index");
  if (!f.space()->same_as(*g.space()))
    throw UsageError("transvectant arguments live in different form spaces");
  int n = f.order(), p = g.order();
  auto multideg = sum_multidegree(f, g);
  if (f.is_zero() || g.is_zero() || r > std::min(n, p))
    return Covariant::zero(f.space(), std::move(multideg),
                           std::max(n + p - 2 * r, 0));

  if (!f.source_faithful() || !g.source_faithful()) {
    // plain polynomials: the bidifferential sum on the full values
    const auto& space = f.space();
    std::size_t X = space->x_index(), Y = space->y_index();
    std::vector<MultiPoly> df{f.value()}, dg{g.value()};
    for (int i = 0; i < r; ++i) df.push_back(df.back().diff(Y));
    for (int i = 0; i < r; ++i) dg.push_back(dg.back().diff(Y));
    // df[i] = d^i/dy^i f; complete with x-derivatives per term of the sum
    MultiPoly acc = MultiPoly::zero(space->vars());
    for (int i = 0; i <= r; ++i) {
      MultiPoly a = df[i];
      for (int s = 0; s < r - i; ++s) a = a.diff(X);
      MultiPoly b = dg[r - i];
      for (int s = 0; s < i; ++s) b = b.diff(X);
      Rat c = Rat(binomial(r, i));
      if (i & 1) c = -c;
      acc += (a * b) * c;
    }
    acc = acc * Rat(factorial(n - r) * factorial(p - r));
    if (acc.is_zero())
      return Covariant::zero(space, std::move(multideg), n + p - 2 * r);
    auto out = Covariant::from_value(space, std::move(acc), trans_recipe(f, g, r));
    return out;
  }

  // leading coefficient of (n-r)!(p-r)! [Omega^r f g] at x_a = x_b = x, in
  // terms of the layers F_i (coefficient of x^{n-i} y^i):
  //   r! sum_i (-1)^i (n-i)! (p-r+i)! F_i G_{r-i}
  MultiPoly src = MultiPoly::zero(f.space()->vars());
  for (int i = 0; i <= r; ++i) {
    MultiPoly fi = f.layer(i);
    if (fi.is_zero()) continue;
    MultiPoly gi = g.layer(r - i);
    if (gi.is_zero()) continue;
    Rat c = Rat(factorial(n - i) * factorial(p - r + i));
    if (i & 1) c = -c;
    src += (fi * gi) * c;
  }
  src = src * Rat(factorial(r));
  return Covariant::from_source(f.space(), std::move(src), std::move(multideg),
                                n + p - 2 * r, trans_recipe(f, g, r));
}

Covariant transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
  return transvectant(*f.cov, *g.cov, r);
}

Rat normalization_scale(Normalization norm, int n, int p, int r) {
  (void)r;
  if (norm == Normalization::Paper) return Rat(1);
  Rat s(1);
  s /= Rat(factorial(n) * factorial(p));
  return s;
}

namespace {

struct DupSpace {
  VarSpacePtr vars;
  std::vector<std::size_t> coeff_map;  // form-space var -> dup var (coeffs only)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (x_i, y_i) per atom
  std::size_t x, y;
};

DupSpace make_dup_space(const FormSpace& space, int atom_count) {
  std::vector<std::string> names;
  std::size_t ncoeff = space.x_index();
  for (std::size_t v = 0; v < ncoeff; ++v) names.push_back(space.vars()->name(v));
  DupSpace d;
  for (int i = 0; i < atom_count; ++i) {
    d.pairs.emplace_back(names.size(), names.size() + 1);
    names.push_back("xP" + std::to_string(i));
    names.push_back("yP" + std::to_string(i));
  }
  d.x = names.size();
  names.push_back("x");
  d.y = names.size();
  names.push_back("y");
  d.vars = VarSpace::make(std::move(names));
  for (std::size_t v = 0; v < ncoeff; ++v) d.coeff_map.push_back(v);
  return d;
}

MultiPoly to_dup(const DupSpace& d, const FormSpace& space, const MultiPoly& value,
                 int atom) {
  std::vector<std::size_t> map(space.vars()->size());
  for (std::size_t v = 0; v < space.x_index(); ++v) map[v] = d.coeff_map[v];
  map[space.x_index()] = d.pairs[atom].first;
  map[space.y_index()] = d.pairs[atom].second;
  return value.remap(map, d.vars);
}

MultiPoly omega(const DupSpace& d, const MultiPoly& p, int a, int b) {
  return p.diff(d.pairs[a].first).diff(d.pairs[b].second) -
         p.diff(d.pairs[a].second).diff(d.pairs[b].first);
}

MultiPoly sigma(const DupSpace& d, const MultiPoly& p, int a) {
  auto X = MultiPoly::variable(d.vars, d.x);
  auto Y = MultiPoly::variable(d.vars, d.y);
  return X * p.diff(d.pairs[a].first) + Y * p.diff(d.pairs[a].second);
}

MultiPoly from_dup(const DupSpace& d, const FormSpace& space, const MultiPoly& p) {
  for (const auto& t : p.terms())
    for (const auto& [xi, yi] : d.pairs)
      if (t.exp[xi] || t.exp[yi])
        throw InternalError("duplicated variables survived the operators");
  std::vector<std::size_t> map(d.vars->size(), 0);
  for (std::size_t v = 0; v < space.x_index(); ++v) map[d.coeff_map[v]] = v;
  for (const auto& [xi, yi] : d.pairs) {
    map[xi] = space.x_index();  // unused, exponents are zero
    map[yi] = space.y_index();
  }
  map[d.x] = space.x_index();
  map[d.y] = space.y_index();
  return p.remap(map, space.vars());
}

Covariant molecule_apply(const FormSpacePtr& space,
                         const std::vector<Covariant>& atoms,
                         const std::vector<Molecule::Edge>& edges,
                         std::optional<Recipe> recipe) {
  std::vector<int> free_val;
  for (const auto& a : atoms) free_val.push_back(a.order());
  for (const auto& e : edges) {
    free_val[e.origin] -= e.weight;
    free_val[e.target] -= e.weight;
  }
  std::vector<int> multideg(space->summands(), 0);
  for (const auto& a : atoms)
    for (int s = 0; s < space->summands(); ++s) multideg[s] += a.multidegree()[s];
  for (int v : free_val)
    if (v < 0) return Covariant::zero(space, std::move(multideg), 0);

  DupSpace d = make_dup_space(*space, static_cast<int>(atoms.size()));
  MultiPoly p = MultiPoly::constant(d.vars, 1);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    p = p * to_dup(d, *space, atoms[i].value(), static_cast<int>(i));
  for (const auto& e : edges)
    for (int w = 0; w < e.weight; ++w) p = omega(d, p, e.origin, e.target);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (int s = 0; s < free_val[i]; ++s) p = sigma(d, p, static_cast<int>(i));
  MultiPoly v = from_dup(d, *space, p);
  if (v.is_zero()) {
    int order = 0;
    for (int fv : free_val) order += fv;
    return Covariant::zero(space, std::move(multideg), order);
  }
  auto out = Covariant::from_value(space, std::move(v), std::move(recipe));
  if (out.multidegree() != multideg)
    throw InternalError("molecule evaluation multidegree mismatch");
  return out;
}

}  // namespace

Covariant transvectant_operator_route(const Covariant& f, const Covariant& g,
                                      int r) {
  if (r < 0) throw UsageError("negative transvectant index");
  int n = f.order(), p = g.order();
  auto multideg = sum_multidegree(f, g);
  if (f.is_zero() || g.is_zero() || r > std::min(n, p))
    return Covariant::zero(f.space(), std::move(multideg),
                           std::max(n + p - 2 * r, 0));
  DupSpace d = make_dup_space(*f.space(), 2);
  MultiPoly poly =
      to_dup(d, *f.space(), f.value(), 0) * to_dup(d, *f.space(), g.value(), 1);
  for (int i = 0; i < n - r; ++i) poly = sigma(d, poly, 0);
  for (int i = 0; i < p - r; ++i) poly = sigma(d, poly, 1);
  for (int i = 0; i < r; ++i) poly = omega(d, poly, 0, 1);
  MultiPoly v = from_dup(d, *f.space(), poly);
  if (v.is_zero())
    return Covariant::zero(f.space(), std::move(multideg), n + p - 2 * r);
  return Covariant::from_value(f.space(), std::move(v), trans_recipe(f, g, r));
}

Covariant evaluate_molecule(const Molecule& m, const std::vector<BinaryForm>& forms) {
  if (forms.size() != m.atoms.size())
    throw UsageError("one form required per atom");
  if (forms.empty()) throw UsageError("empty molecule");
  const auto& space = forms[0].cov->space();
  std::vector<Covariant> atoms;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].slot != m.atoms[i].color || forms[i].order != m.atoms[i].valence)
      throw UsageError("form does not match atom color " + m.atoms[i].id);
    if (!forms[i].cov->space()->same_as(*space))
      throw UsageError("forms live in different spaces");
    atoms.push_back(*forms[i].cov);
  }
  return molecule_apply(space, atoms, m.edges, std::nullopt);
}

Covariant triangle_invariant(const Covariant& base, int weight) {
  if (weight < 1) throw UsageError("triangle weight must be >= 1");
  std::vector<Covariant> atoms{base, base, base};
  std::vector<Molecule::Edge> edges{{0, 1, weight}, {1, 2, weight}, {2, 0, weight}};
  std::optional<Recipe> recipe;
  if (base.recipe()) recipe = Recipe::tri(*base.recipe(), weight);
  return molecule_apply(base.space(), atoms, edges, std::move(recipe));
}

namespace {

Covariant eval_edges(const FormSpacePtr& space, const std::vector<Covariant>& atoms,
                     std::vector<Molecule::Edge> edges) {
  // drop weight-0 placeholders
  std::vector<Molecule::Edge> kept;
  for (const auto& e : edges)
    if (e.weight > 0) kept.push_back(e);
  return molecule_apply(space, atoms, kept, std::nullopt);
}

}  // namespace

bool identity_check(IdentityKind kind, const IdentityParams& params) {
  switch (kind) {
    case IdentityKind::Syzygy1: {
      if (params.orders.size() != 2) throw UsageError("syzygy1 needs two orders");
      int n = params.orders[0], p = params.orders[1];
      if (params.r < 1 || params.r > std::min(n, p))
        throw UsageError("edge weight outside [1, min(n,p)]");
      auto space = FormSpace::make({n, p});
      std::vector<Covariant> atoms{*generic_form(space, 0).cov,
                                   *generic_form(space, 1).cov};
      auto lhs = eval_edges(space, atoms, {{0, 1, params.r}});
      auto rhs = eval_edges(space, atoms, {{1, 0, params.r}});
      Rat sign = (params.r % 2 == 0) ? Rat(1) : Rat(-1);
      return (lhs - rhs * sign).is_zero();
    }
    case IdentityKind::Syzygy2: {
      if (params.orders.size() != 3) throw UsageError("syzygy2 needs three orders");
      auto space =
          FormSpace::make({params.orders[0], params.orders[1], params.orders[2]});
      for (int o : params.orders)
        if (o < 1) throw UsageError("syzygy2 needs positive orders");
      std::vector<Covariant> atoms{*generic_form(space, 0).cov,
                                   *generic_form(space, 1).cov,
                                   *generic_form(space, 2).cov};
      auto lhs = eval_edges(space, atoms, {{0, 1, 1}});
      auto r1 = eval_edges(space, atoms, {{0, 2, 1}});
      auto r2 = eval_edges(space, atoms, {{2, 1, 1}});
      return (lhs - (r1 + r2)).is_zero();
    }
    case IdentityKind::Syzygy3: {
      if (params.orders.size() != 4) throw UsageError("syzygy3 needs four orders");
      auto space = FormSpace::make({params.orders[0], params.orders[1],
                                    params.orders[2], params.orders[3]});
      for (int o : params.orders)
        if (o < 1) throw UsageError("syzygy3 needs positive orders");
      std::vector<Covariant> atoms{
          *generic_form(space, 0).cov, *generic_form(space, 1).cov,
          *generic_form(space, 2).cov, *generic_form(space, 3).cov};
      auto lhs = eval_edges(space, atoms, {{0, 1, 1}, {2, 3, 1}});
      auto r1 = eval_edges(space, atoms, {{0, 3, 1}, {1, 2, 1}});
      auto r2 = eval_edges(space, atoms, {{0, 2, 1}, {3, 1, 1}});
      return (lhs - (r1 + r2)).is_zero();
    }
    case IdentityKind::BinomExpand: {
      if (params.orders.size() != 3)
        throw UsageError("binomial expansion needs three orders");
      int n = params.orders[0], p = params.orders[1], q = params.orders[2];
      int r = params.r;
      if (r < 0 || r > std::min({n, p, q}))
        throw UsageError("binomial expansion needs r <= min(n,p,q)");
      auto space = FormSpace::make({n, p, q});
      std::vector<Covariant> atoms{*generic_form(space, 0).cov,
                                   *generic_form(space, 1).cov,
                                   *generic_form(space, 2).cov};
      auto lhs = eval_edges(space, atoms, {{0, 1, r}});
      Covariant rhs = Covariant::zero(space, lhs.multidegree(), lhs.order());
      for (int i = 0; i <= r; ++i) {
        auto term = eval_edges(space, atoms, {{0, 2, i}, {2, 1, r - i}});
        rhs = rhs + term * Rat(binomial(r, i));
      }
      return (lhs - rhs).is_zero();
    }
    case IdentityKind::Stroh: {
      if (params.k1 + params.k2 + params.k3 != params.g - 1)
        throw UsageError("Stroh identity needs k1+k2+k3 = g-1");
      if (params.g < 1 || params.k1 < 0 || params.k2 < 0 || params.k3 < 0)
        throw UsageError("Stroh identity needs nonnegative parameters");
      auto uvars = VarSpace::make({"u1", "u2"});
      auto u1 = MultiPoly::variable(uvars, 0);
      auto u2 = MultiPoly::variable(uvars, 1);
      auto u3 = -(u1 + u2);
      long g = params.g;
      auto block = [&](const MultiPoly& ua, const MultiPoly& ub, int ka, int kb,
                       int kc) {
        // (-1)^kc sum_{i=0}^{ka} C(g,i) C(ka+kb-i, kb) ub^{g-i} ua^i
        MultiPoly acc = MultiPoly::zero(uvars);
        for (int i = 0; i <= ka; ++i) {
          Rat c = Rat(binomial(g, i) * binomial(ka + kb - i, kb));
          acc += ub.pow(static_cast<unsigned>(g - i)) *
                 ua.pow(static_cast<unsigned>(i)) * c;
        }
        if (kc & 1) acc = -acc;
        return acc;
      };
      // terms cycle (u1,u3,k1,k3 | sign k2), (u2,u1,k2,k1 | sign k3),
      // (u3,u2,k3,k2 | sign k1)
      auto total = block(u1, u3, params.k1, params.k3, params.k2) +
                   block(u2, u1, params.k2, params.k1, params.k3) +
                   block(u3, u2, params.k3, params.k2, params.k1);
      return total.is_zero();
    }
  }
  throw UsageError("unknown identity kind");
}

int grade_bound(const GradeQuery& q) {
  if (q.e0 < 0 || q.e1 < 0 || q.e2 < 0 || q.n < 1)
    throw UsageError("grade query needs nonnegative weights and n >= 1");
  if (q.e0 + q.e1 > q.n || q.e1 + q.e2 > q.n || q.e0 + q.e2 > q.n)
    throw UsageError("grade query needs e_i + e_j <= n");
  int w = q.e0 + q.e1 + q.e2;
  int bound = 0;
  if (w <= q.n)
    bound = (2 * w + 2) / 3;
  else
    bound = q.n - w / 3;
  bool excluded = (q.e0 == q.e1 && q.e1 == q.e2 && 2 * q.e0 == q.n);
  if (2 * q.e0 <= q.n && 2 * (q.e1 + q.e2) > q.e0 && !excluded)
    bound = std::max(bound, q.e0 + 1);
  return bound;
}

ReassociateBasis reassociate_basis(int n, int p, int q, int w) {
  if (n < 0 || p < 0 || q < 0 || w < 0) throw UsageError("negative order");
  int k = n + p + q - 2 * w;
  if (k < 0) throw UsageError("target order is negative");
  auto space = FormSpace::make({n, p, q});
  auto f = *generic_form(space, 0).cov;
  auto g = *generic_form(space, 1).cov;
  auto h = *generic_form(space, 2).cov;

  ReassociateBasis out;
  std::vector<Covariant> left, right;
  for (int j1 = 0; j1 <= std::min(n, p); ++j1) {
    int j2 = w - j1;
    if (j2 < 0 || j2 > std::min(n + p - 2 * j1, q)) continue;
    out.left_pairs.emplace_back(j1, j2);
    left.push_back(transvectant(transvectant(f, g, j1), h, j2));
  }
  for (int i1 = 0; i1 <= std::min(p, q); ++i1) {
    int i2 = w - i1;
    if (i2 < 0 || i2 > std::min(n, p + q - 2 * i1)) continue;
    out.right_pairs.emplace_back(i1, i2);
    right.push_back(transvectant(f, transvectant(g, h, i1), i2));
  }
  if (left.size() != right.size())
    throw InternalError("iterated transvectant families have different sizes");

  // collect a common monomial index over the sources
  std::map<Exp, std::size_t> index;
  auto index_of = [&](const Exp& e) {
    auto [it, fresh] = index.emplace(e, index.size());
    (void)fresh;
    return it->second;
  };
  for (const auto& c : left)
    for (const auto& t : c.source().terms()) index_of(t.exp);
  for (const auto& c : right)
    for (const auto& t : c.source().terms()) index_of(t.exp);

  ExactMatrix m(index.size(), right.size() + left.size());
  for (std::size_t c = 0; c < right.size(); ++c)
    for (const auto& t : right[c].source().terms())
      m.set(index_of(t.exp), c, t.coef);
  for (std::size_t c = 0; c < left.size(); ++c)
    for (const auto& t : left[c].source().terms())
      m.set(index_of(t.exp), right.size() + c, t.coef);
  if (m.rank() != right.size())
    throw InternalError("right family is not linearly independent");

  // solve each left member against the right family
  out.matrix.assign(left.size(), std::vector<Rat>(right.size(), Rat(0)));
  for (std::size_t l = 0; l < left.size(); ++l) {
    ExactMatrix sys(index.size(), right.size() + 1);
    for (std::size_t c = 0; c < right.size(); ++c)
      for (const auto& t : right[c].source().terms())
        sys.set(index_of(t.exp), c, t.coef);
    for (const auto& t : left[l].source().terms())
      sys.set(index_of(t.exp), right.size(), -t.coef);
    auto ker = sys.kernel();
    if (ker.size() != 1 || ker[0][right.size()] == 0)
      throw InternalError("left member not uniquely expressible in right family");
    Rat scale = 1 / ker[0][right.size()];
    for (std::size_t c = 0; c < right.size(); ++c)
      out.matrix[l][c] = ker[0][c] * scale;
  }
  return out;
}

}  // namespace gordan
