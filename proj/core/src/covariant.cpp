#include "gordan/covariant.hpp"

#include <algorithm>

namespace gordan {

MultiPoly layer_derivation(const FormSpace& space, const MultiPoly& p) {
  const auto& vars = space.vars();
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < space.x_index(); ++v) {
      if (!t.exp[v]) continue;
      int slot = space.slot_of(v);
      int j = space.coeff_offset_in_slot(v);
      int n = space.order(slot);
      if (j >= n) continue;  // a_n maps to zero
      MultiPoly::Term d{t.exp, t.coef * Rat(t.exp[v]) * Rat(n - j)};
      d.exp[v] -= 1;
      std::size_t next = space.coeff_index(slot, j + 1);
      d.exp[next] = static_cast<std::uint16_t>(d.exp[next] + 1);
      out.push_back(std::move(d));
    }
  }
  return MultiPoly::from_terms(vars, std::move(out));
}

Covariant Covariant::zero(FormSpacePtr space, std::vector<int> multidegree,
                          int order) {
  Covariant c;
  if (multidegree.empty()) multidegree.assign(space->summands(), 0);
  c.multidegree_ = std::move(multidegree);
  c.order_ = order;
  c.source_ = MultiPoly::zero(space->vars());
  c.value_ = c.source_;
  c.space_ = std::move(space);
  return c;
}

Covariant Covariant::from_value(FormSpacePtr space, MultiPoly value,
                                std::optional<Recipe> recipe) {
  if (!value.space()->same_as(*space->vars()))
    throw UsageError("value polynomial lives outside the form space");
  Covariant c;
  c.space_ = space;
  c.recipe_ = std::move(recipe);
  if (value.is_zero()) {
    c.multidegree_.assign(space->summands(), 0);
    c.order_ = 0;
    c.source_ = value;
    c.value_ = std::move(value);
    return c;
  }
  std::vector<std::size_t> xy{space->x_index(), space->y_index()};
  long k = value.degree_in(xy);
  if (!value.homogeneous_in(xy, k))
    throw UsageError("value is not homogeneous in (x,y)");
  for (int s = 0; s < space->summands(); ++s) {
    std::vector<std::size_t> fam;
    for (int j = 0; j <= space->order(s); ++j) fam.push_back(space->coeff_index(s, j));
    long d = value.degree_in(fam);
    if (!value.homogeneous_in(fam, d))
      throw UsageError("value is not homogeneous in a coefficient family");
    c.multidegree_.push_back(static_cast<int>(d));
  }
  c.order_ = static_cast<int>(k);
  // source = coefficient of x^k
  std::vector<MultiPoly::Term> src;
  for (const auto& t : value.terms()) {
    if (t.exp[space->x_index()] == static_cast<std::uint16_t>(k) &&
        t.exp[space->y_index()] == 0) {
      MultiPoly::Term s{t.exp, t.coef};
      s.exp[space->x_index()] = 0;
      src.push_back(std::move(s));
    }
  }
  // a genuine covariant has a nonzero leading coefficient, but plain
  // homogeneous polynomials (e.g. forms with numeric coefficients) may not;
  // they stay value-backed
  c.source_ = MultiPoly::from_terms(space->vars(), std::move(src));
  c.value_ = std::move(value);
  return c;
}

Covariant Covariant::from_source(FormSpacePtr space, MultiPoly source,
                                 std::vector<int> multidegree, int order,
                                 std::optional<Recipe> recipe) {
  if (!source.space()->same_as(*space->vars()))
    throw UsageError("source polynomial lives outside the form space");
  Covariant c;
  c.space_ = std::move(space);
  c.multidegree_ = std::move(multidegree);
  c.order_ = order;
  c.source_ = std::move(source);
  c.recipe_ = std::move(recipe);
  return c;
}

long Covariant::total_degree() const {
  long d = 0;
  for (int x : multidegree_) d += x;
  return d;
}

MultiPoly Covariant::layer(int j) const {
  if (j < 0 || j > order_) throw UsageError("layer index out of range");
  if (value_) {
    // read directly from the cached full polynomial
    std::vector<MultiPoly::Term> out;
    for (const auto& t : value_->terms()) {
      if (t.exp[space_->y_index()] == static_cast<std::uint16_t>(j) &&
          t.exp[space_->x_index()] == static_cast<std::uint16_t>(order_ - j)) {
        MultiPoly::Term s{t.exp, t.coef};
        s.exp[space_->x_index()] = 0;
        s.exp[space_->y_index()] = 0;
        out.push_back(std::move(s));
      }
    }
    return MultiPoly::from_terms(space_->vars(), std::move(out));
  }
  if (layers_.empty()) layers_.push_back(source_);
  while (static_cast<int>(layers_.size()) <= j) {
    int next = static_cast<int>(layers_.size());
    layers_.push_back(layer_derivation(*space_, layers_.back()) * Rat(1, next));
  }
  return layers_[j];
}

const MultiPoly& Covariant::value() const {
  if (value_) return *value_;
  MultiPoly acc = MultiPoly::zero(space_->vars());
  for (int j = 0; j <= order_; ++j) {
    MultiPoly lj = layer(j);
    if (lj.is_zero()) continue;
    Exp e(space_->vars()->size(), 0);
    e[space_->x_index()] = static_cast<std::uint16_t>(order_ - j);
    e[space_->y_index()] = static_cast<std::uint16_t>(j);
    acc += lj * MultiPoly::monomial(space_->vars(), std::move(e), Rat(1));
  }
  value_ = std::move(acc);
  return *value_;
}

Covariant Covariant::operator*(const Covariant& rhs) const {
  if (!space_->same_as(*rhs.space_))
    throw UsageError("covariants live in different form spaces");
  Covariant c;
  c.space_ = space_;
  c.multidegree_.resize(multidegree_.size());
  for (std::size_t i = 0; i < multidegree_.size(); ++i)
    c.multidegree_[i] = multidegree_[i] + rhs.multidegree_[i];
  c.order_ = order_ + rhs.order_;
  c.source_ = source_ * rhs.source_;  // leading coefficients multiply
  if (value_ && rhs.value_) c.value_ = *value_ * *rhs.value_;
  return c;
}

Covariant Covariant::operator*(const Rat& a) const {
  Covariant c(*this);
  c.source_ = c.source_ * a;
  if (c.value_) c.value_ = *c.value_ * a;
  c.layers_.clear();
  c.recipe_.reset();
  return c;
}

Covariant Covariant::operator+(const Covariant& rhs) const {
  if (order_ != rhs.order_ || multidegree_ != rhs.multidegree_) {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    throw UsageError("covariant sum across different (multidegree, order)");
  }
  Covariant c;
  c.space_ = space_;
  c.multidegree_ = multidegree_;
  c.order_ = order_;
  c.source_ = source_ + rhs.source_;
  if (value_ && rhs.value_) c.value_ = *value_ + *rhs.value_;
  return c;
}

Covariant Covariant::operator-(const Covariant& rhs) const {
  return *this + rhs * Rat(-1);
}

bool Covariant::same_polynomial(const Covariant& rhs) const {
  if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero();
  return order_ == rhs.order_ && source_ == rhs.source_;
}

bool Covariant::proportional_to(const Covariant& rhs) const {
  if (is_zero() || rhs.is_zero()) return false;
  if (order_ != rhs.order_ || multidegree_ != rhs.multidegree_) return false;
  const auto& a = source_.terms();
  const auto& b = rhs.source_.terms();
  if (a.size() != b.size()) return false;
  Rat ratio = a[0].coef / b[0].coef;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exp != b[i].exp || a[i].coef != b[i].coef * ratio) return false;
  return true;
}

bool Covariant::homogeneous() const {
  if (is_zero()) return true;
  const auto& v = value();
  std::vector<std::size_t> xy{space_->x_index(), space_->y_index()};
  if (!v.homogeneous_in(xy, order_)) return false;
  for (int s = 0; s < space_->summands(); ++s) {
    std::vector<std::size_t> fam;
    for (int j = 0; j <= space_->order(s); ++j)
      fam.push_back(space_->coeff_index(s, j));
    if (!v.homogeneous_in(fam, multidegree_[s])) return false;
  }
  // isobaric: the coefficient weight of every term equals its x-minus-y degree
  for (const auto& t : v.terms()) {
    long w = 0;
    for (std::size_t var = 0; var < space_->x_index(); ++var)
      if (t.exp[var]) w += static_cast<long>(t.exp[var]) * space_->coeff_weight(var);
    w -= t.exp[space_->x_index()];
    w += t.exp[space_->y_index()];
    if (w != 0) return false;
  }
  return true;
}

bool Covariant::covariant_consistent() const {
  if (is_zero()) return true;
  if (!homogeneous()) return false;
  // the layer recursion must close: D(layer_k) = 0
  return layer_derivation(*space_, layer(order_)).is_zero();
}

std::vector<Rat> coefficient_vector(const Covariant& c,
                                    const std::vector<Exp>& basis_monomials) {
  std::map<Exp, std::size_t> index;
  for (std::size_t i = 0; i < basis_monomials.size(); ++i)
    index.emplace(basis_monomials[i], i);
  std::vector<Rat> out(basis_monomials.size(), Rat(0));
  if (c.is_zero()) return out;
  for (const auto& t : c.value().terms()) {
    auto it = index.find(t.exp);
    if (it == index.end())
      throw InternalError("covariant supported outside the supplied basis");
    out[it->second] = t.coef;
  }
  return out;
}

Covariant sl2_act(const UnimodularMatrix& g, const Covariant& c) {
  if (c.is_zero()) return c;
  const auto& space = c.space();
  const auto& vars = space->vars();
  UnimodularMatrix gi = g.inverse();
  std::map<std::size_t, MultiPoly> bindings;
  // x -> g^{-1} x
  auto X = MultiPoly::variable(vars, space->x_index());
  auto Y = MultiPoly::variable(vars, space->y_index());
  bindings[space->x_index()] = X * Rat(gi.a) + Y * Rat(gi.b);
  bindings[space->y_index()] = X * Rat(gi.c) + Y * Rat(gi.d);
  // induced action on each coefficient family, read off the generic form
  for (int s = 0; s < space->summands(); ++s) {
    int n = space->order(s);
    BinaryForm f = generic_form(space, s);
    // (g^{-1} f)(x) = f(g x): substitute, then re-read binomial coefficients
    std::map<std::size_t, MultiPoly> xy;
    xy[space->x_index()] = X * Rat(g.a) + Y * Rat(g.b);
    xy[space->y_index()] = X * Rat(g.c) + Y * Rat(g.d);
    MultiPoly moved = f.cov->value().substitute(xy, vars);
    for (int j = 0; j <= n; ++j) {
      // coefficient of x^{n-j} y^j, divided by C(n,j)
      std::vector<MultiPoly::Term> terms;
      for (const auto& t : moved.terms()) {
        if (t.exp[space->x_index()] == static_cast<std::uint16_t>(n - j) &&
            t.exp[space->y_index()] == static_cast<std::uint16_t>(j)) {
          MultiPoly::Term s2{t.exp, t.coef / Rat(binomial(n, j))};
          s2.exp[space->x_index()] = 0;
          s2.exp[space->y_index()] = 0;
          terms.push_back(std::move(s2));
        }
      }
      bindings[space->coeff_index(s, j)] =
          MultiPoly::from_terms(vars, std::move(terms));
    }
  }
  MultiPoly moved = c.value().substitute(bindings, vars);
  auto out = Covariant::from_value(space, std::move(moved));
  if (out.order() != c.order() || out.multidegree() != c.multidegree())
    throw InternalError("group action changed the bigrading");
  return out;
}

}  // namespace gordan
