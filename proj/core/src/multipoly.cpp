#include "gordan/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace gordan {

namespace {

struct ExpHash {
  std::size_t operator()(const Exp& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

long exp_total(const Exp& e) {
  long t = 0;
  for (auto x : e) t += x;
  return t;
}

}  // namespace

bool MultiPoly::exp_less(const Exp& a, const Exp& b) {
  long ta = exp_total(a), tb = exp_total(b);
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::from_terms(VarSpacePtr space, std::vector<Term> terms) {
  MultiPoly p(std::move(space));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return exp_less(a.exp, b.exp); });
  for (auto& t : terms) {
    if (t.coef == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

MultiPoly MultiPoly::constant(VarSpacePtr space, const Rat& c) {
  MultiPoly p(space);
  if (c != 0) p.terms_.push_back({Exp(space->size(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(VarSpacePtr space, std::size_t var) {
  if (var >= space->size()) throw UsageError("variable index out of range");
  Exp e(space->size(), 0);
  e[var] = 1;
  MultiPoly p(space);
  p.terms_.push_back({std::move(e), Rat(1)});
  return p;
}

MultiPoly MultiPoly::monomial(VarSpacePtr space, Exp e, Rat c) {
  if (e.size() != space->size()) throw UsageError("exponent vector length mismatch");
  MultiPoly p(space);
  if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

void MultiPoly::check_same_space(const MultiPoly& rhs) const {
  if (!space_ || !rhs.space_ || !space_->same_as(*rhs.space_))
    throw UsageError("polynomials live in different variable spaces");
}

long MultiPoly::total_degree() const {
  if (is_zero()) throw UsageError("degree of the zero polynomial is undefined");
  return exp_total(terms_.back().exp);
}

long MultiPoly::degree_in(std::size_t var) const {
  if (is_zero()) throw UsageError("degree of the zero polynomial is undefined");
  long d = 0;
  for (const auto& t : terms_) d = std::max<long>(d, t.exp[var]);
  return d;
}

long MultiPoly::degree_in(const std::vector<std::size_t>& vars) const {
  if (is_zero()) throw UsageError("degree of the zero polynomial is undefined");
  long d = 0;
  for (const auto& t : terms_) {
    long s = 0;
    for (auto v : vars) s += t.exp[v];
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::homogeneous_in(const std::vector<std::size_t>& vars, long deg) const {
  for (const auto& t : terms_) {
    long s = 0;
    for (auto v : vars) s += t.exp[v];
    if (s != deg) return false;
  }
  return true;
}

Rat MultiPoly::coefficient(const Exp& e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, const Exp& key) { return exp_less(t.exp, key); });
  if (it != terms_.end() && it->exp == e) return it->coef;
  return Rat(0);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  check_same_space(rhs);
  MultiPoly out(space_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin(), b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->exp == b->exp) {
      Rat c = a->coef + b->coef;
      if (c != 0) out.terms_.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    } else if (exp_less(a->exp, b->exp)) {
      out.terms_.push_back(*a++);
    } else {
      out.terms_.push_back(*b++);
    }
  }
  out.terms_.insert(out.terms_.end(), a, terms_.end());
  out.terms_.insert(out.terms_.end(), b, rhs.terms_.end());
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  check_same_space(rhs);
  if (is_zero() || rhs.is_zero()) return MultiPoly::zero(space_);
  const auto& small = terms_.size() <= rhs.terms_.size() ? terms_ : rhs.terms_;
  const auto& big = terms_.size() <= rhs.terms_.size() ? rhs.terms_ : terms_;
  std::unordered_map<Exp, Rat, ExpHash> acc;
  acc.reserve(big.size() * 2);
  Exp e(space_->size());
  for (const auto& ts : small) {
    for (const auto& tb : big) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<std::uint16_t>(ts.exp[i] + tb.exp[i]);
      auto [it, fresh] = acc.emplace(e, Rat(0));
      (void)fresh;
      it->second += ts.coef * tb.coef;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (v != 0) terms.push_back({k, std::move(v)});
  return from_terms(space_, std::move(terms));
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  if (c == 0) return MultiPoly::zero(space_);
  MultiPoly p(*this);
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (!space_ || !rhs.space_) return terms_.empty() && rhs.terms_.empty();
  if (!space_->same_as(*rhs.space_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != rhs.terms_[i].exp || terms_[i].coef != rhs.terms_[i].coef)
      return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = MultiPoly::constant(space_, 1);
  MultiPoly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::diff(std::size_t var) const {
  if (var >= space_->size()) throw UsageError("undeclared variable in diff");
  MultiPoly out(space_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d{t.exp, t.coef * Rat(t.exp[var])};
    d.exp[var] -= 1;
    out.terms_.push_back(std::move(d));
  }
  // d/dx preserves grlex order of the surviving terms only within the same
  // total degree block; re-sorting keeps the representation canonical.
  std::vector<Term> ts = std::move(out.terms_);
  return from_terms(space_, std::move(ts));
}

MultiPoly MultiPoly::diff(const std::string& var) const {
  return diff(space_->index(var));
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, MultiPoly>& bindings,
                                VarSpacePtr target) const {
  for (const auto& [v, p] : bindings) {
    if (v >= space_->size()) throw UsageError("binding for undeclared variable");
    if (!p.space()->same_as(*target))
      throw UsageError("binding polynomial lives outside the target space");
  }
  // identity images for unbound variables (matched by name)
  std::vector<MultiPoly> image(space_->size());
  for (std::size_t i = 0; i < space_->size(); ++i) {
    auto it = bindings.find(i);
    if (it != bindings.end())
      image[i] = it->second;
    else
      image[i] = MultiPoly::variable(target, target->index(space_->name(i)));
  }
  // power cache per variable
  std::vector<std::vector<MultiPoly>> powers(space_->size());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * image[v]);
    return cache[e];
  };
  MultiPoly out = MultiPoly::zero(target);
  for (const auto& t : terms_) {
    MultiPoly m = MultiPoly::constant(target, t.coef);
    for (std::size_t v = 0; v < space_->size(); ++v)
      if (t.exp[v]) m = m * power(v, t.exp[v]);
    out += m;
  }
  return out;
}

MultiPoly MultiPoly::remap(const std::vector<std::size_t>& var_map,
                           VarSpacePtr target) const {
  if (var_map.size() != space_->size())
    throw UsageError("remap table length mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exp e(target->size(), 0);
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      if (t.exp[v]) {
        if (var_map[v] >= target->size())
          throw UsageError("remap target index out of range");
        e[var_map[v]] = static_cast<std::uint16_t>(e[var_map[v]] + t.exp[v]);
      }
    }
    terms.push_back({std::move(e), t.coef});
  }
  return from_terms(std::move(target), std::move(terms));
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, t.coef.get_num());
    Int d = t.coef.get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.back().coef < 0) scale = -scale;
  return *this * scale;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest degree first for readability
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& t = *it;
    Rat c = t.coef;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (c < 0) c = -c;
    bool printed_coef = false;
    if (c != 1 || exp_total(t.exp) == 0) {
      os << c.get_str();
      printed_coef = true;
    }
    bool any = printed_coef;
    for (std::size_t v = 0; v < t.exp.size(); ++v) {
      if (!t.exp[v]) continue;
      if (any) os << "*";
      os << space_->name(v);
      if (t.exp[v] > 1) os << "^" << t.exp[v];
      any = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

}  // namespace gordan
