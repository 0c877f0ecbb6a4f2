#include "gordan/forms.hpp"

#include "gordan/covariant.hpp"

namespace gordan {

FormSpace::FormSpace(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw UsageError("form space needs at least one summand");
  if (orders_.size() > 26) throw UsageError("too many summands");
  std::vector<std::string> names;
  for (std::size_t s = 0; s < orders_.size(); ++s) {
    if (orders_[s] < 0) throw UsageError("negative form order");
    base_.push_back(names.size());
    char fam = static_cast<char>('a' + s);
    for (int j = 0; j <= orders_[s]; ++j)
      names.push_back(std::string(1, fam) + std::to_string(j));
  }
  x_ = names.size();
  names.push_back("x");
  y_ = names.size();
  names.push_back("y");
  vars_ = VarSpace::make(std::move(names));
}

std::shared_ptr<const FormSpace> FormSpace::make(std::vector<int> orders) {
  return std::shared_ptr<const FormSpace>(new FormSpace(std::move(orders)));
}

int FormSpace::order(int slot) const {
  if (slot < 0 || slot >= summands()) throw UsageError("summand slot out of range");
  return orders_[slot];
}

std::size_t FormSpace::coeff_index(int slot, int j) const {
  if (slot < 0 || slot >= summands() || j < 0 || j > orders_[slot])
    throw UsageError("coefficient index out of range");
  return base_[slot] + static_cast<std::size_t>(j);
}

int FormSpace::slot_of(std::size_t var) const {
  if (var >= x_) return -1;
  int s = summands() - 1;
  while (s > 0 && base_[s] > var) --s;
  return s;
}

int FormSpace::coeff_offset_in_slot(std::size_t var) const {
  int s = slot_of(var);
  if (s < 0) throw UsageError("not a coefficient variable");
  return static_cast<int>(var - base_[s]);
}

int FormSpace::coeff_weight(std::size_t var) const {
  int s = slot_of(var);
  if (s < 0) throw UsageError("x and y carry no coefficient weight");
  return orders_[s] - 2 * coeff_offset_in_slot(var);
}

UnimodularMatrix::UnimodularMatrix(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw UsageError("matrix determinant is not 1");
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& rhs) const {
  return UnimodularMatrix(a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d);
}

bool UnimodularMatrix::operator==(const UnimodularMatrix& rhs) const {
  return a == rhs.a && b == rhs.b && c == rhs.c && d == rhs.d;
}

UnimodularMatrix UnimodularMatrix::random(std::mt19937_64& rng, long bound) {
  UnimodularMatrix m;
  std::uniform_int_distribution<long> shear(-3, 3);
  std::uniform_int_distribution<int> side(0, 1);
  for (int step = 0; step < 8; ++step) {
    long k = shear(rng);
    UnimodularMatrix s = side(rng) ? UnimodularMatrix(1, k, 0, 1)
                                   : UnimodularMatrix(1, 0, k, 1);
    UnimodularMatrix next = m * s;
    if (abs(next.a) > bound || abs(next.b) > bound || abs(next.c) > bound ||
        abs(next.d) > bound)
      break;
    m = next;
  }
  return m;
}

BinaryForm generic_form(const FormSpacePtr& space, int slot) {
  if (slot < 0 || slot >= space->summands())
    throw UsageError("invalid summand slot");
  int n = space->order(slot);
  const auto& vars = space->vars();
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i <= n; ++i) {
    Exp e(vars->size(), 0);
    e[space->coeff_index(slot, i)] = 1;
    e[space->x_index()] = static_cast<std::uint16_t>(n - i);
    e[space->y_index()] = static_cast<std::uint16_t>(i);
    terms.push_back({std::move(e), Rat(binomial(n, i))});
  }
  auto value = MultiPoly::from_terms(vars, std::move(terms));
  auto cov = Covariant::from_value(space, std::move(value),
                                   Recipe::slot_form(slot + 1));
  return BinaryForm{slot, n, std::make_shared<Covariant>(std::move(cov))};
}

}  // namespace gordan
