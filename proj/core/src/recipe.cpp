#include "gordan/recipe.hpp"

#include <cctype>
#include <sstream>

#include "gordan/rational.hpp"

namespace gordan {

Recipe Recipe::slot_form(int slot) {
  Recipe r;
  r.kind_ = Kind::SlotForm;
  r.slot_ = slot;
  return r;
}

Recipe Recipe::gen_ref(std::string name) {
  Recipe r;
  r.kind_ = Kind::GenRef;
  r.name_ = std::move(name);
  return r;
}

Recipe Recipe::trans(Recipe lhs, Recipe rhs, int idx) {
  Recipe r;
  r.kind_ = Kind::Trans;
  r.index_ = idx;
  r.children_.emplace_back(std::make_shared<Recipe>(std::move(lhs)), 1u);
  r.children_.emplace_back(std::make_shared<Recipe>(std::move(rhs)), 1u);
  return r;
}

Recipe Recipe::prod(std::vector<std::pair<Recipe, unsigned>> factors) {
  Recipe r;
  r.kind_ = Kind::Prod;
  for (auto& [f, e] : factors)
    r.children_.emplace_back(std::make_shared<Recipe>(std::move(f)), e);
  return r;
}

Recipe Recipe::tri(Recipe base, int weight) {
  Recipe r;
  r.kind_ = Kind::Tri;
  r.index_ = weight;
  r.children_.emplace_back(std::make_shared<Recipe>(std::move(base)), 1u);
  return r;
}

std::string Recipe::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::SlotForm:
      os << "f" << slot_;
      break;
    case Kind::GenRef:
      os << name_;
      break;
    case Kind::Trans:
      os << "T(" << children_[0].first->str() << "," << children_[1].first->str()
         << "," << index_ << ")";
      break;
    case Kind::Tri:
      os << "tri(" << children_[0].first->str() << "," << index_ << ")";
      break;
    case Kind::Prod: {
      if (children_.empty()) {
        os << "1";
        break;
      }
      bool first = true;
      for (const auto& [f, e] : children_) {
        if (!first) os << "*";
        first = false;
        os << f->str();
        if (e != 1) os << "^" << e;
      }
      break;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw UsageError("recipe parse error: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw UsageError("recipe parse error: expected integer");
    return std::stoi(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw UsageError("recipe parse error: expected identifier");
    return s.substr(start, pos - start);
  }

  Recipe atom() {
    skip_ws();
    if (pos >= s.size()) throw UsageError("recipe parse error: unexpected end");
    if (s.compare(pos, 2, "T(") == 0) {
      pos += 2;
      Recipe lhs = expr();
      expect(',');
      Recipe rhs = expr();
      expect(',');
      int r = integer();
      expect(')');
      return Recipe::trans(std::move(lhs), std::move(rhs), r);
    }
    if (s.compare(pos, 4, "tri(") == 0) {
      pos += 4;
      Recipe base = atom();
      expect(',');
      int w = integer();
      expect(')');
      return Recipe::tri(std::move(base), w);
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int v = integer();
      if (v != 1) throw UsageError("recipe parse error: only the unit literal 1");
      return Recipe::prod({});
    }
    std::string id = ident();
    if (id.size() >= 2 && id[0] == 'f' &&
        id.find_first_not_of("0123456789", 1) == std::string::npos)
      return Recipe::slot_form(std::stoi(id.substr(1)));
    return Recipe::gen_ref(std::move(id));
  }

  Recipe factor(unsigned& power) {
    Recipe a = atom();
    power = 1;
    skip_ws();
    if (eat('^')) {
      int e = integer();
      if (e < 0) throw UsageError("recipe parse error: negative power");
      power = static_cast<unsigned>(e);
    }
    return a;
  }

  Recipe expr() {
    std::vector<std::pair<Recipe, unsigned>> factors;
    unsigned e;
    Recipe first = factor(e);
    factors.emplace_back(std::move(first), e);
    while (true) {
      skip_ws();
      if (!eat('*')) break;
      Recipe next = factor(e);
      factors.emplace_back(std::move(next), e);
    }
    if (factors.size() == 1 && factors[0].second == 1)
      return std::move(factors[0].first);
    return Recipe::prod(std::move(factors));
  }
};

}  // namespace

Recipe Recipe::parse(const std::string& text) {
  Parser p{text};
  Recipe r = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw UsageError("recipe parse error: trailing input in '" + text + "'");
  return r;
}

}  // namespace gordan
