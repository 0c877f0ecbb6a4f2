#include "gordan/varspace.hpp"

#include "gordan/rational.hpp"

namespace gordan {

VarSpace::VarSpace(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, fresh] = index_.emplace(names_[i], i);
    (void)it;
    if (!fresh) throw UsageError("duplicate variable name: " + names_[i]);
  }
}

std::shared_ptr<const VarSpace> VarSpace::make(std::vector<std::string> names) {
  return std::shared_ptr<const VarSpace>(new VarSpace(std::move(names)));
}

std::size_t VarSpace::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UsageError("undeclared variable: " + name);
  return it->second;
}

bool VarSpace::has(const std::string& name) const {
  return index_.find(name) != index_.end();
}

bool VarSpace::same_as(const VarSpace& other) const {
  return this == &other || names_ == other.names_;
}

}  // namespace gordan
