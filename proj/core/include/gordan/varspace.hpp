#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace gordan {

/// An ordered, immutable list of variable names. Polynomials store exponent
/// vectors positionally against one of these; two polynomials interoperate
/// only when their spaces agree.
class VarSpace {
 public:
  static std::shared_ptr<const VarSpace> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a declared variable; throws UsageError if absent.
  std::size_t index(const std::string& name) const;
  bool has(const std::string& name) const;

  bool same_as(const VarSpace& other) const;

 private:
  explicit VarSpace(std::vector<std::string> names);
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

}  // namespace gordan
