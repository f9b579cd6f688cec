#include "h14/varset.hpp"

#include <set>

#include "h14/errors.hpp"

namespace h14 {

VarSet::VarSet() : d_(std::make_shared<const Data>()) {}

VarSet::VarSet(std::vector<std::string> names, std::vector<bool> laurent) {
  if (laurent.empty()) laurent.assign(names.size(), false);
  if (laurent.size() != names.size())
    throw StructuralError("laurent flag count does not match variable count");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
  }
  d_ = std::make_shared<const Data>(Data{std::move(names), std::move(laurent)});
}

std::optional<size_t> VarSet::index_of(std::string_view name) const {
  for (size_t i = 0; i < d_->names.size(); ++i)
    if (d_->names[i] == name) return i;
  return std::nullopt;
}

size_t VarSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw StructuralError("unknown variable '" + std::string(name) + "'");
  return *i;
}

VarSet VarSet::with_laurent(size_t i, bool flag) const {
  auto flags = d_->laurent;
  flags.at(i) = flag;
  return VarSet(d_->names, std::move(flags));
}

VarSet x_vars(int n) {
  if (n < 1) throw StructuralError("variable count must be at least 1");
  std::vector<std::string> names;
  std::vector<bool> flags;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    flags.push_back(i == 1);
  }
  return VarSet(std::move(names), std::move(flags));
}

VarSet xz_vars(int n) {
  auto base = x_vars(n);
  auto names = base.names();
  auto flags = base.laurent_flags();
  names.push_back("z");
  flags.push_back(false);
  return VarSet(std::move(names), std::move(flags));
}

}  // namespace h14
