#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace h14 {

/// Ordered variable names plus a flag per variable saying whether it may
/// carry negative exponents. Cheap to copy; equality compares contents.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names, std::vector<bool> laurent = {});

  size_t size() const { return d_->names.size(); }
  const std::string& name(size_t i) const { return d_->names.at(i); }
  bool is_laurent(size_t i) const { return d_->laurent.at(i); }
  const std::vector<std::string>& names() const { return d_->names; }
  const std::vector<bool>& laurent_flags() const { return d_->laurent; }

  std::optional<size_t> index_of(std::string_view name) const;
  /// Like index_of but throws StructuralError when absent.
  size_t require(std::string_view name) const;

  VarSet with_laurent(size_t i, bool flag) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.d_ == b.d_ || (a.d_->names == b.d_->names && a.d_->laurent == b.d_->laurent);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<bool> laurent;
  };
  std::shared_ptr<const Data> d_;
};

/// x1..xn with x1 invertible: the ring k[x]_{x1}.
VarSet x_vars(int n);
/// x1..xn, z with x1 invertible: the ring k[x,z]_{x1}.
VarSet xz_vars(int n);

}  // namespace h14
