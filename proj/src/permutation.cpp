#include "h14/permutation.hpp"

#include <set>

#include "h14/errors.hpp"

namespace h14 {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<size_t>(v)])
      throw StructuralError("not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& one_line) {
  std::vector<int> im;
  for (int v : one_line) im.push_back(v - 1);
  return Permutation(std::move(im));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  for (int v : image_) out.push_back(v + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) inv[static_cast<size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw StructuralError("permutations of different sizes");
  std::vector<int> im(a.image_.size());
  for (size_t i = 0; i < im.size(); ++i) im[i] = a(b(static_cast<int>(i)));
  return Permutation(std::move(im));
}

void PermGroupSpec::validate() const {
  if (n < 1) throw StructuralError("group acts on an empty index set");
  for (const auto& g : generators)
    if (g.size() != n) throw StructuralError("generator of the wrong size");
}

std::vector<Permutation> PermGroupSpec::elements() const {
  validate();
  std::set<std::vector<int>> seen;
  std::vector<Permutation> out{Permutation::identity(n)};
  seen.insert(out.front().image());
  for (size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators) {
      Permutation p = g * out[k];
      if (seen.insert(p.image()).second) out.push_back(p);
    }
  }
  return out;
}

std::optional<Permutation> PermGroupSpec::find_mapping(int from, int to) const {
  for (const auto& p : elements())
    if (p(from) == to) return p;
  return std::nullopt;
}

}  // namespace h14
