#pragma once

#include <optional>
#include <vector>

namespace h14 {

/// Permutation of {0..n-1}; image[i] = sigma(i). JSON uses 1-based one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  /// From 1-based one-line notation.
  static Permutation from_one_based(const std::vector<int>& one_line);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(static_cast<size_t>(i)); }
  const std::vector<int>& image() const { return image_; }
  std::vector<int> one_based() const;
  bool is_identity() const;
  Permutation inverse() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// A permutation group given by generators.
struct PermGroupSpec {
  int n = 0;
  std::vector<Permutation> generators;

  void validate() const;
  /// All group elements by closure (small groups only).
  std::vector<Permutation> elements() const;
  /// An element sending index `from` to index `to`, if any.
  std::optional<Permutation> find_mapping(int from, int to) const;
};

}  // namespace h14
