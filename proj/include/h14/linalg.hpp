#pragma once

#include <map>
#include <optional>
#include <vector>

#include "h14/rat.hpp"

namespace h14 {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

/// Incremental row echelon form over Q; each stored row is keyed by its
/// lowest nonzero index (its pivot) and has zeros at all other pivots.
class Echelon {
 public:
  explicit Echelon(size_t width) : width_(width) {}

  /// Reduces v against the stored rows; returns the residue.
  RatVector reduce(RatVector v) const;
  /// Inserts v; returns the new pivot, or nullopt if v was dependent.
  std::optional<size_t> insert(RatVector v);
  bool contains(const RatVector& v) const;

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }
  std::vector<size_t> pivots() const;

 private:
  size_t width_;
  std::map<size_t, RatVector> rows_;
};

size_t rank(const RatMatrix& m);

}  // namespace h14
