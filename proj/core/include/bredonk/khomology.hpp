#pragma once

#include <optional>
#include <vector>

#include "bredonk/group.hpp"
#include "bredonk/zmodule.hpp"

namespace bredonk {

/// Finitely supported graded abelian group; trailing trivial degrees are
/// dropped on construction.
class GradedHomology {
 public:
  GradedHomology() = default;
  explicit GradedHomology(std::vector<FgAbelianGroup> groups);

  const std::vector<FgAbelianGroup>& groups() const noexcept { return groups_; }
  /// Trivial outside the stored range.
  FgAbelianGroup at(std::size_t degree) const;
  std::size_t length() const noexcept { return groups_.size(); }

  friend bool operator==(const GradedHomology&, const GradedHomology&) = default;

 private:
  std::vector<FgAbelianGroup> groups_;
};

enum class KStatus { Determined, Indeterminate };

struct KTheoryResult {
  KStatus status = KStatus::Indeterminate;
  std::optional<FgAbelianGroup> k0;
  std::optional<FgAbelianGroup> k1;
  /// Degrees >= 2 with nonzero homology (empty when Determined).
  std::vector<std::size_t> obstructions;
};

/// K_0 = H_0 and K_1 = H_1 when H_i = 0 for all i >= 2; otherwise
/// Indeterminate, listing the offending degrees.
KTheoryResult ahss_collapse(const GradedHomology& H);

/// Künneth: degree n is sum_{i+j=n} H_i (x) H'_j  +  sum_{i+j=n-1} Tor(H_i, H'_j).
GradedHomology kunneth(const GradedHomology& a, const GradedHomology& b);

/// Bredon homology of a point with a finite group acting: the representation
/// ring in degree 0.
GradedHomology finite_group_homology(const FiniteGroup& G);

}  // namespace bredonk
