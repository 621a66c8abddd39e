#pragma once

#include <span>
#include <vector>

#include "multikostka/counting.hpp"
#include "multikostka/partition.hpp"

namespace multikostka {

/// One Frobenius orbit in the support, remembered only by its size.
struct ThetaEntry {
  int orbit_size = 1;
  Partition shape;

  friend bool operator==(const ThetaEntry&, const ThetaEntry&) = default;
};

/// Partition-valued function on orbits, restricted to its support. Entries
/// keep input order; orbit sizes must be positive and shapes non-empty.
class ThetaMultipartition {
public:
  ThetaMultipartition() = default;
  /// Throws Error{EmptyShape} or Error{InvalidArgument}.
  explicit ThetaMultipartition(std::vector<ThetaEntry> entries);

  std::span<const ThetaEntry> entries() const noexcept { return entries_; }
  /// sum of orbit_size * |shape|
  int size() const noexcept;
  Multipartition shapes() const;
  /// Every shape is the single box (1).
  bool regular_semisimple() const noexcept;

private:
  std::vector<ThetaEntry> entries_;
};

/// Number of Theta-multitableaux: per-entry weights w(phi) with
/// sum_phi |phi| * w(phi)_i == mu_i, each counted by its Kostka number.
BigCount theta_kostka(const ThetaMultipartition& t, const Partition& mu);

/// theta_kostka(t, mu) > 0. Regular semisimple data with two-part mu goes
/// through subset_sum_reachable; everything else uses theta_positive_search.
bool theta_positive(const ThetaMultipartition& t, const Partition& mu);

/// Depth-first search for one admissible tuple of per-entry weights,
/// pruning entries whose weight is not dominated by their shape.
/// Exponential in the worst case.
bool theta_positive_search(const ThetaMultipartition& t, const Partition& mu);

/// Whether some sub-multiset of `sizes` sums to `target`. O(|sizes| * target).
bool subset_sum_reachable(std::span<const int> sizes, int target);

/// Multiplicity-one test when every orbit has the same size w: false if w
/// fails to divide some part of mu, otherwise the multipartition scan on
/// mu / w. Throws Error{UnequalOrbitSizes} or Error{SizeMismatch}.
bool zelcor_multiplicity_one(const ThetaMultipartition& t, const Partition& mu);

/// mu_i = sum_phi |phi| * shape(phi)_i, the weight whose count is always 1.
Partition canonical_weight(const ThetaMultipartition& t);

}  // namespace multikostka
