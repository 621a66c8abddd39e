#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace multikostka {

/// A weakly decreasing sequence of positive integers. Construction always
/// goes through normalize(), so trailing zeros are stripped and the stored
/// form is canonical: two partitions are equal iff their parts are equal.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> raw);

  /// Strips trailing zeros. Throws Error{Negative} for entries < 0 and
  /// Error{NonMonotone} if the remaining sequence ever increases.
  static Partition normalize(std::span<const int> raw);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Zero-based part lookup that reads missing parts as 0.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts zero-padded (never truncated) to at least `len` entries.
  std::vector<int> padded(std::size_t len) const;

  Partition conjugate() const;
  bool contains(const Partition& inner) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// A finite sequence of non-negative integers; zero parts are allowed anywhere.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> raw);
  explicit Composition(std::vector<int> raw);
  Composition(const Partition& p);  // NOLINT: a partition is a composition

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// Ordered sequence of partitions; empty components are allowed and the
/// order is significant.
class Multipartition {
public:
  Multipartition() = default;
  Multipartition(std::initializer_list<Partition> components);
  explicit Multipartition(std::vector<Partition> components);

  std::span<const Partition> components() const noexcept { return components_; }
  const Partition& operator[](std::size_t j) const { return components_[j]; }
  int r() const noexcept { return static_cast<int>(components_.size()); }
  int size() const noexcept;
  /// max_j length(component j)
  int height() const noexcept;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }

private:
  std::vector<Partition> components_;
};

std::ostream& operator<<(std::ostream& os, const Multipartition& m);

/// Cut points 0 < i_1 < ... < i_t = length(mu), one-based.
struct IndexCertificate {
  std::vector<int> indices;
  friend bool operator==(const IndexCertificate&, const IndexCertificate&) = default;
};

/// Prefix-sum dominance. Throws Error{SizeMismatch} when |a| != |b|.
bool dominates(const Partition& a, const Partition& b);

/// Size of outer - inner when it is a horizontal strip; nullopt when inner is
/// not contained in outer or some column of the skew has two boxes.
std::optional<int> horizontal_strip_size(const Partition& outer, const Partition& inner);

inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  return horizontal_strip_size(outer, inner).has_value();
}

/// Row-wise sum of the components.
Partition tilde(const Multipartition& m);

struct SortedComposition {
  Partition partition;
  /// partition.part(i) == w.part(permutation[i]) for every position i of w
  /// (zero parts land at the end).
  std::vector<std::size_t> permutation;
};

/// Stable decreasing sort: equal parts keep their original relative order.
SortedComposition sort_to_partition(const Composition& w);

// Bounded generation, used by oracles and the wreath decomposition.

/// All partitions of n in lexicographically decreasing order, (n) first.
std::vector<Partition> partitions_of(int n);

/// All r-multipartitions of n, in increasing lexicographic order of labels.
std::vector<Multipartition> multipartitions_of(int n, int r);

/// All weak compositions of n with exactly `length` parts, each part at most
/// bound[i] when a bound is given.
std::vector<std::vector<int>> weak_compositions(int n, int length,
                                                std::span<const int> bound = {});

}  // namespace multikostka
