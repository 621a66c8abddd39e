#pragma once

#include <cstdint>
#include <vector>

#include "multikostka/partition.hpp"

namespace multikostka {

/// Row-wise filling of a Young diagram. Nothing is checked on construction;
/// validate() is the single place the semistandard conditions live.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct MultiTableau {
  std::vector<Tableau> components;

  friend bool operator==(const MultiTableau&, const MultiTableau&) = default;
};

/// Rows weakly increase, columns strictly increase, entries positive.
/// Throws Error{ShapeMismatch} when row lengths disagree with the shape.
bool validate(const Tableau& t);
bool validate(const MultiTableau& t);

/// Entry counts 1..max entry.
Composition weight(const Tableau& t);
/// Coordinate-wise sum of the component weights.
Composition weight(const MultiTableau& t);

/// Bottom-up greedy construction: for entry l = length(mu) down to 1, place
/// mu_l copies of l at the bottom of the longest unfilled columns, taking the
/// rightmost column first among equal lengths.
/// Throws Error{SizeMismatch} or Error{NotDominated}.
Tableau greedy_tableau(const Partition& shape, const Partition& mu);

/// Splits the columns of `t` among the components of `target`. Columns are
/// taken left to right and each goes to the lowest-indexed component that
/// still needs a column of that length. Throws Error{ShapeMismatch} when
/// tilde(target) differs from t.shape.
MultiTableau redistribute_columns(const Tableau& t, const Multipartition& target);

/// Every semistandard tableau of the given shape and weight, ordered
/// lexicographically by row-major entry sequence. Throws Error{SizeMismatch}.
std::vector<Tableau> enumerate_tableaux(const Partition& shape, const Composition& w);

/// Every multitableau of the given shape and total weight, ordered
/// lexicographically by the concatenated component entry sequences.
std::vector<MultiTableau> enumerate_multitableaux(const Multipartition& shape, const Composition& w);

/// Count-only forms of the two enumerators (same search, nothing stored).
std::uint64_t count_tableaux(const Partition& shape, const Composition& w);
std::uint64_t count_multitableaux(const Multipartition& shape, const Composition& w);

}  // namespace multikostka
