#pragma once

#include <vector>

#include "multikostka/counting.hpp"
#include "multikostka/partition.hpp"

namespace multikostka {

/// Induction data for C_r wr S_n from C_d wr S_mu.
struct WreathParams {
  int r = 1;  ///< order of the cyclic group C_r
  int d = 1;  ///< order of the subgroup C_d, must divide r
  int n = 0;
  Partition mu;  ///< |mu| == n
};

/// Irreducible constituent of an induced character; label[j] is the
/// partition attached to the character c -> c^j of C_r (zero-based j).
struct Constituent {
  Multipartition label;
  BigCount multiplicity;
};

/// Number of standard tableaux of the shape (hook length formula).
BigCount hook_length_degree(const Partition& shape);

/// Degree of the irreducible character of C_r wr S_n labelled by `label`:
/// n! * prod_j f(label_j) / |label_j|!.
BigCount irreducible_degree(const Multipartition& label);

/// Decomposes Ind_{C_d wr S_mu}^{C_r wr S_n}(1). Components j with
/// d not dividing j are forced empty; multiplicities are multipartition
/// Kostka numbers. Zero multiplicities are dropped and the list is sorted by
/// label. Throws Error{InvalidDivisor} or Error{SizeMismatch}.
std::vector<Constituent> decompose_permutation_character(const WreathParams& p);

}  // namespace multikostka
