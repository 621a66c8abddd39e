#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "multikostka/partition.hpp"

namespace multikostka {

using BigCount = boost::multiprecision::cpp_int;

/// Number of semistandard tableaux of the given shape and weight.
/// Strips are peeled off from the largest entry down, memoized on
/// (remaining shape, number of entries left). Throws Error{SizeMismatch}.
BigCount kostka(const Partition& shape, const Composition& w);

/// Sum over splits w = sum_j w(j) with |w(j)| = |shape_j| of
/// prod_j kostka(shape_j, w(j)).
BigCount kostka_multi(const Multipartition& shape, const Composition& w);

/// tilde(shape) dominates the sorted weight.
bool is_positive(const Multipartition& shape, const Composition& w);

/// Greedy left-to-right block scan. Returns the cut points when the count is
/// exactly one and nullopt otherwise. Compositions are sorted first.
std::optional<IndexCertificate> is_multiplicity_one(const Partition& shape, const Composition& w);

/// Multipartition version of the block scan: on every block tilde must
/// dominate the weight, and at most one component may be non-rectangular.
std::optional<IndexCertificate> is_multiplicity_one_multi(const Multipartition& shape,
                                                          const Composition& w);

/// lambda_i - lambda_{i+1} <= 1 for every i.
bool unique_weight(const Partition& shape);

/// For each row i, either tilde drops by at most one or at least two
/// components drop at row i.
bool unique_weight_multi(const Multipartition& shape);

namespace detail {

/// sum over tuples (w(1), ..., w(r)) with |w(j)| = |shape_j| and
/// sum_j scale_j * w(j)_i = target_i of prod_j kostka(shape_j, w(j)).
BigCount scaled_split_count(std::span<const Partition> shapes, std::span<const int> scales,
                            std::span<const int> target);

}  // namespace detail

}  // namespace multikostka
