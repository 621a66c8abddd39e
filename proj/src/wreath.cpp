#include "multikostka/wreath.hpp"

#include <algorithm>
#include <string>

#include "multikostka/error.hpp"

namespace multikostka {

namespace {

BigCount factorial(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigCount hook_length_degree(const Partition& shape) {
  const Partition cols = shape.conjugate();
  BigCount hooks = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(shape.length()); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(shape.part(i)); ++j) {
      const int arm = shape.part(i) - static_cast<int>(j) - 1;
      const int leg = cols.part(j) - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(shape.size()) / hooks;
}

BigCount irreducible_degree(const Multipartition& label) {
  BigCount numerator = factorial(label.size());
  BigCount denominator = 1;
  for (const auto& p : label.components()) {
    numerator *= hook_length_degree(p);
    denominator *= factorial(p.size());
  }
  return numerator / denominator;
}

std::vector<Constituent> decompose_permutation_character(const WreathParams& p) {
  if (p.r < 1 || p.d < 1 || p.r % p.d != 0) {
    throw Error(ErrorKind::InvalidDivisor,
                "d = " + std::to_string(p.d) + " is not a positive divisor of r = " + std::to_string(p.r));
  }
  if (p.mu.size() != p.n) {
    throw Error(ErrorKind::SizeMismatch,
                "mu has size " + std::to_string(p.mu.size()) + " but n = " + std::to_string(p.n));
  }

  // Only the components j with d | j may be non-empty.
  std::vector<std::size_t> allowed;
  for (int j = 0; j < p.r; j += p.d) allowed.push_back(static_cast<std::size_t>(j));

  std::vector<Constituent> out;
  for (const auto& packed : multipartitions_of(p.n, static_cast<int>(allowed.size()))) {
    if (!dominates(tilde(packed), p.mu)) continue;
    std::vector<Partition> label(static_cast<std::size_t>(p.r));
    for (std::size_t k = 0; k < allowed.size(); ++k) label[allowed[k]] = packed[k];
    BigCount mult = kostka_multi(packed, p.mu);
    if (mult == 0) continue;
    out.push_back({Multipartition(std::move(label)), std::move(mult)});
  }
  std::sort(out.begin(), out.end(), [](const Constituent& a, const Constituent& b) { return a.label < b.label; });
  return out;
}

}  // namespace multikostka
