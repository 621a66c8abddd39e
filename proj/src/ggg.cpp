#include "multikostka/ggg.hpp"

#include <algorithm>
#include <string>

#include "multikostka/error.hpp"

namespace multikostka {

namespace {

void check_sizes(const ThetaMultipartition& t, const Partition& mu) {
  if (t.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch, "Theta-multipartition has size " + std::to_string(t.size()) +
                                             " but mu has size " + std::to_string(mu.size()));
  }
}

}  // namespace

ThetaMultipartition::ThetaMultipartition(std::vector<ThetaEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].orbit_size < 1) {
      throw Error(ErrorKind::InvalidArgument, "orbit size of entry " + std::to_string(i) + " must be positive");
    }
    if (entries_[i].shape.empty()) {
      throw Error(ErrorKind::EmptyShape, "entry " + std::to_string(i) + " has an empty partition");
    }
  }
}

int ThetaMultipartition::size() const noexcept {
  int n = 0;
  for (const auto& e : entries_) n += e.orbit_size * e.shape.size();
  return n;
}

Multipartition ThetaMultipartition::shapes() const {
  std::vector<Partition> parts;
  parts.reserve(entries_.size());
  for (const auto& e : entries_) parts.push_back(e.shape);
  return Multipartition(std::move(parts));
}

bool ThetaMultipartition::regular_semisimple() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const ThetaEntry& e) { return e.shape == Partition{1}; });
}

BigCount theta_kostka(const ThetaMultipartition& t, const Partition& mu) {
  check_sizes(t, mu);
  std::vector<Partition> shapes;
  std::vector<int> scales;
  for (const auto& e : t.entries()) {
    shapes.push_back(e.shape);
    scales.push_back(e.orbit_size);
  }
  return detail::scaled_split_count(shapes, scales, mu.parts());
}

bool subset_sum_reachable(std::span<const int> sizes, int target) {
  if (target < 0) return false;
  std::vector<char> reachable(static_cast<std::size_t>(target) + 1, 0);
  reachable[0] = 1;
  for (int s : sizes) {
    if (s <= 0 || s > target) continue;
    for (int v = target; v >= s; --v) {
      if (reachable[static_cast<std::size_t>(v - s)]) reachable[static_cast<std::size_t>(v)] = 1;
    }
  }
  return reachable[static_cast<std::size_t>(target)] != 0;
}

bool theta_positive_search(const ThetaMultipartition& t, const Partition& mu) {
  check_sizes(t, mu);
  const auto entries = t.entries();
  const auto len = static_cast<std::size_t>(mu.length());

  auto rec = [&](auto&& self, std::size_t j, std::vector<int>& remaining) -> bool {
    if (j == entries.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; });
    }
    const int scale = entries[j].orbit_size;
    std::vector<int> bound(len);
    for (std::size_t i = 0; i < len; ++i) bound[i] = remaining[i] / scale;
    for (const auto& w : weak_compositions(entries[j].shape.size(), static_cast<int>(len), bound)) {
      if (!dominates(entries[j].shape, sort_to_partition(Composition(w)).partition)) continue;
      for (std::size_t i = 0; i < len; ++i) remaining[i] -= scale * w[i];
      const bool found = self(self, j + 1, remaining);
      for (std::size_t i = 0; i < len; ++i) remaining[i] += scale * w[i];
      if (found) return true;
    }
    return false;
  };

  std::vector<int> remaining(mu.parts().begin(), mu.parts().end());
  return rec(rec, 0, remaining);
}

bool theta_positive(const ThetaMultipartition& t, const Partition& mu) {
  check_sizes(t, mu);
  if (t.regular_semisimple() && mu.length() == 2) {
    std::vector<int> sizes;
    for (const auto& e : t.entries()) sizes.push_back(e.orbit_size);
    return subset_sum_reachable(sizes, mu.part(0));
  }
  return theta_positive_search(t, mu);
}

bool zelcor_multiplicity_one(const ThetaMultipartition& t, const Partition& mu) {
  check_sizes(t, mu);
  const auto entries = t.entries();
  if (entries.empty()) return true;  // the empty filling of the empty shape
  const int w = entries.front().orbit_size;
  for (const auto& e : entries) {
    if (e.orbit_size != w) {
      throw Error(ErrorKind::UnequalOrbitSizes, "orbit sizes " + std::to_string(w) + " and " +
                                                    std::to_string(e.orbit_size) + " differ");
    }
  }
  std::vector<int> scaled;
  for (int part : mu.parts()) {
    if (part % w != 0) return false;
    scaled.push_back(part / w);
  }
  return is_multiplicity_one_multi(t.shapes(), Partition::normalize(scaled)).has_value();
}

Partition canonical_weight(const ThetaMultipartition& t) {
  std::vector<int> parts;
  for (const auto& e : t.entries()) {
    if (parts.size() < static_cast<std::size_t>(e.shape.length())) parts.resize(static_cast<std::size_t>(e.shape.length()), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(e.shape.length()); ++i) parts[i] += e.orbit_size * e.shape.part(i);
  }
  return Partition::normalize(parts);
}

}  // namespace multikostka
