#include "multikostka/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "multikostka/error.hpp"

namespace multikostka {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Negative: return "Negative";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::InvalidDivisor: return "InvalidDivisor";
    case ErrorKind::UnequalOrbitSizes: return "UnequalOrbitSizes";
    case ErrorKind::EmptyShape: return "EmptyShape";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

template <class Seq>
void print_list(std::ostream& os, const Seq& seq) {
  os << '[';
  bool first = true;
  for (const auto& x : seq) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ']';
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<int> raw)
    : Partition(normalize(std::span<const int>(raw.begin(), raw.size()))) {}

Partition Partition::normalize(std::span<const int> raw) {
  for (int x : raw) {
    if (x < 0) throw Error(ErrorKind::Negative, "partition has a negative entry: " + std::to_string(x));
  }
  std::size_t len = raw.size();
  while (len > 0 && raw[len - 1] == 0) --len;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (raw[i] < raw[i + 1]) {
      throw Error(ErrorKind::NonMonotone, "partition entries increase at position " + std::to_string(i + 1));
    }
  }
  Partition p;
  p.parts_.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(len));
  p.size_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
  return p;
}

std::vector<int> Partition::padded(std::size_t len) const {
  std::vector<int> out(parts_);
  if (out.size() < len) out.resize(len, 0);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int row : parts_) {
    for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return normalize(cols);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.parts_.size(); ++i) {
    if (inner.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  print_list(os, p.parts());
  return os;
}

// -------------------------------------------------------------- Composition

Composition::Composition(std::initializer_list<int> raw) : Composition(std::vector<int>(raw)) {}

Composition::Composition(std::vector<int> raw) : parts_(std::move(raw)) {
  for (int x : parts_) {
    if (x < 0) throw Error(ErrorKind::Negative, "composition has a negative entry: " + std::to_string(x));
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(const Partition& p)
    : parts_(p.parts().begin(), p.parts().end()), size_(p.size()) {}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  print_list(os, c.parts());
  return os;
}

// ----------------------------------------------------------- Multipartition

Multipartition::Multipartition(std::initializer_list<Partition> components)
    : components_(components) {}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {}

int Multipartition::size() const noexcept {
  int n = 0;
  for (const auto& p : components_) n += p.size();
  return n;
}

int Multipartition::height() const noexcept {
  int h = 0;
  for (const auto& p : components_) h = std::max(h, p.length());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Multipartition& m) {
  print_list(os, m.components());
  return os;
}

// --------------------------------------------------------------- operations

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch, "dominance needs equal sizes, got " + std::to_string(a.size()) +
                                             " and " + std::to_string(b.size()));
  }
  const std::size_t len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  long long sa = 0;
  long long sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

std::optional<int> horizontal_strip_size(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return std::nullopt;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(outer.length()); ++i) {
    if (outer.part(i + 1) > inner.part(i)) return std::nullopt;
  }
  return outer.size() - inner.size();
}

Partition tilde(const Multipartition& m) {
  std::vector<int> sums(static_cast<std::size_t>(m.height()), 0);
  for (const auto& p : m.components()) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.length()); ++i) sums[i] += p.part(i);
  }
  return Partition::normalize(sums);
}

SortedComposition sort_to_partition(const Composition& w) {
  std::vector<std::size_t> perm(static_cast<std::size_t>(w.length()));
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return w.part(a) > w.part(b); });
  std::vector<int> sorted;
  sorted.reserve(perm.size());
  for (std::size_t idx : perm) sorted.push_back(w.part(idx));
  return {Partition::normalize(sorted), std::move(perm)};
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  // parts in decreasing order, largest first part first
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition::normalize(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Multipartition> multipartitions_of(int n, int r) {
  std::vector<Multipartition> out;
  if (n < 0 || r < 1) return out;
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = partitions_of(k);

  std::vector<Partition> current;
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == r - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        current.push_back(p);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        current.push_back(p);
        self(self, j + 1, remaining - k);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> weak_compositions(int n, int length, std::span<const int> bound) {
  std::vector<std::vector<int>> out;
  if (n < 0 || length < 0) return out;
  const auto len = static_cast<std::size_t>(length);
  auto cap = [&](std::size_t i) { return i < bound.size() ? bound[i] : n; };

  std::vector<long long> suffix_cap(len + 1, 0);
  for (std::size_t i = len; i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + std::max(0, cap(i));

  std::vector<int> current(len, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == len) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    if (suffix_cap[i] < remaining) return;
    const int hi = std::min(remaining, cap(i));
    for (int v = hi; v >= 0; --v) {
      current[i] = v;
      self(self, i + 1, remaining - v);
    }
    current[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace multikostka
