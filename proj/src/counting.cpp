#include "multikostka/counting.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "multikostka/error.hpp"

namespace multikostka {

namespace {

void check_sizes(int shape_size, int weight_size) {
  if (shape_size != weight_size) {
    throw Error(ErrorKind::SizeMismatch, "shape has size " + std::to_string(shape_size) +
                                             " but the weight has size " + std::to_string(weight_size));
  }
}

// K(shape, w_1..w_k): remove the horizontal strip holding the entries k and
// recurse on what is left.
class StripPeeler {
public:
  explicit StripPeeler(std::span<const int> w) : weight_(w.begin(), w.end()) {}

  BigCount count(const std::vector<int>& shape, std::size_t k) {
    if (k == 0) return shape.empty() ? 1 : 0;
    if (shape.size() > k) return 0;
    auto key = std::make_pair(k, shape);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // slack[i] = most boxes row i can lose while keeping a horizontal strip
    std::vector<int> slack(shape.size());
    std::vector<int> suffix(shape.size() + 1, 0);
    for (std::size_t i = shape.size(); i-- > 0;) {
      const int below = i + 1 < shape.size() ? shape[i + 1] : 0;
      slack[i] = shape[i] - below;
      suffix[i] = suffix[i + 1] + slack[i];
    }

    BigCount total = 0;
    std::vector<int> inner(shape);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
      if (remaining > suffix[i]) return;
      if (i == shape.size()) {
        std::vector<int> trimmed(inner);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += count(trimmed, k - 1);
        return;
      }
      const int hi = std::min(slack[i], remaining);
      for (int d = 0; d <= hi; ++d) {
        inner[i] = shape[i] - d;
        self(self, i + 1, remaining - d);
      }
      inner[i] = shape[i];
    };
    rec(rec, 0, weight_[k - 1]);

    memo_.emplace(std::move(key), total);
    return total;
  }

private:
  std::vector<int> weight_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigCount> memo_;
};

// Per-component shape class inside one block of the multiplicity-one scan.
class BlockShape {
public:
  void reset() { length_ = 0; }

  void push(int v) {
    if (length_ == 0) {
      first_ = v;
      all_equal_ = true;
      before_last_equal_ = true;
      tail_equal_ = true;
    } else {
      before_last_equal_ = all_equal_;
      all_equal_ = all_equal_ && v == first_;
      if (length_ == 1) {
        second_ = v;
        tail_equal_ = true;
      } else {
        tail_equal_ = tail_equal_ && v == second_;
      }
    }
    last_ = v;
    ++length_;
  }

  bool rectangular() const { return all_equal_; }

  // (a, ..., a, b) with b < a, or (a, b, ..., b) with a > b
  bool near_rectangular() const {
    if (length_ < 2) return false;
    const bool drop_at_end = before_last_equal_ && last_ < first_;
    const bool drop_at_start = first_ > second_ && tail_equal_;
    return drop_at_end || drop_at_start;
  }

private:
  int length_ = 0;
  int first_ = 0;
  int second_ = 0;
  int last_ = 0;
  bool all_equal_ = true;
  bool before_last_equal_ = true;
  bool tail_equal_ = true;
};

std::optional<IndexCertificate> scan_blocks(std::span<const Partition> components, const Partition& mu) {
  const auto l = static_cast<std::size_t>(mu.length());
  for (const auto& c : components) {
    if (static_cast<std::size_t>(c.length()) > l) return std::nullopt;
  }

  std::vector<BlockShape> blocks(components.size());
  IndexCertificate cert;
  long long shape_sum = 0;
  long long weight_sum = 0;
  for (std::size_t i = 0; i < l; ++i) {
    int non_rectangular = 0;
    int row_total = 0;
    for (std::size_t j = 0; j < components.size(); ++j) {
      const int v = components[j].part(i);
      row_total += v;
      blocks[j].push(v);
      if (blocks[j].rectangular()) continue;
      if (!blocks[j].near_rectangular()) return std::nullopt;
      ++non_rectangular;
    }
    if (non_rectangular > 1) return std::nullopt;

    shape_sum += row_total;
    weight_sum += mu.part(i);
    if (shape_sum < weight_sum) return std::nullopt;
    if (shape_sum == weight_sum) {
      cert.indices.push_back(static_cast<int>(i) + 1);
      shape_sum = weight_sum = 0;
      for (auto& b : blocks) b.reset();
    }
  }
  if (l > 0 && (cert.indices.empty() || cert.indices.back() != static_cast<int>(l))) return std::nullopt;
  return cert;
}

}  // namespace

BigCount kostka(const Partition& shape, const Composition& w) {
  check_sizes(shape.size(), w.size());
  StripPeeler peeler(w.parts());
  return peeler.count(std::vector<int>(shape.parts().begin(), shape.parts().end()),
                      static_cast<std::size_t>(w.length()));
}

namespace detail {

BigCount scaled_split_count(std::span<const Partition> shapes, std::span<const int> scales,
                            std::span<const int> target) {
  const std::size_t len = target.size();
  std::map<std::pair<std::size_t, std::vector<int>>, BigCount> split_memo;
  std::map<std::pair<std::size_t, std::vector<int>>, BigCount> kostka_memo;

  auto component_count = [&](std::size_t j, const std::vector<int>& w) -> BigCount {
    auto key = std::make_pair(j, w);
    if (auto it = kostka_memo.find(key); it != kostka_memo.end()) return it->second;
    const Composition comp(w);
    BigCount k = 0;
    if (dominates(shapes[j], sort_to_partition(comp).partition)) k = kostka(shapes[j], comp);
    kostka_memo.emplace(std::move(key), k);
    return k;
  };

  auto rec = [&](auto&& self, std::size_t j, const std::vector<int>& remaining) -> BigCount {
    if (j == shapes.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    auto key = std::make_pair(j, remaining);
    if (auto it = split_memo.find(key); it != split_memo.end()) return it->second;

    const int scale = scales[j];
    std::vector<int> bound(len);
    for (std::size_t i = 0; i < len; ++i) bound[i] = remaining[i] / scale;

    BigCount total = 0;
    std::vector<int> next(len);
    const bool last = j + 1 == shapes.size();
    for (const auto& w : weak_compositions(shapes[j].size(), static_cast<int>(len), bound)) {
      for (std::size_t i = 0; i < len; ++i) next[i] = remaining[i] - scale * w[i];
      if (last && std::any_of(next.begin(), next.end(), [](int x) { return x != 0; })) continue;
      const BigCount here = component_count(j, w);
      if (here == 0) continue;
      total += here * self(self, j + 1, next);
    }
    split_memo.emplace(std::move(key), total);
    return total;
  };

  return rec(rec, 0, std::vector<int>(target.begin(), target.end()));
}

}  // namespace detail

BigCount kostka_multi(const Multipartition& shape, const Composition& w) {
  check_sizes(shape.size(), w.size());
  std::vector<int> ones(static_cast<std::size_t>(shape.r()), 1);
  return detail::scaled_split_count(shape.components(), ones, w.parts());
}

bool is_positive(const Multipartition& shape, const Composition& w) {
  check_sizes(shape.size(), w.size());
  return dominates(tilde(shape), sort_to_partition(w).partition);
}

std::optional<IndexCertificate> is_multiplicity_one(const Partition& shape, const Composition& w) {
  check_sizes(shape.size(), w.size());
  const Partition mu = sort_to_partition(w).partition;
  return scan_blocks(std::span<const Partition>(&shape, 1), mu);
}

std::optional<IndexCertificate> is_multiplicity_one_multi(const Multipartition& shape,
                                                          const Composition& w) {
  check_sizes(shape.size(), w.size());
  const Partition mu = sort_to_partition(w).partition;
  return scan_blocks(shape.components(), mu);
}

bool unique_weight(const Partition& shape) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(shape.length()); ++i) {
    if (shape.part(i) - shape.part(i + 1) > 1) return false;
  }
  return true;
}

bool unique_weight_multi(const Multipartition& shape) {
  const Partition t = tilde(shape);
  for (std::size_t i = 0; i < static_cast<std::size_t>(t.length()); ++i) {
    if (t.part(i) - t.part(i + 1) <= 1) continue;
    const auto dropping = std::count_if(shape.components().begin(), shape.components().end(),
                                        [i](const Partition& p) { return p.part(i) > p.part(i + 1); });
    if (dropping < 2) return false;
  }
  return true;
}

}  // namespace multikostka
