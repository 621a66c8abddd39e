#include "multikostka/tableau.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "multikostka/error.hpp"

namespace multikostka {

bool validate(const Tableau& t) {
  const auto& shape = t.shape;
  if (static_cast<int>(t.rows.size()) != shape.length()) {
    throw Error(ErrorKind::ShapeMismatch, "tableau has " + std::to_string(t.rows.size()) +
                                              " rows but its shape has " + std::to_string(shape.length()));
  }
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    if (static_cast<int>(t.rows[k].size()) != shape.part(k)) {
      throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(k + 1) + " has length " +
                                                std::to_string(t.rows[k].size()) + ", shape expects " +
                                                std::to_string(shape.part(k)));
    }
  }
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const auto& row = t.rows[k];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) return false;
      if (c + 1 < row.size() && row[c] > row[c + 1]) return false;
      if (k + 1 < t.rows.size() && c < t.rows[k + 1].size() && row[c] >= t.rows[k + 1][c]) return false;
    }
  }
  return true;
}

bool validate(const MultiTableau& t) {
  return std::all_of(t.components.begin(), t.components.end(),
                     [](const Tableau& c) { return validate(c); });
}

Composition weight(const Tableau& t) {
  int largest = 0;
  for (const auto& row : t.rows) {
    for (int e : row) largest = std::max(largest, e);
  }
  std::vector<int> counts(static_cast<std::size_t>(largest), 0);
  for (const auto& row : t.rows) {
    for (int e : row) {
      if (e >= 1) ++counts[static_cast<std::size_t>(e - 1)];
    }
  }
  return Composition(std::move(counts));
}

Composition weight(const MultiTableau& t) {
  std::vector<int> total;
  for (const auto& component : t.components) {
    const Composition w = weight(component);
    if (total.size() < static_cast<std::size_t>(w.length())) total.resize(static_cast<std::size_t>(w.length()), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(w.length()); ++i) total[i] += w.part(i);
  }
  return Composition(std::move(total));
}

Tableau greedy_tableau(const Partition& shape, const Partition& mu) {
  if (shape.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch, "greedy_tableau needs |shape| == |mu|");
  }
  if (!dominates(shape, mu)) {
    throw Error(ErrorKind::NotDominated, "shape does not dominate the weight");
  }

  Tableau t{shape, {}};
  for (int len : shape.parts()) t.rows.emplace_back(static_cast<std::size_t>(len), 0);

  // Unfilled column heights; stays weakly decreasing after every step.
  const Partition conj = shape.conjugate();
  std::vector<int> heights(conj.parts().begin(), conj.parts().end());
  const std::size_t ncols = heights.size();

  for (int entry = mu.length(); entry >= 1; --entry) {
    int todo = mu.part(static_cast<std::size_t>(entry - 1));
    // Walk groups of equal height, tallest (leftmost) group first, and take
    // columns from the right end of each group.
    std::size_t begin = 0;
    while (todo > 0 && begin < ncols && heights[begin] > 0) {
      std::size_t end = begin;
      while (end < ncols && heights[end] == heights[begin]) ++end;
      for (std::size_t c = end; c-- > begin && todo > 0;) {
        const int row = heights[c] - 1;
        t.rows[static_cast<std::size_t>(row)][c] = entry;
        --heights[c];
        --todo;
      }
      begin = end;
    }
    if (todo > 0) {
      throw Error(ErrorKind::NotDominated, "ran out of columns while placing entry " + std::to_string(entry));
    }
  }
  return t;
}

MultiTableau redistribute_columns(const Tableau& t, const Multipartition& target) {
  if (tilde(target) != t.shape) {
    throw Error(ErrorKind::ShapeMismatch, "tilde of the target multipartition differs from the tableau shape");
  }
  const Partition cols = t.shape.conjugate();

  // need[j][len] = columns of length len component j still expects
  std::vector<std::vector<int>> need;
  std::vector<std::size_t> next_col(static_cast<std::size_t>(target.r()), 0);
  MultiTableau out;
  for (const auto& comp : target.components()) {
    std::vector<int> counts(static_cast<std::size_t>(comp.length()) + 1, 0);
    const Partition comp_cols = comp.conjugate();
    for (int len : comp_cols.parts()) ++counts[static_cast<std::size_t>(len)];
    need.push_back(std::move(counts));
    Tableau piece{comp, {}};
    for (int len : comp.parts()) piece.rows.emplace_back(static_cast<std::size_t>(len), 0);
    out.components.push_back(std::move(piece));
  }

  for (std::size_t c = 0; c < static_cast<std::size_t>(cols.length()); ++c) {
    const auto len = static_cast<std::size_t>(cols.part(c));
    std::size_t j = 0;
    while (j < need.size() && (len >= need[j].size() || need[j][len] == 0)) ++j;
    if (j == need.size()) {
      throw Error(ErrorKind::ShapeMismatch, "no component accepts a column of length " + std::to_string(len));
    }
    --need[j][len];
    const std::size_t dest = next_col[j]++;
    for (std::size_t k = 0; k < len; ++k) out.components[j].rows[k][dest] = t.rows[k][c];
  }
  return out;
}

namespace {

// Builds fillings strip by strip: entry i+1 is added to every component as a
// horizontal strip, the strips summing to w_i. Shared by the enumerators and
// the count-only mode.
class StripSearch {
public:
  StripSearch(std::span<const Partition> shapes, const Composition& w)
      : weight_(w.parts().begin(), w.parts().end()) {
    for (const auto& s : shapes) {
      target_.emplace_back(s.parts().begin(), s.parts().end());
      current_.emplace_back(static_cast<std::size_t>(s.length()), 0);
      rows_.emplace_back(static_cast<std::size_t>(s.length()));
    }
  }

  // visit(rows) is called once per complete filling.
  template <class Visit>
  void run(Visit&& visit) {
    for (const auto& t : target_) {
      if (t.size() > weight_.size()) return;  // a row that no entry may occupy
    }
    place_entry(0, visit);
  }

private:
  using Rows = std::vector<std::vector<std::vector<int>>>;

  template <class Visit>
  void place_entry(std::size_t i, Visit& visit) {
    if (i == weight_.size()) {
      visit(static_cast<const Rows&>(rows_));
      return;
    }
    place_component(i, 0, weight_[i], visit);
  }

  template <class Visit>
  void place_component(std::size_t i, std::size_t j, int budget, Visit& visit) {
    if (j == target_.size()) {
      if (budget == 0 && feasible(i + 1)) place_entry(i + 1, visit);
      return;
    }
    const std::size_t last_row = std::min(target_[j].size(), i + 1);
    if (last_row == 0) {
      place_component(i, j + 1, budget, visit);
      return;
    }
    place_row(i, j, last_row - 1, budget, visit);
  }

  // Rows are handled bottom to top so that current_[j][k-1] still holds the
  // pre-strip value when row k is decided.
  template <class Visit>
  void place_row(std::size_t i, std::size_t j, std::size_t k, int budget, Visit& visit) {
    auto& cur = current_[j];
    const int limit = k == 0 ? target_[j][0] : std::min(target_[j][k], cur[k - 1]);
    const int room = std::max(0, limit - cur[k]);
    const int value = static_cast<int>(i) + 1;
    for (int add = 0; add <= std::min(room, budget); ++add) {
      if (add > 0) {
        rows_[j][k].push_back(value);
        ++cur[k];
      }
      if (k == 0) {
        place_component(i, j + 1, budget - add, visit);
      } else {
        place_row(i, j, k - 1, budget - add, visit);
      }
    }
    const int added = std::min(room, budget);
    cur[k] -= added;
    rows_[j][k].resize(rows_[j][k].size() - static_cast<std::size_t>(added));
  }

  // Entries i+1..m+1 must sit in rows 1..m+1, so those rows need enough
  // free boxes for them.
  bool feasible(std::size_t next) const {
    long long free_boxes = 0;
    long long demand = 0;
    for (std::size_t m = 0; m < weight_.size(); ++m) {
      for (std::size_t j = 0; j < target_.size(); ++j) {
        if (m < target_[j].size()) free_boxes += target_[j][m] - current_[j][m];
      }
      if (m >= next) demand += weight_[m];
      if (m >= next && free_boxes < demand) return false;
    }
    return true;
  }

  std::vector<int> weight_;
  std::vector<std::vector<int>> target_;
  std::vector<std::vector<int>> current_;
  Rows rows_;
};

void check_sizes(int shape_size, const Composition& w) {
  if (shape_size != w.size()) {
    throw Error(ErrorKind::SizeMismatch, "shape has size " + std::to_string(shape_size) +
                                             " but the weight has size " + std::to_string(w.size()));
  }
}

}  // namespace

std::vector<MultiTableau> enumerate_multitableaux(const Multipartition& shape, const Composition& w) {
  check_sizes(shape.size(), w);
  std::vector<std::pair<std::vector<int>, MultiTableau>> found;
  StripSearch search(shape.components(), w);
  search.run([&](const auto& rows) {
    MultiTableau mt;
    std::vector<int> key;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      mt.components.push_back(Tableau{shape[j], rows[j]});
      for (const auto& row : rows[j]) key.insert(key.end(), row.begin(), row.end());
    }
    found.emplace_back(std::move(key), std::move(mt));
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MultiTableau> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<Tableau> enumerate_tableaux(const Partition& shape, const Composition& w) {
  std::vector<Tableau> out;
  for (auto& mt : enumerate_multitableaux(Multipartition{shape}, w)) out.push_back(std::move(mt.components[0]));
  return out;
}

std::uint64_t count_multitableaux(const Multipartition& shape, const Composition& w) {
  check_sizes(shape.size(), w);
  std::uint64_t count = 0;
  StripSearch search(shape.components(), w);
  search.run([&](const auto&) { ++count; });
  return count;
}

std::uint64_t count_tableaux(const Partition& shape, const Composition& w) {
  return count_multitableaux(Multipartition{shape}, w);
}

}  // namespace multikostka
