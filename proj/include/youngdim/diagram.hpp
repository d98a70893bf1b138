#pragma once

// Young diagrams stored as column heights l1 >= l2 >= ... >= lk >= 1.
// Boxes are addressed as (column, row), both 1-based; the row of a box is
// its height inside its column.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "youngdim/error.hpp"

namespace youngdim {

enum class Mode {
  standard,  // Young graph
  strict,    // Schur graph
};

inline std::string_view to_string(Mode m) {
  return m == Mode::standard ? "standard" : "strict";
}

inline Mode parse_mode(std::string_view text) {
  if (text == "standard") return Mode::standard;
  if (text == "strict") return Mode::strict;
  fail(ErrorCode::format, "unknown mode '" + std::string(text) + "'");
}

/// One box addition. `column` is 1-based; column == width + 1 opens a new
/// column. `row` is the height of that column after the addition.
struct GrowthStep {
  int column = 0;
  int row = 0;

  friend bool operator==(const GrowthStep&, const GrowthStep&) = default;
};

class Diagram {
 public:
  Diagram() = default;

  /// Takes the column list as given; use validate() to check it.
  explicit Diagram(std::vector<int> columns)
      : columns_(std::move(columns)),
        size_(std::accumulate(columns_.begin(), columns_.end(), std::int64_t{0})) {}

  Diagram(std::initializer_list<int> columns)
      : Diagram(std::vector<int>(columns)) {}

  std::span<const int> columns() const noexcept { return columns_; }
  std::int64_t size() const noexcept { return size_; }
  int width() const noexcept { return static_cast<int>(columns_.size()); }
  bool empty() const noexcept { return columns_.empty(); }

  /// Height of 1-based column i; zero past the last column.
  int height(int i) const noexcept {
    return i >= 1 && i <= width() ? columns_[i - 1] : 0;
  }

  /// Adds a box on top of column `column` (1-based, may be width + 1).
  /// No validity check: callers go through apply() or a checked step.
  void add_box(int column) {
    if (column == width() + 1) {
      columns_.push_back(1);
    } else {
      ++columns_[column - 1];
    }
    ++size_;
  }

  void remove_box(int column) {
    if (--columns_[column - 1] == 0) columns_.pop_back();
    --size_;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.columns_ == b.columns_;
  }
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
    return a.columns_ <=> b.columns_;
  }

 private:
  std::vector<int> columns_;
  std::int64_t size_ = 0;
};

inline bool validate(const Diagram& d, Mode m) {
  auto cols = d.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 1) return false;
    if (i == 0) continue;
    if (m == Mode::standard ? cols[i] > cols[i - 1] : cols[i] >= cols[i - 1]) return false;
  }
  return true;
}

/// Whether a box may be added to `column` of a valid diagram in mode m.
inline bool can_add(const Diagram& d, int column, Mode m) {
  const int k = d.width();
  if (column < 1 || column > k + 1) return false;
  const int h = d.height(column);
  if (column == 1) return true;
  const int left = d.height(column - 1);
  if (m == Mode::standard) return left > h;
  // strict: the grown column must stay strictly below its left neighbour;
  // a new column of height 1 needs the last column to be at least 2 high.
  return left > h + 1;
}

/// Whether the top box of `column` may be removed keeping validity in mode m.
inline bool can_remove(const Diagram& d, int column, Mode m) {
  const int k = d.width();
  if (column < 1 || column > k) return false;
  const int h = d.height(column);
  const int right = d.height(column + 1);
  if (m == Mode::standard) return h > right;
  return h - 1 > right || (h == 1 && column == k);
}

inline bool is_valid_step(const Diagram& d, GrowthStep step, Mode m) {
  return can_add(d, step.column, m) && step.row == d.height(step.column) + 1;
}

inline Diagram apply(Diagram d, GrowthStep step, Mode m) {
  if (!is_valid_step(d, step, m)) {
    fail(ErrorCode::contract, "invalid growth step at column " + std::to_string(step.column));
  }
  d.add_box(step.column);
  return d;
}

/// Valid one-box extensions in ascending column order (new column last).
inline std::vector<GrowthStep> addable_steps(const Diagram& d, Mode m) {
  std::vector<GrowthStep> steps;
  for (int c = 1; c <= d.width() + 1; ++c) {
    if (can_add(d, c, m)) steps.push_back({c, d.height(c) + 1});
  }
  return steps;
}

inline std::vector<std::pair<Diagram, GrowthStep>> successors(const Diagram& d, Mode m) {
  std::vector<std::pair<Diagram, GrowthStep>> out;
  for (GrowthStep s : addable_steps(d, m)) {
    Diagram next = d;
    next.add_box(s.column);
    out.emplace_back(std::move(next), s);
  }
  return out;
}

inline std::vector<Diagram> predecessors(const Diagram& d, Mode m) {
  std::vector<Diagram> out;
  for (int c = 1; c <= d.width(); ++c) {
    if (!can_remove(d, c, m)) continue;
    Diagram prev = d;
    prev.remove_box(c);
    out.push_back(std::move(prev));
  }
  return out;
}

inline Diagram staircase(int k) {
  if (k < 1) fail(ErrorCode::contract, "staircase needs k >= 1");
  std::vector<int> cols(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = k - i;
  return Diagram(std::move(cols));
}

inline Diagram single_column(int n) {
  if (n < 0) fail(ErrorCode::contract, "negative column height");
  return n == 0 ? Diagram{} : Diagram{n};
}

/// Row lengths (the conjugate partition).
inline std::vector<int> row_lengths(const Diagram& d) {
  std::vector<int> rows(d.empty() ? 0 : static_cast<std::size_t>(d.height(1)), 0);
  for (int h : d.columns()) {
    for (int r = 0; r < h; ++r) ++rows[static_cast<std::size_t>(r)];
  }
  return rows;
}

inline Diagram conjugate(const Diagram& d) { return Diagram(row_lengths(d)); }

inline std::string serialize(const Diagram& d) {
  std::string out;
  for (int i = 0; i < d.width(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(d.columns()[static_cast<std::size_t>(i)]);
  }
  return out;
}

/// Parses "l1,l2,...,lk"; the empty string is the empty diagram.
inline Diagram parse(std::string_view text, Mode m = Mode::standard) {
  std::vector<int> cols;
  if (text.empty()) return Diagram{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      fail(ErrorCode::format, "non-numeric part '" + std::string(token) + "'");
    }
    if (value < 1) fail(ErrorCode::format, "non-positive part " + std::string(token));
    cols.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  Diagram d(std::move(cols));
  if (!validate(d, m)) {
    fail(ErrorCode::format, "parts of '" + std::string(text) + "' violate the " +
                                std::string(to_string(m)) + " ordering");
  }
  return d;
}

}  // namespace youngdim
