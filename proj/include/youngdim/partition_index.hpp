#pragma once

// Perfect indexing of the partitions of n (all, or strict only) in
// lexicographic order of their column lists. rank() maps a level-n diagram
// to [0, count(n)); for_each_partition() visits them in rank order.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "youngdim/diagram.hpp"
#include "youngdim/error.hpp"

namespace youngdim {

class PartitionIndex {
 public:
  PartitionIndex(int max_n, Mode m) : max_n_(max_n), mode_(m) {
    if (max_n < 0) fail(ErrorCode::argument, "negative partition index bound");
    const auto w = static_cast<std::size_t>(max_n + 1);
    table_.assign(w * w, 0);
    // table(r, p): partitions of r with parts <= p (strict: distinct parts <= p).
    for (int p = 0; p <= max_n; ++p) at(0, p) = 1;
    for (int r = 1; r <= max_n; ++r) {
      for (int p = 1; p <= max_n; ++p) {
        // Split on whether the largest allowed part p is used.
        std::uint64_t v = at(r, p - 1);
        if (p <= r) v = checked_add(v, m == Mode::standard ? at(r - p, p) : at(r - p, p - 1));
        at(r, p) = v;
      }
    }
  }

  int max_n() const noexcept { return max_n_; }
  Mode mode() const noexcept { return mode_; }

  std::uint64_t count(int n) const { return at(n, n); }

  std::uint64_t rank(const Diagram& d) const {
    std::int64_t remaining = d.size();
    std::uint64_t r = 0;
    for (int part : d.columns()) {
      r += at(static_cast<int>(remaining), part - 1);
      remaining -= part;
    }
    return r;
  }

  /// Visits the level-n partitions in rank order.
  void for_each_partition(int n, const std::function<void(const Diagram&)>& visit) const {
    std::vector<int> parts;
    recurse(n, n, parts, visit);
  }

 private:
  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
      fail(ErrorCode::capacity, "partition count overflows 64 bits");
    }
    return a + b;
  }

  std::uint64_t& at(int r, int p) {
    return table_[static_cast<std::size_t>(r) * static_cast<std::size_t>(max_n_ + 1) +
                  static_cast<std::size_t>(p)];
  }
  std::uint64_t at(int r, int p) const {
    if (p > max_n_) p = max_n_;
    return table_[static_cast<std::size_t>(r) * static_cast<std::size_t>(max_n_ + 1) +
                  static_cast<std::size_t>(p)];
  }

  void recurse(int remaining, int max_part, std::vector<int>& parts,
               const std::function<void(const Diagram&)>& visit) const {
    if (remaining == 0) {
      visit(Diagram(parts));
      return;
    }
    const int top = std::min(remaining, max_part);
    for (int v = 1; v <= top; ++v) {
      // Skip first parts that cannot be completed.
      const int next_max = mode_ == Mode::standard ? v : v - 1;
      if (at(remaining - v, next_max) == 0) continue;
      parts.push_back(v);
      recurse(remaining - v, next_max, parts, visit);
      parts.pop_back();
    }
  }

  int max_n_;
  Mode mode_;
  std::vector<std::uint64_t> table_;
};

}  // namespace youngdim
