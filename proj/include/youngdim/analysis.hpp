#pragma once

// Finite differences of normalized dimensions, their sqrt(n) scaling,
// attribution of the scaled differences to the row of the added box, and
// the least-squares fit c(n) ~ C + a / sqrt(n).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "youngdim/error.hpp"
#include "youngdim/growth.hpp"

namespace youngdim {

struct DifferenceRecord {
  std::int64_t n = 0;
  long double d = 0.0L;  // c(n) - c(n-1)
  long double s = 0.0L;  // d * sqrt(n)
  int row = 0;           // row of the box added to reach level n
  int column = 0;
};

using DifferenceSeries = std::vector<DifferenceRecord>;

struct Window {
  std::int64_t first = 0;
  std::int64_t last = std::numeric_limits<std::int64_t>::max();

  bool contains(std::int64_t n) const noexcept { return n >= first && n <= last; }
};

/// One record per step whose previous level has a normalized dimension.
inline DifferenceSeries differences(const GrowthSequence& seq) {
  if (seq.samples.size() < 2) fail(ErrorCode::argument, "differences need at least two samples");
  const std::size_t offset = seq.initial.empty() ? 0 : 1;
  DifferenceSeries out;
  out.reserve(seq.samples.size() - 1);
  for (std::size_t i = 1; i < seq.samples.size(); ++i) {
    const LevelSample& prev = seq.samples[i - 1];
    const LevelSample& cur = seq.samples[i];
    if (cur.n != prev.n + 1) fail(ErrorCode::argument, "samples are not consecutive levels");
    const GrowthStep step = seq.steps.at(i - offset);
    DifferenceRecord r;
    r.n = cur.n;
    r.d = cur.c - prev.c;
    r.s = r.d * std::sqrt(static_cast<long double>(cur.n));
    r.row = step.row;
    r.column = step.column;
    out.push_back(r);
  }
  return out;
}

struct RowBand {
  std::int64_t count = 0;
  long double min_s = std::numeric_limits<long double>::infinity();
  long double max_s = -std::numeric_limits<long double>::infinity();
};

struct LevelReport {
  Window window;
  std::map<int, RowBand> rows;
  long double min_s = std::numeric_limits<long double>::infinity();
  long double max_s = -std::numeric_limits<long double>::infinity();
  int argmin_row = 0;
  std::int64_t argmin_n = 0;

  /// Rows ordered by the lowest scaled difference they attain (lowest first),
  /// i.e. the order in which the negative levels appear from the bottom.
  std::vector<int> rows_by_lowest_value() const {
    std::vector<int> order;
    for (const auto& [row, band] : rows) order.push_back(row);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rows.at(a).min_s < rows.at(b).min_s; });
    return order;
  }
};

inline LevelReport level_report(std::span<const DifferenceRecord> series, Window window) {
  LevelReport rep;
  rep.window = window;
  for (const DifferenceRecord& r : series) {
    if (!window.contains(r.n)) continue;
    RowBand& band = rep.rows[r.row];
    ++band.count;
    band.min_s = std::min(band.min_s, r.s);
    band.max_s = std::max(band.max_s, r.s);
    if (r.s < rep.min_s) {
      rep.min_s = r.s;
      rep.argmin_row = r.row;
      rep.argmin_n = r.n;
    }
    rep.max_s = std::max(rep.max_s, r.s);
  }
  if (rep.rows.empty()) fail(ErrorCode::argument, "level report window contains no steps");
  return rep;
}

struct FitPoint {
  std::int64_t n = 0;
  long double c = 0.0L;
};

struct FitResult {
  long double limit = 0.0L;        // C
  long double coefficient = 0.0L;  // a in C + a / sqrt(n)
  long double rms = 0.0L;
  Window window;
  std::size_t points = 0;

  long double model(std::int64_t n) const {
    return limit + coefficient / std::sqrt(static_cast<long double>(n));
  }
};

inline std::vector<FitPoint> fit_points(const GrowthSequence& seq) {
  std::vector<FitPoint> pts;
  pts.reserve(seq.samples.size());
  for (const LevelSample& s : seq.samples) pts.push_back({s.n, s.c});
  return pts;
}

/// Ordinary least squares of c(n) on {1, 1/sqrt(n)} over the window,
/// using centred normal equations.
inline FitResult fit_limit(std::span<const FitPoint> points, Window window) {
  std::vector<long double> xs;
  std::vector<long double> ys;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const FitPoint& p : points) {
    if (!window.contains(p.n)) continue;
    if (p.n < 1) fail(ErrorCode::argument, "fit needs n >= 1");
    xs.push_back(1.0L / std::sqrt(static_cast<long double>(p.n)));
    ys.push_back(p.c);
    lo = std::min(lo, p.n);
    hi = std::max(hi, p.n);
  }
  if (xs.size() < 2 || lo == hi) fail(ErrorCode::argument, "fit window needs at least two distinct n");

  const auto count = static_cast<long double>(xs.size());
  ExtendedSum sx;
  ExtendedSum sy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx.add(xs[i]);
    sy.add(ys[i]);
  }
  const long double mx = sx.value() / count;
  const long double my = sy.value() / count;
  ExtendedSum sxx;
  ExtendedSum sxy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long double dx = xs[i] - mx;
    sxx.add(dx * dx);
    sxy.add(dx * (ys[i] - my));
  }
  FitResult f;
  f.coefficient = sxy.value() / sxx.value();
  f.limit = my - f.coefficient * mx;
  ExtendedSum sr;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long double r = ys[i] - (f.limit + f.coefficient * xs[i]);
    sr.add(r * r);
  }
  f.rms = std::sqrt(sr.value() / count);
  f.window = {lo, hi};
  f.points = xs.size();
  return f;
}

/// Default fit window [N/5, N] for a run ending at level N.
inline Window default_fit_window(std::int64_t last_level) { return {last_level / 5, last_level}; }

}  // namespace youngdim
