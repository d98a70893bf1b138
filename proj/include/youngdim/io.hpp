#pragma once

// Text formats:
//   sequence file  header "mode;initial-partition", then "n;column;row;lnDim;c"
//   CSV            comma separated, '.' decimal point, reals with 18
//                  significant digits; best/max tables use ';' per their schema.

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "youngdim/analysis.hpp"
#include "youngdim/error.hpp"
#include "youngdim/growth.hpp"
#include "youngdim/max_search.hpp"

namespace youngdim {

inline std::string format_real(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.18Lg", x);
  return buf;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::format, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

inline long double parse_real(std::string_view text, std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  const long double v = std::strtold(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    fail(ErrorCode::format, "bad " + std::string(what) + " '" + s + "'");
  }
  return v;
}

inline std::ofstream open_output(const std::string& path, std::ios::openmode mode = std::ios::trunc) {
  std::ofstream out(path, std::ios::out | mode);
  if (!out) fail(ErrorCode::io, "cannot write '" + path + "'");
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot read '" + path + "'");
  return in;
}

// ---------------------------------------------------------------------------
// Sequence files

inline std::string sequence_header(Mode m, const Diagram& initial) {
  return std::string(to_string(m)) + ";" + serialize(initial);
}

inline std::string sequence_line(std::int64_t n, GrowthStep step, long double ln_dim, long double c) {
  return std::to_string(n) + ";" + std::to_string(step.column) + ";" + std::to_string(step.row) + ";" +
         format_real(ln_dim) + ";" + format_real(c);
}

inline void write_sequence(std::ostream& out, const GrowthSequence& seq) {
  out << sequence_header(seq.mode, seq.initial) << '\n';
  const std::size_t offset = seq.initial.empty() ? 0 : 1;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const LevelSample& s = seq.samples[i + offset];
    out << sequence_line(s.n, seq.steps[i], s.ln_dim, s.c) << '\n';
  }
}

/// Reads a sequence file. Steps are checked against the diagrams they
/// extend; samples carry the printed lnDim and c values, plus a computed
/// sample for a non-empty initial diagram.
inline GrowthSequence read_sequence(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::format, "sequence file is empty");
  const auto head = split(line, ';');
  if (head.size() != 2) fail(ErrorCode::format, "sequence header must be 'mode;partition'");
  GrowthSequence seq;
  seq.mode = parse_mode(head[0]);
  seq.initial = parse(head[1], seq.mode);
  if (!seq.initial.empty()) {
    const DimensionState s = initial_state(seq.initial, seq.mode);
    seq.samples.push_back({s.size(), s.ln_dim.value(), s.c});
  }
  Diagram d = seq.initial;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ';');
    if (f.size() != 5) fail(ErrorCode::format, "sequence line needs 5 fields: '" + line + "'");
    const std::int64_t n = parse_int(f[0], "level");
    const GrowthStep step{static_cast<int>(parse_int(f[1], "column")), static_cast<int>(parse_int(f[2], "row"))};
    if (n != d.size() + 1 || !is_valid_step(d, step, seq.mode)) {
      fail(ErrorCode::format, "inconsistent step at level " + std::string(f[0]));
    }
    d.add_box(step.column);
    seq.steps.push_back(step);
    seq.samples.push_back({n, parse_real(f[3], "lnDim"), parse_real(f[4], "c")});
  }
  return seq;
}

inline GrowthSequence read_sequence_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_sequence(in);
}

// ---------------------------------------------------------------------------
// CSV outputs

inline void write_samples_csv(std::ostream& out, const GrowthSequence& seq) {
  out << "n,c\n";
  for (const LevelSample& s : seq.samples) out << s.n << ',' << format_real(s.c) << '\n';
}

inline void write_differences_csv(std::ostream& out, std::span<const DifferenceRecord> series) {
  out << "n,d,s,row\n";
  for (const DifferenceRecord& r : series) {
    out << r.n << ',' << format_real(r.d) << ',' << format_real(r.s) << ',' << r.row << '\n';
  }
}

/// Per-step (n, row, column, row - column, s): the raw data behind the
/// row curves of the strict case and the row/column levels of the standard case.
inline void write_step_positions_csv(std::ostream& out, std::span<const DifferenceRecord> series) {
  out << "n,row,column,row_minus_column,s\n";
  for (const DifferenceRecord& r : series) {
    out << r.n << ',' << r.row << ',' << r.column << ',' << (r.row - r.column) << ',' << format_real(r.s) << '\n';
  }
}

inline void write_level_report_csv(std::ostream& out, const LevelReport& rep) {
  out << "row,count,min_s,max_s\n";
  for (const auto& [row, band] : rep.rows) {
    out << row << ',' << band.count << ',' << format_real(band.min_s) << ',' << format_real(band.max_s) << '\n';
  }
}

inline void write_fit_csv(std::ostream& out, std::span<const FitPoint> points, const FitResult& fit) {
  out << "n,c,model\n";
  for (const FitPoint& p : points) {
    if (!fit.window.contains(p.n)) continue;
    out << p.n << ',' << format_real(p.c) << ',' << format_real(fit.model(p.n)) << '\n';
  }
}

/// Reads "n,c" rows (header optional).
inline std::vector<FitPoint> read_fit_points(std::istream& in) {
  std::vector<FitPoint> pts;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("n,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    const auto f = split(line, ',');
    if (f.size() < 2) fail(ErrorCode::format, "fit input line needs 'n,c': '" + line + "'");
    pts.push_back({parse_int(f[0], "level"), parse_real(f[1], "c")});
  }
  return pts;
}

inline constexpr std::string_view kBestHeader = "n;partition;lnDim;c;provenance";

inline void write_best_csv(std::ostream& out, const BestSequence& seq) {
  out << kBestHeader << '\n';
  for (std::int64_t n = seq.first_level; n <= seq.last_level(); ++n) {
    const BestEntry* e = seq.at(n);
    if (!e || n == 0) continue;
    out << n << ';' << serialize(e->diagram) << ';' << format_real(e->ln_dim) << ';' << format_real(e->c)
        << ';' << e->provenance << '\n';
  }
}

/// One row per co-maximal diagram.
inline void write_level_max_csv(std::ostream& out, const LevelMaxTable& table) {
  out << kBestHeader << '\n';
  for (const LevelMax& lvl : table.levels) {
    if (lvl.n == 0) continue;
    for (const Diagram& d : lvl.argmax) {
      const DimensionState s = initial_state(d, table.mode);
      out << lvl.n << ';' << serialize(d) << ';' << format_real(s.ln_dim.value()) << ';' << format_real(s.c)
          << ";exhaustive\n";
    }
  }
}

inline BestSequence read_best_csv(std::istream& in, Mode m) {
  BestSequence seq;
  seq.mode = m;
  std::string line;
  if (!std::getline(in, line) || line != kBestHeader) fail(ErrorCode::format, "missing best-sequence header");
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ';');
    if (f.size() != 5) fail(ErrorCode::format, "best-sequence line needs 5 fields");
    const std::int64_t n = parse_int(f[0], "level");
    BestEntry e{parse(f[1], m), parse_real(f[2], "lnDim"), parse_real(f[3], "c"), std::string(f[4])};
    if (e.diagram.size() != n) fail(ErrorCode::format, "partition size differs from its level");
    if (first) {
      seq.first_level = n;
      first = false;
    }
    if (n < seq.first_level) fail(ErrorCode::format, "levels must increase");
    const auto idx = static_cast<std::size_t>(n - seq.first_level);
    if (idx < seq.levels.size()) continue;  // further co-maximal rows of the same level
    seq.levels.resize(idx + 1);
    seq.levels[idx] = std::move(e);
  }
  return seq;
}

inline constexpr std::string_view kMergeHeader = "pair;size_a;size_b;merged_at;steps_a;steps_b;budget_exhausted";

inline std::string merge_line(std::size_t pair, const Diagram& a, const Diagram& b, const MergeResult& r) {
  return std::to_string(pair) + ";" + std::to_string(a.size()) + ";" + std::to_string(b.size()) + ";" +
         (r.merged_at_size ? std::to_string(*r.merged_at_size) : std::string("-")) + ";" +
         std::to_string(r.steps_a) + ";" + std::to_string(r.steps_b) + ";" + (r.budget_exhausted ? "1" : "0");
}

}  // namespace youngdim
