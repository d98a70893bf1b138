#pragma once

// Run configuration shared by the command-line driver. The plain-text form
// is one "key=value" per line; '#' starts a comment.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "youngdim/analysis.hpp"
#include "youngdim/diagram.hpp"
#include "youngdim/error.hpp"
#include "youngdim/io.hpp"
#include "youngdim/max_search.hpp"

namespace youngdim {

struct RunConfig {
  Mode mode = Mode::strict;
  std::int64_t target = 1000;
  std::uint64_t seed = 1;
  std::string start;  // initial partition text
  std::string out = ".";
  std::string resume;
  std::string input;
  std::string a;  // explicit merge pair
  std::string b;
  int count = 1;
  int pairs = 100;
  std::int64_t budget = 1000;
  int seed_count = 8;
  double restart_factor = 0.9;
  int perturbation_depth = 4;
  std::int64_t polish_up_to = 400;
  int passes = 4;
  std::int64_t window_first = 0;  // 0 = default window
  std::int64_t window_last = 0;
  int max_dp_level = 0;  // 0 = per-mode default cap
  double max_minutes = 0.0;  // 0 = unlimited

  static const std::vector<std::string_view>& keys() {
    static const std::vector<std::string_view> k{
        "mode",   "target",     "seed",           "start",        "out",         "resume",
        "input",  "a",          "b",              "count",        "pairs",       "budget",
        "seed_count", "restart_factor", "perturbation_depth", "polish_up_to", "passes",
        "window", "max_dp_level", "max_minutes"};
    return k;
  }

  void set(std::string_view key, std::string_view value) {
    auto num = [&](std::string_view what) { return parse_int(value, what); };
    if (key == "mode") {
      mode = parse_mode(value);
    } else if (key == "target") {
      target = num("target");
    } else if (key == "seed") {
      seed = static_cast<std::uint64_t>(num("seed"));
    } else if (key == "start") {
      start = value;
    } else if (key == "out") {
      out = value;
    } else if (key == "resume") {
      resume = value;
    } else if (key == "input") {
      input = value;
    } else if (key == "a") {
      a = value;
    } else if (key == "b") {
      b = value;
    } else if (key == "count") {
      count = static_cast<int>(num("count"));
    } else if (key == "pairs") {
      pairs = static_cast<int>(num("pairs"));
    } else if (key == "budget") {
      budget = num("budget");
    } else if (key == "seed_count") {
      seed_count = static_cast<int>(num("seed_count"));
    } else if (key == "restart_factor") {
      restart_factor = static_cast<double>(parse_real(value, "restart_factor"));
    } else if (key == "perturbation_depth") {
      perturbation_depth = static_cast<int>(num("perturbation_depth"));
    } else if (key == "polish_up_to") {
      polish_up_to = num("polish_up_to");
    } else if (key == "passes") {
      passes = static_cast<int>(num("passes"));
    } else if (key == "window") {
      const auto parts = split(value, ':');
      if (parts.size() != 2) fail(ErrorCode::format, "window must be 'first:last'");
      window_first = parse_int(parts[0], "window start");
      window_last = parse_int(parts[1], "window end");
    } else if (key == "max_dp_level") {
      max_dp_level = static_cast<int>(num("max_dp_level"));
    } else if (key == "max_minutes") {
      max_minutes = static_cast<double>(parse_real(value, "max_minutes"));
    } else {
      fail(ErrorCode::format, "unknown config key '" + std::string(key) + "'");
    }
  }

  void validate() const {
    if (target < 1) fail(ErrorCode::argument, "target must be >= 1");
    if (count < 1 || pairs < 1 || budget < 1) fail(ErrorCode::argument, "count, pairs and budget must be >= 1");
    if (seed_count < 0 || perturbation_depth < 0 || passes < 1) {
      fail(ErrorCode::argument, "seed_count and perturbation_depth must be >= 0, passes >= 1");
    }
    if (restart_factor <= 0.0 || restart_factor > 1.0) fail(ErrorCode::argument, "restart_factor must lie in (0, 1]");
    if (max_dp_level < 0 || max_minutes < 0.0) fail(ErrorCode::argument, "caps must be positive");
    if (window_first > window_last) fail(ErrorCode::argument, "empty window");
  }

  Window window_or_default(std::int64_t last_level) const {
    if (window_first == 0 && window_last == 0) return default_fit_window(last_level);
    return {window_first, window_last};
  }

  SearchConfig search_config() const {
    SearchConfig s;
    s.plancherel_seeds = seed_count;
    s.restart_factor = restart_factor;
    s.perturbation_depth = perturbation_depth;
    s.seed = seed;
    s.polish_up_to = polish_up_to;
    s.passes = passes;
    return s;
  }

  ExhaustiveLimits exhaustive_limits() const {
    ExhaustiveLimits l;
    if (max_dp_level > 0) l.standard = l.strict = max_dp_level;
    return l;
  }

  std::string to_text() const {
    std::ostringstream o;
    o << "mode=" << to_string(mode) << '\n'
      << "target=" << target << '\n'
      << "seed=" << seed << '\n'
      << "start=" << start << '\n'
      << "out=" << out << '\n'
      << "resume=" << resume << '\n'
      << "input=" << input << '\n'
      << "a=" << a << '\n'
      << "b=" << b << '\n'
      << "count=" << count << '\n'
      << "pairs=" << pairs << '\n'
      << "budget=" << budget << '\n'
      << "seed_count=" << seed_count << '\n'
      << "restart_factor=" << format_real(restart_factor) << '\n'
      << "perturbation_depth=" << perturbation_depth << '\n'
      << "polish_up_to=" << polish_up_to << '\n'
      << "passes=" << passes << '\n'
      << "window=" << window_first << ':' << window_last << '\n'
      << "max_dp_level=" << max_dp_level << '\n'
      << "max_minutes=" << format_real(max_minutes) << '\n';
    return o.str();
  }
};

inline void apply_config_text(RunConfig& cfg, std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.pop_back();
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    line.erase(0, lead);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::format, "config line without '=': '" + line + "'");
    cfg.set(std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
  }
}

inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  apply_config_text(cfg, in);
  return cfg;
}

}  // namespace youngdim
