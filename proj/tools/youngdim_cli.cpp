// youngdim: experiments on dimensions of standard and strict Young diagrams.
//
// Subcommands: greedy, plancherel, merge, search, exhaustive, analyze, fit.
// Every option can also come from a key=value file given with --config;
// flags on the command line override the file. Failures print
// "ERROR:<code>:<message>" on stderr and exit with status 2.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "youngdim/youngdim.hpp"

namespace fs = std::filesystem;
using namespace youngdim;

namespace {

constexpr std::int64_t kCheckpointEvery = 10000;

struct Flag {
  const char* key;
  const char* name;
  const char* help;
};

const std::vector<Flag>& flags() {
  static const std::vector<Flag> f{
      {"mode", "--mode", "standard | strict"},
      {"target", "--target", "target size (boxes)"},
      {"seed", "--seed", "64-bit run seed"},
      {"start", "--start", "initial partition, e.g. 5,4,2,1 (empty = root)"},
      {"out", "--out", "output directory"},
      {"resume", "--resume", "sequence file to extend"},
      {"input", "--input", "input file (sequence file or n,c CSV)"},
      {"a", "--a", "first partition of an explicit merge pair"},
      {"b", "--b", "second partition of an explicit merge pair"},
      {"count", "--count", "number of samples"},
      {"pairs", "--pairs", "number of random pairs"},
      {"budget", "--budget", "boxes each greedy sequence may add"},
      {"seed_count", "--seed-count", "random starts per restart"},
      {"restart_factor", "--restart-factor", "restart level factor in (0,1]"},
      {"perturbation_depth", "--perturb", "random box moves per random start"},
      {"polish_up_to", "--polish-up-to", "largest level refined by local moves"},
      {"passes", "--passes", "maximum search passes"},
      {"window", "--window", "level window first:last"},
      {"max_dp_level", "--max-dp-level", "cap on exhaustive levels"},
      {"max_minutes", "--max-minutes", "wall-clock cap for long runs"},
  };
  return f;
}

struct Command {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_file;
};

void register_flags(Command& cmd, const std::vector<std::string>& keys) {
  cmd.app->add_option("--config", cmd.config_file, "key=value configuration file");
  for (const Flag& f : flags()) {
    if (std::find(keys.begin(), keys.end(), f.key) == keys.end()) continue;
    std::string name = f.name;
    if (name == "--target" && cmd.app->get_name() == "exhaustive") name += ",--nmax";
    cmd.options[f.key] = cmd.app->add_option(name, cmd.values[f.key], f.help);
  }
}

RunConfig resolve(const Command& cmd) {
  RunConfig cfg;
  if (!cmd.config_file.empty()) {
    std::ifstream in = open_input(cmd.config_file);
    apply_config_text(cfg, in);
  }
  for (const auto& [key, opt] : cmd.options) {
    if (opt->count() > 0) cfg.set(key, cmd.values.at(key));
  }
  cfg.validate();
  return cfg;
}

std::string prepare_out(const RunConfig& cfg, const std::string& name) {
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) fail(ErrorCode::io, "cannot create output directory '" + cfg.out + "'");
  std::ofstream conf = open_output((fs::path(cfg.out) / (name + ".config")).string());
  conf << cfg.to_text();
  return cfg.out;
}

void log_line(const RunConfig& cfg, const std::string& text) {
  std::ofstream log((fs::path(cfg.out) / "run.log").string(), std::ios::app);
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%S", std::localtime(&now));
  log << stamp << ' ' << text << '\n';
}

std::string path_in(const RunConfig& cfg, const std::string& file) {
  return (fs::path(cfg.out) / file).string();
}

// ---------------------------------------------------------------------------

void cmd_greedy(const RunConfig& cfg) {
  prepare_out(cfg, "greedy");
  GrowthSequence seq;
  std::string seq_path;
  std::ofstream out;
  if (!cfg.resume.empty()) {
    seq = read_sequence_file(cfg.resume);
    seq_path = path_in(cfg, "greedy-" + std::string(to_string(seq.mode)) + ".seq");
    // The replayed state must reproduce the recorded values before extending.
    if (!seq.steps.empty()) {
      const DimensionState s = replay(seq);
      if (format_real(s.c) != format_real(seq.samples.back().c)) {
        fail(ErrorCode::consistency, "replayed sequence does not match the values in '" + cfg.resume + "'");
      }
    }
    std::error_code ec;
    if (fs::exists(seq_path) && fs::equivalent(seq_path, cfg.resume, ec)) {
      out = open_output(seq_path, std::ios::app);
    } else {
      out = open_output(seq_path);
      write_sequence(out, seq);
    }
  } else {
    seq.mode = cfg.mode;
    seq.initial = parse(cfg.start, cfg.mode);
    seq_path = path_in(cfg, "greedy-" + std::string(to_string(seq.mode)) + ".seq");
    out = open_output(seq_path);
    out << sequence_header(seq.mode, seq.initial) << '\n';
  }
  if (seq.initial.size() + static_cast<std::int64_t>(seq.steps.size()) > cfg.target) {
    fail(ErrorCode::contract, "sequence is already longer than the target");
  }
  const auto started = std::chrono::steady_clock::now();
  std::int64_t since_checkpoint = 0;
  extend_greedy(seq, cfg.target, [&](const GrowthSequence& s, const DimensionState& st) {
    out << sequence_line(st.size(), s.steps.back(), st.ln_dim.value(), st.c) << '\n';
    if (++since_checkpoint == kCheckpointEvery) {
      since_checkpoint = 0;
      out.flush();
      if (!out) fail(ErrorCode::io, "write failed for '" + seq_path + "'");
      const std::chrono::duration<double, std::ratio<60>> elapsed = std::chrono::steady_clock::now() - started;
      if (cfg.max_minutes > 0.0 && elapsed.count() > cfg.max_minutes) {
        fail(ErrorCode::capacity, "time cap reached at level " + std::to_string(st.size()) +
                                      "; resume from '" + seq_path + "'");
      }
    }
  });
  out.flush();
  if (!out) fail(ErrorCode::io, "write failed for '" + seq_path + "'");
  std::ofstream csv = open_output(path_in(cfg, "greedy-" + std::string(to_string(seq.mode)) + "-c.csv"));
  write_samples_csv(csv, seq);
  const LevelSample& last = seq.samples.back();
  std::cout << "greedy " << to_string(seq.mode) << ": n=" << last.n << " c=" << format_real(last.c)
            << " ties=" << seq.ties << " -> " << seq_path << '\n';
  log_line(cfg, "greedy finished at level " + std::to_string(last.n));
}

void cmd_plancherel(const RunConfig& cfg) {
  prepare_out(cfg, "plancherel");
  const std::string file = path_in(cfg, "plancherel-" + std::string(to_string(cfg.mode)) + "-n" +
                                            std::to_string(cfg.target) + "-s" + std::to_string(cfg.seed) + ".txt");
  std::ofstream out = open_output(file);
  for (int i = 0; i < cfg.count; ++i) {
    Rng rng(cfg.seed, stream::plancherel, static_cast<std::uint64_t>(i));
    out << serialize(plancherel_sample(cfg.mode, cfg.target, rng)) << '\n';
  }
  std::cout << cfg.count << " Plancherel sample(s) -> " << file << '\n';
}

void cmd_merge(const RunConfig& cfg) {
  prepare_out(cfg, "merge");
  const std::string file = path_in(cfg, "merge-" + std::string(to_string(cfg.mode)) + ".csv");
  std::ofstream out = open_output(file);
  out << kMergeHeader << '\n';
  std::size_t merged = 0;
  std::size_t total = 0;
  std::int64_t max_steps = 0;
  auto run = [&](std::size_t pair, const Diagram& a, const Diagram& b) {
    const MergeResult r = merge_experiment(a, b, cfg.mode, cfg.budget);
    out << merge_line(pair, a, b, r) << '\n';
    ++total;
    if (r.merged_at_size) {
      ++merged;
      max_steps = std::max({max_steps, r.steps_a, r.steps_b});
    }
  };
  if (!cfg.a.empty() || !cfg.b.empty()) {
    run(0, parse(cfg.a, cfg.mode), parse(cfg.b, cfg.mode));
  } else {
    for (int i = 0; i < cfg.pairs; ++i) {
      Rng ra(cfg.seed, stream::merge, 2 * static_cast<std::uint64_t>(i));
      Rng rb(cfg.seed, stream::merge, 2 * static_cast<std::uint64_t>(i) + 1);
      run(static_cast<std::size_t>(i), plancherel_sample(cfg.mode, cfg.target, ra),
          plancherel_sample(cfg.mode, cfg.target, rb));
    }
  }
  out << "summary;pairs=" << total << ";merged=" << merged << ";max_steps=" << max_steps << '\n';
  std::cout << "merged " << merged << "/" << total << " pairs, max steps " << max_steps << " -> " << file << '\n';
}

void cmd_search(const RunConfig& cfg) {
  prepare_out(cfg, "search");
  std::vector<Diagram> seeds;
  if (cfg.start.find(';') != std::string::npos) {
    for (std::string_view part : split(cfg.start, ';')) seeds.push_back(parse(part, cfg.mode));
  } else {
    seeds.push_back(parse(cfg.start, cfg.mode));
  }
  const BestSequence best = improved_search(seeds, cfg.target, cfg.mode, cfg.search_config());
  const std::string file = path_in(cfg, "search-" + std::string(to_string(cfg.mode)) + ".csv");
  std::ofstream out = open_output(file);
  write_best_csv(out, best);
  const BestEntry& last = *best.at(best.last_level());
  std::cout << "best found at n=" << best.last_level() << ": " << serialize(last.diagram)
            << " c=" << format_real(last.c);
  if (cfg.mode == Mode::strict) {
    const RegularTail tail = regular_tail(last.diagram);
    std::cout << " regular tail " << tail.length
              << (tail.parity == TailParity::odd ? " odd" : tail.parity == TailParity::even ? " even" : "");
  }
  std::cout << " -> " << file << '\n';
}

void cmd_exhaustive(const RunConfig& cfg) {
  prepare_out(cfg, "exhaustive");
  const LevelMaxTable table = exhaustive_max(static_cast<int>(cfg.target), cfg.mode, cfg.exhaustive_limits());
  const std::string file = path_in(cfg, "exhaustive-" + std::string(to_string(cfg.mode)) + ".csv");
  std::ofstream out = open_output(file);
  write_level_max_csv(out, table);
  std::cout << "exhaustive maxima for n <= " << cfg.target << " -> " << file << '\n';
}

void cmd_analyze(const RunConfig& cfg) {
  if (cfg.input.empty()) fail(ErrorCode::argument, "analyze needs --input <sequence file>");
  prepare_out(cfg, "analyze");
  const GrowthSequence seq = read_sequence_file(cfg.input);
  const DifferenceSeries series = differences(seq);
  const Window window = cfg.window_or_default(series.back().n);
  const LevelReport rep = level_report(series, window);
  {
    std::ofstream out = open_output(path_in(cfg, "differences.csv"));
    write_differences_csv(out, series);
  }
  {
    std::ofstream out = open_output(path_in(cfg, "levels.csv"));
    write_level_report_csv(out, rep);
  }
  {
    std::ofstream out = open_output(path_in(cfg, "step-positions.csv"));
    write_step_positions_csv(out, series);
  }
  std::cout << "window " << window.first << ":" << window.last << " s in [" << format_real(rep.min_s) << ", "
            << format_real(rep.max_s) << "], lowest at row " << rep.argmin_row << " (n=" << rep.argmin_n
            << ")\nrows by lowest s:";
  const std::vector<int> order = rep.rows_by_lowest_value();
  for (std::size_t i = 0; i < order.size() && i < 12; ++i) std::cout << ' ' << order[i];
  std::cout << '\n';
}

void cmd_fit(const RunConfig& cfg) {
  if (cfg.input.empty()) fail(ErrorCode::argument, "fit needs --input <sequence file or n,c CSV>");
  prepare_out(cfg, "fit");
  std::vector<FitPoint> points;
  {
    std::ifstream in = open_input(cfg.input);
    std::string first;
    std::getline(in, first);
    in.seekg(0);
    if (first.find(';') != std::string::npos) {
      points = fit_points(read_sequence(in));
    } else {
      points = read_fit_points(in);
    }
  }
  if (points.empty()) fail(ErrorCode::argument, "no data points in '" + cfg.input + "'");
  std::int64_t last = points.front().n;
  for (const FitPoint& p : points) last = std::max(last, p.n);
  const FitResult fit = fit_limit(points, cfg.window_or_default(last));
  std::ofstream out = open_output(path_in(cfg, "fit.csv"));
  write_fit_csv(out, points, fit);
  std::cout << "C=" << format_real(fit.limit) << " a=" << format_real(fit.coefficient)
            << " rms=" << format_real(fit.rms) << " window=" << fit.window.first << ":" << fit.window.last
            << " points=" << fit.points << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of standard and strict Young diagrams"};
  app.require_subcommand(1);

  struct Entry {
    Command cmd;
    void (*run)(const RunConfig&);
  };
  std::vector<Entry> entries(7);
  auto add = [&](std::size_t i, const char* name, const char* help, std::vector<std::string> keys,
                 void (*run)(const RunConfig&)) {
    entries[i].cmd.app = app.add_subcommand(name, help);
    entries[i].run = run;
    keys.insert(keys.end(), {"mode", "target", "seed", "out"});
    register_flags(entries[i].cmd, keys);
  };
  add(0, "greedy", "greedy sequence with per-level normalized dimensions", {"start", "resume", "max_minutes"},
      cmd_greedy);
  add(1, "plancherel", "Plancherel growth samples", {"count"}, cmd_plancherel);
  add(2, "merge", "merging of greedy sequences from random or given pairs", {"pairs", "budget", "a", "b"},
      cmd_merge);
  add(3, "search", "multi-start improvement search for maximum diagrams",
      {"start", "seed_count", "restart_factor", "perturbation_depth", "polish_up_to", "passes"}, cmd_search);
  add(4, "exhaustive", "exact maxima by level DP (target = largest level)", {"max_dp_level"}, cmd_exhaustive);
  add(5, "analyze", "finite differences and row attribution", {"input", "window"}, cmd_analyze);
  add(6, "fit", "least-squares fit c(n) = C + a/sqrt(n)", {"input", "window"}, cmd_fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERROR:usage:" << e.what() << '\n';
    return 2;
  }

  try {
    for (Entry& e : entries) {
      if (e.cmd.app->parsed()) e.run(resolve(e.cmd));
    }
  } catch (const Error& e) {
    std::cerr << "ERROR:" << to_string(e.code()) << ":" << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ERROR:internal:" << e.what() << '\n';
    return 2;
  }
  return 0;
}
