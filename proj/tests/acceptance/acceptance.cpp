// Acceptance gate. Runs the nine acceptance criteria (or the ones named on
// the command line) and prints one PASS/FAIL line per criterion, followed by
// the measurements behind it. Exit status is non-zero if any criterion fails.
//
//   youngdim_acceptance            all criteria
//   youngdim_acceptance 4 5        criteria 4 and 5 only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle.hpp"
#include "youngdim/youngdim.hpp"

using namespace youngdim;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(const char* f, long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, static_cast<double>(x));
  return buf;
}

// ---------------------------------------------------------------------------

Outcome formula_oracle() {
  Outcome o;
  for (bool strict : {false, true}) {
    const Mode m = strict ? Mode::strict : Mode::standard;
    const int top = strict ? 30 : 20;
    std::size_t checked = 0;
    std::size_t bad = 0;
    path_count_levels(top, m, [&](const Diagram& d, const BigInt& dp) {
      ++checked;
      if (dimension(d, m) != dp) ++bad;
    });
    // the DP itself against memoized path enumeration on a smaller range
    std::map<oracle::Parts, mpz_class> memo;
    std::size_t bad_enum = 0;
    path_count_levels(strict ? 22 : 14, m, [&](const Diagram& d, const BigInt& dp) {
      if (oracle::count_paths({d.columns().begin(), d.columns().end()}, strict, memo) != dp) ++bad_enum;
    });
    o.check(bad == 0 && checked > 0, std::string(to_string(m)) + " n <= " + std::to_string(top) + ": " +
                                         std::to_string(checked) + " diagrams, " + std::to_string(bad) +
                                         " formula/DP mismatches");
    o.check(bad_enum == 0, std::string(to_string(m)) + " DP vs path enumeration: " + std::to_string(bad_enum) +
                               " mismatches");
  }
  return o;
}

Outcome exact_identities() {
  Outcome o;
  for (Mode m : {Mode::standard, Mode::strict}) {
    std::vector<BigInt> sums(26, 0);
    path_count_levels(25, m, [&](const Diagram& d, const BigInt& dim) {
      BigInt w = dim * dim;
      if (m == Mode::strict) w <<= static_cast<mp_bitcnt_t>(d.size() - d.width());
      sums[static_cast<std::size_t>(d.size())] += w;
    });
    int bad = 0;
    for (int n = 0; n <= 25; ++n) {
      if (sums[static_cast<std::size_t>(n)] != factorial(static_cast<std::uint64_t>(n))) ++bad;
    }
    o.check(bad == 0, std::string(to_string(m)) + (m == Mode::strict ? " sum dim^2 2^(n-l)" : " sum dim^2") +
                          " = n! for n <= 25: " + std::to_string(bad) + " failing levels");
  }
  return o;
}

Outcome sampler_law() {
  Outcome o;
  for (Mode m : {Mode::standard, Mode::strict}) {
    std::map<Diagram, Rational> law{{Diagram{}, Rational(1)}};
    int bad = 0;
    for (int n = 1; n <= 10; ++n) {
      std::map<Diagram, Rational> next;
      for (const auto& [d, p] : law) {
        for (const auto& [step, pr] : transition_probabilities(d, m)) {
          Diagram e = d;
          e.add_box(step.column);
          next[e] += p * pr;
        }
      }
      law = std::move(next);
      for (const auto& [d, p] : law) {
        if (p != plancherel_weight(d, m)) ++bad;
      }
    }
    o.check(bad == 0, std::string(to_string(m)) + " induced law equals Plancherel for n <= 10: " +
                          std::to_string(bad) + " mismatches");
    std::set<Diagram> level{Diagram{}};
    int rows = 0;
    int bad_rows = 0;
    for (int n = 0; n <= 12; ++n) {
      std::set<Diagram> next;
      for (const Diagram& d : level) {
        Rational total = 0;
        for (const auto& [step, pr] : transition_probabilities(d, m)) total += pr;
        ++rows;
        if (total != 1) ++bad_rows;
        for (auto& [s, step] : successors(d, m)) next.insert(std::move(s));
      }
      level = std::move(next);
    }
    o.check(bad_rows == 0, std::string(to_string(m)) + " transition rows sum to 1 for n <= 12: " +
                               std::to_string(rows) + " rows, " + std::to_string(bad_rows) + " bad");
  }
  return o;
}

BestSequence strict_search(std::int64_t target) {
  const std::vector<Diagram> seeds{Diagram{}};
  return improved_search(seeds, target, Mode::strict, SearchConfig{});
}

Outcome table_partitions() {
  Outcome o;
  const BestSequence best = strict_search(250);
  const std::map<std::int64_t, std::string> expected{
      {200, "34,30,26,23,20,17,14,11,9,7,5,3,1"},
      {250, "38,34,30,27,24,21,18,15,13,10,8,6,4,2"},
  };
  for (const auto& [n, text] : expected) {
    const BestEntry* e = best.at(n);
    const std::string got = e ? serialize(e->diagram) : "<none>";
    o.check(got == text, "n=" + std::to_string(n) + ": " + got + (got == text ? "" : " (expected " + text + ")"));
  }
  return o;
}

Outcome ground_truth() {
  Outcome o;
  for (Mode m : {Mode::strict, Mode::standard}) {
    const int top = ExhaustiveLimits{}.for_mode(m);
    const LevelMaxTable table = exhaustive_max(top, m);
    const std::vector<Diagram> seeds{Diagram{}};
    const BestSequence best = improved_search(seeds, m == Mode::strict ? 250 : top, m, SearchConfig{});
    std::string missed;
    int bad = 0;
    for (int n = 1; n <= top; ++n) {
      const BestEntry* e = best.at(n);
      if (!e || dimension(e->diagram, m) != table.levels[static_cast<std::size_t>(n)].dim) {
        ++bad;
        missed += " " + std::to_string(n);
      }
    }
    o.check(bad == 0, std::string(to_string(m)) + " search equals exhaustive maxima for n <= " +
                          std::to_string(top) + ": " + std::to_string(bad) + " mismatches" + missed);
  }
  return o;
}

struct GreedyRuns {
  GrowthSequence standard;
  GrowthSequence strict;
};

const GreedyRuns& greedy_runs() {
  static const GreedyRuns runs{greedy_sequence(Diagram{}, 50000, Mode::standard),
                               greedy_sequence(Diagram{}, 50000, Mode::strict)};
  return runs;
}

Outcome limit_fits() {
  Outcome o;
  struct Target {
    Mode mode;
    long double limit;
    long double coefficient;
  };
  for (const Target t : {Target{Mode::standard, 0.700281L, 4.29412L}, Target{Mode::strict, 0.182837L, 3.19579L}}) {
    const GrowthSequence& seq = t.mode == Mode::standard ? greedy_runs().standard : greedy_runs().strict;
    const FitResult f = fit_limit(fit_points(seq), {10000, 50000});
    const std::string name(to_string(t.mode));
    o.check(std::fabs(f.limit - t.limit) <= 0.005L,
            name + " C = " + fmt("%.6f", f.limit) + " (target " + fmt("%.6f", t.limit) + " +- 0.005)");
    o.check(std::fabs(f.coefficient - t.coefficient) <= 0.3L,
            name + " a = " + fmt("%.5f", f.coefficient) + " (target " + fmt("%.5f", t.coefficient) + " +- 0.3)");
    o.info(name + " rms = " + fmt("%.3e", f.rms) + ", greedy ties = " + std::to_string(seq.ties) +
           ", c(50000) = " + fmt("%.6f", seq.samples.back().c));
  }
  return o;
}

Outcome oscillation() {
  Outcome o;
  const DifferenceSeries d = differences(greedy_runs().strict);
  const LevelReport rep = level_report(d, {11000, 50000});
  o.check(rep.min_s >= -0.45L && rep.max_s <= 0.31L,
          "s in [" + fmt("%.4f", rep.min_s) + ", " + fmt("%.4f", rep.max_s) + "] within [-0.45, 0.31]");
  o.check(rep.argmin_row == 7, "minimum s at row " + std::to_string(rep.argmin_row) + " (n=" +
                                   std::to_string(rep.argmin_n) + "), expected row 7");
  const std::vector<int> order = rep.rows_by_lowest_value();
  const int second = order.size() > 1 ? order[1] : 0;
  o.check(second == 2, "second-lowest band at row " + std::to_string(second) + ", expected row 2");
  return o;
}

Outcome merging() {
  Outcome o;
  const std::uint64_t seed = 42;
  int merged = 0;
  std::int64_t max_steps = 0;
  for (int i = 0; i < 100; ++i) {
    Rng ra(seed, stream::merge, 2 * static_cast<std::uint64_t>(i));
    Rng rb(seed, stream::merge, 2 * static_cast<std::uint64_t>(i) + 1);
    const Diagram a = plancherel_sample(Mode::strict, 500, ra);
    const Diagram b = plancherel_sample(Mode::strict, 500, rb);
    const MergeResult r = merge_experiment(a, b, Mode::strict, 1000);
    if (r.merged_at_size) {
      ++merged;
      max_steps = std::max({max_steps, r.steps_a, r.steps_b});
    }
  }
  o.check(merged >= 99, std::to_string(merged) + "/100 strict pairs at n=500 merged within 1000 boxes");
  o.info("max steps to merge: " + std::to_string(max_steps));
  return o;
}

Outcome properties() {
  Outcome o;
  // greedy determinism
  {
    std::ostringstream a;
    std::ostringstream b;
    write_sequence(a, greedy_sequence(Diagram{}, 5000, Mode::strict));
    write_sequence(b, greedy_sequence(Diagram{}, 5000, Mode::strict));
    o.check(a.str() == b.str(), "greedy determinism (strict, 5000 levels, byte-identical)");
  }
  // resume soundness: persisted 1000-run, read back, extended to 2000
  for (Mode m : {Mode::standard, Mode::strict}) {
    std::ostringstream part;
    write_sequence(part, greedy_sequence(Diagram{}, 1000, m));
    std::istringstream in(part.str());
    GrowthSequence resumed = read_sequence(in);
    extend_greedy(resumed, 2000);
    std::ostringstream x;
    std::ostringstream y;
    write_sequence(x, resumed);
    write_sequence(y, greedy_sequence(Diagram{}, 2000, m));
    o.check(x.str() == y.str(), std::string("resume soundness (") + std::string(to_string(m)) + ", 1000 -> 2000)");
  }
  // telescoping
  {
    const GrowthSequence seq = greedy_sequence(Diagram{}, 20000, Mode::strict);
    const DifferenceSeries d = differences(seq);
    ExtendedSum sum;
    for (const DifferenceRecord& r : d) {
      if (r.n > 5000 && r.n <= 20000) sum.add(r.d);
    }
    const long double err = std::fabs(sum.value() - (seq.samples[19999].c - seq.samples[4999].c));
    o.check(err <= 1e-15L, "telescoping of differences over (5000, 20000]: error " + fmt("%.2e", err));
  }
  // synthetic fit
  {
    std::vector<FitPoint> pts;
    for (std::int64_t n = 1000; n <= 50000; ++n) {
      pts.push_back({n, 0.7L + 4.3L / std::sqrt(static_cast<long double>(n))});
    }
    const FitResult f = fit_limit(pts, {10000, 50000});
    const long double err = std::max(std::fabs(f.limit - 0.7L), std::fabs(f.coefficient - 4.3L));
    o.check(err <= 1e-12L, "synthetic fit recovers C=0.7, a=4.3: error " + fmt("%.2e", err));
  }
  // serialize/parse round trips
  {
    int bad = 0;
    int count = 0;
    for (bool strict : {false, true}) {
      for (int n = 0; n <= 16; ++n) {
        for (const auto& p : oracle::all_partitions(n, strict)) {
          const Diagram d(p);
          ++count;
          if (parse(serialize(d), strict ? Mode::strict : Mode::standard) != d) ++bad;
        }
      }
    }
    o.check(bad == 0, "serialize/parse round trips: " + std::to_string(count) + " diagrams, " +
                          std::to_string(bad) + " failures");
  }
  // integrality of the strict formula
  {
    std::mt19937_64 rng(2024);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const Diagram d(oracle::random_parts(rng, 1 + static_cast<int>(rng() % 200), true));
      try {
        if (dim_strict(d) <= 0) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
    o.check(bad == 0, "strict formula integral on 1000 random diagrams with n <= 200: " + std::to_string(bad) +
                          " failures");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "formula/oracle equivalence", 120, formula_oracle},
      {2, "exact level identities", 120, exact_identities},
      {3, "Plancherel sampler law", 60, sampler_law},
      {4, "maximum partitions at 200 and 250", 600, table_partitions},
      {5, "search agrees with exhaustive maxima", 900, ground_truth},
      {6, "limit fits at N = 50000", 2700, limit_fits},
      {7, "oscillation range and row attribution", 2700, oscillation},
      {8, "merging batch", 1200, merging},
      {9, "property suites", 300, properties},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(secs <= c.limit_seconds, "runtime " + fmt("%.1f", secs) + " s (limit " + fmt("%.0f", c.limit_seconds) + " s)");
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << '\n';
    for (const std::string& n : o.notes) std::cout << "       " << n << '\n';
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
