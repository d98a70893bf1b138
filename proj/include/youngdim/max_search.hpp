#pragma once

// Maximum-dimension diagrams: exhaustive level DP for small sizes, and the
// multi-start greedy improvement search for larger ones.

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "youngdim/diagram.hpp"
#include "youngdim/dimension.hpp"
#include "youngdim/growth.hpp"
#include "youngdim/partition_index.hpp"
#include "youngdim/random.hpp"

namespace youngdim {

// ---------------------------------------------------------------------------
// Exhaustive DP

struct ExhaustiveLimits {
  int standard = 60;
  int strict = 100;

  int for_mode(Mode m) const noexcept { return m == Mode::standard ? standard : strict; }
};

/// Path-count DP over the levels 0..n_max: dim(mu) = sum of dim over the
/// predecessors of mu. Holds two consecutive levels, indexed by partition
/// rank. visit(diagram, dim) is called for every vertex, level by level.
template <typename Visit>
void path_count_levels(int n_max, Mode m, Visit&& visit) {
  if (n_max < 0) fail(ErrorCode::argument, "negative level bound");
  const PartitionIndex index(n_max, m);
  std::vector<BigInt> current(1, BigInt(1));
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BigInt> next;
    if (n < n_max) next.assign(index.count(n + 1), BigInt(0));
    std::size_t i = 0;
    index.for_each_partition(n, [&](const Diagram& d) {
      const BigInt& dim = current[i++];
      visit(d, dim);
      if (n == n_max) return;
      for (GrowthStep s : addable_steps(d, m)) {
        Diagram succ = d;
        succ.add_box(s.column);
        next[index.rank(succ)] += dim;
      }
    });
    current = std::move(next);
  }
}

struct LevelMax {
  std::int64_t n = 0;
  std::vector<Diagram> argmax;  // all co-maximal diagrams, lexicographic order
  BigInt dim;
};

struct LevelMaxTable {
  Mode mode = Mode::strict;
  std::vector<LevelMax> levels;  // levels[n], n = 0..n_max
};

inline LevelMaxTable exhaustive_max(int n_max, Mode m, ExhaustiveLimits limits = {}) {
  if (n_max > limits.for_mode(m)) {
    fail(ErrorCode::capacity, "exhaustive search level " + std::to_string(n_max) +
                                  " exceeds the configured cap " + std::to_string(limits.for_mode(m)));
  }
  LevelMaxTable table;
  table.mode = m;
  table.levels.resize(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) table.levels[static_cast<std::size_t>(n)].n = n;
  path_count_levels(n_max, m, [&](const Diagram& d, const BigInt& dim) {
    LevelMax& lvl = table.levels[static_cast<std::size_t>(d.size())];
    const int order = cmp(dim, lvl.dim);
    if (order > 0) {
      lvl.dim = dim;
      lvl.argmax.assign(1, d);
    } else if (order == 0) {
      lvl.argmax.push_back(d);
    }
  });
  for (LevelMax& lvl : table.levels) std::sort(lvl.argmax.begin(), lvl.argmax.end());
  return table;
}

// ---------------------------------------------------------------------------
// Best-known sequences and their order

struct BestEntry {
  Diagram diagram;
  long double ln_dim = 0.0L;
  long double c = 0.0L;
  std::string provenance;
};

struct BestSequence {
  Mode mode = Mode::strict;
  std::int64_t first_level = 0;
  std::vector<std::optional<BestEntry>> levels;  // levels[i] holds level first_level + i

  std::int64_t last_level() const noexcept {
    return first_level + static_cast<std::int64_t>(levels.size()) - 1;
  }
  const BestEntry* at(std::int64_t n) const {
    if (n < first_level || n > last_level()) return nullptr;
    const auto& e = levels[static_cast<std::size_t>(n - first_level)];
    return e ? &*e : nullptr;
  }
};

/// Below this |ln dim| gap two candidates are compared exactly.
inline constexpr long double kExactCompareGap = 1e-6L;

/// Orders two same-size diagrams by dimension, exact whenever the
/// floating-point log dimensions are within kExactCompareGap.
inline std::strong_ordering compare_entries(const Diagram& a, long double ln_a, const Diagram& b,
                                            long double ln_b, Mode m) {
  if (a == b) return std::strong_ordering::equal;
  if (std::fabs(ln_a - ln_b) >= kExactCompareGap) {
    return ln_a < ln_b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return compare_dimensions(a, b, m);
}

/// x > y iff the dimensions agree on the common levels below some k and
/// dim x_k > dim y_k. Levels missing from either side are skipped.
inline std::strong_ordering compare_sequences(const BestSequence& x, const BestSequence& y) {
  if (x.mode != y.mode) fail(ErrorCode::domain, "sequences belong to different graphs");
  const std::int64_t lo = std::max(x.first_level, y.first_level);
  const std::int64_t hi = std::min(x.last_level(), y.last_level());
  if (lo > hi) fail(ErrorCode::domain, "sequences have no common levels");
  for (std::int64_t n = lo; n <= hi; ++n) {
    const BestEntry* a = x.at(n);
    const BestEntry* b = y.at(n);
    if (!a || !b) continue;
    const auto order = compare_entries(a->diagram, a->ln_dim, b->diagram, b->ln_dim, x.mode);
    if (order != 0) return order;
  }
  return std::strong_ordering::equal;
}

inline BestSequence to_best_sequence(const LevelMaxTable& table) {
  BestSequence seq;
  seq.mode = table.mode;
  for (const LevelMax& lvl : table.levels) {
    const Diagram& d = lvl.argmax.front();
    BestEntry e;
    e.diagram = d;
    if (!d.empty()) {
      const DimensionState s = initial_state(d, table.mode);
      e.ln_dim = s.ln_dim.value();
      e.c = s.c;
    }
    e.provenance = "exhaustive";
    seq.levels.emplace_back(std::move(e));
  }
  return seq;
}

inline BestSequence to_best_sequence(const GrowthSequence& g, const std::string& provenance) {
  BestSequence seq;
  seq.mode = g.mode;
  seq.first_level = g.initial.size();
  DimensionState s = initial_state(g.initial, g.mode);
  seq.levels.emplace_back(BestEntry{s.diagram, s.ln_dim.value(), s.c, provenance});
  for (GrowthStep step : g.steps) {
    s = advance(std::move(s), step, g.mode);
    seq.levels.emplace_back(BestEntry{s.diagram, s.ln_dim.value(), s.c, provenance});
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Improvement search

struct SearchConfig {
  int plancherel_seeds = 8;       // extra random starts per restart
  double restart_factor = 0.9;    // restart level = ceil(factor * merge level)
  int perturbation_depth = 4;     // random remove/add pairs applied to each random start
  std::uint64_t seed = 0;
  // Levels up to this size are hill-climbed over one-box moves whenever a
  // new best diagram is recorded, and swept against the successors of the
  // level below and the predecessors of the level above; 0 disables.
  std::int64_t polish_up_to = 400;
  int passes = 4;  // maximum full passes; stops early once a pass changes nothing
};

namespace detail {

/// Provenance of a diagram derived from another by local moves: the
/// originating start plus the kind of move.
inline std::string derived(const std::string& provenance, const char* move) {
  return provenance.substr(0, provenance.find('+')) + "+" + move;
}

/// Random box moves that keep the size and mode validity.
inline Diagram perturb(Diagram d, Mode m, int pairs, Rng& rng) {
  for (int i = 0; i < pairs && !d.empty(); ++i) {
    std::vector<int> removable;
    for (int c = 1; c <= d.width(); ++c) {
      if (can_remove(d, c, m)) removable.push_back(c);
    }
    d.remove_box(removable[rng.below(removable.size())]);
    const std::vector<GrowthStep> adds = addable_steps(d, m);
    d.add_box(adds[rng.below(adds.size())].column);
  }
  return d;
}

/// Same-size neighbours reachable by moving one box.
inline std::vector<Diagram> one_box_moves(const Diagram& d, Mode m) {
  std::vector<Diagram> out;
  for (const Diagram& smaller : predecessors(d, m)) {
    for (auto& [next, step] : successors(smaller, m)) {
      if (next != d) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class ImprovementSearch {
 public:
  ImprovementSearch(std::int64_t first, std::int64_t target, Mode m, const SearchConfig& cfg)
      : cfg_(cfg), mode_(m), target_(target) {
    best_.mode = m;
    best_.first_level = first;
    best_.levels.resize(static_cast<std::size_t>(target - first + 1));
  }

  struct Walker {
    GreedyWalker walk;
    std::string provenance;
  };

  BestSequence run(std::span<const Diagram> seeds) {
    for (int pass = 0; pass < std::max(cfg_.passes, 1); ++pass) {
      changed_ = false;
      std::vector<Walker> batch;
      if (pass == 0) {
        for (std::size_t i = 0; i < seeds.size(); ++i) {
          batch.push_back({GreedyWalker(seeds[i], mode_), "seed" + std::to_string(i)});
        }
      } else {
        const BestEntry& start = *entry(best_.first_level);
        batch.push_back({GreedyWalker(start.diagram, mode_), start.provenance});
      }
      run_pass(std::move(batch), static_cast<std::uint64_t>(pass));
      sweep();
      if (!changed_) break;
    }
    return std::move(best_);
  }

 private:
  void run_pass(std::vector<Walker> batch, std::uint64_t pass) {
    std::int64_t restart = best_.first_level;
    for (std::uint64_t round = 0;; ++round) {
      const std::optional<std::int64_t> merged = run_batch(batch);
      if (!merged) break;
      // All walkers coincide: keep one and restart random starts higher up.
      Walker survivor = std::move(batch.front());
      batch.clear();
      const auto scaled = static_cast<std::int64_t>(std::ceil(cfg_.restart_factor * static_cast<double>(*merged)));
      restart = std::max(scaled, restart + 1);
      while (survivor.walk.size() < restart) {
        survivor.walk.step();
        offer(survivor.walk.state(), survivor.provenance);
      }
      const BestEntry& at_restart = *entry(restart);
      batch.push_back({GreedyWalker(at_restart.diagram, mode_), at_restart.provenance});
      for (int j = 0; j < cfg_.plancherel_seeds; ++j) {
        Rng rng(cfg_.seed, stream::search,
                (pass << 40) + round * 1000003ULL + static_cast<std::uint64_t>(j));
        Diagram start = restart == 0 ? Diagram{} : plancherel_sample(mode_, restart, rng);
        start = perturb(std::move(start), mode_, cfg_.perturbation_depth, rng);
        batch.push_back({GreedyWalker(start, mode_),
                         "random" + std::to_string(pass) + "." + std::to_string(round) + "." + std::to_string(j) + "@" + std::to_string(restart)});
      }
      batch.push_back(std::move(survivor));
    }
  }

  std::optional<BestEntry>& entry(std::int64_t n) {
    return best_.levels[static_cast<std::size_t>(n - best_.first_level)];
  }

  /// Records the state if it beats the current best at its level; returns
  /// whether it did.
  bool offer(const DimensionState& s, const std::string& provenance) {
    auto& slot = entry(s.size());
    const long double ln = s.ln_dim.value();
    if (slot) {
      const auto order = compare_entries(s.diagram, ln, slot->diagram, slot->ln_dim, mode_);
      if (order < 0 || (order == 0 && !(s.diagram < slot->diagram))) return false;
    }
    slot = BestEntry{s.diagram, ln, s.c, provenance};
    changed_ = true;
    return true;
  }

  bool offer_diagram(const Diagram& d, const std::string& provenance) {
    return offer(initial_state(d, mode_), provenance);
  }

  /// Forward/backward neighbour sweeps over the polished range: level n is
  /// challenged by every successor of best(n-1) and every predecessor of
  /// best(n+1), and then hill-climbed, until nothing changes.
  void sweep() {
    const std::int64_t hi = std::min(target_, cfg_.polish_up_to);
    const std::int64_t lo = best_.first_level;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::int64_t n = lo + 1; n <= hi; ++n) {
        const BestEntry below = *entry(n - 1);
        for (const auto& [next, step] : successors(below.diagram, mode_)) {
          moved |= offer_diagram(next, derived(below.provenance, "up"));
        }
      }
      for (std::int64_t n = hi - 1; n >= std::max<std::int64_t>(lo, 1); --n) {
        const BestEntry above = *entry(n + 1);
        for (const Diagram& prev : predecessors(above.diagram, mode_)) {
          moved |= offer_diagram(prev, derived(above.provenance, "down"));
        }
      }
      for (std::int64_t n = std::max<std::int64_t>(lo, 1); n <= hi; ++n) {
        if (polish(n)) moved = true;
      }
    }
  }

  /// Hill-climbs the best entry at level n over one-box moves; returns the
  /// improved diagram if any move helped.
  std::optional<Diagram> polish(std::int64_t n) {
    auto& slot = entry(n);
    bool improved = false;
    for (;;) {
      bool moved = false;
      const std::string provenance = derived(slot->provenance, "polish");
      for (const Diagram& cand : one_box_moves(slot->diagram, mode_)) {
        if (offer_diagram(cand, provenance)) moved = true;
      }
      if (!moved) break;
      improved = true;
    }
    if (!improved) return std::nullopt;
    return slot->diagram;
  }

  /// Advances the batch in lockstep of size. Returns the merge level, or
  /// nullopt once the target level has been processed.
  std::optional<std::int64_t> run_batch(std::vector<Walker>& batch) {
    std::int64_t level = batch.front().walk.size();
    for (const Walker& w : batch) level = std::min(level, w.walk.size());
    for (;;) {
      std::vector<Walker> polished;
      for (Walker& w : batch) {
        if (w.walk.size() != level) continue;
        if (offer(w.walk.state(), w.provenance) && level <= cfg_.polish_up_to && level > 0) {
          if (auto better = polish(level)) {
            polished.push_back({GreedyWalker(*better, mode_), entry(level)->provenance});
          }
        }
      }
      for (Walker& w : polished) batch.push_back(std::move(w));
      if (level == target_) return std::nullopt;
      bool all_equal = true;
      for (const Walker& w : batch) {
        if (w.walk.size() != level || w.walk.diagram() != batch.front().walk.diagram()) {
          all_equal = false;
          break;
        }
      }
      if (all_equal && level > best_.first_level) {
        batch.erase(batch.begin() + 1, batch.end());
        return level;
      }
      for (Walker& w : batch) {
        if (w.walk.size() == level) w.walk.step();
      }
      ++level;
    }
  }

  SearchConfig cfg_;
  bool changed_ = false;
  Mode mode_;
  std::int64_t target_;
  BestSequence best_;
};

}  // namespace detail

/// Multi-start greedy improvement: greedy sequences run from all seeds in
/// lockstep of size and the best diagram of every level is kept. When the
/// sequences have merged the batch restarts from a higher level with the
/// best diagram found there plus perturbed Plancherel samples.
inline BestSequence improved_search(std::span<const Diagram> seeds, std::int64_t target, Mode m,
                                    const SearchConfig& config = {}) {
  if (seeds.empty()) fail(ErrorCode::argument, "improved search needs at least one seed");
  std::int64_t first = seeds.front().size();
  for (const Diagram& s : seeds) {
    detail::require_valid(s, m);
    if (s.size() > target) fail(ErrorCode::contract, "seed larger than the target size");
    first = std::min(first, s.size());
  }
  if (config.restart_factor <= 0.0 || config.restart_factor > 1.0) {
    fail(ErrorCode::argument, "restart factor must lie in (0, 1]");
  }
  detail::ImprovementSearch search(first, target, m, config);
  return search.run(seeds);
}

// ---------------------------------------------------------------------------
// Regular tails

enum class TailParity { none, odd, even };

struct RegularTail {
  int length = 0;
  TailParity parity = TailParity::none;
};

/// Longest suffix of the form (..., 5, 3, 1) or (..., 6, 4, 2).
inline RegularTail regular_tail(const Diagram& d) {
  auto l = d.columns();
  if (l.empty() || l.back() > 2) return {};
  RegularTail t;
  t.parity = l.back() == 1 ? TailParity::odd : TailParity::even;
  int expected = l.back();
  for (auto it = l.rbegin(); it != l.rend() && *it == expected; ++it) {
    ++t.length;
    expected += 2;
  }
  return t;
}

}  // namespace youngdim
