#pragma once

// Greedy and Plancherel growth on the Young and Schur graphs.

#include <cstdint>
#include <optional>
#include <vector>

#include "youngdim/diagram.hpp"
#include "youngdim/dimension.hpp"
#include "youngdim/random.hpp"

namespace youngdim {

struct LevelSample {
  std::int64_t n = 0;
  long double ln_dim = 0.0L;
  long double c = 0.0L;
};

struct GrowthSequence {
  Mode mode = Mode::strict;
  Diagram initial;
  std::vector<GrowthStep> steps;
  std::vector<LevelSample> samples;  // initial level (if non-empty) then one per step
  std::size_t ties = 0;              // greedy steps decided by the column tie-break
};

/// Relative gap under which two floating-point ratios are re-compared exactly.
inline constexpr long double kExactFallbackGap = 1e-12L;

struct GreedyChoice {
  GrowthStep step;
  long double ratio = 0.0L;  // approximate dim(next)/dim(current)
  bool tie = false;          // an exactly equal successor with a larger column existed
};

/// Chooses the successor of maximal dimension. Order is decided exactly:
/// floating point only screens out candidates that are clearly smaller.
inline GreedyChoice choose_greedy(const Diagram& d, Mode m) {
  const std::vector<GrowthStep> steps = addable_steps(d, m);
  const std::vector<long double> ratios = approx_step_ratios(d, steps, m);
  std::size_t best = 0;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (ratios[i] > ratios[best]) best = i;
  }
  const long double floor = ratios[best] * (1.0L - kExactFallbackGap);
  std::vector<GrowthStep> close;
  std::vector<std::size_t> close_index;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (ratios[i] >= floor) {
      close.push_back(steps[i]);
      close_index.push_back(i);
    }
  }
  if (close.size() == 1) return {steps[best], ratios[best], false};

  const std::vector<StepRatio> exact = exact_step_ratios(d, close, m);
  std::size_t pick = 0;
  bool tie = false;
  for (std::size_t i = 1; i < close.size(); ++i) {
    const auto order = exact[i] <=> exact[pick];
    if (order > 0) {
      pick = i;
      tie = false;
    } else if (order == 0) {
      tie = true;
    }
  }
  return {close[pick], ratios[close_index[pick]], tie};
}

inline std::pair<Diagram, GrowthStep> greedy_step(const Diagram& d, Mode m) {
  detail::require_valid(d, m);
  const GreedyChoice choice = choose_greedy(d, m);
  Diagram next = d;
  next.add_box(choice.step.column);
  return {std::move(next), choice.step};
}

/// Incremental greedy walk carrying its dimension state.
class GreedyWalker {
 public:
  GreedyWalker(const Diagram& start, Mode m) : mode_(m), state_(initial_state(start, m)) {
    detail::require_valid(start, m);
  }
  GreedyWalker(DimensionState state, Mode m) : mode_(m), state_(std::move(state)) {}

  GrowthStep step() {
    const GreedyChoice choice = choose_greedy(state_.diagram, mode_);
    if (choice.tie) ++ties_;
    state_.apply(choice.step, choice.ratio, mode_);
    return choice.step;
  }

  const DimensionState& state() const noexcept { return state_; }
  const Diagram& diagram() const noexcept { return state_.diagram; }
  std::int64_t size() const noexcept { return state_.size(); }
  Mode mode() const noexcept { return mode_; }
  std::size_t ties() const noexcept { return ties_; }

 private:
  Mode mode_;
  DimensionState state_;
  std::size_t ties_ = 0;
};

/// Recomputes the dimension state at the end of a recorded sequence by
/// re-applying its steps with the same arithmetic the greedy walk used.
inline DimensionState replay(const GrowthSequence& seq) {
  DimensionState s = initial_state(seq.initial, seq.mode);
  for (GrowthStep step : seq.steps) s = advance(std::move(s), step, seq.mode);
  return s;
}

/// Extends a greedy sequence (possibly empty of steps) to `target` boxes.
/// `on_step` is invoked after every step with the new sample.
template <typename OnStep>
void extend_greedy(GrowthSequence& seq, std::int64_t target, OnStep&& on_step) {
  GreedyWalker walker(replay(seq), seq.mode);
  if (walker.size() > target) {
    fail(ErrorCode::contract, "sequence already exceeds the target size");
  }
  if (seq.samples.empty() && !seq.initial.empty()) {
    seq.samples.push_back({walker.size(), walker.state().ln_dim.value(), walker.state().c});
  }
  seq.steps.reserve(static_cast<std::size_t>(target - seq.initial.size()));
  while (walker.size() < target) {
    const GrowthStep step = walker.step();
    seq.steps.push_back(step);
    seq.samples.push_back({walker.size(), walker.state().ln_dim.value(), walker.state().c});
    on_step(seq, walker.state());
  }
  seq.ties += walker.ties();
}

inline void extend_greedy(GrowthSequence& seq, std::int64_t target) {
  extend_greedy(seq, target, [](const GrowthSequence&, const DimensionState&) {});
}

inline GrowthSequence greedy_sequence(const Diagram& start, std::int64_t target, Mode m) {
  detail::require_valid(start, m);
  if (start.size() > target) fail(ErrorCode::contract, "start diagram is larger than the target size");
  GrowthSequence seq;
  seq.mode = m;
  seq.initial = start;
  extend_greedy(seq, target);
  return seq;
}

/// Exact Plancherel transition probabilities out of d:
///   standard  p = dim(next) / ((n+1) dim(d))
///   strict    p = f dim(next) / ((n+1) dim(d)), f = 1 for a new column, else 2.
inline std::vector<std::pair<GrowthStep, Rational>> transition_probabilities(const Diagram& d, Mode m) {
  detail::require_valid(d, m);
  const std::vector<GrowthStep> steps = addable_steps(d, m);
  const std::vector<StepRatio> ratios = exact_step_ratios(d, steps, m);
  std::vector<std::pair<GrowthStep, Rational>> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    BigInt num = ratios[i].numerator;
    if (m == Mode::strict && steps[i].column <= d.width()) num *= 2;
    Rational p(num, ratios[i].denominator * (d.size() + 1));
    p.canonicalize();
    out.emplace_back(steps[i], std::move(p));
  }
  return out;
}

/// One Plancherel growth step drawn with `rng`.
inline GrowthStep plancherel_step(const Diagram& d, Mode m, Rng& rng) {
  const std::vector<GrowthStep> steps = addable_steps(d, m);
  std::vector<long double> w = approx_step_ratios(d, steps, m);
  long double total = 0.0L;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (m == Mode::strict && steps[i].column <= d.width()) w[i] *= 2.0L;
    total += w[i];
  }
  const long double u = static_cast<long double>(rng.uniform()) * total;
  long double acc = 0.0L;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    acc += w[i];
    if (u < acc) return steps[i];
  }
  return steps.back();
}

inline Diagram plancherel_sample(Mode m, std::int64_t n, Rng& rng) {
  if (n < 1) fail(ErrorCode::contract, "plancherel sample needs n >= 1");
  Diagram d;
  while (d.size() < n) d.add_box(plancherel_step(d, m, rng).column);
  return d;
}

inline Diagram plancherel_sample(Mode m, std::int64_t n, std::uint64_t seed) {
  Rng rng(seed, stream::plancherel);
  return plancherel_sample(m, n, rng);
}

struct MergeResult {
  std::optional<std::int64_t> merged_at_size;
  std::int64_t steps_a = 0;
  std::int64_t steps_b = 0;
  bool budget_exhausted = false;
};

/// Number of extra lockstep steps checked after a merge.
inline constexpr int kMergePersistenceSteps = 50;

/// Runs greedy sequences from a and b in lockstep of size until they pass
/// through the same diagram, or either has added `budget` boxes.
inline MergeResult merge_experiment(const Diagram& a, const Diagram& b, Mode m, std::int64_t budget) {
  if (budget < 1) fail(ErrorCode::argument, "merge budget must be >= 1");
  GreedyWalker wa(a, m);
  GreedyWalker wb(b, m);
  MergeResult r;
  auto exhausted = [&] {
    r.steps_a = wa.size() - a.size();
    r.steps_b = wb.size() - b.size();
    r.budget_exhausted = true;
    return r;
  };
  while (wa.size() < wb.size()) {
    if (wa.size() - a.size() >= budget) return exhausted();
    wa.step();
  }
  while (wb.size() < wa.size()) {
    if (wb.size() - b.size() >= budget) return exhausted();
    wb.step();
  }
  while (wa.diagram() != wb.diagram()) {
    if (wa.size() - a.size() >= budget || wb.size() - b.size() >= budget) return exhausted();
    wa.step();
    wb.step();
  }
  r.merged_at_size = wa.size();
  r.steps_a = wa.size() - a.size();
  r.steps_b = wb.size() - b.size();
  for (int i = 0; i < kMergePersistenceSteps; ++i) {
    wa.step();
    wb.step();
    if (wa.diagram() != wb.diagram()) {
      fail(ErrorCode::consistency, "greedy sequences diverged after merging");
    }
  }
  return r;
}

}  // namespace youngdim
