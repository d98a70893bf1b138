#pragma once

// Exact and log-domain dimensions of standard and strict diagrams.
//
// Standard: hook length formula.
// Strict:   dim = prod_{i<j} (li - lj)/(li + lj) * n! / prod li!.
// Normalized dimensions:
//   strict    c = -(ln dim - ln sqrt(n!) + n ln2 / 2) / sqrt(n)
//   standard  c = -(ln dim - ln sqrt(n!)) / sqrt(n)

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "youngdim/diagram.hpp"
#include "youngdim/error.hpp"
#include "youngdim/extended_sum.hpp"

namespace youngdim {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

namespace detail {

/// Balanced product of positive integers.
class Product {
 public:
  void mul(std::uint64_t x) {
    if (x == 0) {
      zero_ = true;
      return;
    }
    if (word_ > std::numeric_limits<std::uint64_t>::max() / x) flush();
    word_ *= x;
  }

  BigInt value() {
    flush();
    if (zero_) return 0;
    if (parts_.empty()) return 1;
    while (parts_.size() > 1) {
      std::vector<BigInt> next;
      next.reserve((parts_.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < parts_.size(); i += 2) next.push_back(parts_[i] * parts_[i + 1]);
      if (parts_.size() % 2) next.push_back(std::move(parts_.back()));
      parts_ = std::move(next);
    }
    return parts_.front();
  }

 private:
  void flush() {
    if (word_ == 1) return;
    BigInt w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof(word_), 0, 0, &word_);
    parts_.push_back(std::move(w));
    word_ = 1;
  }

  std::vector<BigInt> parts_;
  std::uint64_t word_ = 1;
  bool zero_ = false;
};

inline std::uint64_t abs_diff(std::int64_t a, std::int64_t b) {
  return static_cast<std::uint64_t>(a > b ? a - b : b - a);
}

inline void require_valid(const Diagram& d, Mode m) {
  if (!validate(d, m)) {
    fail(ErrorCode::contract, "diagram '" + serialize(d) + "' is not a valid " +
                                  std::string(to_string(m)) + " diagram");
  }
}

inline void require_step(const Diagram& d, GrowthStep step, Mode m) {
  if (!is_valid_step(d, step, m)) {
    fail(ErrorCode::contract, "step (" + std::to_string(step.column) + "," +
                                  std::to_string(step.row) + ") does not extend '" + serialize(d) +
                                  "' in " + std::string(to_string(m)) + " mode");
  }
}

// Contents (column - row) of the addable and removable cells in the Young
// graph. Interlacing: x1 < y1 < x2 < ... < y_{m-1} < x_m after sorting.
struct CornerProfile {
  std::vector<std::int64_t> addable;    // indexed like addable_columns
  std::vector<int> addable_columns;
  std::vector<std::int64_t> removable;
};

inline CornerProfile corner_profile(const Diagram& d) {
  CornerProfile p;
  for (int c = 1; c <= d.width() + 1; ++c) {
    if (can_add(d, c, Mode::standard)) {
      p.addable_columns.push_back(c);
      p.addable.push_back(std::int64_t{c} - (d.height(c) + 1));
    }
    if (c <= d.width() && d.height(c) > d.height(c + 1)) {
      p.removable.push_back(std::int64_t{c} - d.height(c));
    }
  }
  return p;
}

}  // namespace detail

inline BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Hook lengths of all boxes, column by column, bottom to top.
inline std::vector<std::int64_t> hook_lengths(const Diagram& d) {
  const std::vector<int> rows = row_lengths(d);
  std::vector<std::int64_t> hooks;
  hooks.reserve(static_cast<std::size_t>(d.size()));
  for (int i = 1; i <= d.width(); ++i) {
    const int h = d.height(i);
    for (int r = 1; r <= h; ++r) {
      const std::int64_t arm = h - r;
      const std::int64_t leg = rows[static_cast<std::size_t>(r - 1)] - i;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

inline BigInt dim_standard(const Diagram& d) {
  detail::require_valid(d, Mode::standard);
  detail::Product hooks;
  for (std::int64_t h : hook_lengths(d)) hooks.mul(static_cast<std::uint64_t>(h));
  BigInt den = hooks.value();
  BigInt num = factorial(static_cast<std::uint64_t>(d.size()));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigInt dim_strict(const Diagram& d) {
  detail::require_valid(d, Mode::strict);
  auto l = d.columns();
  detail::Product num;
  detail::Product den;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      num.mul(static_cast<std::uint64_t>(l[i] - l[j]));
      den.mul(static_cast<std::uint64_t>(l[i] + l[j]));
    }
  }
  BigInt numerator = num.value() * factorial(static_cast<std::uint64_t>(d.size()));
  BigInt denominator = den.value();
  for (int li : l) denominator *= factorial(static_cast<std::uint64_t>(li));
  BigInt q;
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (r != 0) {
    fail(ErrorCode::consistency, "strict dimension of '" + serialize(d) + "' is not an integer");
  }
  return q;
}

inline BigInt dimension(const Diagram& d, Mode m) {
  return m == Mode::standard ? dim_standard(d) : dim_strict(d);
}

/// dim(d + step) / dim(d) as an exact, not necessarily reduced, fraction.
struct StepRatio {
  BigInt numerator{1};
  BigInt denominator{1};

  void reduce() {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    if (g != 1) {
      mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(denominator.get_mpz_t(), denominator.get_mpz_t(), g.get_mpz_t());
    }
  }

  StepRatio reduced() const {
    StepRatio r = *this;
    r.reduce();
    return r;
  }

  Rational as_rational() const {
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
  }

  friend std::strong_ordering operator<=>(const StepRatio& a, const StepRatio& b) {
    const int s = cmp(a.numerator * b.denominator, b.numerator * a.denominator);
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend bool operator==(const StepRatio& a, const StepRatio& b) { return (a <=> b) == 0; }
};

namespace detail {

inline StepRatio strict_ratio_exact(const Diagram& d, int column) {
  const auto l = d.columns();
  const std::int64_t n = d.size();
  Product num;
  Product den;
  num.mul(static_cast<std::uint64_t>(n + 1));
  if (column == d.width() + 1) {
    for (int li : l) {
      num.mul(static_cast<std::uint64_t>(li - 1));
      den.mul(static_cast<std::uint64_t>(li + 1));
    }
  } else {
    const std::int64_t lp = l[static_cast<std::size_t>(column - 1)];
    den.mul(static_cast<std::uint64_t>(lp + 1));
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (static_cast<int>(j) == column - 1) continue;
      const std::int64_t lj = l[j];
      num.mul(abs_diff(lp + 1, lj));
      num.mul(static_cast<std::uint64_t>(lp + lj));
      den.mul(abs_diff(lp, lj));
      den.mul(static_cast<std::uint64_t>(lp + 1 + lj));
    }
  }
  return {num.value(), den.value()};
}

inline StepRatio standard_ratio_exact(const Diagram& d, const CornerProfile& p, int column) {
  Product num;
  Product den;
  num.mul(static_cast<std::uint64_t>(d.size() + 1));
  std::int64_t x = 0;
  for (std::size_t i = 0; i < p.addable.size(); ++i) {
    if (p.addable_columns[i] == column) x = p.addable[i];
  }
  for (std::int64_t y : p.removable) num.mul(abs_diff(x, y));
  for (std::int64_t other : p.addable) {
    if (other != x) den.mul(abs_diff(x, other));
  }
  return {num.value(), den.value()};
}

inline long double strict_ratio_approx(std::span<const int> l, std::int64_t n, int column) {
  long double r = static_cast<long double>(n + 1);
  const int k = static_cast<int>(l.size());
  if (column == k + 1) {
    for (int li : l) r *= static_cast<long double>(li - 1) / static_cast<long double>(li + 1);
    return r;
  }
  const std::int64_t lp = l[static_cast<std::size_t>(column - 1)];
  r /= static_cast<long double>(lp + 1);
  for (int j = 0; j < k; ++j) {
    if (j == column - 1) continue;
    const std::int64_t lj = l[static_cast<std::size_t>(j)];
    const auto a = static_cast<long double>(abs_diff(lp + 1, lj) * static_cast<std::uint64_t>(lp + lj));
    const auto b = static_cast<long double>(abs_diff(lp, lj) * static_cast<std::uint64_t>(lp + 1 + lj));
    r *= a / b;
  }
  return r;
}

inline long double standard_ratio_approx(std::int64_t n, const CornerProfile& p, std::size_t i) {
  long double r = static_cast<long double>(n + 1);
  const std::int64_t x = p.addable[i];
  // Pair each removable content with an addable one so partial products stay O(1).
  std::size_t a = 0;
  for (std::int64_t y : p.removable) {
    if (a == i) ++a;
    r *= static_cast<long double>(x - y) / static_cast<long double>(x - p.addable[a]);
    ++a;
  }
  return std::fabs(r);
}

}  // namespace detail

inline StepRatio step_ratio(const Diagram& d, GrowthStep step, Mode m) {
  detail::require_step(d, step, m);
  if (m == Mode::strict) return detail::strict_ratio_exact(d, step.column);
  return detail::standard_ratio_exact(d, detail::corner_profile(d), step.column);
}

/// Floating-point dim(d + step)/dim(d); relative error is a few ulps of
/// long double per factor, O(width) factors.
inline long double approx_step_ratio(const Diagram& d, GrowthStep step, Mode m) {
  detail::require_step(d, step, m);
  if (m == Mode::strict) return detail::strict_ratio_approx(d.columns(), d.size(), step.column);
  const detail::CornerProfile p = detail::corner_profile(d);
  for (std::size_t i = 0; i < p.addable_columns.size(); ++i) {
    if (p.addable_columns[i] == step.column) return detail::standard_ratio_approx(d.size(), p, i);
  }
  fail(ErrorCode::consistency, "addable column missing from corner profile");
}

/// Approximate ratios for every addable step, in addable_steps() order.
inline std::vector<long double> approx_step_ratios(const Diagram& d, std::span<const GrowthStep> steps,
                                                   Mode m) {
  std::vector<long double> out;
  out.reserve(steps.size());
  if (m == Mode::strict) {
    for (GrowthStep s : steps) out.push_back(detail::strict_ratio_approx(d.columns(), d.size(), s.column));
    return out;
  }
  const detail::CornerProfile p = detail::corner_profile(d);
  std::size_t i = 0;
  for (GrowthStep s : steps) {
    while (p.addable_columns[i] != s.column) ++i;
    out.push_back(detail::standard_ratio_approx(d.size(), p, i));
  }
  return out;
}

/// Exact ratios for a subset of steps sharing the same base diagram.
inline std::vector<StepRatio> exact_step_ratios(const Diagram& d, std::span<const GrowthStep> steps,
                                                Mode m) {
  std::vector<StepRatio> out;
  out.reserve(steps.size());
  if (m == Mode::strict) {
    for (GrowthStep s : steps) out.push_back(detail::strict_ratio_exact(d, s.column));
    return out;
  }
  const detail::CornerProfile p = detail::corner_profile(d);
  for (GrowthStep s : steps) out.push_back(detail::standard_ratio_exact(d, p, s.column));
  return out;
}

inline ExtendedSum ln_factorial(std::int64_t n) {
  ExtendedSum s;
  for (std::int64_t i = 2; i <= n; ++i) s.add(std::log(static_cast<long double>(i)));
  return s;
}

/// ln dim(d) evaluated from the closed formulas in compensated long double.
inline ExtendedSum ln_dim_direct(const Diagram& d, Mode m) {
  detail::require_valid(d, m);
  ExtendedSum s = ln_factorial(d.size());
  if (m == Mode::standard) {
    for (std::int64_t h : hook_lengths(d)) s.add(-std::log(static_cast<long double>(h)));
    return s;
  }
  auto l = d.columns();
  for (std::size_t i = 0; i < l.size(); ++i) {
    s.add(-std::lgamma(static_cast<long double>(l[i]) + 1.0L));
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      s.add(std::log(static_cast<long double>(l[i] - l[j]) / static_cast<long double>(l[i] + l[j])));
    }
  }
  return s;
}

/// Normalized dimension from ln dim, ln n! and n (n >= 1).
inline long double normalized_dim(const ExtendedSum& ln_dim, const ExtendedSum& ln_fact, std::int64_t n,
                                  Mode m) {
  if (n < 1) fail(ErrorCode::contract, "normalized dimension needs n >= 1");
  long double t = scaled_difference(ln_dim, 0.5L, ln_fact);
  if (m == Mode::strict) t += 0.5L * kLn2 * static_cast<long double>(n);
  return (0.0L - t) / std::sqrt(static_cast<long double>(n));  // no negative zero
}

struct DimensionState {
  Diagram diagram;
  ExtendedSum ln_dim;
  ExtendedSum ln_factorial;
  long double c = std::numeric_limits<long double>::quiet_NaN();

  std::int64_t size() const noexcept { return diagram.size(); }

  /// Applies a step whose ratio dim(next)/dim(current) is already known.
  void apply(GrowthStep step, long double ratio, Mode m) {
    ln_dim.add(std::log(ratio));
    ln_factorial.add(std::log(static_cast<long double>(diagram.size() + 1)));
    diagram.add_box(step.column);
    c = normalized_dim(ln_dim, ln_factorial, diagram.size(), m);
  }
};

inline DimensionState initial_state(const Diagram& d, Mode m) {
  DimensionState s;
  s.diagram = d;
  if (d.empty()) return s;
  s.ln_dim = ln_dim_direct(d, m);
  s.ln_factorial = ln_factorial(d.size());
  s.c = normalized_dim(s.ln_dim, s.ln_factorial, d.size(), m);
  return s;
}

inline DimensionState advance(DimensionState state, GrowthStep step, Mode m) {
  const long double r = approx_step_ratio(state.diagram, step, m);
  state.apply(step, r, m);
  return state;
}

inline long double normalized_dim(const DimensionState& s, Mode m) {
  return normalized_dim(s.ln_dim, s.ln_factorial, s.size(), m);
}

/// Central measure of a level-n vertex: dim^2 / n! times 2^(n - width) for
/// strict diagrams.
inline Rational plancherel_weight(const Diagram& d, Mode m = Mode::strict) {
  if (d.empty()) fail(ErrorCode::contract, "plancherel weight needs n >= 1");
  const BigInt dim = dimension(d, m);
  BigInt num = dim * dim;
  if (m == Mode::strict) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(d.size() - d.width()));
  }
  Rational w(num, factorial(static_cast<std::uint64_t>(d.size())));
  w.canonicalize();
  return w;
}

/// Exact comparison of dim(a) and dim(b) for diagrams of equal size,
/// without forming n!.
inline std::strong_ordering compare_dimensions(const Diagram& a, const Diagram& b, Mode m) {
  if (a.size() != b.size()) fail(ErrorCode::contract, "dimension comparison needs equal sizes");
  if (a == b) return std::strong_ordering::equal;
  detail::require_valid(a, m);
  detail::require_valid(b, m);
  BigInt lhs;
  BigInt rhs;
  if (m == Mode::standard) {
    // dim = n!/prod(hooks): larger dim <=> smaller hook product.
    detail::Product ha;
    detail::Product hb;
    for (auto h : hook_lengths(a)) ha.mul(static_cast<std::uint64_t>(h));
    for (auto h : hook_lengths(b)) hb.mul(static_cast<std::uint64_t>(h));
    lhs = hb.value();
    rhs = ha.value();
  } else {
    auto parts = [](const Diagram& d, detail::Product& num, detail::Product& den) {
      auto l = d.columns();
      for (std::size_t i = 0; i < l.size(); ++i) {
        for (int t = 2; t <= l[i]; ++t) den.mul(static_cast<std::uint64_t>(t));
        for (std::size_t j = i + 1; j < l.size(); ++j) {
          num.mul(static_cast<std::uint64_t>(l[i] - l[j]));
          den.mul(static_cast<std::uint64_t>(l[i] + l[j]));
        }
      }
    };
    detail::Product na, da, nb, db;
    parts(a, na, da);
    parts(b, nb, db);
    lhs = na.value() * db.value();
    rhs = nb.value() * da.value();
  }
  const int s = cmp(lhs, rhs);
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace youngdim
