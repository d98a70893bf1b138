#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace youngdim {

/// Stream identifiers for splitting one run seed across subcommands.
namespace stream {
inline constexpr std::uint64_t plancherel = 1;
inline constexpr std::uint64_t merge = 2;
inline constexpr std::uint64_t search = 3;
}  // namespace stream

/// std::mt19937_64 seeded through std::seed_seq with the 32-bit halves of
/// (seed, stream, index). Both algorithms are fixed by the C++ standard, and
/// uniform() converts the top 53 bits itself, so draws are identical on every
/// conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0, std::uint64_t index = 0) {
    const std::array<std::uint32_t, 6> words{
        static_cast<std::uint32_t>(seed),      static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32),
        static_cast<std::uint32_t>(index),     static_cast<std::uint32_t>(index >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace youngdim
