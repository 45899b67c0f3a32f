#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace weyl {

/// SplitMix64 output function; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Reproducible random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; bounded draws use rejection
/// sampling rather than <random> distributions (whose algorithms are
/// implementation-defined), so a seed reproduces the same values everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one trial of one law: the engine seed is
  /// SplitMix64 applied to seed ^ FNV-1a(law) ^ trial-mixing.
  static Rng for_trial(std::uint64_t seed, std::string_view law, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// True with probability num/den.
  bool chance(unsigned num, unsigned den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace weyl
