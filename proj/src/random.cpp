#include "weyl/random.hpp"

#include <limits>
#include <stdexcept>

namespace weyl {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::string_view law, std::uint64_t trial) {
  std::uint64_t name_hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : law) {
    name_hash ^= c;
    name_hash *= 0x100000001b3ULL;
  }
  std::uint64_t state = seed ^ name_hash;
  splitmix64(state);
  state ^= trial * 0xd1b54a32d192ed03ULL;
  return Rng(splitmix64(state));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

}  // namespace weyl
