#pragma once

#include <cstdint>

namespace waring {

/// Deterministic splittable RNG (splitmix64). Used everywhere randomness is
/// needed so that identical seeds reproduce identical output on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); the modulo bias is irrelevant at the
  /// moduli used here (n far below 2^64).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Derives an independent stream; distinct labels give distinct streams.
  Rng split(std::uint64_t label) {
    Rng child(state_ ^ (0xd1342543de82ef95ull * (label + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace waring
