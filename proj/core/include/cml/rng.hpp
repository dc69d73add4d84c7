#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cml {

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard, so identical seeds give identical streams on every platform; the
/// distribution helpers below are hand-rolled because the standard library's
/// distribution objects are not bit-stable across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)), seed_tag_(eng_()) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling removes the modulo bias; the loop terminates fast
    // because the acceptance region covers more than half of the range.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Independent stream derived from this seed and a tag; used to give each
  /// restart / stage its own reproducible source.
  Rng split(std::uint64_t tag) const {
    std::uint64_t h = seed_tag_;
    h ^= tag + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return Rng(h);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer; spreads low-entropy seeds over the whole state.
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
  std::uint64_t seed_tag_;  // drawn once, identifies this stream for split()
};

}  // namespace cml
