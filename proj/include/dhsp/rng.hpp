// Deterministic random streams. The engine is std::mt19937_64 (bit-exact by
// the standard); doubles and bounded ints are derived manually so sequences
// are identical across standard-library implementations.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace dhsp {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Fixed-offset stream derivation: one master seed fans out to per-component
// (and per-trial) streams without correlated output.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), unbiased via rejection.
  int uniform_int(int bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_int: bound must be positive");
    const std::uint64_t span = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return static_cast<int>(r % span);
  }

 private:
  std::mt19937_64 engine_;
};

// Index of the first cumulative weight exceeding u; the last index acts as a
// catch-all so accumulated rounding in the final weight cannot fall through.
inline std::size_t sample_from_cdf(const std::vector<double>& cumulative, double u) {
  std::size_t lo = 0, hi = cumulative.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cumulative[mid] > u)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace dhsp
