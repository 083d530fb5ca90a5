#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace redesign {

// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix_bits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trial,
                                 std::uint64_t stream) {
  return mix_bits(mix_bits(mix_bits(base_seed) ^ trial) ^ stream);
}

// Seeded random stream with portable sampling. std::mt19937_64's output
// sequence is pinned by the standard; the distributions below are hand-rolled
// because the std ones are implementation-defined and would break the
// byte-identical reproducibility contract.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream derived(std::uint64_t base_seed, std::uint64_t trial,
                              std::uint64_t stream) {
    return RandomStream(derive_seed(base_seed, trial, stream));
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Index sampled from an (approximately normalized) probability vector.
  int categorical(std::span<const double> probs) {
    if (probs.empty()) throw std::invalid_argument("categorical: empty probability vector");
    const double u = uniform01();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;  // guards rounding in the tail
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace redesign
