#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace alive {

// Mixes a 64-bit value (splitmix64 finalizer). Used to derive independent
// seed streams from (master_seed, step, purpose) without correlated states.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0) {
  return mix64(mix64(master ^ 0x243f6a8885a308d3ULL) ^ mix64(a) ^ mix64(b ^ 0x13198a2e03707344ULL));
}

// Deterministic random stream. Distribution code is written out here instead
// of using <random> distributions, which are implementation-defined; given the
// same seed the sample sequence is identical across standard libraries.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of entropy.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection-free modulo is fine at these ranges.
  uint64_t uniform_index(uint64_t n) {
    // Lemire-style bounded draw without modulo bias.
    uint64_t threshold = (-n) % n;
    for (;;) {
      uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  // Samples an index from softmax(logits) by CDF inversion.
  // Stable under logit shifts; deterministic for a given stream state.
  size_t categorical_from_logits(std::span<const double> logits) {
    double mx = logits[0];
    for (double v : logits) mx = v > mx ? v : mx;
    double z = 0.0;
    std::vector<double> w(logits.size());
    for (size_t k = 0; k < logits.size(); ++k) {
      w[k] = std::exp(logits[k] - mx);
      z += w[k];
    }
    double u = uniform() * z;
    double acc = 0.0;
    for (size_t k = 0; k < logits.size(); ++k) {
      acc += w[k];
      if (u < acc) return k;
    }
    return logits.size() - 1;
  }

  // Standard normal via Box-Muller (used only for randomized test draws).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace alive
