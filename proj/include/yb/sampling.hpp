#pragma once

// Seeded deterministic sampling over small Gaussian integers.  The generator
// is a plain splitmix64 stream so that instances are bit-reproducible across
// platforms and standard libraries.

#include <cstdint>
#include <string_view>

#include "yb/mat2.hpp"

namespace yb {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant at the
  // ranges used here and keeps the draw backend-independent.
  long long int_in(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(next() % span);
  }
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Per-trial seed, independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Rng r(master ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return r.next();
}

inline GaussianRational random_gaussian_integer(Rng& rng, long long bound = 3) {
  return {Rational(rng.int_in(-bound, bound)), Rational(rng.int_in(-bound, bound))};
}

inline Mat2<GaussianRational> random_gaussian_matrix(Rng& rng, long long bound = 3) {
  return {random_gaussian_integer(rng, bound), random_gaussian_integer(rng, bound),
          random_gaussian_integer(rng, bound), random_gaussian_integer(rng, bound)};
}

inline constexpr int kMaxSampleRejections = 1000;

// Redraws until pred accepts, throwing SamplingExhausted after 1000
// consecutive rejections (a signal of a mis-specified domain).
template <class Gen, class Pred>
auto sample_until(Rng& rng, Gen&& gen, Pred&& pred) {
  for (int k = 0; k < kMaxSampleRejections; ++k) {
    auto candidate = gen(rng);
    if (pred(candidate)) return candidate;
  }
  throw SamplingExhausted();
}

inline Mat2<GaussianRational> random_invertible_matrix(Rng& rng, long long bound = 3) {
  return sample_until(
      rng, [bound](Rng& r) { return random_gaussian_matrix(r, bound); },
      [](const Mat2<GaussianRational>& m) { return m.det().is_unit(); });
}

}  // namespace yb
