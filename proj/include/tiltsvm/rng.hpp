#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

// Counter-based deterministic random numbers.
//
// Every draw is a pure function of (seed, stream, counter); there is no hidden
// state, so any part of a generation job can be replayed or computed out of
// order and still produce the same bytes on every platform.  The generator is
// the SplitMix64 finalizer (Vigna's splitmix64 mixing function) chained over
// the three key words.  Gaussian variates use the Box-Muller transform:
//
//   z(k) = sqrt(-2 ln(1 - u(2k))) * cos(2 pi u(2k+1))
//
// with u(c) the 53-bit uniform at counter c.
//
// Stream-id layout used across the library (keeps independent consumers on
// disjoint streams even when they share a seed):
//   kStreamDatasetBias           dataset-level sensor bias draw
//   kStreamSampleBase + (c<<32|s)  noise for sample s of class c
//   kStreamSplitBase + c         train/test shuffle of class c
//   kStreamProbe                 scratch stream for tests

namespace tiltsvm::rng {

inline constexpr std::uint64_t kStreamDatasetBias = 0x00b1a5'0000'0000ULL;
inline constexpr std::uint64_t kStreamSampleBase = 0x0100'0000'0000'0000ULL;
inline constexpr std::uint64_t kStreamSplitBase = 0x0200'0000'0000'0000ULL;
inline constexpr std::uint64_t kStreamProbe = 0x0300'0000'0000'0000ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t bits(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t counter) {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (stream + 0x6a09e667f3bcc909ULL));
  h = mix64(h ^ (counter + 0xc2b2ae3d27d4eb4fULL));
  return h;
}

// Uniform in [0, 1), 53 random bits.
constexpr double uniform01(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
  return static_cast<double>(bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Standard normal draw index k; consumes counters 2k and 2k+1.
inline double gaussian(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t k) {
  const double u1 = uniform01(seed, stream, 2 * k);
  const double u2 = uniform01(seed, stream, 2 * k + 1);
  return std::sqrt(-2.0 * std::log(1.0 - u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Uniform integer in [0, n) by 128-bit multiply-shift (bias < n * 2^-64).
constexpr std::uint64_t bounded(std::uint64_t r, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(r) * n) >> 64);
}

// Deterministic Fisher-Yates shuffle; consumes counters 0..size-2.
template <typename T>
void shuffle(std::vector<T>& v, std::uint64_t seed, std::uint64_t stream) {
  if (v.size() < 2) return;
  std::uint64_t counter = 0;
  for (std::size_t i = v.size() - 1; i > 0; --i, ++counter) {
    const std::uint64_t j = bounded(bits(seed, stream, counter), i + 1);
    std::swap(v[i], v[j]);
  }
}

}  // namespace tiltsvm::rng
