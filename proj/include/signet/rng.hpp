/** Copyright 2026 The Signet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace signet {

/// splitmix64 finalizer; used only to derive well-mixed stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seed of the stream identified by (seed, purpose, index). Streams are
/// keyed by what they are used for, never by thread or visit order, so any
/// partitioning of work reproduces the same draws.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t purpose,
                                    std::uint64_t index) {
  return mix64(mix64(mix64(seed) ^ purpose) ^ index);
}

/// Portable random stream. std::mt19937_64 output is fixed by the standard;
/// the distributions below are written out because the std:: ones are
/// implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index)
      : engine_(stream_seed(seed, purpose, index)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift
  /// with rejection, so no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Returned by geometric() when no success happens in practice; small
  /// enough that adding it to an index cannot overflow.
  static constexpr std::uint64_t kNever = 1ull << 62;

  /// Number of failures before the first success, success probability p.
  /// Used to jump between Bernoulli(p) hits in long sequences.
  std::uint64_t geometric(double p) {
    if (p >= 1.0) return 0;
    if (p <= 0.0) return kNever;
    const double g = std::floor(std::log(uniform_open_zero()) / std::log1p(-p));
    if (g >= static_cast<double>(kNever)) return kNever;
    return static_cast<std::uint64_t>(g);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace signet
