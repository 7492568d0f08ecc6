/*
 * Copyright 2026 the latfold authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LATFOLD_RNG_HPP
#define LATFOLD_RNG_HPP

#include <cstdint>

namespace latfold {

namespace detail {
inline uint64_t splitmix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based deterministic generator.  Every output is a pure function
/// of (seed, stream, counter), so trials can own disjoint streams and any
/// sampled value can be re-derived after the fact.  The mixing function is
/// the SplitMix64 finalizer.
class DetRng {
 public:
  DetRng(uint64_t seed, uint64_t stream)
      : seed_(seed),
        stream_(stream),
        base_(detail::splitmix64(
            seed ^ detail::splitmix64(stream * 0xD1B54A32D192ED03ull + 1))) {}

  uint64_t next() {
    return detail::splitmix64(base_ + 0x9E3779B97F4A7C15ull * (++counter_));
  }

  /// Uniform value in [0, n) via rejection sampling (no modulo bias).
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Independent stream keyed off this one's identity.
  DetRng derive(uint64_t substream) const {
    return DetRng(seed_, detail::splitmix64(stream_ ^
                                            (0xD1B54A32D192ED03ull * (substream + 1))));
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  uint64_t counter() const { return counter_; }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t base_;
  uint64_t counter_ = 0;
};

/// Well-known stream ids so experiment stages never share a stream.
namespace streams {
constexpr uint64_t kKeygen = 1;
constexpr uint64_t kEncrypt = 2;
constexpr uint64_t kNoise = 3;
constexpr uint64_t kCalibration = 4;
constexpr uint64_t kEvaluation = 5;
constexpr uint64_t kBootstrap = 6;
constexpr uint64_t kBench = 7;
}  // namespace streams

}  // namespace latfold

#endif  // LATFOLD_RNG_HPP
