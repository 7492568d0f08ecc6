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

#ifndef LATFOLD_SAMPLER_HPP
#define LATFOLD_SAMPLER_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latfold/errors.hpp"
#include "latfold/ring.hpp"
#include "latfold/rng.hpp"

namespace latfold {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Discrete Gaussian sampler over the integers, truncated at ceil(6*sigma).
///
/// The distribution is defined by an integer weight table (inverse-CDF
/// sampling over 2^40-scaled Gaussian weights), so every probability is the
/// exact rational weight[x]/total and the central moments are exact
/// rationals.  The table is symmetric by construction, which makes all odd
/// moments exactly zero.
class ChiSampler {
 public:
  explicit ChiSampler(double sigma) : sigma_(sigma) {
    if (!(sigma > 0)) throw ValidationError("ChiSampler: sigma must be > 0");
    tail_ = static_cast<int64_t>(std::ceil(6.0 * sigma));
    const double scale = 1099511627776.0;  // 2^40
    weights_.resize(2 * tail_ + 1);
    for (int64_t x = 0; x <= tail_; ++x) {
      double w = std::exp(-static_cast<double>(x) * static_cast<double>(x) /
                          (2.0 * sigma * sigma));
      uint64_t iw = static_cast<uint64_t>(std::llround(w * scale));
      weights_[idx(x)] = iw;
      weights_[idx(-x)] = iw;
    }
    if (weights_[idx(0)] == 0)
      throw ValidationError("ChiSampler: degenerate weight table");
    cumulative_.resize(weights_.size());
    uint64_t acc = 0;
    for (size_t i = 0; i < weights_.size(); ++i) {
      acc += weights_[i];
      cumulative_[i] = acc;
    }
    total_ = acc;
  }

  double sigma() const { return sigma_; }
  int64_t tail_bound() const { return tail_; }

  /// One sample from the table (value in [-tail, tail]).
  int64_t sample(DetRng& rng) const {
    uint64_t u = rng.below(total_);
    // first index with cumulative > u
    size_t lo = 0, hi = cumulative_.size() - 1;
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (cumulative_[mid] > u)
        hi = mid;
      else
        lo = mid + 1;
    }
    return static_cast<int64_t>(lo) - tail_;
  }

  /// A ring element with i.i.d. chi coefficients, reduced into [0, q).
  RingElement sample_ring(const Ring& ring, DetRng& rng) const {
    std::vector<int64_t> c(ring.params().d);
    for (auto& v : c) v = sample(rng);
    return ring.from_centered(c);
  }

  /// Exact i-th central moment: sum_x x^i * w(x) / total.
  Rational central_moment(uint32_t order) const {
    if (order < 1) throw ValidationError("central_moment: order must be >= 1");
    BigInt num = 0;
    for (int64_t x = -tail_; x <= tail_; ++x) {
      BigInt term = BigInt(x);
      BigInt pw = 1;
      for (uint32_t k = 0; k < order; ++k) pw *= term;
      num += pw * BigInt(weights_[idx(x)]);
    }
    return Rational(num, BigInt(total_));
  }

  uint64_t weight(int64_t x) const {
    return (x < -tail_ || x > tail_) ? 0 : weights_[idx(x)];
  }
  uint64_t total_weight() const { return total_; }

 private:
  size_t idx(int64_t x) const { return static_cast<size_t>(x + tail_); }

  double sigma_;
  int64_t tail_;
  std::vector<uint64_t> weights_;
  std::vector<uint64_t> cumulative_;
  uint64_t total_;
};

}  // namespace latfold

#endif  // LATFOLD_SAMPLER_HPP
