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

#ifndef LATFOLD_CRT_HPP
#define LATFOLD_CRT_HPP

#include <cstdint>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/modmath.hpp"
#include "latfold/ntt.hpp"
#include "latfold/ring.hpp"

namespace latfold {

/// A set of splitting primes with per-prime evaluation tables and the Garner
/// coefficients needed to reconstruct integers modulo the prime product.
/// This is the fiber structure used by the folding pipeline: an integer
/// coefficient vector with entries in (-P/2, P/2] is faithfully encoded by
/// its per-prime slot vectors and recovered exactly.
class CrtSplit {
 public:
  CrtSplit(std::vector<uint64_t> primes, uint64_t d) : d_(d) {
    if (primes.empty()) throw ValidationError("CrtSplit: no primes given");
    product_ = 1;
    for (uint64_t pt : primes) {
      plans_.emplace_back(pt, d);  // validates pt = 1 mod 2d and primality
      product_ *= pt;
      if (product_ > (static_cast<uint128>(1) << 120))
        throw ValidationError("CrtSplit: prime product too large");
    }
    garner_inv_.resize(primes.size(), 0);
    for (size_t t = 1; t < primes.size(); ++t) {
      uint64_t pt = primes[t];
      uint64_t acc = 1;
      for (size_t s = 0; s < t; ++s) acc = mul_mod(acc, primes[s] % pt, pt);
      garner_inv_[t] = inv_mod(acc, pt);
    }
  }

  uint64_t dim() const { return d_; }
  uint128 product() const { return product_; }
  size_t prime_count() const { return plans_.size(); }
  uint64_t prime(size_t t) const { return plans_[t].prime(); }
  const NttPlan& plan(size_t t) const { return plans_[t]; }

  std::vector<uint64_t> primes() const {
    std::vector<uint64_t> out;
    out.reserve(plans_.size());
    for (const auto& p : plans_) out.push_back(p.prime());
    return out;
  }

  /// Re-derives every table invariant; throws IntegrityError on any breach.
  void validate() const {
    for (const auto& plan : plans_) {
      uint64_t pt = plan.prime();
      const auto& roots = plan.roots();
      if (roots.size() != d_)
        throw IntegrityError("CrtSplit: wrong root count");
      for (size_t i = 0; i < roots.size(); ++i) {
        if (i > 0 && roots[i] <= roots[i - 1])
          throw IntegrityError("CrtSplit: roots not strictly ascending");
        if (pow_mod(roots[i], d_, pt) != pt - 1)
          throw IntegrityError("CrtSplit: root^d != -1");
      }
      // forward/inverse round trip on a probe vector
      std::vector<uint64_t> probe(d_);
      for (uint64_t i = 0; i < d_; ++i) probe[i] = (i * i + 3) % pt;
      if (plan.inverse(plan.forward(probe)) != probe)
        throw IntegrityError("CrtSplit: transform round trip failed");
    }
  }

  /// Per-prime slot vectors of an integer coefficient vector.  Slots of
  /// prime t are evaluations at plan(t).roots() in canonical order.
  std::vector<std::vector<uint64_t>> decompose(
      const std::vector<int64_t>& coeffs) const {
    if (coeffs.size() != d_)
      throw ValidationError("CrtSplit::decompose: dimension mismatch");
    std::vector<std::vector<uint64_t>> out;
    out.reserve(plans_.size());
    for (const auto& plan : plans_) {
      int64_t pt = static_cast<int64_t>(plan.prime());
      std::vector<uint64_t> res(d_);
      for (uint64_t i = 0; i < d_; ++i) {
        int64_t m = coeffs[i] % pt;
        if (m < 0) m += pt;
        res[i] = static_cast<uint64_t>(m);
      }
      out.push_back(plan.forward(res));
    }
    return out;
  }

  /// Inverse of decompose(): recovers the centered integer vector in
  /// (-P/2, P/2], P the prime product.  Exact for any input whose
  /// coefficients lie in that range.
  std::vector<int64_t> reconstruct(
      const std::vector<std::vector<uint64_t>>& slots) const {
    if (slots.size() != plans_.size())
      throw ValidationError("CrtSplit::reconstruct: prime count mismatch");
    std::vector<std::vector<uint64_t>> residues;
    residues.reserve(plans_.size());
    for (size_t t = 0; t < plans_.size(); ++t)
      residues.push_back(plans_[t].inverse(slots[t]));

    std::vector<int64_t> out(d_);
    int128 half = static_cast<int128>(product_ >> 1);
    for (uint64_t i = 0; i < d_; ++i) {
      // Garner's algorithm, accumulating the value directly.
      int128 value = residues[0][i];
      int128 mod_acc = plans_[0].prime();
      for (size_t t = 1; t < plans_.size(); ++t) {
        uint64_t pt = plans_[t].prime();
        uint64_t cur = static_cast<uint64_t>(value % pt);
        uint64_t diff = sub_mod(residues[t][i], cur, pt);
        uint64_t k = mul_mod(diff, garner_inv_[t], pt);
        value += mod_acc * static_cast<int128>(k);
        mod_acc *= pt;
      }
      if (value > half) value -= static_cast<int128>(product_);
      out[i] = static_cast<int64_t>(value);
    }
    return out;
  }

 private:
  uint64_t d_;
  std::vector<NttPlan> plans_;
  std::vector<uint64_t> garner_inv_;
  uint128 product_;
};

/// Ring-element round trip through a split: centered lift, per-prime slots.
/// Requires the prime product to cover q unless mod_product is set (the
/// decomposition is then only meaningful modulo the product).
inline std::vector<std::vector<uint64_t>> crt_decompose(
    const Ring& ring, const RingElement& e, const CrtSplit& split,
    bool mod_product = false) {
  if (!mod_product && split.product() < ring.params().q)
    throw ValidationError("crt_decompose: prime product does not cover q");
  return split.decompose(ring.centered_lift(e));
}

/// Inverse of crt_decompose: reconstruct and re-reduce into R_q.
inline RingElement crt_reconstruct(
    const Ring& ring, const CrtSplit& split,
    const std::vector<std::vector<uint64_t>>& slots) {
  return ring.from_centered(split.reconstruct(slots));
}

}  // namespace latfold

#endif  // LATFOLD_CRT_HPP
