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

#ifndef LATFOLD_NTT_HPP
#define LATFOLD_NTT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/modmath.hpp"

namespace latfold {

/// All d roots of x^d + 1 modulo `prime`, ascending.  Requires
/// prime = 1 (mod N) with N = 2d; throws a no-split error otherwise.
inline std::vector<uint64_t> find_splitting_roots(uint64_t prime, uint64_t N) {
  if (N < 4 || (N & (N - 1)) != 0)
    throw ValidationError("find_splitting_roots: N must be a power of two");
  if (prime % N != 1)
    throw ValidationError("find_splitting_roots: prime is not 1 mod N");
  if (!is_prime_u64(prime))
    throw ValidationError("find_splitting_roots: modulus is not prime");
  uint64_t d = N / 2;
  uint64_t g = primitive_root(prime);
  uint64_t gamma = pow_mod(g, (prime - 1) / N, prime);  // primitive 2d-th root
  std::vector<uint64_t> roots;
  roots.reserve(d);
  uint64_t r = gamma;
  uint64_t gamma_sq = mul_mod(gamma, gamma, prime);
  for (uint64_t i = 0; i < d; ++i) {
    roots.push_back(r);          // gamma^(2i+1)
    r = mul_mod(r, gamma_sq, prime);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Negacyclic evaluation/interpolation tables for one splitting prime.
///
/// forward() maps coefficients to the vector of evaluations at the d roots
/// of x^d + 1 in ascending root order (the canonical slot order used
/// everywhere in this project); inverse() is its exact inverse.
class NttPlan {
 public:
  NttPlan(uint64_t prime, uint64_t d) : prime_(prime), d_(d) {
    if (d < 2 || (d & (d - 1)) != 0)
      throw ValidationError("NttPlan: d must be a power of two >= 2");
    if (prime % (2 * d) != 1)
      throw ValidationError("NttPlan: prime is not 1 mod 2d");
    if (!is_prime_u64(prime)) throw ValidationError("NttPlan: not a prime");

    uint64_t g = primitive_root(prime);
    gamma_ = pow_mod(g, (prime - 1) / (2 * d), prime);
    omega_ = mul_mod(gamma_, gamma_, prime);
    d_inv_ = inv_mod(d % prime, prime);

    gamma_pow_.resize(d);
    gamma_inv_pow_.resize(d);
    uint64_t gamma_inv = inv_mod(gamma_, prime);
    gamma_pow_[0] = gamma_inv_pow_[0] = 1;
    for (uint64_t i = 1; i < d; ++i) {
      gamma_pow_[i] = mul_mod(gamma_pow_[i - 1], gamma_, prime);
      gamma_inv_pow_[i] = mul_mod(gamma_inv_pow_[i - 1], gamma_inv, prime);
    }

    // Natural transform index j evaluates at gamma^(2j+1); the canonical
    // order sorts those roots by integer value.
    std::vector<uint64_t> root_at(d);
    for (uint64_t j = 0; j < d; ++j)
      root_at[j] = mul_mod(pow_mod(omega_, j, prime), gamma_, prime);
    std::vector<uint64_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](uint64_t a, uint64_t b) { return root_at[a] < root_at[b]; });
    natural_of_canonical_ = order;
    canonical_of_natural_.resize(d);
    for (uint64_t i = 0; i < d; ++i) canonical_of_natural_[order[i]] = i;
    roots_.resize(d);
    for (uint64_t i = 0; i < d; ++i) roots_[i] = root_at[order[i]];
  }

  uint64_t prime() const { return prime_; }
  uint64_t dim() const { return d_; }

  /// Roots in canonical (ascending) order; slot i of forward() holds the
  /// evaluation at roots()[i].
  const std::vector<uint64_t>& roots() const { return roots_; }

  /// Coefficients (values mod prime) -> evaluations at the canonical roots.
  std::vector<uint64_t> forward(const std::vector<uint64_t>& coeffs) const {
    if (coeffs.size() != d_)
      throw ValidationError("NttPlan::forward: dimension mismatch");
    std::vector<uint64_t> v(d_);
    for (uint64_t i = 0; i < d_; ++i)
      v[i] = mul_mod(coeffs[i] % prime_, gamma_pow_[i], prime_);
    cyclic_ntt(v, omega_);
    std::vector<uint64_t> out(d_);
    for (uint64_t i = 0; i < d_; ++i) out[i] = v[natural_of_canonical_[i]];
    return out;
  }

  /// Exact inverse of forward().
  std::vector<uint64_t> inverse(const std::vector<uint64_t>& slots) const {
    if (slots.size() != d_)
      throw ValidationError("NttPlan::inverse: dimension mismatch");
    std::vector<uint64_t> v(d_);
    for (uint64_t i = 0; i < d_; ++i) v[natural_of_canonical_[i]] = slots[i];
    cyclic_ntt(v, inv_mod(omega_, prime_));
    std::vector<uint64_t> out(d_);
    for (uint64_t i = 0; i < d_; ++i)
      out[i] = mul_mod(mul_mod(v[i], d_inv_, prime_), gamma_inv_pow_[i], prime_);
    return out;
  }

 private:
  // In-place iterative radix-2 transform: v[j] <- sum_i v[i] w^(ij).
  void cyclic_ntt(std::vector<uint64_t>& v, uint64_t w) const {
    uint64_t n = d_;
    for (uint64_t i = 1, j = 0; i < n; ++i) {  // bit-reversal permutation
      uint64_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(v[i], v[j]);
    }
    for (uint64_t len = 2; len <= n; len <<= 1) {
      uint64_t wlen = pow_mod(w, n / len, prime_);
      for (uint64_t start = 0; start < n; start += len) {
        uint64_t cur = 1;
        for (uint64_t k = 0; k < len / 2; ++k) {
          uint64_t lo = v[start + k];
          uint64_t hi = mul_mod(v[start + k + len / 2], cur, prime_);
          v[start + k] = add_mod(lo, hi, prime_);
          v[start + k + len / 2] = sub_mod(lo, hi, prime_);
          cur = mul_mod(cur, wlen, prime_);
        }
      }
    }
  }

  uint64_t prime_;
  uint64_t d_;
  uint64_t gamma_;
  uint64_t omega_;
  uint64_t d_inv_;
  std::vector<uint64_t> gamma_pow_;
  std::vector<uint64_t> gamma_inv_pow_;
  std::vector<uint64_t> roots_;
  std::vector<uint64_t> natural_of_canonical_;
  std::vector<uint64_t> canonical_of_natural_;
};

}  // namespace latfold

#endif  // LATFOLD_NTT_HPP
