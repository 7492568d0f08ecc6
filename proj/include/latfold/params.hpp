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

#ifndef LATFOLD_PARAMS_HPP
#define LATFOLD_PARAMS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/modmath.hpp"

namespace latfold {

struct Factor {
  uint64_t prime;
  uint32_t exponent;
  bool operator==(const Factor&) const = default;
};

/// Public scheme parameters.  Only power-of-two cyclotomic indices are
/// accepted, so the quotient polynomial is always x^d + 1 with d = N/2.
struct Params {
  uint64_t N = 0;       ///< cyclotomic index, power of two
  uint64_t d = 0;       ///< ring dimension, N/2
  uint64_t q = 0;       ///< ciphertext modulus (may be composite)
  std::vector<Factor> q_factors;
  uint64_t p = 0;       ///< plaintext modulus, 1 < p < q
  uint64_t delta = 0;   ///< floor(q/p)
  double sigma = 3.2;   ///< noise std-dev of the sampler
  uint32_t kappa = 4;   ///< structural relation count
  uint64_t seed = 42;

  void validate() const {
    if (N < 4 || (N & (N - 1)) != 0)
      throw ValidationError("Params: N must be a power of two >= 4");
    if (d != N / 2) throw ValidationError("Params: d must equal N/2");
    if (q < 2) throw ValidationError("Params: q must be >= 2");
    if (q > (1ull << 62))
      throw ValidationError("Params: q must fit in 62 bits");
    if (q_factors.empty())
      throw ValidationError("Params: q_factors must be supplied");
    uint128 prod = 1;
    for (const auto& f : q_factors) {
      if (f.exponent == 0 || !is_prime_u64(f.prime))
        throw ValidationError("Params: q_factors entries must be prime powers");
      for (uint32_t i = 0; i < f.exponent; ++i) {
        prod *= f.prime;
        if (prod > q) throw ValidationError("Params: q_factors exceed q");
      }
    }
    if (prod != q)
      throw ValidationError("Params: product of q_factors must equal q");
    if (p <= 1 || p >= q)
      throw ValidationError("Params: require 1 < p < q");
    if (delta != q / p) throw ValidationError("Params: delta must be floor(q/p)");
    if (!(sigma > 0)) throw ValidationError("Params: sigma must be positive");
    if (kappa < 1) throw ValidationError("Params: kappa must be >= 1");
  }

  /// Sampler tail bound ceil(6*sigma); coefficients from the noise
  /// distribution never exceed this in absolute value.
  int64_t chi_bound() const {
    return static_cast<int64_t>(std::ceil(6.0 * sigma));
  }

  /// Worst-case infinity norm of fresh encryption noise
  /// u*e_pk + e1 + e2*s:  B_chi * (1 + 2*d*B_chi).
  uint64_t fresh_noise_bound() const {
    uint64_t b = static_cast<uint64_t>(chi_bound());
    return b * (1 + 2 * d * b);
  }

  bool operator==(const Params&) const = default;
};

namespace presets {

/// N=16, q=17, p=2.  Matches the worked splitting example (17 = 1 mod 16);
/// fresh-noise bound exceeds delta/2, so this set is for arithmetic golden
/// tests, not for encrypt/decrypt round trips.
inline Params tiny(uint64_t seed = 42) {
  Params p;
  p.N = 16;
  p.d = 8;
  p.q = 17;
  p.q_factors = {{17, 1}};
  p.p = 2;
  p.delta = 8;
  p.seed = seed;
  p.validate();
  return p;
}

/// N=256, q = 7681 * 80897 (both 1 mod 512), p = 17.  q was chosen with
/// q = 1 mod 17 so that nearest-multiple-of-delta rounding never leaves the
/// centered range, keeping the projection exactly idempotent.
inline Params small(uint64_t seed = 42) {
  Params p;
  p.N = 256;
  p.d = 128;
  p.q = 7681ull * 80897ull;  // 621369857
  p.q_factors = {{7681, 1}, {80897, 1}};
  p.p = 17;
  p.delta = p.q / 17;
  p.seed = seed;
  p.validate();
  return p;
}

/// N=2048, q = 65537 * 17591917608961 (~2^60, both 1 mod 4096), p = 65537.
/// p divides q exactly, so delta = q/p and the projection lattice is the
/// nondegenerate delta*Z^d + q*Z^d.
inline Params medium(uint64_t seed = 42) {
  Params p;
  p.N = 2048;
  p.d = 1024;
  p.q = 65537ull * 17591917608961ull;  // 1152921504338477057
  p.q_factors = {{65537, 1}, {17591917608961ull, 1}};
  p.p = 65537;
  p.delta = 17591917608961ull;
  p.seed = seed;
  p.validate();
  return p;
}

/// Benchmark parameter set for a given ring dimension: q is the product of
/// the two smallest primes = 1 mod 2d at or above 2^30, keeping q_bits
/// constant (~61) across the d sweep.
inline Params bench(uint64_t d, uint64_t seed = 42) {
  if (d < 4 || (d & (d - 1)) != 0)
    throw ValidationError("bench preset: d must be a power of two >= 4");
  Params p;
  p.N = 2 * d;
  p.d = d;
  uint64_t m = 2 * d;
  std::vector<uint64_t> primes;
  uint64_t cand = ((1ull << 30) / m) * m + 1;
  while (primes.size() < 2) {
    if (is_prime_u64(cand)) primes.push_back(cand);
    cand += m;
  }
  p.q = primes[0] * primes[1];
  p.q_factors = {{primes[0], 1}, {primes[1], 1}};
  p.p = 65537;
  p.delta = p.q / p.p;
  p.seed = seed;
  p.validate();
  return p;
}

inline Params by_name(const std::string& name, uint64_t seed = 42) {
  if (name == "tiny") return tiny(seed);
  if (name == "small") return small(seed);
  if (name == "medium") return medium(seed);
  throw ValidationError("unknown preset: " + name);
}

}  // namespace presets

}  // namespace latfold

#endif  // LATFOLD_PARAMS_HPP
