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

#ifndef LATFOLD_MODMATH_HPP
#define LATFOLD_MODMATH_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "latfold/errors.hpp"

namespace latfold {

using int128 = __int128;
using uint128 = unsigned __int128;

/// a * b mod m for 64-bit operands, exact via 128-bit intermediate.
inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<uint128>(a) * b) % m);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;  // a, b < m <= 2^63 so no overflow
  return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Modular inverse for gcd(a, m) = 1; throws otherwise.
inline uint64_t inv_mod(uint64_t a, uint64_t m) {
  int128 t = 0, nt = 1;
  int128 r = m, nr = a % m;
  while (nr != 0) {
    int128 quot = r / nr;
    int128 tmp = t - quot * nt;
    t = nt;
    nt = tmp;
    tmp = r - quot * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw ValidationError("inv_mod: operand not invertible");
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                      23ull, 29ull, 31ull, 37ull}) {
    if (n == sp) return true;
    if (n % sp == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Prime factorization by trial division; adequate for the moduli used here
/// (plaintext moduli and NTT-prime cofactors are all small or smooth).
inline std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
  if (n < 2) throw ValidationError("factorize: input must be >= 2");
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    uint32_t e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Centered representative of v mod q in [-floor(q/2), ceil(q/2)).
inline int64_t centered(uint64_t v, uint64_t q) {
  uint64_t half_up = (q + 1) / 2;  // ceil(q/2)
  return v >= half_up ? static_cast<int64_t>(v) - static_cast<int64_t>(q)
                      : static_cast<int64_t>(v);
}

/// Inverse of centered(): reduce a signed value into [0, q).
inline uint64_t from_centered(int64_t v, uint64_t q) {
  int64_t m = v % static_cast<int64_t>(q);
  if (m < 0) m += static_cast<int64_t>(q);
  return static_cast<uint64_t>(m);
}

/// Nearest multiple of step to x, ties toward zero. step > 0.
inline int64_t round_to_multiple(int64_t x, int64_t step) {
  int64_t ax = x < 0 ? -x : x;
  int64_t k = (2 * ax + step - 1) / (2 * step);
  int64_t r = k * step;
  return x < 0 ? -r : r;
}

/// Nearest integer to num/den (den > 0), ties away from zero.
inline int64_t round_div(int128 num, int128 den) {
  bool neg = num < 0;
  int128 n = neg ? -num : num;
  int128 k = (2 * n + den) / (2 * den);
  return neg ? -static_cast<int64_t>(k) : static_cast<int64_t>(k);
}

/// Smallest generator of the multiplicative group of Z_p, p prime.
inline uint64_t primitive_root(uint64_t p) {
  auto factors = factorize(p - 1);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [f, e] : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw ValidationError("primitive_root: no generator found");
}

}  // namespace latfold

#endif  // LATFOLD_MODMATH_HPP
