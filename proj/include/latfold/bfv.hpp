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

#ifndef LATFOLD_BFV_HPP
#define LATFOLD_BFV_HPP

#include <cstdint>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/ring.hpp"
#include "latfold/rng.hpp"
#include "latfold/sampler.hpp"

namespace latfold {

struct SecretKey {
  RingElement s;
};

struct PublicKey {
  RingElement a;
  RingElement b;  // b = -a*s + e
};

struct KeyPair {
  SecretKey sk;
  PublicKey pk;
};

/// A ciphertext is the pair (c0, c1); decryption computes c0 + c1*s.
struct Ciphertext {
  RingElement c0;
  RingElement c1;
  bool operator==(const Ciphertext&) const = default;
};

/// Plaintexts are ring elements with coefficients in [0, p).
struct Plaintext {
  uint64_t p = 0;
  std::vector<uint64_t> coeffs;
  bool operator==(const Plaintext&) const = default;
};

inline Plaintext random_plaintext(const Ring& ring, DetRng& rng) {
  const auto& params = ring.params();
  Plaintext m{params.p, std::vector<uint64_t>(params.d)};
  for (auto& v : m.coeffs) v = rng.below(params.p);
  return m;
}

inline void check_plaintext(const Ring& ring, const Plaintext& m) {
  const auto& params = ring.params();
  if (m.p != params.p || m.coeffs.size() != params.d)
    throw ValidationError("plaintext does not match parameters");
  for (uint64_t v : m.coeffs)
    if (v >= params.p)
      throw ValidationError("plaintext coefficient out of range");
}

inline KeyPair keygen(const Ring& ring, const ChiSampler& chi, DetRng& rng) {
  auto s = chi.sample_ring(ring, rng);
  auto a = ring.uniform(rng);
  auto e = chi.sample_ring(ring, rng);
  auto b = ring.add(ring.neg(ring.mul(a, s)), e);
  return KeyPair{SecretKey{s}, PublicKey{a, b}};
}

/// (delta*m + b*u + e1, a*u + e2) with u, e1, e2 from chi.
inline Ciphertext encrypt(const Ring& ring, const PublicKey& pk,
                          const Plaintext& m, const ChiSampler& chi,
                          DetRng& rng) {
  check_plaintext(ring, m);
  const auto& params = ring.params();
  auto u = chi.sample_ring(ring, rng);
  auto e1 = chi.sample_ring(ring, rng);
  auto e2 = chi.sample_ring(ring, rng);
  auto scaled = ring.scalar_mul(params.delta, ring.from_coeffs(m.coeffs));
  auto c0 = ring.add(ring.add(scaled, ring.mul(pk.b, u)), e1);
  auto c1 = ring.add(ring.mul(pk.a, u), e2);
  return Ciphertext{c0, c1};
}

/// Zero-randomness encryption (u = e1 = e2 = 0): ct = (delta*m, 0).
inline Ciphertext encrypt_noiseless(const Ring& ring, const Plaintext& m) {
  check_plaintext(ring, m);
  auto scaled =
      ring.scalar_mul(ring.params().delta, ring.from_coeffs(m.coeffs));
  return Ciphertext{scaled, ring.zero()};
}

/// Scale each centered coefficient of c0 + c1*s by p/q, round to nearest
/// (ties away from zero), reduce mod p.  Correct whenever the noise norm is
/// below delta/2.
inline Plaintext decrypt(const Ring& ring, const SecretKey& sk,
                         const Ciphertext& ct) {
  const auto& params = ring.params();
  auto raw = ring.add(ct.c0, ring.mul(ct.c1, sk.s));
  Plaintext m{params.p, std::vector<uint64_t>(params.d)};
  for (uint64_t i = 0; i < params.d; ++i) {
    int64_t w = centered(raw.coeffs[i], params.q);
    int64_t r = round_div(static_cast<int128>(params.p) * w,
                          static_cast<int128>(params.q));
    int64_t v = r % static_cast<int64_t>(params.p);
    if (v < 0) v += static_cast<int64_t>(params.p);
    m.coeffs[i] = static_cast<uint64_t>(v);
  }
  return m;
}

inline Ciphertext hom_add(const Ring& ring, const Ciphertext& x,
                          const Ciphertext& y) {
  return Ciphertext{ring.add(x.c0, y.c0), ring.add(x.c1, y.c1)};
}

/// Add a uniform polynomial with coefficients in [-target_norm, target_norm]
/// to c0.  Stands in for multiplication-driven noise growth: the plaintext
/// survives iff the resulting noise stays below delta/2.
inline Ciphertext inject_noise(const Ring& ring, const Ciphertext& ct,
                               uint64_t target_norm, DetRng& rng) {
  const auto& params = ring.params();
  if (target_norm >= (params.q + 1) / 2)
    throw ValidationError("inject_noise: target_norm must be < q/2");
  if (target_norm == 0) return ct;
  std::vector<int64_t> n(params.d);
  uint64_t width = 2 * target_norm + 1;
  for (auto& v : n)
    v = static_cast<int64_t>(rng.below(width)) -
        static_cast<int64_t>(target_norm);
  auto noisy = ring.add(ct.c0, ring.from_centered(n));
  return Ciphertext{noisy, ct.c1};
}

/// Test oracle: exact noise norm ||c0 + c1*s - delta*m||_inf.  Requires the
/// secret key and the true plaintext; never used inside any transform.
inline uint64_t noise_of(const Ring& ring, const SecretKey& sk,
                         const Ciphertext& ct, const Plaintext& m) {
  check_plaintext(ring, m);
  auto raw = ring.add(ct.c0, ring.mul(ct.c1, sk.s));
  auto scaled =
      ring.scalar_mul(ring.params().delta, ring.from_coeffs(m.coeffs));
  return ring.inf_norm(ring.sub(raw, scaled));
}

/// Trusted baseline bootstrap: decrypt, then re-encrypt fresh.
inline Ciphertext oracle_bootstrap(const Ring& ring, const SecretKey& sk,
                                   const PublicKey& pk, const Ciphertext& ct,
                                   const ChiSampler& chi, DetRng& rng) {
  auto m = decrypt(ring, sk, ct);
  return encrypt(ring, pk, m, chi, rng);
}

}  // namespace latfold

#endif  // LATFOLD_BFV_HPP
