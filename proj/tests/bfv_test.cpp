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

#include "latfold/bfv.hpp"

#include <gtest/gtest.h>

#include <set>

#include "latfold/params.hpp"

namespace latfold {
namespace {

class BfvSmall : public ::testing::Test {
 protected:
  Params params = presets::small();
  Ring ring{params};
  ChiSampler chi{params.sigma};
};

TEST_F(BfvSmall, KeygenDeterministicAndNoiseBounded) {
  DetRng r1(params.seed, streams::kKeygen);
  DetRng r2(params.seed, streams::kKeygen);
  auto kp1 = keygen(ring, chi, r1);
  auto kp2 = keygen(ring, chi, r2);
  EXPECT_EQ(kp1.sk.s, kp2.sk.s);
  EXPECT_EQ(kp1.pk.a, kp2.pk.a);
  EXPECT_EQ(kp1.pk.b, kp2.pk.b);

  // recompute e = b + a*s from the outputs
  auto e = ring.add(kp1.pk.b, ring.mul(kp1.pk.a, kp1.sk.s));
  EXPECT_LE(ring.inf_norm(e), static_cast<uint64_t>(params.chi_bound()));
  EXPECT_LE(ring.inf_norm(kp1.sk.s), static_cast<uint64_t>(params.chi_bound()));
}

TEST_F(BfvSmall, DistinctSeedsGiveDistinctPublicKeys) {
  std::set<uint64_t> first_coeffs;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    DetRng rng(seed, streams::kKeygen);
    auto kp = keygen(ring, chi, rng);
    first_coeffs.insert(kp.pk.a.coeffs[0]);
  }
  // collision check, reported as a strong inequality rather than exactness
  EXPECT_GE(first_coeffs.size(), 95u);
}

TEST(BfvTiny, NoiselessEncryptMatchesFormula) {
  Ring ring(presets::tiny());
  Plaintext m{2, {1, 0, 0, 0, 0, 0, 0, 0}};
  auto ct = encrypt_noiseless(ring, m);
  EXPECT_EQ(ct.c0, ring.constant(8));  // delta = 8
  EXPECT_EQ(ct.c1, ring.zero());
}

TEST(BfvTiny, DecryptScaledMessage) {
  Ring ring(presets::tiny());
  ChiSampler chi(3.2);
  DetRng rng(1, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  Ciphertext ct{ring.constant(8), ring.zero()};
  auto m = decrypt(ring, kp.sk, ct);
  EXPECT_EQ(m.coeffs[0], 1u);  // round(8 * 2/17) = 1
  for (size_t i = 1; i < m.coeffs.size(); ++i) EXPECT_EQ(m.coeffs[i], 0u);
}

TEST_F(BfvSmall, RoundTripUnderNoise) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed, streams::kEncrypt);
  for (int t = 0; t < 200; ++t) {
    auto m = random_plaintext(ring, enc);
    auto ct = encrypt(ring, kp.pk, m, chi, enc);
    EXPECT_EQ(decrypt(ring, kp.sk, ct), m);
    EXPECT_LE(noise_of(ring, kp.sk, ct, m), params.fresh_noise_bound());
  }
}

TEST(BfvMedium, RoundTripUnderNoise) {
  Params params = presets::medium();
  Ring ring(params);
  ChiSampler chi(params.sigma);
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed, streams::kEncrypt);
  for (int t = 0; t < 25; ++t) {
    auto m = random_plaintext(ring, enc);
    auto ct = encrypt(ring, kp.pk, m, chi, enc);
    EXPECT_EQ(decrypt(ring, kp.sk, ct), m);
    EXPECT_LE(noise_of(ring, kp.sk, ct, m), params.fresh_noise_bound());
  }
}

TEST_F(BfvSmall, PlaintextRangeEnforced) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  Plaintext bad{params.p, std::vector<uint64_t>(params.d, params.p)};
  DetRng enc(params.seed, streams::kEncrypt);
  EXPECT_THROW(encrypt(ring, kp.pk, bad, chi, enc), ValidationError);
}

TEST_F(BfvSmall, DecryptionFailsJustAboveThreshold) {
  // noise floor(delta/2) + 1 on one coefficient flips m = 0
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  Plaintext zero{params.p, std::vector<uint64_t>(params.d, 0)};
  std::vector<int64_t> spike(params.d, 0);
  spike[0] = static_cast<int64_t>(params.delta / 2 + 1);
  Ciphertext ct{ring.from_centered(spike), ring.zero()};
  EXPECT_EQ(noise_of(ring, kp.sk, ct, zero), params.delta / 2 + 1);
  auto dec = decrypt(ring, kp.sk, ct);
  EXPECT_NE(dec.coeffs[0], 0u);
}

TEST_F(BfvSmall, DecryptionSucceedsJustBelowThreshold) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed + 1, streams::kEncrypt);
  for (int t = 0; t < 20; ++t) {
    auto m = random_plaintext(ring, enc);
    auto scaled = ring.scalar_mul(params.delta, ring.from_coeffs(m.coeffs));
    std::vector<int64_t> spike(params.d, 0);
    spike[t % params.d] =
        (t % 2 ? 1 : -1) * (static_cast<int64_t>(params.delta) / 2 - 1);
    Ciphertext ct{ring.add(scaled, ring.from_centered(spike)), ring.zero()};
    EXPECT_EQ(decrypt(ring, kp.sk, ct), m);
  }
}

TEST_F(BfvSmall, HomAddBehaviour) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed, streams::kEncrypt);
  auto m = random_plaintext(ring, enc);
  auto ct = encrypt(ring, kp.pk, m, chi, enc);

  // adding a zero-randomness encryption of 0 leaves the plaintext unchanged
  Plaintext zero{params.p, std::vector<uint64_t>(params.d, 0)};
  auto sum = hom_add(ring, ct, encrypt_noiseless(ring, zero));
  EXPECT_EQ(decrypt(ring, kp.sk, sum), m);

  // noise triangle inequality, measured
  for (int t = 0; t < 200; ++t) {
    auto mx = random_plaintext(ring, enc);
    auto my = random_plaintext(ring, enc);
    auto x = encrypt(ring, kp.pk, mx, chi, enc);
    auto y = encrypt(ring, kp.pk, my, chi, enc);
    Plaintext msum{params.p, std::vector<uint64_t>(params.d)};
    for (uint64_t i = 0; i < params.d; ++i)
      msum.coeffs[i] = (mx.coeffs[i] + my.coeffs[i]) % params.p;
    auto z = hom_add(ring, x, y);
    EXPECT_LE(noise_of(ring, kp.sk, z, msum),
              noise_of(ring, kp.sk, x, mx) + noise_of(ring, kp.sk, y, my));
    EXPECT_EQ(decrypt(ring, kp.sk, z), msum);
  }
}

TEST(BfvTiny, HomAddWrapsModP) {
  // 1 + 1 = 0 mod 2 on noiseless ciphertexts
  Ring ring(presets::tiny());
  ChiSampler chi(3.2);
  DetRng rng(1, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  Plaintext one{2, {1, 0, 0, 0, 0, 0, 0, 0}};
  auto sum = hom_add(ring, encrypt_noiseless(ring, one),
                     encrypt_noiseless(ring, one));
  auto dec = decrypt(ring, kp.sk, sum);
  // 8 + 8 = 16 = -1 mod 17; round(-1 * 2/17) = 0 mod 2
  EXPECT_EQ(dec.coeffs[0], 0u);
}

TEST_F(BfvSmall, InjectNoiseContract) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed, streams::kEncrypt);
  DetRng noise(params.seed, streams::kNoise);

  auto m = random_plaintext(ring, enc);
  auto ct = encrypt(ring, kp.pk, m, chi, enc);

  // target 0: unchanged
  EXPECT_EQ(inject_noise(ring, ct, 0, noise), ct);

  // out-of-range target rejected
  EXPECT_THROW(inject_noise(ring, ct, (params.q + 1) / 2, noise),
               ValidationError);

  // target delta/4 on a fresh ciphertext still decrypts (B_fresh << delta/4)
  ASSERT_LT(params.fresh_noise_bound() + params.delta / 4, params.delta / 2);
  int survived = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    auto mt = random_plaintext(ring, enc);
    auto c = encrypt(ring, kp.pk, mt, chi, enc);
    auto noisy = inject_noise(ring, c, params.delta / 4, noise);
    if (decrypt(ring, kp.sk, noisy) == mt) ++survived;
  }
  EXPECT_EQ(survived, trials);

  // target 2*delta: decryption failure nearly always (d independent coeffs)
  int failed = 0;
  for (int t = 0; t < trials; ++t) {
    auto mt = random_plaintext(ring, enc);
    auto c = encrypt(ring, kp.pk, mt, chi, enc);
    auto noisy = inject_noise(ring, c, 2 * params.delta, noise);
    if (!(decrypt(ring, kp.sk, noisy) == mt)) ++failed;
  }
  EXPECT_GE(failed, trials * 99 / 100);

  // noise_of moves by at most the injected norm
  uint64_t before = noise_of(ring, kp.sk, ct, m);
  uint64_t target = 1000;
  auto noisy = inject_noise(ring, ct, target, noise);
  uint64_t after = noise_of(ring, kp.sk, noisy, m);
  EXPECT_LE(after, before + target);
  EXPECT_GE(after + target, before);
}

TEST_F(BfvSmall, NoiseOracleOnExactCiphertext) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed, streams::kEncrypt);
  auto m = random_plaintext(ring, enc);
  EXPECT_EQ(noise_of(ring, kp.sk, encrypt_noiseless(ring, m), m), 0u);
}

TEST_F(BfvSmall, OracleBootstrap) {
  DetRng rng(params.seed, streams::kKeygen);
  auto kp = keygen(ring, chi, rng);
  DetRng enc(params.seed, streams::kEncrypt);
  DetRng noise(params.seed, streams::kNoise);
  DetRng boot1(params.seed, streams::kBootstrap);
  DetRng boot2(params.seed, streams::kBootstrap);

  for (int t = 0; t < 100; ++t) {
    auto m = random_plaintext(ring, enc);
    auto ct = encrypt(ring, kp.pk, m, chi, enc);
    // noisy but decryptable
    auto noisy = inject_noise(ring, ct, params.delta / 4, noise);
    ASSERT_EQ(decrypt(ring, kp.sk, noisy), m);
    auto fresh = oracle_bootstrap(ring, kp.sk, kp.pk, noisy, chi, boot1);
    EXPECT_EQ(decrypt(ring, kp.sk, fresh), m);
    EXPECT_LE(noise_of(ring, kp.sk, fresh, m), params.fresh_noise_bound());
  }

  // deterministic under a fixed stream
  auto m = random_plaintext(ring, enc);
  auto ct = encrypt(ring, kp.pk, m, chi, enc);
  DetRng s1(99, streams::kBootstrap), s2(99, streams::kBootstrap);
  EXPECT_EQ(oracle_bootstrap(ring, kp.sk, kp.pk, ct, chi, s1),
            oracle_bootstrap(ring, kp.sk, kp.pk, ct, chi, s2));

  // idempotent in plaintext and noise class
  DetRng s3(100, streams::kBootstrap);
  auto once = oracle_bootstrap(ring, kp.sk, kp.pk, ct, chi, s3);
  auto twice = oracle_bootstrap(ring, kp.sk, kp.pk, once, chi, s3);
  EXPECT_EQ(decrypt(ring, kp.sk, twice), m);
  EXPECT_LE(noise_of(ring, kp.sk, twice, m), params.fresh_noise_bound());
}

}  // namespace
}  // namespace latfold
