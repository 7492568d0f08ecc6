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

#include "latfold/ring.hpp"

#include <gtest/gtest.h>

#include "latfold/params.hpp"
#include "latfold/rng.hpp"

namespace latfold {
namespace {

// Independent reference: naive negacyclic product, written from the
// definition.  Kept separate from Ring::mul_schoolbook on purpose.
RingElement naive_mul(const Ring& ring, const RingElement& a,
                      const RingElement& b) {
  uint64_t d = ring.params().d, q = ring.params().q;
  std::vector<int64_t> acc(2 * d, 0);
  std::vector<int64_t> out(d, 0);
  for (uint64_t i = 0; i < d; ++i)
    for (uint64_t j = 0; j < d; ++j) {
      uint128 t = static_cast<uint128>(a.coeffs[i]) * b.coeffs[j] % q;
      acc[i + j] = (acc[i + j] + static_cast<int64_t>(t)) % static_cast<int64_t>(q);
    }
  for (uint64_t k = 0; k < d; ++k) {
    int64_t v = (acc[k] - acc[k + d]) % static_cast<int64_t>(q);
    if (v < 0) v += static_cast<int64_t>(q);
    out[k] = v;
  }
  std::vector<uint64_t> c(d);
  for (uint64_t k = 0; k < d; ++k) c[k] = static_cast<uint64_t>(out[k]);
  return RingElement{q, std::move(c)};
}

TEST(Ring, NegacyclicWrap) {
  Ring ring(presets::tiny());
  // x * x^7 = x^8 = -1 = q-1
  auto prod = ring.mul(ring.monomial(1), ring.monomial(7));
  auto expect = ring.constant(ring.params().q - 1);
  EXPECT_EQ(prod, expect);
  // schoolbook path agrees
  EXPECT_EQ(ring.mul_schoolbook(ring.monomial(1), ring.monomial(7)), expect);
}

TEST(Ring, DifferenceOfSquares) {
  Ring ring(presets::tiny());
  uint64_t q = ring.params().q;
  auto one_plus_x = ring.from_coeffs({1, 1, 0, 0, 0, 0, 0, 0});
  auto one_minus_x = ring.from_coeffs({1, q - 1, 0, 0, 0, 0, 0, 0});
  auto prod = ring.mul(one_plus_x, one_minus_x);
  auto expect = ring.from_coeffs({1, 0, q - 1, 0, 0, 0, 0, 0});
  EXPECT_EQ(prod, expect);
}

TEST(Ring, SchoolbookEqualsNttOnRandomPairs) {
  Ring ring(presets::tiny());
  ASSERT_TRUE(ring.ntt_available());
  DetRng rng(7, 1);
  for (int t = 0; t < 1000; ++t) {
    auto a = ring.uniform(rng);
    auto b = ring.uniform(rng);
    auto s = ring.mul_schoolbook(a, b);
    EXPECT_EQ(s, ring.mul_ntt(a, b));
    EXPECT_EQ(s, naive_mul(ring, a, b));
  }
}

TEST(Ring, SchoolbookEqualsNttCompositeModulus) {
  Ring ring(presets::small());
  ASSERT_TRUE(ring.ntt_available());
  DetRng rng(11, 1);
  for (int t = 0; t < 50; ++t) {
    auto a = ring.uniform(rng);
    auto b = ring.uniform(rng);
    EXPECT_EQ(ring.mul_schoolbook(a, b), ring.mul_ntt(a, b));
  }
}

TEST(Ring, MismatchRejected) {
  Ring tiny(presets::tiny());
  Ring small(presets::small());
  auto a = tiny.zero();
  auto b = small.zero();
  EXPECT_THROW(tiny.mul(a, b), ValidationError);
  EXPECT_THROW(small.add(a, a), ValidationError);
}

TEST(Ring, AutomorphismIdentity) {
  Ring ring(presets::tiny());
  DetRng rng(3, 1);
  for (int t = 0; t < 10; ++t) {
    auto e = ring.uniform(rng);
    EXPECT_EQ(ring.apply_automorphism(e, 1), e);
  }
}

TEST(Ring, AutomorphismExponentReduction) {
  Ring ring(presets::tiny());
  // sigma_3(x^7) = x^21 = x^5 (x^16 = 1)
  EXPECT_EQ(ring.apply_automorphism(ring.monomial(7), 3), ring.monomial(5));
  // sigma_3(x^3) = x^9 = -x^1
  auto expect = ring.neg(ring.monomial(1));
  EXPECT_EQ(ring.apply_automorphism(ring.monomial(3), 3), expect);
}

TEST(Ring, AutomorphismRejectsEvenOrNonCoprime) {
  Ring ring(presets::tiny());
  auto e = ring.monomial(1);
  EXPECT_THROW(ring.apply_automorphism(e, 2), ValidationError);
  EXPECT_THROW(ring.apply_automorphism(e, 4), ValidationError);
}

TEST(Ring, AutomorphismIsRingHomomorphism) {
  Ring ring(presets::tiny());
  DetRng rng(5, 1);
  const uint64_t N = ring.params().N;
  for (int t = 0; t < 100; ++t) {
    auto a = ring.uniform(rng);
    auto b = ring.uniform(rng);
    uint64_t j = 2 * rng.below(N / 2) + 1;  // odd, automatically coprime to 2^k
    auto lhs = ring.apply_automorphism(ring.mul(a, b), j);
    auto rhs = ring.mul(ring.apply_automorphism(a, j),
                        ring.apply_automorphism(b, j));
    EXPECT_EQ(lhs, rhs);
    // additive too
    EXPECT_EQ(ring.apply_automorphism(ring.add(a, b), j),
              ring.add(ring.apply_automorphism(a, j),
                       ring.apply_automorphism(b, j)));
  }
}

TEST(Ring, AutomorphismGroupLaw) {
  Ring ring(presets::tiny());
  DetRng rng(9, 1);
  const uint64_t N = ring.params().N;
  for (int t = 0; t < 100; ++t) {
    auto e = ring.uniform(rng);
    uint64_t j = 2 * rng.below(N / 2) + 1;
    uint64_t k = 2 * rng.below(N / 2) + 1;
    auto lhs = ring.apply_automorphism(ring.apply_automorphism(e, k), j);
    auto rhs = ring.apply_automorphism(e, (j * k) % N);
    EXPECT_EQ(lhs, rhs);
  }
}

// Oracle: trace as the explicit sum over all automorphisms; also checks that
// the non-constant coefficients cancel.
uint64_t trace_explicit(const Ring& ring, const RingElement& e) {
  const uint64_t N = ring.params().N;
  auto sum = ring.zero();
  for (uint64_t j = 1; j < N; j += 2)
    sum = ring.add(sum, ring.apply_automorphism(e, j));
  for (uint64_t i = 1; i < ring.params().d; ++i)
    EXPECT_EQ(sum.coeffs[i], 0u) << "conjugate sum not constant at index " << i;
  return sum.coeffs[0];
}

TEST(Ring, TraceOfConstant) {
  Ring ring(presets::tiny());
  // constant 5 at d=8: explicit sum over all 8 automorphisms gives 40
  EXPECT_EQ(trace_explicit(ring, ring.constant(5)), 40u % ring.params().q);
  EXPECT_EQ(ring.trace(ring.constant(5)), 40u % ring.params().q);
}

TEST(Ring, TraceOfXIsZero) {
  Ring ring(presets::tiny());
  EXPECT_EQ(ring.trace(ring.monomial(1)), 0u);
  EXPECT_EQ(trace_explicit(ring, ring.monomial(1)), 0u);
}

TEST(Ring, TraceClosedFormEqualsExplicitSum) {
  for (auto params : {presets::tiny(), presets::small()}) {
    Ring ring(params);
    DetRng rng(13, 1);
    int trials = params.d <= 8 ? 1000 : 50;
    for (int t = 0; t < trials; ++t) {
      auto e = ring.uniform(rng);
      EXPECT_EQ(ring.trace(e), trace_explicit(ring, e));
    }
  }
}

TEST(Ring, CenteredLift) {
  Ring ring(presets::tiny());
  auto e = ring.from_coeffs({16, 8, 0, 9, 1, 2, 3, 4});
  auto lift = ring.centered_lift(e);
  EXPECT_EQ(lift[0], -1);  // 16 mod 17 -> -1
  EXPECT_EQ(lift[1], 8);   // within centered range
  EXPECT_EQ(lift[3], -8);  // 9 -> -8
  // round trip
  EXPECT_EQ(ring.from_centered(lift), e);
}

TEST(Ring, CenteredLiftRoundTripRandom) {
  Ring ring(presets::small());
  DetRng rng(17, 1);
  for (int t = 0; t < 1000; ++t) {
    auto e = ring.uniform(rng);
    EXPECT_EQ(ring.from_centered(ring.centered_lift(e)), e);
  }
}

TEST(Ring, InfNorm) {
  Ring ring(presets::tiny());
  EXPECT_EQ(ring.inf_norm(ring.zero()), 0u);
  EXPECT_EQ(ring.inf_norm(ring.from_coeffs({16, 0, 0, 0, 0, 0, 0, 0})), 1u);
  EXPECT_EQ(ring.inf_norm(ring.from_coeffs({8, 9, 0, 0, 0, 0, 0, 0})), 8u);
}

TEST(Params, Validation) {
  EXPECT_NO_THROW(presets::tiny().validate());
  EXPECT_NO_THROW(presets::small().validate());
  EXPECT_NO_THROW(presets::medium().validate());

  auto p = presets::tiny();
  p.N = 12;  // not a power of two: general cyclotomics rejected
  EXPECT_THROW(p.validate(), ValidationError);

  p = presets::tiny();
  p.q_factors = {{3, 1}};
  EXPECT_THROW(p.validate(), ValidationError);

  p = presets::tiny();
  p.delta = 9;
  EXPECT_THROW(p.validate(), ValidationError);

  p = presets::tiny();
  p.p = 1;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(Params, PresetArithmetic) {
  auto small = presets::small();
  EXPECT_EQ(small.q % small.p, 1u);  // chosen so rounding stays idempotent
  for (const auto& f : small.q_factors) EXPECT_EQ(f.prime % 512, 1u);

  auto medium = presets::medium();
  EXPECT_EQ(medium.q % medium.p, 0u);  // p | q: nondegenerate projection
  EXPECT_EQ(medium.delta * medium.p, medium.q);
  for (const auto& f : medium.q_factors) EXPECT_EQ(f.prime % 4096, 1u);
}

TEST(Rng, DeterministicAndStreamSeparated) {
  DetRng a(42, 1), b(42, 1), c(42, 2);
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(a.next(), c.next());
  DetRng d1 = a.derive(7), d2 = b.derive(7);
  EXPECT_EQ(d1.next(), d2.next());
}

}  // namespace
}  // namespace latfold
