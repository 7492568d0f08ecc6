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

#ifndef LATFOLD_RELATIONS_HPP
#define LATFOLD_RELATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latfold/bfv.hpp"
#include "latfold/errors.hpp"
#include "latfold/ring.hpp"
#include "latfold/sampler.hpp"

namespace latfold {

/// Magnitude-bounding relation for one prime factor p_i of the plaintext
/// modulus: evaluates floor(q/p_i) * (c0 - psi_i(c0)).
struct MagnitudeRelation {
  uint64_t prime_factor;
  uint64_t delta_i;  // floor(q / prime_factor)
};

/// Structural-consistency relation for one Galois index j: evaluates
/// (g - round_delta(g))^k with g = sigma_j(c1)*a_j + sigma_j(c0)*b_j,
/// a_j = sigma_j(a), b_j = sigma_j(b), and k the nilpotency index of q.
struct StructuralRelation {
  uint64_t index_j;
  RingElement a_j;
  RingElement b_j;
  uint32_t power_k;
};

/// Statistical freshness relation: evaluates
/// centered(Trace((c0 - round_delta(c0))^i)) / d - mu_i as an exact rational.
struct MomentRelation {
  uint32_t order;
  Rational mu;
};

using Relation = std::variant<MagnitudeRelation, StructuralRelation, MomentRelation>;

inline bool is_moment(const Relation& r) {
  return std::holds_alternative<MomentRelation>(r);
}

inline std::string relation_kind(const Relation& r) {
  if (std::holds_alternative<MagnitudeRelation>(r)) return "magnitude";
  if (std::holds_alternative<StructuralRelation>(r)) return "structural";
  return "moment";
}

/// Either a ring element (magnitude/structural) or an exact rational (moment).
struct RelationValue {
  std::optional<RingElement> ring_value;
  std::optional<Rational> scalar_value;
};

/// Pass threshold for one relation: integer infinity-norm bound for
/// ring-valued relations, rational bound for moment relations.
struct ToleranceEntry {
  bool is_scalar = false;
  uint64_t norm_bound = 0;
  Rational scalar_bound = 0;
};

struct CalibrationRecord {
  uint64_t seed = 0;
  uint32_t trials = 0;
  double margin = 1.1;
  std::vector<uint64_t> max_ring_norm;   // aligned with relations; 0 for moments
  std::vector<Rational> max_scalar_abs;  // aligned with relations; 0 for ring
};

/// Ordered relation list with calibrated pass thresholds.  A fresh set is a
/// noise set plus trailing moment relations; the noise set is always the
/// prefix, so containment is structural.
struct GeneratorSet {
  Params params;
  std::vector<Relation> relations;
  size_t noise_count = 0;  // leading relations forming the noise set
  std::vector<ToleranceEntry> tolerances;
  std::optional<CalibrationRecord> calibration;

  bool calibrated() const { return calibration.has_value(); }
  bool is_fresh_set() const { return relations.size() > noise_count; }
};

/// Smallest k with rad(Z_q)^k = 0: the maximum exponent over the prime-power
/// factorization of q.
inline uint32_t nilpotency_index(const std::vector<Factor>& q_factors) {
  if (q_factors.empty())
    throw ValidationError("nilpotency_index: empty factorization");
  uint32_t k = 0;
  for (const auto& f : q_factors) k = std::max(k, f.exponent);
  return k;
}

/// Public lift-and-reduce map psi_i: centered-lift each coefficient, round to
/// the nearest multiple of floor(q/p_i) with ties toward zero, reduce mod q.
/// Idempotent on all preset parameter sets.
inline RingElement lift_reduce_psi(const Ring& ring, const RingElement& e,
                                   uint64_t p_i) {
  const auto& params = ring.params();
  if (p_i < 2 || params.p % p_i != 0)
    throw ValidationError("lift_reduce_psi: p_i must divide p");
  int64_t step = static_cast<int64_t>(params.q / p_i);
  auto lift = ring.centered_lift(e);
  for (auto& c : lift) c = round_to_multiple(c, step);
  return ring.from_centered(lift);
}

/// round_delta: nearest multiple of delta = floor(q/p) per centered
/// coefficient, ties toward zero.
inline RingElement round_delta(const Ring& ring, const RingElement& e) {
  int64_t step = static_cast<int64_t>(ring.params().delta);
  auto lift = ring.centered_lift(e);
  for (auto& c : lift) c = round_to_multiple(c, step);
  return ring.from_centered(lift);
}

/// Deterministic public automorphism schedule: j_t = 3^t mod N, t = 1..kappa.
inline std::vector<uint64_t> automorphism_schedule(uint64_t N, uint32_t kappa) {
  std::vector<uint64_t> out;
  uint64_t j = 1;
  for (uint32_t t = 1; t <= kappa; ++t) {
    j = (j * 3) % N;
    out.push_back(j);
  }
  return out;
}

/// Magnitude relations for each distinct prime factor of p, then kappa
/// structural relations from the automorphism schedule.
inline GeneratorSet construct_noise_generators(const Ring& ring,
                                               const PublicKey& pk,
                                               uint32_t kappa) {
  const auto& params = ring.params();
  if (params.p <= 1)
    throw ValidationError("construct_noise_generators: degenerate plaintext modulus");
  GeneratorSet gens;
  gens.params = params;

  for (const auto& [prime, exp] : factorize(params.p)) {
    (void)exp;
    gens.relations.push_back(
        MagnitudeRelation{prime, params.q / prime});
  }

  uint32_t k = nilpotency_index(params.q_factors);
  for (uint64_t j : automorphism_schedule(params.N, kappa)) {
    gens.relations.push_back(StructuralRelation{
        j, ring.apply_automorphism(pk.a, j), ring.apply_automorphism(pk.b, j),
        k});
  }
  gens.noise_count = gens.relations.size();
  return gens;
}

/// Noise relations plus moment relations of order 1..min(kappa, 4); the
/// noise set is the exact ordered prefix.
inline GeneratorSet construct_fresh_generators(const Ring& ring,
                                               const PublicKey& pk,
                                               const ChiSampler& chi,
                                               uint32_t kappa) {
  GeneratorSet gens = construct_noise_generators(ring, pk, kappa);
  uint32_t k_moments = std::min<uint32_t>(kappa, 4);
  for (uint32_t i = 1; i <= k_moments; ++i)
    gens.relations.push_back(MomentRelation{i, chi.central_moment(i)});
  return gens;
}

inline RelationValue eval_relation(const Ring& ring, const Relation& rel,
                                   const Ciphertext& ct) {
  const auto& params = ring.params();
  if (ct.c0.q != params.q || ct.c0.dim() != params.d || ct.c1.q != params.q ||
      ct.c1.dim() != params.d)
    throw ValidationError("eval_relation: ciphertext does not match params");

  if (const auto* mag = std::get_if<MagnitudeRelation>(&rel)) {
    auto residual = ring.sub(ct.c0, lift_reduce_psi(ring, ct.c0, mag->prime_factor));
    return RelationValue{ring.scalar_mul(mag->delta_i, residual), std::nullopt};
  }
  if (const auto* st = std::get_if<StructuralRelation>(&rel)) {
    auto g = ring.add(
        ring.mul(ring.apply_automorphism(ct.c1, st->index_j), st->a_j),
        ring.mul(ring.apply_automorphism(ct.c0, st->index_j), st->b_j));
    auto err = ring.sub(g, round_delta(ring, g));
    return RelationValue{ring.pow(err, st->power_k), std::nullopt};
  }
  const auto& mom = std::get<MomentRelation>(rel);
  auto iso = ring.sub(ct.c0, round_delta(ring, ct.c0));
  auto powed = ring.pow(iso, mom.order);
  int64_t tr = centered(ring.trace(powed), params.q);
  Rational value = Rational(tr, static_cast<int64_t>(params.d)) - mom.mu;
  return RelationValue{std::nullopt, value};
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? -r : r; }

/// Observable used for tolerance tests: centered infinity norm for
/// ring-valued relations, absolute value for moment relations.
struct Observable {
  bool is_scalar;
  uint64_t norm;
  Rational scalar_abs;
  bool exact_zero;
};

inline Observable observe_relation(const Ring& ring, const Relation& rel,
                                   const Ciphertext& ct) {
  auto value = eval_relation(ring, rel, ct);
  if (value.ring_value) {
    uint64_t n = ring.inf_norm(*value.ring_value);
    return Observable{false, n, Rational(0), n == 0};
  }
  Rational a = rational_abs(*value.scalar_value);
  return Observable{true, 0, a, a == 0};
}

struct VanishingEntry {
  size_t index;
  std::string kind;
  bool is_scalar;
  uint64_t norm;
  Rational scalar_abs;
  bool pass;
  bool exact_zero;
};

struct VanishingReport {
  bool pass = true;
  std::vector<VanishingEntry> entries;
};

/// Tolerance-calibrated membership test.  `count` limits the check to the
/// first `count` relations (e.g. the noise prefix of a fresh set); 0 means
/// all.  Throws CalibrationError when the set has no tolerances.
inline VanishingReport is_in_vanishing_set(const Ring& ring,
                                           const GeneratorSet& gens,
                                           const Ciphertext& ct,
                                           size_t count = 0) {
  if (!gens.calibrated())
    throw CalibrationError("is_in_vanishing_set: generator set is not calibrated");
  if (count == 0 || count > gens.relations.size())
    count = gens.relations.size();
  VanishingReport report;
  for (size_t i = 0; i < count; ++i) {
    auto obs = observe_relation(ring, gens.relations[i], ct);
    const auto& tol = gens.tolerances[i];
    bool pass = obs.is_scalar ? obs.scalar_abs <= tol.scalar_bound
                              : obs.norm <= tol.norm_bound;
    report.entries.push_back(VanishingEntry{i, relation_kind(gens.relations[i]),
                                            obs.is_scalar, obs.norm,
                                            obs.scalar_abs, pass,
                                            obs.exact_zero});
    report.pass = report.pass && pass;
  }
  return report;
}

/// Run `trials` fresh encryptions on a dedicated seed and fix each
/// tolerance at max observed value * 1.1 (rounded up for integer norms).
/// Rerunning with identical inputs reproduces the same tolerances.
inline void calibrate(const Ring& ring, GeneratorSet& gens, const PublicKey& pk,
                      const ChiSampler& chi, uint32_t trials, uint64_t seed) {
  if (trials < 1) throw ValidationError("calibrate: trials must be >= 1");
  CalibrationRecord record;
  record.seed = seed;
  record.trials = trials;
  record.max_ring_norm.assign(gens.relations.size(), 0);
  record.max_scalar_abs.assign(gens.relations.size(), Rational(0));

  DetRng base(seed, streams::kCalibration);
  for (uint32_t t = 0; t < trials; ++t) {
    DetRng rng = base.derive(t);
    auto m = random_plaintext(ring, rng);
    auto ct = encrypt(ring, pk, m, chi, rng);
    for (size_t i = 0; i < gens.relations.size(); ++i) {
      auto obs = observe_relation(ring, gens.relations[i], ct);
      if (obs.is_scalar)
        record.max_scalar_abs[i] =
            std::max(record.max_scalar_abs[i], obs.scalar_abs);
      else
        record.max_ring_norm[i] = std::max(record.max_ring_norm[i], obs.norm);
    }
  }

  gens.tolerances.clear();
  for (size_t i = 0; i < gens.relations.size(); ++i) {
    ToleranceEntry tol;
    if (is_moment(gens.relations[i])) {
      tol.is_scalar = true;
      tol.scalar_bound = record.max_scalar_abs[i] * Rational(11, 10);
    } else {
      tol.is_scalar = false;
      // ceil(1.1 * max)
      tol.norm_bound = (record.max_ring_norm[i] * 11 + 9) / 10;
    }
    gens.tolerances.push_back(tol);
  }
  gens.calibration = record;
}

}  // namespace latfold

#endif  // LATFOLD_RELATIONS_HPP
