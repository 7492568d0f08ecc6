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

#ifndef LATFOLD_RING_HPP
#define LATFOLD_RING_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/modmath.hpp"
#include "latfold/ntt.hpp"
#include "latfold/params.hpp"
#include "latfold/rng.hpp"

namespace latfold {

/// Element of Z_q[x]/(x^d + 1).  Coefficients are stored reduced to [0, q);
/// the centered representation is an explicit, separate view.
struct RingElement {
  uint64_t q = 0;
  std::vector<uint64_t> coeffs;

  uint64_t dim() const { return coeffs.size(); }
  bool operator==(const RingElement&) const = default;
};

/// Arithmetic context for one parameter set: owns the per-factor NTT plans
/// and dispatches multiplication between the NTT and schoolbook paths.
/// All operations are pure functions of their inputs.
class Ring {
 public:
  explicit Ring(Params params) : params_(std::move(params)) {
    params_.validate();
    ntt_ok_ = true;
    for (const auto& f : params_.q_factors) {
      if (f.exponent != 1 || f.prime % (2 * params_.d) != 1) {
        ntt_ok_ = false;
        break;
      }
    }
    if (ntt_ok_) {
      for (const auto& f : params_.q_factors)
        plans_.emplace_back(f.prime, params_.d);
    }
  }

  const Params& params() const { return params_; }
  bool ntt_available() const { return ntt_ok_; }
  const std::vector<NttPlan>& ntt_plans() const { return plans_; }

  RingElement zero() const {
    return RingElement{params_.q, std::vector<uint64_t>(params_.d, 0)};
  }

  RingElement from_coeffs(std::vector<uint64_t> c) const {
    if (c.size() != params_.d)
      throw ValidationError("Ring::from_coeffs: wrong coefficient count");
    for (auto& v : c) v %= params_.q;
    return RingElement{params_.q, std::move(c)};
  }

  RingElement from_centered(const std::vector<int64_t>& c) const {
    if (c.size() != params_.d)
      throw ValidationError("Ring::from_centered: wrong coefficient count");
    std::vector<uint64_t> out(c.size());
    for (size_t i = 0; i < c.size(); ++i)
      out[i] = latfold::from_centered(c[i], params_.q);
    return RingElement{params_.q, std::move(out)};
  }

  /// Constant polynomial c.
  RingElement constant(uint64_t c) const {
    auto e = zero();
    e.coeffs[0] = c % params_.q;
    return e;
  }

  /// Monomial x^k (0 <= k < d).
  RingElement monomial(uint64_t k, uint64_t scale = 1) const {
    if (k >= params_.d) throw ValidationError("Ring::monomial: exponent >= d");
    auto e = zero();
    e.coeffs[k] = scale % params_.q;
    return e;
  }

  RingElement uniform(DetRng& rng) const {
    std::vector<uint64_t> c(params_.d);
    for (auto& v : c) v = rng.below(params_.q);
    return RingElement{params_.q, std::move(c)};
  }

  RingElement add(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    RingElement out{params_.q, std::vector<uint64_t>(params_.d)};
    for (uint64_t i = 0; i < params_.d; ++i)
      out.coeffs[i] = add_mod(a.coeffs[i], b.coeffs[i], params_.q);
    return out;
  }

  RingElement sub(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    RingElement out{params_.q, std::vector<uint64_t>(params_.d)};
    for (uint64_t i = 0; i < params_.d; ++i)
      out.coeffs[i] = sub_mod(a.coeffs[i], b.coeffs[i], params_.q);
    return out;
  }

  RingElement neg(const RingElement& a) const {
    check_one(a);
    RingElement out{params_.q, std::vector<uint64_t>(params_.d)};
    for (uint64_t i = 0; i < params_.d; ++i)
      out.coeffs[i] = a.coeffs[i] == 0 ? 0 : params_.q - a.coeffs[i];
    return out;
  }

  RingElement scalar_mul(uint64_t s, const RingElement& a) const {
    check_one(a);
    RingElement out{params_.q, std::vector<uint64_t>(params_.d)};
    for (uint64_t i = 0; i < params_.d; ++i)
      out.coeffs[i] = mul_mod(s % params_.q, a.coeffs[i], params_.q);
    return out;
  }

  /// Negacyclic product a*b mod (x^d + 1, q).  Uses the per-prime NTT path
  /// when every factor of q splits; falls back to schoolbook otherwise.
  /// Both paths are exact and bit-identical.
  RingElement mul(const RingElement& a, const RingElement& b) const {
    return ntt_ok_ ? mul_ntt(a, b) : mul_schoolbook(a, b);
  }

  RingElement mul_schoolbook(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    const uint64_t d = params_.d, q = params_.q;
    std::vector<uint64_t> c(d, 0);
    for (uint64_t i = 0; i < d; ++i) {
      if (a.coeffs[i] == 0) continue;
      for (uint64_t j = 0; j < d; ++j) {
        uint64_t t = mul_mod(a.coeffs[i], b.coeffs[j], q);
        uint64_t k = i + j;
        if (k < d)
          c[k] = add_mod(c[k], t, q);
        else
          c[k - d] = sub_mod(c[k - d], t, q);  // x^d = -1
      }
    }
    return RingElement{q, std::move(c)};
  }

  RingElement mul_ntt(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    if (!ntt_ok_)
      throw ValidationError("Ring::mul_ntt: no NTT-friendly factorization");
    const uint64_t d = params_.d;
    std::vector<std::vector<uint64_t>> residues;
    residues.reserve(plans_.size());
    for (const auto& plan : plans_) {
      uint64_t pt = plan.prime();
      std::vector<uint64_t> ar(d), br(d);
      for (uint64_t i = 0; i < d; ++i) {
        ar[i] = a.coeffs[i] % pt;
        br[i] = b.coeffs[i] % pt;
      }
      auto as = plan.forward(ar);
      auto bs = plan.forward(br);
      for (uint64_t i = 0; i < d; ++i) as[i] = mul_mod(as[i], bs[i], pt);
      residues.push_back(plan.inverse(as));
    }
    return recombine_residues(residues);
  }

  /// Galois automorphism x -> x^j for odd j coprime to N, acting on
  /// exponents mod N with x^d = -1.
  RingElement apply_automorphism(const RingElement& e, uint64_t j) const {
    check_one(e);
    const uint64_t N = params_.N, d = params_.d, q = params_.q;
    if (j % 2 == 0 || std::gcd(j, N) != 1)
      throw ValidationError("apply_automorphism: index must be odd and coprime to N");
    j %= N;
    RingElement out{q, std::vector<uint64_t>(d, 0)};
    for (uint64_t i = 0; i < d; ++i) {
      if (e.coeffs[i] == 0) continue;
      uint64_t ex = (i * j) % N;
      if (ex < d)
        out.coeffs[ex] = add_mod(out.coeffs[ex], e.coeffs[i], q);
      else
        out.coeffs[ex - d] = sub_mod(out.coeffs[ex - d], e.coeffs[i], q);
    }
    return out;
  }

  /// Trace: sum of all d Galois conjugates.  For power-of-two cyclotomics the
  /// non-constant terms cancel, so the closed form is d * e_0 mod q; the
  /// explicit-sum route is kept in the test oracles.
  uint64_t trace(const RingElement& e) const {
    check_one(e);
    return mul_mod(params_.d % params_.q, e.coeffs[0], params_.q);
  }

  /// Centered representative per coefficient, in [-floor(q/2), ceil(q/2)).
  std::vector<int64_t> centered_lift(const RingElement& e) const {
    check_one(e);
    std::vector<int64_t> out(e.coeffs.size());
    for (size_t i = 0; i < e.coeffs.size(); ++i)
      out[i] = centered(e.coeffs[i], params_.q);
    return out;
  }

  /// Infinity norm of the centered lift.
  uint64_t inf_norm(const RingElement& e) const {
    uint64_t m = 0;
    for (uint64_t v : e.coeffs) {
      int64_t c = centered(v, params_.q);
      uint64_t a = c < 0 ? static_cast<uint64_t>(-c) : static_cast<uint64_t>(c);
      m = std::max(m, a);
    }
    return m;
  }

  /// Ring power by repeated squaring (k >= 1).
  RingElement pow(const RingElement& e, uint32_t k) const {
    if (k == 0) throw ValidationError("Ring::pow: exponent must be >= 1");
    RingElement acc = e;
    --k;
    RingElement base = e;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  /// CRT-recombine per-factor coefficient residues (one vector per q factor,
  /// in q_factors order) back into [0, q).
  RingElement recombine_residues(
      const std::vector<std::vector<uint64_t>>& residues) const {
    if (residues.size() != params_.q_factors.size())
      throw ValidationError("recombine_residues: factor count mismatch");
    const uint64_t d = params_.d;
    if (residues.size() == 1) {
      return RingElement{params_.q, residues[0]};
    }
    std::vector<uint64_t> acc = residues[0];
    uint64_t mod_acc = params_.q_factors[0].prime;
    for (size_t t = 1; t < residues.size(); ++t) {
      uint64_t pt = params_.q_factors[t].prime;
      uint64_t inv = inv_mod(mod_acc % pt, pt);
      for (uint64_t i = 0; i < d; ++i) {
        // x = acc + mod_acc * ((r_t - acc) * inv mod pt)
        uint64_t diff = sub_mod(residues[t][i] % pt, acc[i] % pt, pt);
        uint64_t k = mul_mod(diff, inv, pt);
        acc[i] = acc[i] + mod_acc * k;  // < mod_acc * pt <= q < 2^63
      }
      mod_acc *= pt;
    }
    return RingElement{params_.q, std::move(acc)};
  }

 private:
  void check_one(const RingElement& a) const {
    if (a.q != params_.q || a.coeffs.size() != params_.d)
      throw ValidationError("Ring: element does not match this ring");
  }
  void check_pair(const RingElement& a, const RingElement& b) const {
    check_one(a);
    check_one(b);
  }

  Params params_;
  bool ntt_ok_ = false;
  std::vector<NttPlan> plans_;
};

}  // namespace latfold

#endif  // LATFOLD_RING_HPP
