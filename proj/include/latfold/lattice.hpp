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

#ifndef LATFOLD_LATTICE_HPP
#define LATFOLD_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "latfold/errors.hpp"
#include "latfold/exact.hpp"
#include "latfold/params.hpp"

namespace latfold {

/// Integer lattice given by row vectors.  All decision arithmetic in this
/// module is exact (big integers and rationals); no floating point.
struct LatticeBasis {
  std::vector<std::vector<BigInt>> rows;

  size_t dim() const { return rows.size(); }
  size_t cols() const { return rows.empty() ? 0 : rows[0].size(); }

  static LatticeBasis diagonal(size_t n, const BigInt& value) {
    LatticeBasis b;
    b.rows.assign(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) b.rows[i][i] = value;
    return b;
  }
};

struct CvpSolution {
  std::vector<BigInt> vector;    ///< the lattice point
  std::vector<BigInt> coeffs;    ///< integer combination w.r.t. the given rows
  Rational distance_sq;          ///< exact squared Euclidean distance
};

namespace detail {

inline Rational dot_rr(const std::vector<Rational>& a,
                       const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Gso {
  std::vector<std::vector<Rational>> star;  // orthogonalized rows
  std::vector<std::vector<Rational>> mu;    // mu[i][j], j < i
  std::vector<Rational> norm_sq;            // ||b*_i||^2
};

inline Gso gram_schmidt(const LatticeBasis& basis) {
  size_t n = basis.dim();
  Gso g;
  g.star.assign(n, {});
  g.mu.assign(n, std::vector<Rational>(n, 0));
  g.norm_sq.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(basis.cols());
    for (size_t c = 0; c < basis.cols(); ++c) v[c] = Rational(basis.rows[i][c]);
    for (size_t j = 0; j < i; ++j) {
      Rational proj = 0;
      for (size_t c = 0; c < basis.cols(); ++c)
        proj += Rational(basis.rows[i][c]) * g.star[j][c];
      g.mu[i][j] = proj / g.norm_sq[j];
      for (size_t c = 0; c < basis.cols(); ++c)
        v[c] -= g.mu[i][j] * g.star[j][c];
    }
    g.norm_sq[i] = dot_rr(v, v);
    if (g.norm_sq[i] == 0)
      throw ValidationError("lattice: basis rows are linearly dependent");
    g.star[i] = std::move(v);
  }
  return g;
}

/// Order on coefficient vectors used to break distance ties: smaller
/// absolute value first, positive before negative on equal magnitude.
inline bool coeff_less(const std::vector<BigInt>& a,
                       const std::vector<BigInt>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    BigInt aa = bigint_abs(a[i]), ab = bigint_abs(b[i]);
    if (aa != ab) return aa < ab;
    return a[i] > b[i];
  }
  return false;
}

}  // namespace detail

/// Exact determinant (Bareiss fraction-free elimination); used for the
/// lattice-preservation checks.
inline BigInt determinant(const LatticeBasis& basis) {
  size_t n = basis.dim();
  if (n == 0 || basis.cols() != n)
    throw ValidationError("determinant: square basis required");
  std::vector<std::vector<BigInt>> m = basis.rows;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

/// LLL reduction with parameter delta in (1/4, 1].  Output spans the same
/// lattice and satisfies size reduction and the Lovasz condition; all
/// arithmetic exact.  Rounding in size reduction uses ties toward zero.
inline LatticeBasis lll_reduce(LatticeBasis basis,
                               const Rational& delta = Rational(3, 4)) {
  if (delta <= Rational(1, 4) || delta > 1)
    throw ValidationError("lll_reduce: delta must be in (1/4, 1]");
  size_t n = basis.dim();
  if (n == 0) return basis;
  auto gso = detail::gram_schmidt(basis);  // also validates rank

  size_t k = 1;
  while (k < n) {
    for (size_t j = k; j-- > 0;) {  // size-reduce b_k against b_j
      BigInt r = round_rational(gso.mu[k][j]);
      if (r != 0) {
        for (size_t c = 0; c < basis.cols(); ++c)
          basis.rows[k][c] -= r * basis.rows[j][c];
        gso = detail::gram_schmidt(basis);
      }
    }
    Rational lhs = gso.norm_sq[k];
    Rational rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) *
                   gso.norm_sq[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(basis.rows[k], basis.rows[k - 1]);
      gso = detail::gram_schmidt(basis);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return basis;
}

/// Size-reduction + Lovasz predicates; the test oracles call this.
inline bool is_lll_reduced(const LatticeBasis& basis,
                           const Rational& delta = Rational(3, 4)) {
  auto gso = detail::gram_schmidt(basis);
  size_t n = basis.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) {
      Rational a = gso.mu[i][j] < 0 ? Rational(-gso.mu[i][j]) : gso.mu[i][j];
      if (a > Rational(1, 2)) return false;
    }
  for (size_t k = 1; k < n; ++k) {
    Rational rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) *
                   gso.norm_sq[k - 1];
    if (gso.norm_sq[k] < rhs) return false;
  }
  return true;
}

/// Babai nearest-plane on an LLL-reduced basis.  Per-plane rounding ties go
/// toward zero; the output distance is within 2^(n/2) of optimal.
inline CvpSolution babai_nearest_plane(const LatticeBasis& basis,
                                       const std::vector<Rational>& target) {
  if (target.size() != basis.cols())
    throw ValidationError("babai_nearest_plane: dimension mismatch");
  auto gso = detail::gram_schmidt(basis);
  size_t n = basis.dim();
  std::vector<Rational> t = target;
  std::vector<BigInt> coeffs(n, 0);
  for (size_t i = n; i-- > 0;) {
    Rational proj = 0;
    for (size_t c = 0; c < basis.cols(); ++c) proj += t[c] * gso.star[i][c];
    BigInt c = round_rational(proj / gso.norm_sq[i]);
    coeffs[i] = c;
    for (size_t col = 0; col < basis.cols(); ++col)
      t[col] -= Rational(c * basis.rows[i][col]);
  }
  CvpSolution sol;
  sol.coeffs = coeffs;
  sol.vector.assign(basis.cols(), 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < basis.cols(); ++c)
      sol.vector[c] += coeffs[i] * basis.rows[i][c];
  Rational dist = 0;
  for (size_t c = 0; c < basis.cols(); ++c) {
    Rational diff = target[c] - Rational(sol.vector[c]);
    dist += diff * diff;
  }
  sol.distance_sq = dist;
  return sol;
}

/// Exact closest vector by depth-first enumeration with exact pruning.
/// Refuses dimensions above 8.  Distance ties are broken by the coefficient
/// vector closest to zero (absolute value, then positive before negative,
/// lexicographically).  radius_sq_hint must reach at least one lattice point
/// (the Babai distance is always a valid hint); the radius doubles until a
/// point is found, so the result is defined for any hint.
inline CvpSolution cvp_bruteforce(const LatticeBasis& basis,
                                  const std::vector<Rational>& target,
                                  Rational radius_sq_hint) {
  size_t n = basis.dim();
  if (n > 8)
    throw ValidationError("cvp_bruteforce: dimension above 8 refused");
  if (target.size() != basis.cols())
    throw ValidationError("cvp_bruteforce: dimension mismatch");
  if (radius_sq_hint < 0)
    throw ValidationError("cvp_bruteforce: negative radius");
  auto gso = detail::gram_schmidt(basis);

  // tau_k = <target, b*_k> / ||b*_k||^2
  std::vector<Rational> tau(n);
  for (size_t k = 0; k < n; ++k) {
    Rational proj = 0;
    for (size_t c = 0; c < basis.cols(); ++c)
      proj += target[c] * gso.star[k][c];
    tau[k] = proj / gso.norm_sq[k];
  }

  std::vector<BigInt> x(n, 0);
  bool found = false;
  Rational best_dist = 0;
  std::vector<BigInt> best_x;

  // ||sum_k x_k b_k - t||^2 = sum_k (x_k + sum_{j>k} x_j mu[j][k] - tau_k)^2 ||b*_k||^2
  // Depth-first zig-zag enumeration with exact pruning; once a point is
  // found the budget shrinks to the best distance (ties still admitted).
  auto search = [&](auto&& self, size_t level, const Rational& used,
                    const Rational& radius) -> void {
    size_t k = level - 1;
    Rational center = tau[k];
    for (size_t j = level; j < n; ++j)
      center -= Rational(x[j]) * gso.mu[j][k];
    BigInt base = round_rational(center);
    for (BigInt step = 0;; ++step) {
      bool any = false;
      int sides = step == 0 ? 1 : 2;
      for (int sgn = 0; sgn < sides; ++sgn) {
        BigInt cand = sgn == 0 ? BigInt(base + step) : BigInt(base - step);
        Rational diff = Rational(cand) - center;
        Rational term = diff * diff * gso.norm_sq[k];
        Rational budget = found ? std::min(radius, best_dist) : radius;
        if (used + term > budget) continue;
        any = true;
        x[k] = cand;
        if (k == 0) {
          Rational total = used + term;
          std::vector<BigInt> cx(x.begin(), x.end());
          if (!found || total < best_dist ||
              (total == best_dist && detail::coeff_less(cx, best_x))) {
            found = true;
            best_dist = total;
            best_x = cx;
          }
        } else {
          self(self, k, used + term, radius);
        }
      }
      if (!any) break;  // both sides exceeded the budget; farther steps only grow
    }
  };

  Rational radius = radius_sq_hint;
  while (!found) {
    search(search, n, Rational(0), radius);
    if (!found) radius = radius == 0 ? Rational(1) : radius * 2;
  }

  CvpSolution sol;
  sol.coeffs = best_x;
  sol.vector.assign(basis.cols(), 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < basis.cols(); ++c)
      sol.vector[c] += best_x[i] * basis.rows[i][c];
  sol.distance_sq = best_dist;
  return sol;
}

/// Coefficient-mode projection lattice: per coordinate delta*Z + q*Z, whose
/// Hermite normal form is gcd(delta, q) * I.  gcd(delta, q) = 1 means every
/// integer vector is a lattice point (identity projection); callers flag
/// that case rather than hide it.
struct ProjectionLattice {
  uint64_t per_coord_gcd;
  uint64_t dim;
  bool degenerate;

  LatticeBasis dense(size_t take = 0) const {
    size_t n = take == 0 ? dim : std::min<size_t>(take, dim);
    return LatticeBasis::diagonal(n, BigInt(per_coord_gcd));
  }
};

inline ProjectionLattice projection_lattice_basis(const Params& params) {
  uint64_t g = std::gcd(params.delta, params.q);
  return ProjectionLattice{g, params.d, g == 1};
}

/// Component-mode lattice for one splitting prime: the slot image of the
/// coefficient lattice, i.e. the subgroup of Z_prime generated by
/// gcd(delta, q).  generator == 1 is the degenerate full-line case;
/// generator == prime denotes the zero subgroup.
struct ComponentLattice {
  uint64_t prime;
  uint64_t generator;
  bool degenerate;  // whole line
  bool zero;        // only the origin
};

inline ComponentLattice component_lattice(const Params& params, uint64_t prime) {
  uint64_t g = std::gcd(params.delta, params.q) % prime;
  uint64_t gen = g == 0 ? prime : std::gcd(g, prime);
  return ComponentLattice{prime, gen, gen == 1, gen == prime};
}

}  // namespace latfold

#endif  // LATFOLD_LATTICE_HPP
