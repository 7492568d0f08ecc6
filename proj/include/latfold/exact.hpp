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

#ifndef LATFOLD_EXACT_HPP
#define LATFOLD_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace latfold {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt bigint_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Nearest integer to an exact rational, ties toward zero.
inline BigInt round_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);  // > 0 canonical
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt k = (2 * num + den - 1) / (2 * den);
  return neg ? BigInt(-k) : k;
}

}  // namespace latfold

#endif  // LATFOLD_EXACT_HPP
