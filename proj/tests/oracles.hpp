// Copyright 2026 The polya-cert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference values for the tests: brute-force searches and
// 50-digit evaluations. Nothing here calls into the code under test except
// to convert results into Rational for exact comparison.

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "polya/rational.hpp"

namespace polya::testing {

using Float50 = boost::multiprecision::cpp_bin_float_50;

inline Float50 to_float50(const Rational& r) {
  return Float50(r.numerator_str()) / Float50(r.denominator_str());
}

inline const Float50& pi50() {
  static const Float50 value = boost::math::constants::pi<Float50>();
  return value;
}

/// G_lambda(z) to about 50 digits.
inline Float50 g_hp(const Float50& lambda, const Float50& z) {
  if (z >= lambda) return Float50(0);
  using boost::multiprecision::acos;
  using boost::multiprecision::sqrt;
  return (sqrt(lambda * lambda - z * z) - z * acos(z / lambda)) / pi50();
}

inline Float50 g_hp(const Rational& lambda, const Rational& z) { return g_hp(to_float50(lambda), to_float50(z)); }

/// Rational enclosure [v - 1e-40, v + 1e-40] of a 50-digit value.
inline RationalInterval outward(const Float50& v) {
  const Float50 scaled = v * Float50("1e45");
  const boost::multiprecision::cpp_int lo = static_cast<boost::multiprecision::cpp_int>(floor(scaled)) - 100000;
  const boost::multiprecision::cpp_int hi = static_cast<boost::multiprecision::cpp_int>(ceil(scaled)) + 100000;
  const std::string den = "1" + std::string(45, '0');
  return {Rational::parse(lo.str() + "/" + den), Rational::parse(hi.str() + "/" + den)};
}

/// Smallest-denominator rational in [lo, hi] by exhaustive search over q.
inline Rational brute_simplest(const Rational& lo, const Rational& hi, std::int64_t max_q = 100000) {
  for (std::int64_t q = 1; q <= max_q; ++q) {
    const Rational p_lo = (lo * q).ceil();
    const Rational p_hi = (hi * q).floor();
    if (p_hi < p_lo) continue;
    // Smallest |p| among the candidates.
    Rational p = p_lo;
    if (p_lo.sign() <= 0 && p_hi.sign() >= 0) p = Rational(0);
    else if (p_hi.sign() < 0) p = p_hi;
    return p / q;
  }
  return Rational(-1);
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(0, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rational(num(rng), den(rng));
}

}  // namespace polya::testing
