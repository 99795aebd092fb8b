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

#include "polya/approx.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "polya/error.hpp"

namespace polya {

namespace {

// Retries after a failed verification, each with eps divided by ten.
constexpr int kGuessRetries = 8;

Rational simplest_positive(const Rational& lo, const Rational& hi) {
  const Rational first_integer = lo.ceil();
  if (first_integer <= hi) return first_integer;
  // No integer inside: peel off the common integer part and recurse on the
  // reciprocal of the fractional interval (continued-fraction descent).
  const Rational n = lo.floor();
  return n + simplest_positive((hi - n).reciprocal(), (lo - n).reciprocal()).reciprocal();
}

void require_positive_eps(const Rational& eps) {
  if (eps.sign() <= 0) throw Error(Errc::kDomain, "eps must be positive, got " + eps.str());
}

Rational below(const Rational& guess, const Rational& e) { return simplest_in(guess - 3 * e, guess - e); }
Rational above(const Rational& guess, const Rational& e) { return simplest_in(guess + e, guess + 3 * e); }

Rational guess_from(double value) {
  if (!std::isfinite(value)) throw Error(Errc::kDomain, "numeric guess is not finite");
  return Rational::from_double(value);
}

}  // namespace

Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error(Errc::kDomain, "simplest_in on empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

Rational cos_taylor(const Rational& x, int degree) {
  if (degree < 0 || degree % 2 != 0) throw Error(Errc::kDomain, "Taylor degree must be even and non-negative");
  const Rational x2 = x * x;
  // Horner in x^2 from the highest term down.
  Rational acc(1);
  for (int k = degree / 2; k >= 1; --k) {
    acc = Rational(1) - x2 * acc / Rational((2 * k - 1) * (2 * k));
  }
  return acc;
}

RationalInterval sqrt_bounds(const Rational& x, const Rational& eps) {
  require_positive_eps(eps);
  if (x.sign() < 0) throw Error(Errc::kNegativeInput, "sqrt of " + x.str());
  Rational root;
  if (x.exact_sqrt(root)) return {root, root};

  Rational guess = guess_from(std::sqrt(x.to_double()));
  Rational e = eps;
  for (int attempt = 0; attempt <= kGuessRetries; ++attempt) {
    const Rational lo = max(Rational(0), below(guess, e));
    const Rational hi = above(guess, e);
    if (lo * lo <= x && x <= hi * hi) return {lo, hi};
    e /= 10;
    guess = (guess + x / guess) / 2;
  }
  throw Error(Errc::kGuessFailed, "sqrt bracket of " + x.str());
}

RationalInterval cos_bounds(const Rational& x) {
  static const Rational half_pi_hi = pi_bounds(default_eps()).hi / 2;
  if (x.sign() <= 0 || x > half_pi_hi) {
    throw Error(Errc::kDomain, "cos_bounds needs 0 < x <= " + half_pi_hi.str() + ", got " + x.str());
  }
  return {cos_taylor(x, 14), cos_taylor(x, 12)};
}

RationalInterval arccos_bounds(const Rational& x, const Rational& eps) {
  require_positive_eps(eps);
  if (x.sign() < 0 || x > Rational(1)) throw Error(Errc::kDomain, "arccos of " + x.str());
  if (x.sign() == 0) {
    const RationalInterval pi = pi_bounds(eps);
    return {pi.lo / 2, pi.hi / 2};
  }

  const Rational guess = guess_from(std::acos(x.to_double()));
  Rational e = eps;
  for (int attempt = 0; attempt <= kGuessRetries; ++attempt) {
    const Rational lo = max(Rational(0), below(guess, e));
    const Rational hi = above(guess, e);
    // cos decreases on [0, 3] and T12 >= cos >= T14 on the whole real line,
    // so these two comparisons pin arccos(x) inside [lo, hi].
    const bool hi_ok = hi <= Rational(3) && cos_taylor(hi, 12) < x;
    const bool lo_ok = lo.sign() == 0 || x < cos_taylor(lo, 14);
    if (hi_ok && lo_ok) return {lo, hi};
    e /= 10;
  }
  throw Error(Errc::kGuessFailed, "arccos bracket of " + x.str());
}

RationalInterval pi_bounds(const Rational& eps) {
  require_positive_eps(eps);
  static std::shared_mutex mutex;
  static std::map<std::string, RationalInterval> cache;
  const std::string key = eps.str();
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const RationalInterval third = arccos_bounds(Rational(1, 2), eps);
  RationalInterval pi{3 * third.lo, 3 * third.hi};
  std::unique_lock lock(mutex);
  cache.emplace(key, pi);
  return pi;
}

}  // namespace polya
