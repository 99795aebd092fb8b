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

// Verified rational approximations. Every bracket returned here has been
// checked with exact rational comparisons only; floating point is used solely
// to produce the initial guess.

#include "polya/rational.hpp"

namespace polya {

/// Accuracy parameter used when callers do not pick one.
inline Rational default_eps() { return Rational(1, 1000); }

/// The rational in [lo, hi] with the smallest denominator. Ties (only
/// possible between integers) go to the smallest |p|, then the smaller value.
Rational simplest_in(const Rational& lo, const Rational& hi);

/// Taylor polynomial of cos at 0 of the given even degree, evaluated exactly.
Rational cos_taylor(const Rational& x, int degree);

/// Verified bracket of sqrt(x): lo^2 <= x <= hi^2, hi - lo <= 6 eps.
/// Perfect squares return the exact root as a degenerate interval.
RationalInterval sqrt_bounds(const Rational& x, const Rational& eps = default_eps());

/// [T14[cos](x), T12[cos](x)] for x in (0, pi/2].
RationalInterval cos_bounds(const Rational& x);

/// Verified bracket of arccos(x) for x in [0, 1].
RationalInterval arccos_bounds(const Rational& x, const Rational& eps = default_eps());

/// Three times the arccos(1/2) bracket. Memoised per eps.
RationalInterval pi_bounds(const Rational& eps = default_eps());

}  // namespace polya
