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

// The curve G_lambda(z) = (sqrt(lambda^2 - z^2) - z arccos(z / lambda)) / pi
// bounding the shifted lattice counts, and the quantities derived from it.
// Everything here works in doubles except g_lower / g_upper, which are the
// certified rational bounds used by the counting and proof code.

#include <string_view>

#include "polya/approx.hpp"
#include "polya/rational.hpp"

namespace polya {

enum class BoundKind { kDirichlet, kNeumann };

/// Vertical shift of the counted lattice: 1/4 for Dirichlet, 3/4 for Neumann.
Rational shift(BoundKind kind);
double shift_value(BoundKind kind);

std::string_view to_string(BoundKind kind);
/// Accepts "D"/"N" (any case) and "Dirichlet"/"Neumann".
BoundKind parse_bound_kind(std::string_view text);

namespace curve {

/// G_lambda(z), extended by zero for z > lambda.
double g_value(double lambda, double z);

/// Certified lower bound for G_lambda(z) at rational 0 <= z <= lambda.
/// May be slightly negative near z = lambda.
Rational g_lower(const Rational& lambda, const Rational& z, const Rational& eps = default_eps());

/// Certified upper bound, built symmetrically from the opposite bracket ends.
Rational g_upper(const Rational& lambda, const Rational& z, const Rational& eps = default_eps());

/// Both bounds at once; shares the square-root and arccos brackets.
RationalInterval g_bounds(const Rational& lambda, const Rational& z, const Rational& eps = default_eps());

/// Closed form of the integral of z^beta G_lambda(z) over [0, lambda].
double g_moment(double lambda, double beta);

/// Leading Weyl term w_d lambda^d of the unit ball, w_d = 1 / (2^d Gamma(d/2+1)^2).
double weyl_leading(int d, double lambda);

/// Rigorous rational bracket of w_d lambda^d. For odd d the constant carries
/// a factor 1/pi, bracketed with pi_bounds(eps).
RationalInterval weyl_leading_bounds(int d, const Rational& lambda, const Rational& eps = default_eps());

/// The z in [0, lambda] with G_lambda(z) = 1/4, by bisection.
double g_inverse_quarter(double lambda);

/// r1(sigma) = pi / (4 (sin sigma - sigma cos sigma)).
double r1(double sigma);

/// Envelope G_lambda(nu) + s for lambda >= nu, otherwise s.
double a_value(BoundKind kind, double nu, double lambda);

/// R2(lambda) = 3 G^{-1}_lambda(1/4) - lambda (1 + 4/pi) - 3, for lambda >= 2.
double r2_margin(double lambda);

}  // namespace curve
}  // namespace polya
