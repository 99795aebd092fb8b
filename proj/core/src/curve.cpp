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

#include "polya/curve.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "polya/error.hpp"

namespace polya {

Rational shift(BoundKind kind) { return kind == BoundKind::kDirichlet ? Rational(1, 4) : Rational(3, 4); }

double shift_value(BoundKind kind) { return kind == BoundKind::kDirichlet ? 0.25 : 0.75; }

std::string_view to_string(BoundKind kind) { return kind == BoundKind::kDirichlet ? "D" : "N"; }

BoundKind parse_bound_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "d" || lower == "dirichlet") return BoundKind::kDirichlet;
  if (lower == "n" || lower == "neumann") return BoundKind::kNeumann;
  throw Error(Errc::kParse, "unknown boundary kind '" + std::string(text) + "'");
}

namespace curve {

using std::numbers::pi;

double g_value(double lambda, double z) {
  if (lambda <= 0 || z < 0) throw Error(Errc::kNegativeArg, "g_value needs lambda > 0 and z >= 0");
  if (z >= lambda) return 0.0;
  return (std::sqrt(lambda * lambda - z * z) - z * std::acos(z / lambda)) / pi;
}

RationalInterval g_bounds(const Rational& lambda, const Rational& z, const Rational& eps) {
  if (lambda.sign() <= 0 || z.sign() < 0 || z > lambda) {
    throw Error(Errc::kDomain, "g bounds need 0 <= z <= lambda, lambda > 0 (lambda=" + lambda.str() +
                                   ", z=" + z.str() + ")");
  }
  const RationalInterval pi_b = pi_bounds(eps);
  if (pi_b.lo.sign() <= 0) throw Error(Errc::kEpsTooCoarse, "pi lower bound is not positive for eps " + eps.str());

  const RationalInterval root = sqrt_bounds(lambda * lambda - z * z, eps);
  Rational lower_num = root.lo;
  Rational upper_num = root.hi;
  if (z.sign() > 0) {
    const RationalInterval angle = arccos_bounds(z / lambda, eps);
    lower_num -= z * angle.hi;
    upper_num -= z * angle.lo;
  }
  // upper_num bounds a non-negative quantity from above, so it is >= 0.
  return {lower_num / pi_b.hi, upper_num / pi_b.lo};
}

Rational g_lower(const Rational& lambda, const Rational& z, const Rational& eps) {
  return g_bounds(lambda, z, eps).lo;
}

Rational g_upper(const Rational& lambda, const Rational& z, const Rational& eps) {
  return g_bounds(lambda, z, eps).hi;
}

double g_moment(double lambda, double beta) {
  if (lambda <= 0 || beta < 0) throw Error(Errc::kDomain, "g_moment needs lambda > 0 and beta >= 0");
  const double a = (beta + 1) / 2;
  double gamma_a_over_sqrt_pi = 0;
  if (std::floor(beta) == beta && std::fmod(beta, 2.0) == 0 && beta <= 100) {
    // Gamma(k + 1/2) / sqrt(pi) = (1/2)(3/2)...(k - 1/2), exact for small k.
    gamma_a_over_sqrt_pi = 1;
    for (double x = 0.5; x < a; x += 1) gamma_a_over_sqrt_pi *= x;
  } else {
    gamma_a_over_sqrt_pi = std::tgamma(a) / std::sqrt(pi);
  }
  return gamma_a_over_sqrt_pi * std::pow(lambda, beta + 2) / (4 * (beta + 2) * std::tgamma((beta + 4) / 2));
}

double weyl_leading(int d, double lambda) {
  if (d < 2) throw Error(Errc::kBadDim, "dimension must be >= 2, got " + std::to_string(d));
  const double g = std::tgamma(d / 2.0 + 1);
  return std::pow(lambda, d) / (std::ldexp(1.0, d) * g * g);
}

RationalInterval weyl_leading_bounds(int d, const Rational& lambda, const Rational& eps) {
  if (d < 2) throw Error(Errc::kBadDim, "dimension must be >= 2, got " + std::to_string(d));
  Rational power(1);
  for (int i = 0; i < d; ++i) power *= lambda;
  Rational two_d(1);
  for (int i = 0; i < d; ++i) two_d *= 2;

  if (d % 2 == 0) {
    // Gamma(d/2 + 1) = (d/2)!
    Rational fact(1);
    for (int i = 2; i <= d / 2; ++i) fact *= i;
    const Rational w = (two_d * fact * fact).reciprocal();
    return {w * power, w * power};
  }
  // d = 2n + 1: Gamma(n + 3/2) = c sqrt(pi) with c = (2n+2)! / (4^{n+1} (n+1)!).
  const int n = (d - 1) / 2;
  Rational c(1);
  for (int i = n + 2; i <= 2 * n + 2; ++i) c *= i;
  for (int i = 0; i <= n; ++i) c /= 4;
  const Rational k = (two_d * c * c).reciprocal() * power;
  const RationalInterval pi_b = pi_bounds(eps);
  if (pi_b.lo.sign() <= 0) throw Error(Errc::kEpsTooCoarse, "pi lower bound is not positive for eps " + eps.str());
  return {k / pi_b.hi, k / pi_b.lo};
}

double g_inverse_quarter(double lambda) {
  if (!(lambda >= pi / 4)) throw Error(Errc::kDomain, "G^{-1}(1/4) needs lambda >= pi/4");
  if (g_value(lambda, 0) <= 0.25) return 0.0;
  double lo = 0;
  double hi = lambda;
  for (int it = 0; it < 100 && hi - lo > 1e-12 * lambda; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g_value(lambda, mid) > 0.25) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double r1(double sigma) {
  if (!(sigma > 0 && sigma <= pi / 2)) throw Error(Errc::kDomain, "r1 needs sigma in (0, pi/2]");
  return pi / (4 * (std::sin(sigma) - sigma * std::cos(sigma)));
}

double a_value(BoundKind kind, double nu, double lambda) {
  if (nu < 0 || lambda < 0) throw Error(Errc::kDomain, "a_value needs nu, lambda >= 0");
  const double s = shift_value(kind);
  if (lambda < nu || lambda == 0) return s;
  return g_value(lambda, nu) + s;
}

double r2_margin(double lambda) {
  if (!(lambda >= 2)) throw Error(Errc::kDomain, "R2 needs lambda >= 2");
  return 3 * g_inverse_quarter(lambda) - lambda * (1 + 4 / pi) - 3;
}

}  // namespace curve
}  // namespace polya
