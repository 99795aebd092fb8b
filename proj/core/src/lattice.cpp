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

#include "polya/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "polya/approx.hpp"

namespace polya::lattice {

namespace {

constexpr int kFloorRefinements = 12;

// floor(G_lambda(z) + s), resolved from a two-sided bracket of G.
std::int64_t resolved_floor(const Rational& lambda, const Rational& z, const Rational& s, const Rational& eps,
                            std::int64_t index) {
  if (z == lambda) return s.floor_int();  // G vanishes exactly at z = lambda
  Rational e = eps;
  RationalInterval bracket;
  for (int attempt = 0; attempt <= kFloorRefinements; ++attempt) {
    RationalInterval g;
    try {
      g = curve::g_bounds(lambda, z, e);
    } catch (const Error& err) {
      // The fixed Taylor degrees cap the attainable arccos accuracy; past it
      // the term is as unresolved as it will get.
      if (err.code() != Errc::kGuessFailed || attempt == 0) throw;
      throw UnresolvedFloor(index, z, bracket);
    }
    // G >= 0, so a negative lower end can be lifted to zero.
    bracket = RationalInterval(max(g.lo, Rational(0)) + s, g.hi + s);
    if (bracket.lo.floor() == bracket.hi.floor()) return bracket.lo.floor_int();
    e /= 10;
  }
  throw UnresolvedFloor(index, z, bracket);
}

void require_dim(int d, int min_d) {
  if (d < min_d) throw Error(Errc::kBadDim, "dimension " + std::to_string(d) + " < " + std::to_string(min_d));
}

void require_nonnegative(const Rational& lambda) {
  if (lambda.sign() < 0) throw Error(Errc::kDomain, "lambda must be non-negative, got " + lambda.str());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::kDomain, "count overflows 64 bits");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::kDomain, "count overflows 64 bits");
  return out;
}

double integrate(const std::function<double(double)>& g, double a, double b, double* error) {
  if (b <= a) {
    *error = 0;
    return 0;
  }
  double err = 0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, a, b, 20, 1e-14, &err);
  *error = err + 1e-12 * (1 + std::abs(value));
  return value;
}

void hypothesis(bool ok, const std::string& predicate) {
  if (!ok) throw Error(Errc::kHypothesisViolated, predicate);
}

void check_hypotheses(const TabulatedFunction& g) {
  hypothesis(g.b > 0 && !g.values.empty() && g.values.size() == g.abscissas.size(), "well-formed tabulation");
  double scale = 1;
  for (double v : g.values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * scale;

  for (double v : g.values) hypothesis(v >= -tol, "non-negative");
  hypothesis(std::abs(g.values.back()) <= tol, "g(b) = 0");

  double min_h = g.b;
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < g.values.size(); ++i) {
    const double h = g.abscissas[i + 1] - g.abscissas[i];
    hypothesis(h > 0, "increasing abscissas");
    const double dv = g.values[i + 1] - g.values[i];
    hypothesis(dv <= tol, "decreasing");
    hypothesis(std::abs(dv) <= 0.5 * h + tol, "Lipschitz constant <= 1/2");
    slopes.push_back(dv / h);
    min_h = std::min(min_h, h);
  }
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
    hypothesis(slopes[i + 1] >= slopes[i] - 4 * tol / min_h, "convex");
  }
}

}  // namespace

std::string_view to_string(Rigor rigor) {
  switch (rigor) {
    case Rigor::kCertifiedExact: return "certified-exact";
    case Rigor::kCertifiedLower: return "certified-lower";
    case Rigor::kCertifiedUpper: return "certified-upper";
    case Rigor::kOracle: return "oracle";
  }
  return "oracle";
}

void to_json(nlohmann::json& j, const CountResult& c) {
  j = nlohmann::json{{"value", c.value}, {"rigor", std::string(to_string(c.rigor))}};
}

UnresolvedFloor::UnresolvedFloor(std::int64_t index, Rational abscissa, RationalInterval bracket)
    : Error(Errc::kUnresolvedFloor, "term m=" + std::to_string(index) + " at z=" + abscissa.str() +
                                        " has bracket [" + bracket.lo.str() + ", " + bracket.hi.str() +
                                        "] straddling an integer"),
      index_(index),
      abscissa_(std::move(abscissa)),
      bracket_(std::move(bracket)) {}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    // c * (n - i) is divisible by (i + 1) at every step.
    c = checked_mul(c, n - i) / (i + 1);
  }
  return c;
}

std::int64_t kappa(int d, std::int64_t m) {
  require_dim(d, 2);
  if (m < 0) throw Error(Errc::kDomain, "kappa needs m >= 0");
  if (m == 0) return 1;
  return binomial(m + d - 1, d - 1) - binomial(m + d - 3, d - 1);
}

MultiplicityProfile::MultiplicityProfile(int dim) : d(dim) { require_dim(dim, 2); }

double MultiplicityProfile::density(double t) const {
  require_dim(d, 3);
  const double shifted = t - d / 2.0 + 1;
  if (shifted < 0) return 0;
  const auto m = static_cast<std::int64_t>(std::floor(shifted));
  return static_cast<double>(binomial(m + d - 2, d - 2));
}

double MultiplicityProfile::cumulative(double z) const { return cumulative_multiplicity(d, z); }
double MultiplicityProfile::cumulative_bound(double z) const { return cumulative_multiplicity_bound(d, z); }

double cumulative_multiplicity(int d, double z) {
  require_dim(d, 3);
  if (z < 0) throw Error(Errc::kDomain, "F_d needs z >= 0");
  const double shifted = z - d / 2.0 + 1;
  if (shifted < 0) return 0;
  const double m = std::floor(shifted);
  // Pi_{d-2}(m) / (d-1)! * ((d-1) z - (d-2) m - (d-1)(d-2)/2)
  double prod = 1;
  for (int j = 1; j <= d - 2; ++j) prod *= (m + j);
  double fact = 1;
  for (int j = 2; j <= d - 1; ++j) fact *= j;
  return prod / fact * ((d - 1) * z - (d - 2) * m - (d - 1) * (d - 2) / 2.0);
}

double cumulative_multiplicity_bound(int d, double z) {
  require_dim(d, 3);
  if (z < 0) throw Error(Errc::kDomain, "F_d needs z >= 0");
  double fact = 1;
  for (int j = 2; j <= d - 1; ++j) fact *= j;
  return std::pow(z, d - 1) / fact;
}

CountResult count_weighted(int d, BoundKind kind, const Rational& lambda, const Rational& eps) {
  require_dim(d, 2);
  if (kind == BoundKind::kNeumann && d != 2) {
    throw Error(Errc::kBadDim, "Neumann counts are only defined for d = 2");
  }
  require_nonnegative(lambda);
  const Rational s = shift(kind);
  const Rational offset(d - 2, 2);
  const std::int64_t last = (lambda - offset).floor_int();
  std::int64_t total = 0;
  for (std::int64_t m = 0; m <= last; ++m) {
    const std::int64_t term = resolved_floor(lambda, Rational(m) + offset, s, eps, m);
    total = checked_add(total, checked_mul(kappa(d, m), term));
  }
  return {total, Rigor::kCertifiedExact};
}

CountResult count_neumann2_certified_lower(const Rational& lambda, const Rational& eps) {
  require_nonnegative(lambda);
  const Rational s = shift(BoundKind::kNeumann);
  const std::int64_t last = lambda.floor_int();
  std::int64_t total = 0;
  for (std::int64_t m = 0; m <= last; ++m) {
    const Rational z(m);
    if (z == lambda) continue;  // floor(0 + 3/4) = 0
    const std::int64_t term = std::max<std::int64_t>(0, (curve::g_lower(lambda, z, eps) + s).floor_int());
    total += kappa(2, m) * term;
  }
  return {total, Rigor::kCertifiedLower};
}

CountResult count_dirichlet_dim_reduction(int d, const Rational& lambda, const Rational& eps) {
  require_dim(d, 3);
  require_nonnegative(lambda);
  const Rational s = shift(BoundKind::kDirichlet);
  const Rational offset(d - 2, 2);
  const std::int64_t last = (lambda - offset).floor_int();
  std::int64_t total = 0;
  for (std::int64_t n = 0; n <= last; ++n) {
    const Rational r = Rational(n) + offset;
    // Planar count under t -> G_lambda(t + r).
    std::int64_t planar = resolved_floor(lambda, r, s, eps, n);
    const std::int64_t width = (lambda - r).floor_int();
    for (std::int64_t j = 1; j <= width; ++j) {
      planar = checked_add(planar, 2 * resolved_floor(lambda, r + Rational(j), s, eps, n + j));
    }
    total = checked_add(total, checked_mul(binomial(n + d - 3, d - 3), planar));
  }
  return {total, Rigor::kCertifiedExact};
}

PiMultiple::PiMultiple(Rational r) : ratio(std::move(r)) {
  if (ratio.sign() <= 0 || ratio > Rational(2)) {
    throw Error(Errc::kDomain, "aperture must lie in (0, 2pi], got (" + ratio.str() + ")pi");
  }
}

double PiMultiple::radians() const { return ratio.to_double() * std::numbers::pi; }

PiMultiple aperture_from_radians(double alpha, std::int64_t max_den) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw Error(Errc::kDomain, "aperture must be positive");
  const double ratio = alpha / std::numbers::pi;
  const double tol = 1e-12 * std::max(1.0, ratio);
  const Rational candidate =
      simplest_in(Rational::from_double(ratio - tol), Rational::from_double(ratio + tol));
  if (candidate.raw().get_den() > max_den) {
    throw Error(Errc::kIrrationalAperture, "alpha/pi is not a rational with denominator <= " +
                                               std::to_string(max_den));
  }
  return PiMultiple(candidate);
}

CountResult sector_lattice_bound(BoundKind kind, const PiMultiple& alpha, const Rational& lambda,
                                 const Rational& eps) {
  require_nonnegative(lambda);
  const Rational s = shift(kind);
  const std::int64_t first = kind == BoundKind::kDirichlet ? 1 : 0;
  const std::int64_t last = (alpha.ratio * lambda).floor_int();
  const Rational step = alpha.ratio.reciprocal();  // pi / alpha
  std::int64_t total = 0;
  for (std::int64_t m = first; m <= last; ++m) {
    total = checked_add(total, resolved_floor(lambda, Rational(m) * step, s, eps, m));
  }
  return {total, Rigor::kCertifiedExact};
}

CountResult sector_lattice_bound_oracle(BoundKind kind, double alpha, double lambda) {
  if (!(alpha > 0 && alpha <= 2 * std::numbers::pi + 1e-15)) throw Error(Errc::kDomain, "aperture out of range");
  if (lambda < 0) throw Error(Errc::kDomain, "lambda must be non-negative");
  const double s = shift_value(kind);
  const std::int64_t first = kind == BoundKind::kDirichlet ? 1 : 0;
  const auto last = static_cast<std::int64_t>(std::floor(alpha * lambda / std::numbers::pi));
  std::int64_t total = 0;
  for (std::int64_t m = first; m <= last; ++m) {
    const double z = static_cast<double>(m) * std::numbers::pi / alpha;
    const double g = lambda > 0 ? curve::g_value(lambda, z) : 0.0;
    total += static_cast<std::int64_t>(std::floor(g + s));
  }
  return {total, Rigor::kOracle};
}

double TabulatedFunction::at_integer(std::int64_t m) const {
  const auto idx = static_cast<std::size_t>(m) * static_cast<std::size_t>(samples_per_unit);
  if (m < 0 || idx >= values.size() || static_cast<double>(m) > b) {
    throw Error(Errc::kDomain, "integer abscissa " + std::to_string(m) + " outside the tabulation");
  }
  return values[idx];
}

TabulatedFunction tabulate(const std::function<double(double)>& g, double b, int samples_per_unit) {
  if (!(b > 0) || samples_per_unit < 1) throw Error(Errc::kDomain, "tabulation needs b > 0");
  TabulatedFunction tab;
  tab.b = b;
  tab.samples_per_unit = samples_per_unit;
  const auto n = static_cast<std::int64_t>(std::floor(b * samples_per_unit));
  for (std::int64_t k = 0; k <= n; ++k) {
    const double x = static_cast<double>(k) / samples_per_unit;
    tab.abscissas.push_back(x);
    tab.values.push_back(g(x));
  }
  if (tab.abscissas.back() < b) {
    tab.abscissas.push_back(b);
    tab.values.push_back(g(b));
  }
  tab.integral = integrate(g, 0, b, &tab.integral_error);
  return tab;
}

std::int64_t m0_index(const TabulatedFunction& g) {
  const auto last = static_cast<std::int64_t>(std::floor(g.b));
  std::int64_t best = -1;
  for (std::int64_t m = 0; m <= last; ++m) {
    if (g.at_integer(m) >= 0.25) best = m;
  }
  return best + 1;
}

bool check_convex_count_upper(const TabulatedFunction& g) {
  check_hypotheses(g);
  const auto last = static_cast<std::int64_t>(std::floor(g.b));
  double lhs = std::floor(g.at_integer(0) + 0.25);
  for (std::int64_t m = 1; m <= last; ++m) lhs += 2 * std::floor(g.at_integer(m) + 0.25);
  return lhs <= 2 * (g.integral + g.integral_error);
}

bool check_convex_count_lower(const TabulatedFunction& g) {
  check_hypotheses(g);
  hypothesis(g.at_integer(0) >= 0.25, "g(0) >= 1/4");
  const std::int64_t m0 = m0_index(g);
  if (static_cast<double>(m0) > g.b) {
    throw Error(Errc::kM0ExceedsB, "M0 = " + std::to_string(m0) + " exceeds b");
  }
  const auto last = static_cast<std::int64_t>(std::floor(g.b));
  double lhs = 0;
  for (std::int64_t m = 0; m <= last; ++m) lhs += std::floor(g.at_integer(m) + 0.75);
  const double rhs = g.integral + g.integral_error - (g.b - 3.0 * static_cast<double>(m0)) / 8;
  return lhs >= rhs;
}

double band_count_slack(const std::function<double(double)>& g, int i, int j) {
  if (j <= i) throw Error(Errc::kDomain, "band needs i < j");
  double err = 0;
  const double area = integrate(g, i, j, &err);
  double sum = 0.5 * std::floor(g(i) + 0.25) + 0.5 * std::floor(g(j) + 0.25);
  for (int m = i + 1; m < j; ++m) sum += std::floor(g(m) + 0.25);
  return area - sum;
}

}  // namespace polya::lattice
