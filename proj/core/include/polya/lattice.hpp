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

// Weighted shifted lattice point counts under G_lambda and the finite-sample
// harnesses for the convex counting inequalities.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "polya/curve.hpp"
#include "polya/error.hpp"
#include "polya/rational.hpp"

namespace polya::lattice {

enum class Rigor { kCertifiedExact, kCertifiedLower, kCertifiedUpper, kOracle };

std::string_view to_string(Rigor rigor);

struct CountResult {
  std::int64_t value = 0;
  Rigor rigor = Rigor::kOracle;

  bool operator==(const CountResult&) const = default;
};

void to_json(nlohmann::json& j, const CountResult& c);

/// Raised when a floor cannot be separated from an integer boundary even
/// after the refinement cap.
class UnresolvedFloor : public Error {
 public:
  UnresolvedFloor(std::int64_t index, Rational abscissa, RationalInterval bracket);

  std::int64_t index() const { return index_; }
  const Rational& abscissa() const { return abscissa_; }
  const RationalInterval& bracket() const { return bracket_; }

 private:
  std::int64_t index_;
  Rational abscissa_;
  RationalInterval bracket_;
};

/// Binomial coefficient C(n, k), zero when n < k or n < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Multiplicity of the m-th spherical harmonic eigenspace in dimension d.
std::int64_t kappa(int d, std::int64_t m);

/// Multiplicity data of dimension d: kappa, the step function f_d and its
/// primitive F_d with the power bound z^{d-1}/(d-1)!.
struct MultiplicityProfile {
  int d;

  explicit MultiplicityProfile(int dim);

  std::int64_t kappa(std::int64_t m) const { return lattice::kappa(d, m); }
  double density(double t) const;
  double cumulative(double z) const;
  double cumulative_bound(double z) const;
};

/// F_d(z), the integral of f_d over [0, z]. Requires d >= 3.
double cumulative_multiplicity(int d, double z);
/// The power bound z^{d-1} / (d-1)! on F_d.
double cumulative_multiplicity_bound(int d, double z);

/// Sum over m of kappa(d, m) floor(G_lambda(m + d/2 - 1) + s). Every floor is
/// resolved by a two-sided rational bracket, refined up to 12 times.
CountResult count_weighted(int d, BoundKind kind, const Rational& lambda, const Rational& eps = default_eps());

/// The one-sided Neumann count in the plane, using g_lower only.
CountResult count_neumann2_certified_lower(const Rational& lambda, const Rational& eps = default_eps());

/// Dirichlet count in dimension d >= 3 assembled from planar counts along
/// shifted abscissas with binomial weights. Equals count_weighted.
CountResult count_dirichlet_dim_reduction(int d, const Rational& lambda, const Rational& eps = default_eps());

/// Aperture alpha = ratio * pi of a circular sector, 0 < ratio <= 2.
struct PiMultiple {
  Rational ratio;

  explicit PiMultiple(Rational r);
  double radians() const;
};

/// Recognises alpha / pi as a rational with denominator <= max_den, or throws
/// IRRATIONAL_APERTURE.
PiMultiple aperture_from_radians(double alpha, std::int64_t max_den = 1000);

/// Unit-weight sector sum: Dirichlet from m = 1 with shift 1/4, Neumann from
/// m = 0 with shift 3/4, abscissas m pi / alpha, m <= floor(alpha lambda / pi).
CountResult sector_lattice_bound(BoundKind kind, const PiMultiple& alpha, const Rational& lambda,
                                 const Rational& eps = default_eps());

/// Floating-point version of the sector sum for arbitrary apertures.
CountResult sector_lattice_bound_oracle(BoundKind kind, double alpha, double lambda);

/// A function sampled on [0, b] for the convex counting harnesses.
struct TabulatedFunction {
  double b = 0;
  int samples_per_unit = 1;
  std::vector<double> abscissas;
  std::vector<double> values;
  double integral = 0;
  double integral_error = 0;

  /// Value at an integer abscissa 0 <= m <= floor(b).
  double at_integer(std::int64_t m) const;
};

TabulatedFunction tabulate(const std::function<double(double)>& g, double b, int samples_per_unit = 32);

/// floor(g(0)+1/4) + 2 sum floor(g(m)+1/4) <= 2 int_0^b g, for non-negative,
/// decreasing, convex, 1/2-Lipschitz g with g(b) = 0. The hypotheses are
/// checked on the tabulation; a failing one throws HYPOTHESIS_VIOLATED.
bool check_convex_count_upper(const TabulatedFunction& g);

/// sum floor(g(m)+3/4) >= int_0^b g - (b - 3 M0) / 8 under the same
/// hypotheses plus g(0) >= 1/4 and M0 <= b.
bool check_convex_count_lower(const TabulatedFunction& g);

/// 1 + max{m : g(m) >= 1/4}.
std::int64_t m0_index(const TabulatedFunction& g);

/// int_i^j g - (floor(g(i)+1/4)/2 + sum_{i<m<j} floor(g(m)+1/4) + floor(g(j)+1/4)/2),
/// the slack of the per-band estimate behind check_convex_count_upper.
double band_count_slack(const std::function<double(double)>& g, int i, int j);

}  // namespace polya::lattice
