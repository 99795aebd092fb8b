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

#include "polya/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

#include "polya/error.hpp"
#include "polya/lattice.hpp"

namespace polya::oracle {

namespace {

constexpr double kMaxOrder = 120;
constexpr double kMaxArgument = 200;
constexpr double kScanStep = 0.5;
constexpr int kMaxHalvings = 4;

template <class F>
double guarded(F&& f) {
  double v = 0;
  try {
    v = f();
  } catch (const std::exception& e) {
    throw Error(Errc::kAccuracyLoss, e.what());
  }
  if (!std::isfinite(v)) throw Error(Errc::kAccuracyLoss, "non-finite Bessel value");
  return v;
}

double eval(const ZeroCountQuery& q, double x) {
  return q.derivative ? bessel_j_deriv(q.nu, x) : bessel_j(q.nu, x);
}

// Slack for zeros sitting on lambda itself (e.g. j_{1/2,1} = pi).
double edge_slack(double lambda) { return 1e-10 * std::max(1.0, lambda); }

double bisect(const ZeroCountQuery& q, double a, double fa, double b) {
  for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, b); ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = eval(q, mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (fa > 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> scan(const ZeroCountQuery& q, double start, double end, double step) {
  std::vector<double> zeros;
  double x = start;
  double fx = eval(q, x);
  while (x < end) {
    const double next = std::min(end, x + step);
    const double fn = eval(q, next);
    if (fn == 0) {
      zeros.push_back(next);
    } else if (fx != 0 && (fx > 0) != (fn > 0)) {
      zeros.push_back(bisect(q, x, fx, next));
    }
    x = next;
    fx = fn;
  }
  return zeros;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (nu < 0 || x < 0) throw Error(Errc::kDomain, "bessel_j needs nu, x >= 0");
  return guarded([&] { return boost::math::cyl_bessel_j(nu, x); });
}

double bessel_j_deriv(double nu, double x) {
  if (nu < 0 || x <= 0) throw Error(Errc::kDomain, "bessel_j_deriv needs nu >= 0, x > 0");
  return guarded([&] { return boost::math::cyl_bessel_j_prime(nu, x); });
}

std::vector<double> positive_zeros(const ZeroCountQuery& q) {
  if (q.nu < 0 || q.nu > kMaxOrder || q.lambda < 0 || q.lambda > kMaxArgument) {
    throw Error(Errc::kDomain, "zero scan needs 0 <= nu <= 120 and 0 <= lambda <= 200");
  }
  // No zero of J_nu or J'_nu lies in (0, nu]; for nu = 0 the first positive
  // zero is beyond 2.
  const double start = q.nu > 0 ? 0.8 * q.nu : 0.1;
  const double end = q.lambda + edge_slack(q.lambda);
  if (end <= start) return {};

  double step = kScanStep;
  for (int halving = 0; halving <= kMaxHalvings; ++halving, step /= 2) {
    std::vector<double> zeros = scan(q, start, end, step);
    bool ambiguous = false;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
      if (zeros[i + 1] - zeros[i] < step) ambiguous = true;
    }
    if (!ambiguous) return zeros;
  }
  throw Error(Errc::kScanAmbiguous, "zeros closer than the minimal scan step for nu=" + std::to_string(q.nu));
}

std::int64_t count_zeros(const ZeroCountQuery& q) {
  const auto zeros = positive_zeros(q);
  std::int64_t count = static_cast<std::int64_t>(zeros.size());
  if (q.derivative && q.nu == 0) ++count;
  return count;
}

std::int64_t eigencount_ball_dirichlet(int d, double lambda) {
  if (d < 2) throw Error(Errc::kBadDim, "dimension must be >= 2");
  if (lambda < 0) throw Error(Errc::kDomain, "lambda must be non-negative");
  const double offset = d / 2.0 - 1;
  const auto last = static_cast<std::int64_t>(std::floor(lambda - offset));
  std::int64_t total = 0;
  for (std::int64_t m = 0; m <= last; ++m) {
    total += lattice::kappa(d, m) * count_zeros({static_cast<double>(m) + offset, lambda, false});
  }
  return total;
}

std::int64_t eigencount_disk_neumann(double lambda) {
  if (lambda < 0) throw Error(Errc::kDomain, "lambda must be non-negative");
  std::int64_t total = count_zeros({0, lambda, true});
  const auto last = static_cast<std::int64_t>(std::floor(lambda));
  for (std::int64_t m = 1; m <= last; ++m) total += 2 * count_zeros({static_cast<double>(m), lambda, true});
  return total;
}

std::int64_t eigencount_sector(BoundKind kind, double alpha, double lambda) {
  if (!(alpha > 0 && alpha <= 2 * std::numbers::pi + 1e-15)) throw Error(Errc::kDomain, "aperture out of range");
  if (lambda < 0) throw Error(Errc::kDomain, "lambda must be non-negative");
  const bool neumann = kind == BoundKind::kNeumann;
  const auto last = static_cast<std::int64_t>(std::floor(alpha * lambda / std::numbers::pi));
  std::int64_t total = 0;
  for (std::int64_t m = neumann ? 0 : 1; m <= last; ++m) {
    const double nu = static_cast<double>(m) * std::numbers::pi / alpha;
    total += count_zeros({nu, lambda, neumann});
  }
  return total;
}

}  // namespace polya::oracle
