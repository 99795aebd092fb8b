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

// Floating-point Bessel oracle: zero counts of J_nu and J'_nu and the true
// eigenvalue counting functions of balls, the disk and circular sectors.
// Not rigorous; nothing here feeds a certificate.

#include <cstdint>
#include <vector>

#include "polya/curve.hpp"

namespace polya::oracle {

double bessel_j(double nu, double x);
double bessel_j_deriv(double nu, double x);

struct ZeroCountQuery {
  double nu = 0;
  double lambda = 0;
  bool derivative = false;  // count zeros of J'_nu; for nu = 0 the zero at the origin counts
};

/// Positive zeros of J_nu (or J'_nu) up to lambda, located by a sign scan with
/// step 1/2 and bisection. The origin is not included.
std::vector<double> positive_zeros(const ZeroCountQuery& q);

/// Number of zeros <= lambda, including j'_{0,1} = 0 when derivative and nu == 0.
std::int64_t count_zeros(const ZeroCountQuery& q);

std::int64_t eigencount_ball_dirichlet(int d, double lambda);
std::int64_t eigencount_disk_neumann(double lambda);
std::int64_t eigencount_sector(BoundKind kind, double alpha, double lambda);

}  // namespace polya::oracle
