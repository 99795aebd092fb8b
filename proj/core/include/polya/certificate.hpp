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

// Certification of P^N_2(lambda) > lambda^2 / 4 on an interval by margin
// propagation, and an independent replay of the resulting certificate.
//
// One step at lambda records a certified lower count p and the margin
// e = p - lambda^2/4 > 0. Since the count never decreases in lambda, the
// inequality then holds on [lambda, lambda + delta) for any delta with
// (lambda + delta)^2 <= lambda^2 + 4e. The next step starts at lambda + delta.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "polya/approx.hpp"
#include "polya/rational.hpp"

namespace polya::proof {

struct CertificateStep {
  std::int64_t index = 0;
  Rational lambda;
  std::int64_t p_lower = 0;
  Rational e_lower;
  Rational delta_lower;
};

struct Certificate {
  Rational eps;
  Rational lambda_start;
  Rational lambda_target;
  RationalInterval pi;
  std::vector<CertificateStep> steps;
  bool success = false;
};

/// (start, target) with start <= 2 sqrt(3) and target >= 6 pi / (3 pi - 8).
std::pair<Rational, Rational> gap_endpoints(const Rational& eps = default_eps());

/// Runs the stepping loop from lambda_start until lambda exceeds
/// lambda_target. A non-positive margin stops the loop with success = false
/// and the failing step as the last entry (its delta_lower is zero).
Certificate certify(const Rational& lambda_start, const Rational& lambda_target,
                    const Rational& eps = default_eps());

enum class CheckStatus { kPass, kFail, kInconclusive };

std::string_view to_string(CheckStatus status);

struct StepReport {
  std::int64_t index = 0;
  CheckStatus status = CheckStatus::kPass;
  std::vector<std::string> failures;  // names of the checks that did not pass
  std::int64_t fresh_count = 0;
};

struct VerificationReport {
  std::vector<StepReport> steps;
  bool pi_bounds_valid = false;
  bool chain_valid = false;
  bool covers_target = false;

  bool passed() const;
};

/// Replays every step from scratch: margin arithmetic, a fresh certified lower
/// count at eps_fresh (retried once at eps_fresh / 10), the squared step
/// inequality, chaining, and coverage of lambda_target.
VerificationReport verify_certificate(const Certificate& cert, const Rational& eps_fresh);

nlohmann::json to_json(const Certificate& cert);
/// Throws PARSE on any missing field, wrong type or malformed rational.
Certificate certificate_from_json(const nlohmann::json& j);
/// Parses certificate text; malformed JSON is reported as PARSE too.
Certificate parse_certificate(std::string_view text);

}  // namespace polya::proof
