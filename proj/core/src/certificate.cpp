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

#include "polya/certificate.hpp"

#include "polya/error.hpp"
#include "polya/lattice.hpp"

namespace polya::proof {

namespace {

constexpr int kStallRetries = 6;
constexpr std::int64_t kMaxSteps = 10000;

Rational quarter_square(const Rational& x) { return x * x / 4; }

}  // namespace

std::pair<Rational, Rational> gap_endpoints(const Rational& eps) {
  const Rational start = sqrt_bounds(Rational(12), eps).lo;
  const RationalInterval pi = pi_bounds(eps);
  const Rational denom = 3 * pi.lo - 8;
  if (denom.sign() <= 0) {
    throw Error(Errc::kEpsTooCoarse, "3 pi_lower - 8 <= 0 with pi_lower = " + pi.lo.str());
  }
  // 6x / (3x - 8) decreases in x, so the pi bracket ends give an upper bound.
  return {start, 6 * pi.hi / denom};
}

Certificate certify(const Rational& lambda_start, const Rational& lambda_target, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(Errc::kPrecondition, "eps must be positive");
  if (lambda_start.sign() <= 0 || !(lambda_start < lambda_target)) {
    throw Error(Errc::kPrecondition, "need 0 < start < target, got start=" + lambda_start.str() +
                                         " target=" + lambda_target.str());
  }
  Certificate cert;
  cert.eps = eps;
  cert.lambda_start = lambda_start;
  cert.lambda_target = lambda_target;
  cert.pi = pi_bounds(eps);

  Rational lambda = lambda_start;
  for (std::int64_t index = 1; lambda <= lambda_target; ++index) {
    if (index > kMaxSteps) return cert;
    CertificateStep step;
    step.index = index;
    step.lambda = lambda;
    step.p_lower = lattice::count_neumann2_certified_lower(lambda, eps).value;
    step.e_lower = Rational(step.p_lower) - quarter_square(lambda);
    step.delta_lower = Rational(0);
    if (step.e_lower.sign() <= 0) {
      cert.steps.push_back(std::move(step));
      return cert;
    }

    const Rational radicand = lambda * lambda + 4 * step.e_lower;
    Rational e = eps;
    Rational next = sqrt_bounds(radicand, e).lo;
    for (int retry = 0; retry < kStallRetries && next <= lambda; ++retry) {
      e /= 10;
      next = sqrt_bounds(radicand, e).lo;
    }
    if (next <= lambda) {
      cert.steps.push_back(std::move(step));
      return cert;
    }
    step.delta_lower = next - lambda;
    cert.steps.push_back(std::move(step));
    lambda = next;
  }
  cert.success = true;
  return cert;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  if (steps.empty() || !pi_bounds_valid || !chain_valid || !covers_target) return false;
  for (const auto& s : steps) {
    if (s.status != CheckStatus::kPass) return false;
  }
  return true;
}

VerificationReport verify_certificate(const Certificate& cert, const Rational& eps_fresh) {
  VerificationReport report;

  // pi/3 must be bracketed by the recorded bounds: T12(hi/3) < 1/2 < T14(lo/3).
  const Rational third_lo = cert.pi.lo / 3;
  const Rational third_hi = cert.pi.hi / 3;
  const Rational half(1, 2);
  report.pi_bounds_valid = third_lo.sign() >= 0 && third_hi <= Rational(3) && cos_taylor(third_hi, 12) < half &&
                           (third_lo.sign() == 0 || half < cos_taylor(third_lo, 14));

  report.chain_valid = !cert.steps.empty() && cert.lambda_start.sign() > 0 &&
                       cert.steps.front().lambda <= cert.lambda_start;

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& step = cert.steps[i];
    StepReport sr;
    sr.index = step.index;
    bool inconclusive = false;

    if (step.index != static_cast<std::int64_t>(i) + 1) sr.failures.emplace_back("index");
    if (step.lambda.sign() <= 0) sr.failures.emplace_back("lambda-positive");
    if (step.e_lower != Rational(step.p_lower) - quarter_square(step.lambda)) sr.failures.emplace_back("margin-arithmetic");
    if (step.e_lower.sign() <= 0) sr.failures.emplace_back("margin-positive");
    if (step.delta_lower.sign() <= 0) sr.failures.emplace_back("delta-positive");

    const Rational reach = step.lambda + step.delta_lower;
    if (reach * reach > step.lambda * step.lambda + 4 * step.e_lower) sr.failures.emplace_back("step-inequality");

    if (i > 0) {
      const CertificateStep& prev = cert.steps[i - 1];
      if (step.lambda > prev.lambda + prev.delta_lower) {
        sr.failures.emplace_back("chaining");
        report.chain_valid = false;
      }
    }

    if (step.lambda.sign() > 0) {
      sr.fresh_count = lattice::count_neumann2_certified_lower(step.lambda, eps_fresh).value;
      if (sr.fresh_count < step.p_lower) {
        sr.fresh_count = lattice::count_neumann2_certified_lower(step.lambda, eps_fresh / 10).value;
        inconclusive = sr.fresh_count < step.p_lower;
      }
    }

    if (!sr.failures.empty()) {
      sr.status = CheckStatus::kFail;
    } else if (inconclusive) {
      sr.status = CheckStatus::kInconclusive;
      sr.failures.emplace_back("fresh-count");
    }
    report.steps.push_back(std::move(sr));
  }

  if (!cert.steps.empty()) {
    const CertificateStep& last = cert.steps.back();
    report.covers_target = last.lambda + last.delta_lower > cert.lambda_target;
  }
  return report;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"index", s.index},
                     {"lambda", s.lambda.str()},
                     {"p_lower", s.p_lower},
                     {"e_lower", s.e_lower.str()},
                     {"delta_lower", s.delta_lower.str()}});
  }
  return {{"eps", cert.eps.str()},
          {"lambda_start", cert.lambda_start.str()},
          {"lambda_target", cert.lambda_target.str()},
          {"pi_lower", cert.pi.lo.str()},
          {"pi_upper", cert.pi.hi.str()},
          {"steps", std::move(steps)},
          {"success", cert.success}};
}

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(Errc::kParse, std::string("missing or non-string field '") + key + "'");
  }
  return Rational::parse(j.at(key).get<std::string>());
}

std::int64_t integer_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(Errc::kParse, std::string("missing or non-integer field '") + key + "'");
  }
  return j.at(key).get<std::int64_t>();
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(Errc::kParse, "certificate must be a JSON object");
  Certificate cert;
  cert.eps = rational_field(j, "eps");
  cert.lambda_start = rational_field(j, "lambda_start");
  cert.lambda_target = rational_field(j, "lambda_target");
  const Rational pi_lo = rational_field(j, "pi_lower");
  const Rational pi_hi = rational_field(j, "pi_upper");
  if (pi_hi < pi_lo) throw Error(Errc::kParse, "pi_lower exceeds pi_upper");
  cert.pi = RationalInterval(pi_lo, pi_hi);
  if (!j.contains("success") || !j.at("success").is_boolean()) throw Error(Errc::kParse, "missing 'success'");
  cert.success = j.at("success").get<bool>();
  if (!j.contains("steps") || !j.at("steps").is_array()) throw Error(Errc::kParse, "missing 'steps' array");
  for (const auto& s : j.at("steps")) {
    if (!s.is_object()) throw Error(Errc::kParse, "step must be an object");
    CertificateStep step;
    step.index = integer_field(s, "index");
    step.lambda = rational_field(s, "lambda");
    step.p_lower = integer_field(s, "p_lower");
    step.e_lower = rational_field(s, "e_lower");
    step.delta_lower = rational_field(s, "delta_lower");
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

Certificate parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, e.what());
  }
  return certificate_from_json(j);
}

}  // namespace polya::proof
