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

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polya/certificate.hpp"
#include "polya/error.hpp"
#include "polya/lattice.hpp"
#include "published_trace.hpp"

using polya::Errc;
using polya::Error;
using polya::Rational;
namespace proof = polya::proof;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kIo;
}

const proof::Certificate& certificate_3_to_14() {
  static const proof::Certificate cert = proof::certify(Rational(3), Rational(14), Rational(1, 1000));
  return cert;
}

bool has_failure(const proof::StepReport& s, const std::string& name) {
  return std::find(s.failures.begin(), s.failures.end(), name) != s.failures.end();
}

const proof::StepReport* first_bad(const proof::VerificationReport& r) {
  for (const auto& s : r.steps) {
    if (s.status != proof::CheckStatus::kPass) return &s;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("gap endpoints") {
  const auto [start, target] = proof::gap_endpoints(Rational(1, 1000));
  CHECK(start > Rational(3));
  CHECK(start * start <= Rational(12));
  CHECK(target < Rational(14));
  // 6x/(3x - 8) decreases in x, so the lower end of a 50-digit pi enclosure
  // gives an upper bound for 6 pi / (3 pi - 8).
  const Rational p = polya::testing::outward(polya::testing::pi50()).lo;
  CHECK(target >= Rational(6) * p / (Rational(3) * p - Rational(8)));
  CHECK(code_of([] { proof::gap_endpoints(Rational(1, 2)); }) == Errc::kEpsTooCoarse);
}

TEST_CASE("short certification from 3") {
  const proof::Certificate cert = proof::certify(Rational(3), Rational(4), Rational(1, 1000));
  CHECK(cert.success);
  CHECK(cert.steps.size() <= 3);
  REQUIRE(!cert.steps.empty());
  CHECK(cert.steps[0].e_lower == Rational(3, 4));
  CHECK(cert.steps[0].delta_lower == Rational(6, 13));
  CHECK(cert.steps[0].p_lower == 3);
  CHECK(proof::verify_certificate(cert, Rational(1, 1000)).passed());
}

TEST_CASE("certify preconditions") {
  CHECK(code_of([] { proof::certify(Rational(5), Rational(5)); }) == Errc::kPrecondition);
  CHECK(code_of([] { proof::certify(Rational(6), Rational(5)); }) == Errc::kPrecondition);
  CHECK(code_of([] { proof::certify(Rational(0), Rational(5)); }) == Errc::kPrecondition);
  CHECK(code_of([] { proof::certify(Rational(3), Rational(5), Rational(0)); }) == Errc::kPrecondition);
}

TEST_CASE("the published trace is reproduced exactly") {
  const proof::Certificate& cert = certificate_3_to_14();
  CHECK(cert.success);
  REQUIRE(cert.steps.size() == polya::testing::kPublishedTrace.size());
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& row = polya::testing::kPublishedTrace[i];
    const auto& step = cert.steps[i];
    CHECK(step.index == static_cast<std::int64_t>(i + 1));
    CHECK(step.lambda == Rational::parse(row.lambda));
    CHECK(step.e_lower == Rational::parse(row.e_lower));
    CHECK(step.delta_lower == Rational::parse(row.delta_lower));
  }
  const auto& last = cert.steps.back();
  CHECK(last.lambda + last.delta_lower == Rational::parse(polya::testing::kPublishedFinal));
}

TEST_CASE("step invariants hold on emitted certificates") {
  const auto [start, target] = proof::gap_endpoints(Rational(1, 1000));
  const proof::Certificate gap = proof::certify(start, target);
  for (const proof::Certificate* cert : {&certificate_3_to_14(), &gap}) {
    CHECK(cert->success);
    CHECK(cert->steps.size() <= 50);
    CHECK(cert->steps.front().lambda == cert->lambda_start);
    for (std::size_t i = 0; i < cert->steps.size(); ++i) {
      const auto& s = cert->steps[i];
      CHECK(s.e_lower == Rational(s.p_lower) - s.lambda * s.lambda / 4);
      CHECK(s.e_lower.sign() > 0);
      CHECK(s.delta_lower.sign() > 0);
      CHECK((s.lambda + s.delta_lower) * (s.lambda + s.delta_lower) <= s.lambda * s.lambda + 4 * s.e_lower);
      CHECK(s.p_lower == polya::lattice::count_neumann2_certified_lower(s.lambda, cert->eps).value);
      if (i + 1 < cert->steps.size()) CHECK(cert->steps[i + 1].lambda <= s.lambda + s.delta_lower);
    }
    CHECK(cert->steps.back().lambda + cert->steps.back().delta_lower > cert->lambda_target);
  }
}

TEST_CASE("verification passes on emitted certificates") {
  const proof::VerificationReport r = proof::verify_certificate(certificate_3_to_14(), Rational(1, 1000));
  CHECK(r.passed());
  CHECK(r.pi_bounds_valid);
  CHECK(r.chain_valid);
  CHECK(r.covers_target);
  CHECK(r.steps.size() == certificate_3_to_14().steps.size());
  for (const auto& s : r.steps) CHECK(s.status == proof::CheckStatus::kPass);
  CHECK(proof::verify_certificate(certificate_3_to_14(), Rational(1, 100000)).passed());
}

TEST_CASE("injected faults are detected") {
  SUBCASE("negative margin") {
    proof::Certificate cert = certificate_3_to_14();
    cert.steps[4].e_lower = Rational(-1, 4);
    const auto r = proof::verify_certificate(cert, Rational(1, 1000));
    CHECK_FALSE(r.passed());
    const auto* bad = first_bad(r);
    REQUIRE(bad != nullptr);
    CHECK(bad->index == 5);
    CHECK(bad->status == proof::CheckStatus::kFail);
    CHECK(has_failure(*bad, "margin-positive"));
    CHECK(has_failure(*bad, "margin-arithmetic"));
  }
  SUBCASE("inflated step") {
    proof::Certificate cert = certificate_3_to_14();
    cert.steps[2].delta_lower += Rational(1, 100);
    const auto r = proof::verify_certificate(cert, Rational(1, 1000));
    CHECK_FALSE(r.passed());
    const auto* bad = first_bad(r);
    REQUIRE(bad != nullptr);
    CHECK(bad->index == 3);
    CHECK(has_failure(*bad, "step-inequality"));
  }
  SUBCASE("broken chaining") {
    proof::Certificate cert = certificate_3_to_14();
    auto& s = cert.steps[7];
    s.lambda += Rational(1, 2);
    s.e_lower = Rational(s.p_lower) - s.lambda * s.lambda / 4;
    const auto r = proof::verify_certificate(cert, Rational(1, 1000));
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.chain_valid);
  }
  SUBCASE("inflated count") {
    proof::Certificate cert = certificate_3_to_14();
    auto& s = cert.steps[5];
    s.p_lower += 5;
    s.e_lower += 5;
    const auto r = proof::verify_certificate(cert, Rational(1, 1000));
    CHECK_FALSE(r.passed());
    const auto* bad = first_bad(r);
    REQUIRE(bad != nullptr);
    CHECK(bad->index == 6);
    CHECK(bad->status == proof::CheckStatus::kInconclusive);
    CHECK(has_failure(*bad, "fresh-count"));
  }
  SUBCASE("short of the target") {
    proof::Certificate cert = certificate_3_to_14();
    cert.lambda_target = Rational(15);
    CHECK_FALSE(proof::verify_certificate(cert, Rational(1, 1000)).covers_target);
  }
  SUBCASE("bad pi bounds") {
    proof::Certificate cert = certificate_3_to_14();
    cert.pi = polya::RationalInterval(Rational(3), Rational(22, 7) - Rational(1, 10));
    CHECK_FALSE(proof::verify_certificate(cert, Rational(1, 1000)).pi_bounds_valid);
  }
}

TEST_CASE("certificates survive a JSON round trip") {
  const proof::Certificate& cert = certificate_3_to_14();
  const nlohmann::json j = proof::to_json(cert);
  CHECK(j["eps"] == "1/1000");
  CHECK(j["lambda_start"] == "3");
  CHECK(j["steps"][1]["lambda"] == "45/13");
  CHECK(j["steps"][0]["p_lower"] == 3);
  CHECK(j["pi_lower"].is_string());
  CHECK(j["pi_upper"].is_string());
  CHECK(j["success"] == true);
  const std::string text = j.dump();
  CHECK(text.find('.') == std::string::npos);

  const proof::Certificate back = proof::parse_certificate(text);
  CHECK(proof::to_json(back) == j);
  const auto r1 = proof::verify_certificate(cert, Rational(1, 1000));
  const auto r2 = proof::verify_certificate(back, Rational(1, 1000));
  CHECK(r1.passed() == r2.passed());
  REQUIRE(r1.steps.size() == r2.steps.size());
  for (std::size_t i = 0; i < r1.steps.size(); ++i) {
    CHECK(r1.steps[i].status == r2.steps[i].status);
    CHECK(r1.steps[i].fresh_count == r2.steps[i].fresh_count);
  }

  CHECK(code_of([&] { proof::parse_certificate(text.substr(0, text.size() / 2)); }) == Errc::kParse);
  CHECK(code_of([] { proof::parse_certificate("{}"); }) == Errc::kParse);
  nlohmann::json broken = j;
  broken["steps"][0]["lambda"] = 3.0;
  CHECK(code_of([&] { proof::certificate_from_json(broken); }) == Errc::kParse);
  broken = j;
  broken["eps"] = "1/0";
  CHECK(code_of([&] { proof::certificate_from_json(broken); }) == Errc::kParse);
}

TEST_CASE("certification is deterministic") {
  const proof::Certificate again = proof::certify(Rational(3), Rational(14), Rational(1, 1000));
  CHECK(proof::to_json(again) == proof::to_json(certificate_3_to_14()));
}

TEST_CASE("coarse eps") {
  // Failure is a certificate outcome, not an exception; the failing step is last.
  const proof::Certificate cert = proof::certify(Rational(3), Rational(14), Rational(1, 20));
  if (!cert.success) {
    REQUIRE(!cert.steps.empty());
    CHECK(cert.steps.back().delta_lower.sign() <= 0);
    CHECK_FALSE(proof::verify_certificate(cert, Rational(1, 1000)).passed());
  } else {
    CHECK(proof::verify_certificate(cert, Rational(1, 1000)).passed());
  }
  const proof::Certificate ok = proof::certify(Rational(3), Rational(14), Rational(1, 100));
  CHECK(ok.success == proof::verify_certificate(ok, Rational(1, 1000)).passed());
}
