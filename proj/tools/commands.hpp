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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polya/curve.hpp"
#include "polya/rational.hpp"

namespace polya::cli {

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  std::string subcommand;
  Rational eps = Rational(1, 1000);
  std::optional<Rational> eps_override;  // verify: fresh eps, defaults to the certificate's
  std::optional<Rational> start;
  std::optional<Rational> target;
  std::optional<Rational> stop;
  std::optional<Rational> step;
  std::optional<Rational> lambda;
  std::optional<Rational> alpha;  // aperture as a multiple of pi
  Rational lambda_max = Rational(20);
  bool paper_range = false;
  bool certified_lower = false;
  std::string output;
  std::string input;
  Format format = Format::kText;
  int d = 2;
  BoundKind kind = BoundKind::kNeumann;
};

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;
inline constexpr int kExitIo = 3;

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_plotdata(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
