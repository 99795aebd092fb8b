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

#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polya/bessel.hpp"
#include "polya/certificate.hpp"
#include "polya/curve.hpp"
#include "polya/error.hpp"
#include "polya/lattice.hpp"

namespace polya::cli {

namespace {

std::vector<Rational> grid(const Rational& start, const Rational& stop, const Rational& step) {
  if (step.sign() <= 0) throw Error(Errc::kDomain, "grid step must be positive");
  if (stop < start) throw Error(Errc::kDomain, "grid start exceeds stop");
  std::vector<Rational> out;
  for (Rational x = start; x <= stop; x += step) out.push_back(x);
  return out;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  file << content;
  if (!file.good()) {
    err << "error: failed writing " << path << '\n';
    return false;
  }
  return true;
}

void print_trace(const proof::Certificate& cert, std::ostream& out) {
  out << "step\tlambda\te_lower\tdelta_lower\n";
  for (const auto& s : cert.steps) {
    out << s.index << '\t' << s.lambda << '\t' << s.e_lower << '\t' << s.delta_lower << '\n';
  }
  if (cert.success && !cert.steps.empty()) {
    const auto& last = cert.steps.back();
    out << last.index + 1 << '\t' << (last.lambda + last.delta_lower) << '\n';
  }
}

}  // namespace

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Rational start;
  Rational target;
  if (config.paper_range) {
    start = Rational(3);
    target = Rational(14);
  } else {
    try {
      std::tie(start, target) = proof::gap_endpoints(config.eps);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitFailed;
    }
  }
  if (config.start) start = *config.start;
  if (config.target) target = *config.target;

  proof::Certificate cert;
  try {
    cert = proof::certify(start, target, config.eps);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::kPrecondition ? kExitUsage : kExitFailed;
  }

  const std::string json = proof::to_json(cert).dump(2) + "\n";
  if (config.format == Format::kJson && config.output.empty()) {
    out << json;
  } else {
    out << "range\t[" << start << ", " << target << "]\teps " << config.eps << '\n';
    print_trace(cert, out);
  }
  if (!config.output.empty() && !write_file(config.output, json, err)) return kExitIo;

  if (!cert.success) {
    const auto& last = cert.steps.back();
    err << "Proof failed at step " << last.index << " (lambda = " << last.lambda << ", e_lower = " << last.e_lower
        << ")\n";
    return kExitFailed;
  }
  if (config.format != Format::kJson || !config.output.empty()) {
    out << "Success in " << cert.steps.size() << " steps\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream file(config.input);
  if (!file) {
    err << "error: cannot read " << config.input << '\n';
    return kExitIo;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  proof::Certificate cert;
  try {
    cert = proof::parse_certificate(buffer.str());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  const Rational eps = config.eps_override.value_or(cert.eps);
  const proof::VerificationReport report = proof::verify_certificate(cert, eps);
  for (const auto& s : report.steps) {
    out << "step " << s.index << ": " << proof::to_string(s.status) << " (fresh count " << s.fresh_count << ")";
    for (const auto& f : s.failures) out << ' ' << f;
    out << '\n';
  }
  out << "pi bounds: " << (report.pi_bounds_valid ? "valid" : "INVALID") << '\n';
  out << "chaining: " << (report.chain_valid ? "valid" : "BROKEN") << '\n';
  out << "coverage of " << cert.lambda_target << ": " << (report.covers_target ? "yes" : "NO") << '\n';
  if (!report.passed()) {
    for (const auto& s : report.steps) {
      if (s.status != proof::CheckStatus::kPass) {
        err << "verification failed at step " << s.index << '\n';
        break;
      }
    }
    out << "VERIFICATION FAILED\n";
    return kExitFailed;
  }
  out << "VERIFIED\n";
  return kExitOk;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Rational> lambdas;
  if (config.lambda) {
    lambdas.push_back(*config.lambda);
  } else if (config.stop) {
    const Rational step = config.step.value_or(Rational(1, 4));
    lambdas = grid(config.start.value_or(step), *config.stop, step);
  } else {
    err << "error: count needs --lambda or --stop\n";
    return kExitUsage;
  }

  auto evaluate = [&](const Rational& lambda) {
    if (config.alpha) return lattice::sector_lattice_bound(config.kind, lattice::PiMultiple(*config.alpha), lambda, config.eps);
    if (config.certified_lower) return lattice::count_neumann2_certified_lower(lambda, config.eps);
    return lattice::count_weighted(config.d, config.kind, lambda, config.eps);
  };

  if (config.format == Format::kCsv) out << "lambda_num,lambda_den,value,rigor\n";
  for (const Rational& lambda : lambdas) {
    lattice::CountResult result;
    try {
      result = evaluate(lambda);
    } catch (const lattice::UnresolvedFloor& e) {
      err << "error at lambda = " << lambda << ": " << e.what() << '\n';
      return kExitFailed;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    switch (config.format) {
      case Format::kCsv:
        out << lambda.numerator_str() << ',' << lambda.denominator_str() << ',' << result.value << ','
            << lattice::to_string(result.rigor) << '\n';
        break;
      case Format::kJson: {
        nlohmann::json j = result;
        out << j.dump() << '\n';
        break;
      }
      case Format::kText:
        if (lambdas.size() > 1) out << lambda << '\t';
        out << result.value << '\t' << lattice::to_string(result.rigor) << '\n';
        break;
    }
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Rational step = config.step.value_or(Rational(1, 2));
  std::vector<Rational> lambdas;
  try {
    lambdas = grid(config.start.value_or(step), config.lambda_max, step);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::int64_t violations = 0;
  try {
    if (config.alpha) {
      const lattice::PiMultiple alpha(*config.alpha);
      out << "lambda\tN_D\tweyl\tN_N\tholds\n";
      for (const Rational& lambda : lambdas) {
        const double l = lambda.to_double();
        const auto nd = oracle::eigencount_sector(BoundKind::kDirichlet, alpha.radians(), l);
        const auto nn = oracle::eigencount_sector(BoundKind::kNeumann, alpha.radians(), l);
        const double weyl = alpha.radians() * l * l / (8 * std::numbers::pi);
        const bool ok = static_cast<double>(nd) < weyl && weyl < static_cast<double>(nn);
        violations += ok ? 0 : 1;
        out << lambda << '\t' << nd << '\t' << std::setprecision(10) << weyl << '\t' << nn << '\t'
            << (ok ? "yes" : "NO") << '\n';
      }
    } else {
      const bool planar = config.d == 2;
      out << "lambda\tN_D\tP_D" << (planar ? "\tN_N\tP_N" : "") << "\tholds\n";
      for (const Rational& lambda : lambdas) {
        const double l = lambda.to_double();
        const auto nd = oracle::eigencount_ball_dirichlet(config.d, l);
        const auto pd = lattice::count_weighted(config.d, BoundKind::kDirichlet, lambda, config.eps).value;
        bool ok = nd <= pd;
        out << lambda << '\t' << nd << '\t' << pd;
        if (planar) {
          const auto nn = oracle::eigencount_disk_neumann(l);
          const auto pn = lattice::count_weighted(2, BoundKind::kNeumann, lambda, config.eps).value;
          ok = ok && nn >= pn;
          out << '\t' << nn << '\t' << pn;
        }
        violations += ok ? 0 : 1;
        out << '\t' << (ok ? "yes" : "NO") << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  out << "violations: " << violations << '\n';
  return violations == 0 ? kExitOk : kExitFailed;
}

int cmd_plotdata(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Rational step = config.step.value_or(Rational(1, 20));
  const Rational stop = config.stop.value_or(Rational(15));
  std::ostringstream csv;
  try {
    csv << "# non-certified plot data: floating-point columns are not part of any proof\n";
    csv << "lambda,P_D2,P_N2,W2,P_N2_over_W2_minus_1,N_D_disk,N_N_disk\n";
    csv << std::setprecision(12);
    for (const Rational& lambda : grid(config.start.value_or(step), stop, step)) {
      const double l = lambda.to_double();
      const auto pd = lattice::count_weighted(2, BoundKind::kDirichlet, lambda, config.eps).value;
      const auto pn = lattice::count_weighted(2, BoundKind::kNeumann, lambda, config.eps).value;
      const double w2 = curve::weyl_leading(2, l);
      csv << l << ',' << pd << ',' << pn << ',' << w2 << ',' << static_cast<double>(pn) / w2 - 1 << ','
          << oracle::eigencount_ball_dirichlet(2, l) << ',' << oracle::eigencount_disk_neumann(l) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  if (config.output.empty()) {
    out << csv.str();
    return kExitOk;
  }
  return write_file(config.output, csv.str(), err) ? kExitOk : kExitIo;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice counts and certified Polya bounds for disks, balls and sectors", "polya"};
  app.require_subcommand(1);

  std::string eps = "1/1000";
  std::string start, target, stop, step, lambda, alpha, lambda_max = "20", format = "text", kind = "N";
  RunConfig config;

  auto add_eps = [&](CLI::App* sub) { sub->add_option("--eps", eps, "accuracy parameter p/q"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* certify = app.add_subcommand("certify", "certify P^N_2(lambda) > lambda^2/4 on the gap interval");
  add_eps(certify);
  add_format(certify);
  certify->add_option("--start", start, "first lambda p/q");
  certify->add_option("--target", target, "lambda to exceed p/q");
  certify->add_flag("--paper-range", config.paper_range, "certify [3, 14]");
  certify->add_option("-o,--output", config.output, "certificate JSON path");

  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("certificate", config.input, "certificate JSON path")->required();
  verify->add_option("--eps", eps, "fresh accuracy parameter (default: the certificate's)");

  CLI::App* count = app.add_subcommand("count", "weighted lattice counts");
  add_eps(count);
  add_format(count);
  count->add_option("-d,--d", config.d, "dimension");
  count->add_option("--kind", kind, "D or N");
  count->add_option("--lambda", lambda, "spectral parameter p/q");
  count->add_option("--start", start, "grid start p/q");
  count->add_option("--stop", stop, "grid stop p/q");
  count->add_option("--step", step, "grid step p/q");
  count->add_option("--alpha", alpha, "sector aperture as p/q (times pi)");
  count->add_flag("--certified-lower", config.certified_lower, "one-sided planar Neumann count");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "compare Bessel eigencounts against lattice counts");
  add_eps(oracle_cmd);
  oracle_cmd->add_option("-d,--d", config.d, "dimension");
  oracle_cmd->add_option("--lambda-max", lambda_max, "largest lambda p/q");
  oracle_cmd->add_option("--start", start, "first lambda p/q");
  oracle_cmd->add_option("--step", step, "grid step p/q");
  oracle_cmd->add_option("--alpha", alpha, "sector aperture as p/q (times pi)");

  CLI::App* plotdata = app.add_subcommand("plotdata", "CSV of counts and Weyl terms on a grid");
  add_eps(plotdata);
  plotdata->add_option("--start", start, "grid start p/q");
  plotdata->add_option("--stop", stop, "grid stop p/q");
  plotdata->add_option("--step", step, "grid step p/q");
  plotdata->add_option("-o,--output", config.output, "CSV path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.eps = Rational::parse(eps);
    if (config.eps.sign() <= 0) throw Error(Errc::kParse, "--eps must be positive");
    if (verify->count("--eps") > 0) config.eps_override = config.eps;
    auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional(Rational::parse(s)); };
    config.start = opt(start);
    config.target = opt(target);
    config.stop = opt(stop);
    config.step = opt(step);
    config.lambda = opt(lambda);
    config.alpha = opt(alpha);
    config.lambda_max = Rational::parse(lambda_max);
    config.kind = parse_bound_kind(kind);
    config.format = format == "json" ? Format::kJson : (format == "csv" ? Format::kCsv : Format::kText);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (certify->parsed()) return cmd_certify(config, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  if (count->parsed()) return cmd_count(config, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(config, out, err);
  return cmd_plotdata(config, out, err);
}

}  // namespace polya::cli
