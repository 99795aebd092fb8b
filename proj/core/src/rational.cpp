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

#include "polya/rational.hpp"

#include <cmath>
#include <ostream>

#include "polya/error.hpp"

namespace polya {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::kDomain, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error(Errc::kDomain, "non-finite double");
  return Rational(mpq_class(x));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::kParse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::kParse, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::reciprocal() const {
  if (sign() == 0) throw Error(Errc::kDomain, "reciprocal of zero");
  return Rational(mpq_class(1) / value_);
}

std::int64_t Rational::floor_int() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw Error(Errc::kDomain, "floor does not fit in 64 bits");
  return q.get_si();
}

bool Rational::exact_sqrt(Rational& root) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(value_.get_num_mpz_t()) || !mpz_perfect_square_p(value_.get_den_mpz_t())) {
    return false;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
  root = Rational(mpq_class(n, d));
  return true;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(Errc::kDomain, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw Error(Errc::kDomain, "interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kNegativeInput: return "NEGATIVE_INPUT";
    case Errc::kDomain: return "DOMAIN";
    case Errc::kGuessFailed: return "GUESS_FAILED";
    case Errc::kNegativeArg: return "NEGATIVE_ARG";
    case Errc::kBadDim: return "BAD_DIM";
    case Errc::kUnresolvedFloor: return "UNRESOLVED_FLOOR";
    case Errc::kIrrationalAperture: return "IRRATIONAL_APERTURE";
    case Errc::kHypothesisViolated: return "HYPOTHESIS_VIOLATED";
    case Errc::kM0ExceedsB: return "M0_EXCEEDS_B";
    case Errc::kAccuracyLoss: return "ACCURACY_LOSS";
    case Errc::kScanAmbiguous: return "SCAN_AMBIGUOUS";
    case Errc::kEpsTooCoarse: return "EPS_TOO_COARSE";
    case Errc::kPrecondition: return "PRECONDITION";
    case Errc::kParse: return "PARSE";
    case Errc::kIo: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace polya
