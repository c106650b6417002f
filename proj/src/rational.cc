// Copyright 2026 The gtcorr Authors.
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

#include "gtcorr/rational.h"

#include <cctype>
#include <stdexcept>

namespace gtcorr {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) {
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) { return value.get_str(10); }

std::string ToDecimal(const Rational& value, int significant_digits) {
  if (value == 0) return "0";
  mpf_class f(value, 512);
  // %.Ng keeps N significant digits and trims trailing zeros.
  const int size = gmp_snprintf(nullptr, 0, "%.*Fg", significant_digits, f.get_mpf_t());
  std::string out(static_cast<size_t>(size) + 1, '\0');
  gmp_snprintf(out.data(), out.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  out.resize(static_cast<size_t>(size));
  return out;
}

}  // namespace gtcorr
