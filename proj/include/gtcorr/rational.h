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

#ifndef GTCORR_RATIONAL_H_
#define GTCORR_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtcorr {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) under arithmetic; ParseRational canonicalizes input.
using Rational = mpq_class;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
// anything else, including a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string ToString(const Rational& value);

// Display-only decimal approximation with the given number of significant
// digits. Never parse this back.
std::string ToDecimal(const Rational& value, int significant_digits = 20);

}  // namespace gtcorr

#endif  // GTCORR_RATIONAL_H_
