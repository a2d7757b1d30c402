// Copyright 2026 The gperm Authors.
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

// Exact rational scalars and vectors.
//
// Rat is GMP's mpq behind boost::multiprecision; it is always kept in
// canonical form (positive denominator, coprime numerator).

#ifndef GPERM_RATIONAL_H_
#define GPERM_RATIONAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gperm {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using RatVec = std::vector<Rat>;

// Parses "[+-]digits[/digits]". Decimal notation and zero denominators are
// rejected with InputError.
Rat ParseRat(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string ToString(const Rat& value);

RatVec ToRatVec(std::span<const int64_t> coords);

Rat Dot(std::span<const Rat> a, std::span<const Rat> b);

// Converts an integral Rat to int64_t; throws InputError when the value is
// fractional or does not fit.
int64_t ToInt64(const Rat& value);

// Dimension of the affine hull of a nonempty point set: the rank of
// {p_i - p_0}, by Gaussian elimination over the rationals with the first
// nonzero entry of each column as pivot.
std::size_t AffineRank(std::span<const RatVec> points);

}  // namespace gperm

#endif  // GPERM_RATIONAL_H_
