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

#include "gperm/rational.h"

#include <cctype>
#include <limits>
#include <utility>

#include "gperm/errors.h"

namespace gperm {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat ParseRat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!AllDigits(num) || !AllDigits(den)) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt n{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rat(n, q);
}

std::string ToString(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

RatVec ToRatVec(std::span<const int64_t> coords) {
  RatVec out;
  out.reserve(coords.size());
  for (int64_t c : coords) out.emplace_back(c);
  return out;
}

Rat Dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("dot product of unequal lengths");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

int64_t ToInt64(const Rat& value) {
  if (denominator(value) != 1) {
    throw InputError("expected an integer, got " + ToString(value));
  }
  const BigInt& n = numerator(value);
  if (n > std::numeric_limits<int64_t>::max() ||
      n < std::numeric_limits<int64_t>::min()) {
    throw InputError("integer out of 64-bit range: " + n.str());
  }
  return n.convert_to<int64_t>();
}

std::size_t AffineRank(std::span<const RatVec> points) {
  if (points.empty()) throw InputError("affine rank of an empty point set");
  const std::size_t d = points.front().size();
  std::vector<RatVec> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) {
      throw InputError("affine rank: points of unequal length");
    }
    RatVec diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[i][j] - points[0][j];
    rows.push_back(std::move(diff));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < d; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace gperm
