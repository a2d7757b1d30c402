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

#include "gperm/polynomial.h"

#include <utility>

#include "gperm/errors.h"

namespace gperm {

Polynomial::Polynomial(std::vector<Rat> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::vector<std::string> Polynomial::CoefficientStrings() const {
  std::vector<std::string> out;
  out.reserve(coefficients_.size());
  for (const Rat& c : coefficients_) out.push_back(ToString(c));
  return out;
}

Polynomial Interpolate(std::span<const Rat> nodes, std::span<const Rat> values) {
  if (nodes.size() != values.size()) {
    throw InputError("interpolation: node and value counts differ");
  }
  const std::size_t n = nodes.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rat> diff(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rat gap = nodes[i] - nodes[i - level];
      if (gap == 0) throw InputError("interpolation: repeated node");
      diff[i] = (diff[i] - diff[i - 1]) / gap;
    }
  }
  std::vector<Rat> coeffs(n);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + diff[k]
    for (std::size_t j = n - 1; j > 0; --j) {
      coeffs[j] = coeffs[j - 1] - nodes[k] * coeffs[j];
    }
    if (n > 0) coeffs[0] = -nodes[k] * coeffs[0];
    coeffs[0] += diff[k];
  }
  return Polynomial(std::move(coeffs));
}

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw InputError("quasipolynomial needs period >= 1");
}

const Polynomial& QuasiPolynomial::constituent(int64_t t) const {
  const int64_t p = period();
  return constituents_[static_cast<std::size_t>(((t % p) + p) % p)];
}

bool QuasiPolynomial::IsPolynomial() const {
  for (const Polynomial& c : constituents_) {
    if (!(c == constituents_.front())) return false;
  }
  return true;
}

}  // namespace gperm
