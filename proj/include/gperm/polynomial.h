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

#ifndef GPERM_POLYNOMIAL_H_
#define GPERM_POLYNOMIAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gperm/rational.h"

namespace gperm {

// Univariate polynomial with rational coefficients, constant term first.
// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coefficients);

  const std::vector<Rat>& coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  Rat operator()(const Rat& x) const;
  Rat operator()(int64_t x) const { return (*this)(Rat(x)); }

  std::vector<std::string> CoefficientStrings() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rat> coefficients_;
};

// The unique polynomial of degree < nodes.size() through (nodes[i],
// values[i]). Nodes must be pairwise distinct.
Polynomial Interpolate(std::span<const Rat> nodes, std::span<const Rat> values);

// Interpolates f at x = 1, ..., degree+1.
template <typename F>
Polynomial InterpolateFromOne(int degree, F&& f) {
  std::vector<Rat> nodes;
  std::vector<Rat> values;
  for (int64_t x = 1; x <= degree + 1; ++x) {
    nodes.emplace_back(x);
    values.emplace_back(f(x));
  }
  return Interpolate(nodes, values);
}

// A periodic family of polynomials; evaluation at t uses constituent
// t mod period taken in [0, period), including for negative t.
class QuasiPolynomial {
 public:
  explicit QuasiPolynomial(std::vector<Polynomial> constituents);

  int period() const { return static_cast<int>(constituents_.size()); }
  const std::vector<Polynomial>& constituents() const { return constituents_; }
  const Polynomial& constituent(int64_t t) const;

  Rat operator()(int64_t t) const { return constituent(t)(t); }

  // True when every constituent is the same polynomial.
  bool IsPolynomial() const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::vector<Polynomial> constituents_;
};

}  // namespace gperm

#endif  // GPERM_POLYNOMIAL_H_
