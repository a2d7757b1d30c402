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

#ifndef GPERM_SETFN_H_
#define GPERM_SETFN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gperm/rational.h"

namespace gperm {

// A subset of the ground set {0, ..., d-1}; bit i stands for element i+1.
using Subset = uint32_t;

inline constexpr int kMaxGroundSet = 8;

// A set function z: 2^[d] -> Q with z(empty) = 0, stored as a dense table
// indexed by subset bitmask.
class SetFn {
 public:
  // Throws InputError unless 1 <= d <= kMaxGroundSet, values.size() == 2^d
  // and values[0] == 0.
  SetFn(int d, std::vector<Rat> values);

  // The zero function on a d-element ground set.
  static SetFn Zero(int d);

  int d() const { return d_; }
  Subset full() const { return (Subset{1} << d_) - 1; }
  const Rat& operator()(Subset s) const { return values_[s]; }
  const std::vector<Rat>& values() const { return values_; }

  friend bool operator==(const SetFn&, const SetFn&) = default;

 private:
  int d_;
  std::vector<Rat> values_;
};

// Local (diminishing returns) criterion:
//   z(A+i) + z(A+j) >= z(A+i+j) + z(A)  for all A and i != j outside A.
bool IsSubmodular(const SetFn& z);

// z(A) = d + (d-1) + ... + (d-|A|+1); the base polytope is the standard
// permutahedron, the convex hull of all permutations of (1, ..., d).
SetFn StandardPermSetFn(int d);

// The vertex maximizing every direction whose level sets refine the chain
// C_j = {perm[0], ..., perm[j-1]}: coordinate perm[j] is
// z(C_{j+1}) - z(C_j). perm is a permutation of {0, ..., d-1}.
// Throws NotSubmodularError for non-submodular z.
RatVec GreedyVertex(const SetFn& z, std::span<const int> perm);

// Same rule without the submodularity check, for callers that already
// validated z.
RatVec GreedyVertexUnchecked(const SetFn& z, std::span<const int> perm);

// Pointwise sum; the base polytope of the sum is the Minkowski sum.
SetFn SetFnSum(const SetFn& a, const SetFn& b);

// z_P(A) = max over v in vertices of sum_{i in A} v_i. All vertices must
// have the same length and the same coordinate sum.
SetFn SetFnFromVertices(std::span<const RatVec> vertices);

}  // namespace gperm

#endif  // GPERM_SETFN_H_
