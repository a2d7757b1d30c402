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

#include "gperm/setfn.h"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "gperm/errors.h"

namespace gperm {

SetFn::SetFn(int d, std::vector<Rat> values) : d_(d), values_(std::move(values)) {
  if (d < 1 || d > kMaxGroundSet) {
    throw InputError("set function ground set size must be in [1, " +
                     std::to_string(kMaxGroundSet) + "], got " +
                     std::to_string(d));
  }
  if (values_.size() != (std::size_t{1} << d)) {
    throw InputError("set function needs 2^d = " +
                     std::to_string(std::size_t{1} << d) + " values, got " +
                     std::to_string(values_.size()));
  }
  if (values_[0] != 0) throw InputError("set function must vanish on the empty set");
}

SetFn SetFn::Zero(int d) {
  if (d < 1 || d > kMaxGroundSet) {
    throw InputError("set function ground set size out of range");
  }
  return SetFn(d, std::vector<Rat>(std::size_t{1} << d));
}

bool IsSubmodular(const SetFn& z) {
  const int d = z.d();
  for (Subset a = 0; a <= z.full(); ++a) {
    for (int i = 0; i < d; ++i) {
      const Subset bi = Subset{1} << i;
      if (a & bi) continue;
      for (int j = i + 1; j < d; ++j) {
        const Subset bj = Subset{1} << j;
        if (a & bj) continue;
        if (z(a | bi) + z(a | bj) < z(a | bi | bj) + z(a)) return false;
      }
    }
  }
  return true;
}

SetFn StandardPermSetFn(int d) {
  if (d < 1 || d > kMaxGroundSet) {
    throw InputError("standard permutahedron needs 1 <= d <= " +
                     std::to_string(kMaxGroundSet));
  }
  std::vector<Rat> values(std::size_t{1} << d);
  for (Subset s = 0; s < values.size(); ++s) {
    const int size = std::popcount(s);
    int total = 0;
    for (int r = 0; r < size; ++r) total += d - r;
    values[s] = total;
  }
  return SetFn(d, std::move(values));
}

RatVec GreedyVertexUnchecked(const SetFn& z, std::span<const int> perm) {
  const int d = z.d();
  if (static_cast<int>(perm.size()) != d) {
    throw InputError("greedy vertex: permutation length differs from d");
  }
  RatVec x(d);
  Subset chain = 0;
  for (int idx : perm) {
    if (idx < 0 || idx >= d || (chain >> idx) & 1) {
      throw InputError("greedy vertex: not a permutation of the ground set");
    }
    const Subset next = chain | (Subset{1} << idx);
    x[idx] = z(next) - z(chain);
    chain = next;
  }
  return x;
}

RatVec GreedyVertex(const SetFn& z, std::span<const int> perm) {
  if (!IsSubmodular(z)) throw NotSubmodularError();
  return GreedyVertexUnchecked(z, perm);
}

SetFn SetFnSum(const SetFn& a, const SetFn& b) {
  if (a.d() != b.d()) throw InputError("set function sum: mismatched d");
  std::vector<Rat> values(a.values().size());
  for (std::size_t s = 0; s < values.size(); ++s) values[s] = a(s) + b(s);
  return SetFn(a.d(), std::move(values));
}

SetFn SetFnFromVertices(std::span<const RatVec> vertices) {
  if (vertices.empty()) throw InputError("set function from an empty vertex set");
  const std::size_t d = vertices.front().size();
  if (d < 1 || d > static_cast<std::size_t>(kMaxGroundSet)) {
    throw InputError("vertex dimension out of range");
  }
  Rat sum0 = 0;
  for (const Rat& c : vertices.front()) sum0 += c;
  for (const RatVec& v : vertices) {
    if (v.size() != d) throw InputError("vertices of unequal length");
    Rat sum = 0;
    for (const Rat& c : v) sum += c;
    if (sum != sum0) {
      throw InputError("vertices do not share a coordinate sum");
    }
  }

  std::vector<Rat> values(std::size_t{1} << d);
  for (Subset s = 1; s < values.size(); ++s) {
    bool first = true;
    for (const RatVec& v : vertices) {
      Rat partial = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if ((s >> i) & 1) partial += v[i];
      }
      if (first || partial > values[s]) values[s] = partial;
      first = false;
    }
  }
  return SetFn(static_cast<int>(d), std::move(values));
}

}  // namespace gperm
