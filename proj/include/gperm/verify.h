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
// Seeded random instances and the aggregate identity checks behind
// 'gperm verify-all'.

#ifndef GPERM_VERIFY_H_
#define GPERM_VERIFY_H_

#include <cstdint>
#include <random>

#include "gperm/ehrhart.h"
#include "gperm/hypergraph.h"
#include "gperm/report.h"
#include "gperm/setfn.h"

namespace gperm {

// mt19937_64 is fully specified by the standard; the range mapping below is
// our own so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [lo, hi].
  int64_t Uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// d in [min_d, max_d], 0..max_edges nonempty random edges.
Hypergraph RandomHypergraph(Rng& rng, int min_d, int max_d, int max_edges);

// Sum of 1..max_terms edge-intersection functions with weights 1..3.
SetFn RandomHypergraphicSetFn(Rng& rng, int min_d, int max_d, int max_terms = 5);

// A polytope with rational vertices of denominator <= max_den, together
// with its dimension and a period that the Ehrhart quasipolynomial divides.
struct RandomPolytope {
  HPolytope polytope;
  int degree;
  int period;
};
RandomPolytope RandomRationalBox(Rng& rng, int max_d, int max_den);
RandomPolytope RandomRationalSimplex(Rng& rng, int max_d, int max_den);

// Runs every identity check on the instances of one trial.
Report VerifyTrial(uint64_t seed, int trial);

// trials >= 1. Trials may run on up to jobs threads; entries are assembled
// in trial order.
Report VerifyAll(uint64_t seed, int trials, int jobs = 1);

}  // namespace gperm

#endif  // GPERM_VERIFY_H_
