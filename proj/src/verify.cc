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

#include "gperm/verify.h"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gperm/errors.h"
#include "gperm/permutahedron.h"

namespace gperm {

namespace {

Subset RandomNonemptySubset(Rng& rng, int d) {
  return static_cast<Subset>(rng.Uniform(1, (int64_t{1} << d) - 1));
}

std::vector<RatVec> ToRatVecs(const std::vector<std::vector<int64_t>>& points) {
  std::vector<RatVec> out;
  for (const auto& p : points) out.push_back(ToRatVec(p));
  return out;
}

Rat Sign(int exponent) { return exponent % 2 == 0 ? Rat(1) : Rat(-1); }

// Number of (permutation, subset) pairs violating greedy membership.
int64_t GreedyViolations(const SetFn& z) {
  std::vector<int> perm(z.d());
  std::iota(perm.begin(), perm.end(), 0);
  int64_t violations = 0;
  do {
    const RatVec x = GreedyVertexUnchecked(z, perm);
    Subset chain = 0;
    std::set<Subset> prefixes{0};
    for (int i : perm) prefixes.insert(chain |= Subset{1} << i);
    for (Subset a = 0; a <= z.full(); ++a) {
      Rat partial = 0;
      for (int i = 0; i < z.d(); ++i) {
        if ((a >> i) & 1) partial += x[i];
      }
      if (partial > z(a) || (prefixes.count(a) && partial != z(a))) ++violations;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return violations;
}

void CheckSetFn(const SetFn& z, const std::string& prefix, Report& report) {
  const GPerm p(z);
  report.Add(prefix + "round trip", Rat(SetFnFromVertices(p.vertices()) == z), Rat(1));
  report.Add(prefix + "greedy membership violations", Rat(GreedyViolations(z)), Rat(0));
  for (int k = 0; k < p.d(); ++k) {
    const Report r = VerifyReciprocity(p, k, 3);
    for (const CheckEntry& e : r.entries()) report.Add(prefix + e.label, e.lhs, e.rhs);
  }
}

void CheckHypergraph(const Hypergraph& h, const std::string& prefix, Report& report) {
  const GPerm p(HypergraphicSetFn(h));
  const auto via_headings = ToRatVecs(HgVerticesViaHeadings(h));
  report.Add(prefix + "vertices via acyclic headings", Rat(via_headings == p.vertices()),
             Rat(1));

  const Polynomial chi = ChromaticPolynomial(h);
  const int d = h.d();
  for (int m = 1; m <= 3; ++m) {
    const DirectionTally tally = TallyDirections(p, m);
    const std::string at = " m=" + std::to_string(m);
    report.Add(prefix + "proper colorings vs generic directions" + at,
               Rat(ChromaticCount(h, m)), Rat(tally.chi[0]));
    if (m <= 2) {
      const Rat lhs = Sign(d) * chi(-m);
      report.Add(prefix + "chromatic reciprocity" + at, lhs, Rat(CompatiblePairsCount(h, m)));
      report.Add(prefix + "chromatic reciprocity vs vertex sum" + at, lhs, Rat(tally.rhs[0]));
    }
  }
  report.Add(prefix + "acyclic heading count", Sign(d) * chi(-1),
             Rat(AcyclicHeadings(h).size()));
}

void CheckPolytope(const RandomPolytope& q, const std::string& prefix, Report& report) {
  const Report r = EmReciprocityCheck(q.polytope, q.degree, q.period, 4);
  for (const CheckEntry& e : r.entries()) report.Add(prefix + e.label, e.lhs, e.rhs);
}

void CheckPrunedCube(const Hypergraph& h, const std::string& prefix, Report& report) {
  const GPerm p(HypergraphicSetFn(h));
  const HPolytope cube = HPolytope::UnitCube(h.d());
  const Report r = PioReciprocityCheck(cube, NormalFanOf(p), h.d(), 1, 4);
  for (const CheckEntry& e : r.entries()) report.Add(prefix + e.label, e.lhs, e.rhs);
}

}  // namespace

Hypergraph RandomHypergraph(Rng& rng, int min_d, int max_d, int max_edges) {
  const int d = static_cast<int>(rng.Uniform(min_d, max_d));
  const int edges = static_cast<int>(rng.Uniform(0, max_edges));
  std::vector<Subset> list;
  for (int e = 0; e < edges; ++e) list.push_back(RandomNonemptySubset(rng, d));
  return Hypergraph(d, std::move(list));
}

SetFn RandomHypergraphicSetFn(Rng& rng, int min_d, int max_d, int max_terms) {
  const int d = static_cast<int>(rng.Uniform(min_d, max_d));
  SetFn z = SetFn::Zero(d);
  const int terms = static_cast<int>(rng.Uniform(1, max_terms));
  for (int i = 0; i < terms; ++i) {
    const Subset edge = RandomNonemptySubset(rng, d);
    const int64_t weight = rng.Uniform(1, 3);
    std::vector<Rat> values(std::size_t{1} << d);
    for (Subset t = 0; t < values.size(); ++t) values[t] = (t & edge) ? weight : 0;
    z = SetFnSum(z, SetFn(d, std::move(values)));
  }
  return z;
}

RandomPolytope RandomRationalBox(Rng& rng, int max_d, int max_den) {
  const int d = static_cast<int>(rng.Uniform(1, max_d));
  RatVec lo(d);
  RatVec hi(d);
  BigInt period = 1;
  for (int i = 0; i < d; ++i) {
    const int64_t q1 = rng.Uniform(1, max_den);
    const int64_t q2 = rng.Uniform(1, max_den);
    lo[i] = Rat(rng.Uniform(-3, 3), q1);
    hi[i] = lo[i] + Rat(rng.Uniform(1, 4), q2);
    period = boost::multiprecision::lcm(period, BigInt(denominator(lo[i])));
    period = boost::multiprecision::lcm(period, BigInt(denominator(hi[i])));
  }
  return {HPolytope::RationalBox(lo, hi), d, period.convert_to<int>()};
}

RandomPolytope RandomRationalSimplex(Rng& rng, int max_d, int max_den) {
  const int d = static_cast<int>(rng.Uniform(1, max_d));
  RatVec scales(d);
  BigInt period = 1;
  for (int i = 0; i < d; ++i) {
    scales[i] = Rat(rng.Uniform(1, 4), rng.Uniform(1, max_den));
    period = boost::multiprecision::lcm(period, BigInt(denominator(scales[i])));
  }
  return {HPolytope::Simplex(scales), d, period.convert_to<int>()};
}

Report VerifyTrial(uint64_t seed, int trial) {
  Rng rng(seed * 1'000'003ULL + static_cast<uint64_t>(trial));
  const std::string tag = "trial " + std::to_string(trial) + " ";
  Report report;
  CheckSetFn(RandomHypergraphicSetFn(rng, 2, 5), tag + "setfn: ", report);
  CheckHypergraph(RandomHypergraph(rng, 1, 5, 5), tag + "hypergraph: ", report);
  CheckPrunedCube(RandomHypergraph(rng, 1, 3, 4), tag + "pruned cube: ", report);
  CheckPolytope(RandomRationalBox(rng, 3, 3), tag + "box: ", report);
  CheckPolytope(RandomRationalSimplex(rng, 3, 3), tag + "simplex: ", report);
  return report;
}

Report VerifyAll(uint64_t seed, int trials, int jobs) {
  if (trials < 1) throw InputError("trials must be at least 1");
  jobs = std::max(1, jobs);
  std::vector<Report> results(static_cast<std::size_t>(trials));
  for (int start = 0; start < trials; start += jobs) {
    std::vector<std::future<Report>> batch;
    const int end = std::min(trials, start + jobs);
    for (int t = start; t < end; ++t) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 VerifyTrial, seed, t));
    }
    for (int t = start; t < end; ++t) results[t] = batch[t - start].get();
  }
  Report all;
  for (const Report& r : results) all.Append(r);
  return all;
}

}  // namespace gperm
