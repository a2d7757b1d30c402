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
// Lattice-point counting in dilated rational polytopes, with the pruned
// inside-out variants weighted by a complete fan of closed cones.

#ifndef GPERM_EHRHART_H_
#define GPERM_EHRHART_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gperm/polynomial.h"
#include "gperm/rational.h"
#include "gperm/report.h"

namespace gperm {

class GPerm;

enum class Relation { kLessEq, kLess, kEq };

// a . x  rel  b
struct Row {
  RatVec a;
  Rat b;
  Relation rel = Relation::kLessEq;
};

// Integer box [lo_i, hi_i] per coordinate.
using Box = std::vector<std::pair<int64_t, int64_t>>;

// A rational polyhedron given by rows. A bounding box is required for
// counting; the rows' point set is trusted to lie inside it. Cones are
// HPolytopes without a box.
class HPolytope {
 public:
  HPolytope(int d, std::vector<Row> rows, std::optional<Box> bbox);

  static HPolytope UnitCube(int d);
  // prod [lo_i, hi_i] with rational bounds, lo_i <= hi_i.
  static HPolytope RationalBox(const RatVec& lo, const RatVec& hi);
  // {x >= 0, sum x_i / scale_i <= 1}, scale_i > 0.
  static HPolytope Simplex(const RatVec& scales);

  int d() const { return d_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::optional<Box>& bbox() const { return bbox_; }

  // Inequality rows made strict; equality rows kept.
  HPolytope Interior() const;
  // Rows of both; keeps this polytope's box.
  HPolytope Intersect(const HPolytope& other) const;

 private:
  int d_;
  std::vector<Row> rows_;
  std::optional<Box> bbox_;
};

// Closed full-dimensional cones (rows with b = 0, rel <=) meant to be the
// maximal cones of a complete fan.
struct FullDimFan {
  int d = 0;
  std::vector<HPolytope> cones;
};

// #(Z^d ∩ tQ).
uint64_t CountLattice(const HPolytope& q, int64_t t);

// Interpolates count(t) per residue class r mod period through the degree+1
// smallest t >= 1 with t ≡ r, then checks one more node per class. Throws
// VerificationError on mismatch.
QuasiPolynomial InterpolateQuasiPolynomial(const std::function<uint64_t(int64_t)>& count,
                                           int degree, int period);

QuasiPolynomial EhrhartQuasiPolynomial(const HPolytope& q, int degree, int period);

// (-1)^degree Ehr_Q(-t) against the direct interior count, t = 1..t_max.
// Q must be an irredundant description; that is not checked.
Report EmReciprocityCheck(const HPolytope& q, int degree, int period, int t_max);

// One cone per vertex v: (u - v) . y <= 0 for every other vertex u.
FullDimFan NormalFanOf(const GPerm& p);

// Number of cones containing y.
int Multiplicity(const FullDimFan& fan, std::span<const int64_t> y);

// Points of tQ lying in exactly one closed cone, i.e. in the interior of a
// maximal cone. Throws VerificationError on a point covered by no cone.
uint64_t InnerPrunedCount(const HPolytope& q, const FullDimFan& fan, int64_t t);

// Sum over points of tQ of their multiplicity. Same error as above.
uint64_t CumulativePrunedCount(const HPolytope& q, const FullDimFan& fan, int64_t t);

QuasiPolynomial InnerPrunedQuasiPolynomial(const HPolytope& q_open, const FullDimFan& fan,
                                           int degree, int period);
QuasiPolynomial CumulativePrunedQuasiPolynomial(const HPolytope& q, const FullDimFan& fan,
                                                int degree, int period);

// Interpolates the inner count of Q's interior and checks
// (-1)^degree O(-t) = CumulativePrunedCount(Q, fan, t) for t = 1..t_max.
Report PioReciprocityCheck(const HPolytope& q, const FullDimFan& fan, int degree, int period,
                           int t_max);

}  // namespace gperm

#endif  // GPERM_EHRHART_H_
