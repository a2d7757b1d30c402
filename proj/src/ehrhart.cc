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

#include "gperm/ehrhart.h"

#include <string>

#include "gperm/errors.h"
#include "gperm/permutahedron.h"

namespace gperm {

namespace {

// A row scaled to integer coefficients.
struct IntRow {
  std::vector<int64_t> a;
  int64_t b;
  Relation rel;

  bool Holds(std::span<const int64_t> x, int64_t t) const {
    __int128 lhs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) lhs += static_cast<__int128>(a[i]) * x[i];
    const __int128 rhs = static_cast<__int128>(b) * t;
    switch (rel) {
      case Relation::kLessEq: return lhs <= rhs;
      case Relation::kLess: return lhs < rhs;
      case Relation::kEq: return lhs == rhs;
    }
    return false;
  }
};

std::vector<IntRow> ToIntRows(const std::vector<Row>& rows) {
  std::vector<IntRow> out;
  for (const Row& row : rows) {
    BigInt lcm = denominator(row.b);
    for (const Rat& c : row.a) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(c)));
    IntRow r{{}, ToInt64(row.b * lcm), row.rel};
    for (const Rat& c : row.a) r.a.push_back(ToInt64(c * lcm));
    out.push_back(std::move(r));
  }
  return out;
}

bool AllHold(const std::vector<IntRow>& rows, std::span<const int64_t> x, int64_t t) {
  for (const IntRow& r : rows) {
    if (!r.Holds(x, t)) return false;
  }
  return true;
}

// Visits every integer point of tQ.
template <typename Visit>
void ForEachLatticePoint(const HPolytope& q, int64_t t, Visit&& visit) {
  if (t < 1) throw InputError("dilation factor must be positive");
  if (!q.bbox()) throw InputError("counting needs a bounding box");
  const Box& box = *q.bbox();
  const std::vector<IntRow> rows = ToIntRows(q.rows());
  const int d = q.d();
  std::vector<int64_t> x(d);
  for (int i = 0; i < d; ++i) {
    if (box[i].first > box[i].second) return;
    x[i] = box[i].first * t;
  }
  while (true) {
    if (AllHold(rows, x, t)) visit(std::span<const int64_t>(x));
    int i = 0;
    while (i < d && x[i] == box[i].second * t) {
      x[i] = box[i].first * t;
      ++i;
    }
    if (i == d) return;
    ++x[i];
  }
}

struct IntFan {
  std::vector<std::vector<IntRow>> cones;

  explicit IntFan(const FullDimFan& fan) {
    for (const HPolytope& cone : fan.cones) cones.push_back(ToIntRows(cone.rows()));
  }

  int Multiplicity(std::span<const int64_t> y) const {
    int mult = 0;
    for (const auto& rows : cones) mult += AllHold(rows, y, 0);
    return mult;
  }
};

void CheckFan(const HPolytope& q, const FullDimFan& fan) {
  if (fan.d != q.d()) throw InputError("fan and polytope dimensions differ");
}

[[noreturn]] void Uncovered(std::span<const int64_t> y) {
  std::string point;
  for (int64_t c : y) point += (point.empty() ? "" : ",") + std::to_string(c);
  throw VerificationError("fan is not complete: point (" + point + ") lies in no cone");
}

Rat Signed(int degree, const Rat& value) { return degree % 2 == 0 ? value : Rat(-value); }

}  // namespace

HPolytope::HPolytope(int d, std::vector<Row> rows, std::optional<Box> bbox)
    : d_(d), rows_(std::move(rows)), bbox_(std::move(bbox)) {
  if (d < 1) throw InputError("polytope dimension must be positive");
  for (const Row& row : rows_) {
    if (static_cast<int>(row.a.size()) != d) throw InputError("row length differs from d");
  }
  if (bbox_ && static_cast<int>(bbox_->size()) != d) {
    throw InputError("bounding box length differs from d");
  }
}

HPolytope HPolytope::UnitCube(int d) {
  return RationalBox(RatVec(d, Rat(0)), RatVec(d, Rat(1)));
}

HPolytope HPolytope::RationalBox(const RatVec& lo, const RatVec& hi) {
  if (lo.size() != hi.size() || lo.empty()) throw InputError("box bounds of unequal length");
  const int d = static_cast<int>(lo.size());
  std::vector<Row> rows;
  Box box;
  for (int i = 0; i < d; ++i) {
    if (lo[i] > hi[i]) throw InputError("box lower bound exceeds upper bound");
    RatVec e(d, Rat(0));
    e[i] = 1;
    if (lo[i] == hi[i]) {
      // Degenerate side: an equality row keeps the relative interior.
      rows.push_back({e, hi[i], Relation::kEq});
    } else {
      rows.push_back({e, hi[i], Relation::kLessEq});
      e[i] = -1;
      rows.push_back({e, -lo[i], Relation::kLessEq});
    }
    // floor(lo), ceil(hi)
    BigInt fl = numerator(lo[i]) / denominator(lo[i]);
    if (fl * denominator(lo[i]) > numerator(lo[i])) fl -= 1;
    BigInt ce = numerator(hi[i]) / denominator(hi[i]);
    if (ce * denominator(hi[i]) < numerator(hi[i])) ce += 1;
    box.emplace_back(ToInt64(Rat(fl)), ToInt64(Rat(ce)));
  }
  return HPolytope(d, std::move(rows), std::move(box));
}

HPolytope HPolytope::Simplex(const RatVec& scales) {
  if (scales.empty()) throw InputError("simplex needs d >= 1");
  const int d = static_cast<int>(scales.size());
  std::vector<Row> rows;
  Box box;
  RatVec sum_row(d);
  for (int i = 0; i < d; ++i) {
    if (scales[i] <= 0) throw InputError("simplex scales must be positive");
    RatVec e(d, Rat(0));
    e[i] = -1;
    rows.push_back({e, Rat(0), Relation::kLessEq});
    sum_row[i] = 1 / scales[i];
    BigInt ce = numerator(scales[i]) / denominator(scales[i]);
    if (ce * denominator(scales[i]) < numerator(scales[i])) ce += 1;
    box.emplace_back(0, ToInt64(Rat(ce)));
  }
  rows.push_back({sum_row, Rat(1), Relation::kLessEq});
  return HPolytope(d, std::move(rows), std::move(box));
}

HPolytope HPolytope::Interior() const {
  std::vector<Row> rows = rows_;
  for (Row& row : rows) {
    if (row.rel == Relation::kLessEq) row.rel = Relation::kLess;
  }
  return HPolytope(d_, std::move(rows), bbox_);
}

HPolytope HPolytope::Intersect(const HPolytope& other) const {
  if (other.d() != d_) throw InputError("intersection of different dimensions");
  std::vector<Row> rows = rows_;
  rows.insert(rows.end(), other.rows().begin(), other.rows().end());
  return HPolytope(d_, std::move(rows), bbox_);
}

uint64_t CountLattice(const HPolytope& q, int64_t t) {
  uint64_t count = 0;
  ForEachLatticePoint(q, t, [&](std::span<const int64_t>) { ++count; });
  return count;
}

QuasiPolynomial InterpolateQuasiPolynomial(const std::function<uint64_t(int64_t)>& count,
                                           int degree, int period) {
  if (degree < 0) throw InputError("degree must be nonnegative");
  if (period < 1) throw InputError("period must be positive");
  std::vector<Polynomial> constituents;
  for (int r = 0; r < period; ++r) {
    const int64_t first = r == 0 ? period : r;
    std::vector<Rat> nodes;
    std::vector<Rat> values;
    for (int j = 0; j <= degree; ++j) {
      const int64_t t = first + static_cast<int64_t>(j) * period;
      nodes.emplace_back(t);
      values.emplace_back(count(t));
    }
    Polynomial poly = Interpolate(nodes, values);
    const int64_t extra = first + static_cast<int64_t>(degree + 1) * period;
    const Rat expected(count(extra));
    if (poly(extra) != expected) {
      throw VerificationError("declared degree " + std::to_string(degree) + " / period " +
                              std::to_string(period) + " does not reproduce the count at t = " +
                              std::to_string(extra) + " (interpolant " + ToString(poly(extra)) +
                              ", direct " + ToString(expected) + ")");
    }
    constituents.push_back(std::move(poly));
  }
  return QuasiPolynomial(std::move(constituents));
}

QuasiPolynomial EhrhartQuasiPolynomial(const HPolytope& q, int degree, int period) {
  return InterpolateQuasiPolynomial([&](int64_t t) { return CountLattice(q, t); }, degree,
                                    period);
}

Report EmReciprocityCheck(const HPolytope& q, int degree, int period, int t_max) {
  if (t_max < 1) throw InputError("t_max must be positive");
  const QuasiPolynomial ehr = EhrhartQuasiPolynomial(q, degree, period);
  const HPolytope interior = q.Interior();
  Report report;
  for (int t = 1; t <= t_max; ++t) {
    report.Add("ehrhart-macdonald t=" + std::to_string(t), Signed(degree, ehr(-t)),
               Rat(CountLattice(interior, t)));
  }
  return report;
}

FullDimFan NormalFanOf(const GPerm& p) {
  FullDimFan fan{p.d(), {}};
  const auto& vertices = p.vertices();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::vector<Row> rows;
    for (std::size_t u = 0; u < vertices.size(); ++u) {
      if (u == v) continue;
      RatVec a(p.d());
      for (int i = 0; i < p.d(); ++i) a[i] = vertices[u][i] - vertices[v][i];
      rows.push_back({std::move(a), Rat(0), Relation::kLessEq});
    }
    fan.cones.emplace_back(p.d(), std::move(rows), std::nullopt);
  }
  return fan;
}

int Multiplicity(const FullDimFan& fan, std::span<const int64_t> y) {
  return IntFan(fan).Multiplicity(y);
}

uint64_t InnerPrunedCount(const HPolytope& q, const FullDimFan& fan, int64_t t) {
  CheckFan(q, fan);
  const IntFan cones(fan);
  uint64_t count = 0;
  ForEachLatticePoint(q, t, [&](std::span<const int64_t> y) {
    const int mult = cones.Multiplicity(y);
    if (mult == 0) Uncovered(y);
    count += mult == 1;
  });
  return count;
}

uint64_t CumulativePrunedCount(const HPolytope& q, const FullDimFan& fan, int64_t t) {
  CheckFan(q, fan);
  const IntFan cones(fan);
  uint64_t total = 0;
  ForEachLatticePoint(q, t, [&](std::span<const int64_t> y) {
    const int mult = cones.Multiplicity(y);
    if (mult == 0) Uncovered(y);
    total += static_cast<uint64_t>(mult);
  });
  return total;
}

QuasiPolynomial InnerPrunedQuasiPolynomial(const HPolytope& q_open, const FullDimFan& fan,
                                           int degree, int period) {
  return InterpolateQuasiPolynomial(
      [&](int64_t t) { return InnerPrunedCount(q_open, fan, t); }, degree, period);
}

QuasiPolynomial CumulativePrunedQuasiPolynomial(const HPolytope& q, const FullDimFan& fan,
                                                int degree, int period) {
  return InterpolateQuasiPolynomial(
      [&](int64_t t) { return CumulativePrunedCount(q, fan, t); }, degree, period);
}

Report PioReciprocityCheck(const HPolytope& q, const FullDimFan& fan, int degree, int period,
                           int t_max) {
  if (t_max < 1) throw InputError("t_max must be positive");
  const QuasiPolynomial inner = InnerPrunedQuasiPolynomial(q.Interior(), fan, degree, period);
  Report report;
  for (int t = 1; t <= t_max; ++t) {
    report.Add("pruned inside-out t=" + std::to_string(t), Signed(degree, inner(-t)),
               Rat(CumulativePrunedCount(q, fan, t)));
  }
  return report;
}

}  // namespace gperm
