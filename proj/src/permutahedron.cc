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

#include "gperm/permutahedron.h"

#include <algorithm>
#include <bit>
#include <iostream>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "gperm/errors.h"

namespace gperm {

namespace {

// Compositions have at most 8 blocks of at most 8 bits each.
uint64_t PackComposition(const Composition& c) {
  uint64_t key = 0;
  for (int l = 0; l < c.size(); ++l) key |= uint64_t{c.blocks[l]} << (8 * l);
  return key;
}

template <typename T>
Composition LevelSets(std::span<const T> y) {
  std::vector<int> order(y.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return y[a] > y[b]; });
  Composition c;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || y[order[i]] != y[order[i - 1]]) c.blocks.push_back(0);
    c.blocks.back() |= Subset{1} << order[i];
  }
  return c;
}

void AppendCompositions(Subset remaining, Composition& prefix,
                        std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  // Every nonempty subset of remaining as the next block.
  for (Subset block = remaining; block != 0; block = (block - 1) & remaining) {
    prefix.blocks.push_back(block);
    AppendCompositions(remaining & ~block, prefix, out);
    prefix.blocks.pop_back();
  }
}

bool IsSubsetOf(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

Composition CompositionOfDirection(std::span<const Rat> y) { return LevelSets(y); }

Composition CompositionOfDirection(std::span<const int64_t> y) {
  return LevelSets(y);
}

std::vector<Composition> AllCompositions(int d) {
  if (d < 1 || d > kMaxGroundSet) throw InputError("compositions: d out of range");
  std::vector<Composition> out;
  Composition prefix;
  AppendCompositions((Subset{1} << d) - 1, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int64_t> RepresentativeDirection(const Composition& c, int d) {
  std::vector<int64_t> y(d, 0);
  const int k = c.size();
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < d; ++i) {
      if ((c.blocks[l] >> i) & 1) y[i] = k - l;
    }
  }
  return y;
}

bool Coarsens(const Composition& coarse, const Composition& fine) {
  std::size_t f = 0;
  for (Subset block : coarse.blocks) {
    Subset covered = 0;
    while (covered != block && f < fine.blocks.size() &&
           (fine.blocks[f] & ~block) == 0) {
      covered |= fine.blocks[f++];
    }
    if (covered != block) return false;
  }
  return f == fine.blocks.size();
}

std::vector<RatVec> Vertices(const SetFn& z) {
  if (!IsSubmodular(z)) throw NotSubmodularError();
  std::vector<int> perm(z.d());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<RatVec> unique;
  do {
    unique.insert(GreedyVertexUnchecked(z, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {unique.begin(), unique.end()};
}

struct GPerm::Lattice {
  std::once_flag once;
  std::vector<Face> faces;
  std::map<Composition, std::size_t> by_composition;
  std::unordered_map<uint64_t, std::size_t> by_packed;
  std::map<std::vector<int>, std::size_t> by_vertices;
  std::vector<std::vector<std::size_t>> k_counts;
};

GPerm::GPerm(SetFn z, EnumerationLimits limits)
    : z_(std::move(z)),
      limits_(limits),
      vertices_(Vertices(z_)),
      lattice_(std::make_shared<Lattice>()) {
  BigInt lcm = 1;
  for (const RatVec& v : vertices_) {
    for (const Rat& c : v) {
      lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(c)));
    }
  }
  // Keep |coordinate| below 2^40 so dot products with small directions
  // cannot overflow a 128-bit accumulator.
  const BigInt bound = BigInt(1) << 40;
  std::vector<std::vector<int64_t>> scaled;
  for (const RatVec& v : vertices_) {
    std::vector<int64_t> row;
    for (const Rat& c : v) {
      const BigInt s = numerator(c) * (lcm / denominator(c));
      if (s >= bound || s <= -bound) return;
      row.push_back(s.convert_to<int64_t>());
    }
    scaled.push_back(std::move(row));
  }
  scaled_ = std::move(scaled);
}

std::vector<int> GPerm::MaximizingVertices(std::span<const Rat> y) const {
  if (static_cast<int>(y.size()) != d()) throw InputError("direction length differs from d");
  std::vector<int> best;
  Rat best_value;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Rat value = Dot(y, vertices_[i]);
    if (best.empty() || value > best_value) {
      best = {static_cast<int>(i)};
      best_value = value;
    } else if (value == best_value) {
      best.push_back(static_cast<int>(i));
    }
  }
  return best;
}

std::vector<int> GPerm::MaximizingVertices(std::span<const int64_t> y) const {
  if (static_cast<int>(y.size()) != d()) throw InputError("direction length differs from d");
  if (scaled_.empty()) {
    return MaximizingVertices(ToRatVec(y));
  }
  std::vector<int> best;
  __int128 best_value = 0;
  for (std::size_t i = 0; i < scaled_.size(); ++i) {
    __int128 value = 0;
    for (int j = 0; j < d(); ++j) value += static_cast<__int128>(y[j]) * scaled_[i][j];
    if (best.empty() || value > best_value) {
      best = {static_cast<int>(i)};
      best_value = value;
    } else if (value == best_value) {
      best.push_back(static_cast<int>(i));
    }
  }
  return best;
}

const GPerm::Lattice& GPerm::lattice() const {
  std::call_once(lattice_->once, [this] {
    if (d() > limits_.max_face_lattice_d) {
      const std::string msg = "face lattice enumeration for d = " +
                              std::to_string(d()) + " exceeds cap " +
                              std::to_string(limits_.max_face_lattice_d);
      if (limits_.enforce) throw BudgetExceeded(msg);
      std::cerr << "warning: " << msg << "\n";
    }
    Lattice& lat = *lattice_;
    for (const Composition& c : AllCompositions(d())) {
      std::vector<int> ids = MaximizingVertices(RepresentativeDirection(c, d()));
      auto [it, inserted] = lat.by_vertices.emplace(ids, lat.faces.size());
      if (inserted) {
        std::vector<RatVec> points;
        for (int id : ids) points.push_back(vertices_[id]);
        lat.faces.push_back({std::move(ids), static_cast<int>(AffineRank(points))});
      }
      lat.by_composition.emplace(c, it->second);
      lat.by_packed.emplace(PackComposition(c), it->second);
    }

    const std::size_t words = (vertices_.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> bits(lat.faces.size(),
                                            std::vector<uint64_t>(words, 0));
    for (std::size_t f = 0; f < lat.faces.size(); ++f) {
      for (int id : lat.faces[f].vertex_ids) bits[f][id / 64] |= uint64_t{1} << (id % 64);
    }
    lat.k_counts.assign(lat.faces.size(), std::vector<std::size_t>(d() + 1, 0));
    for (std::size_t f = 0; f < lat.faces.size(); ++f) {
      for (std::size_t g = 0; g < lat.faces.size(); ++g) {
        if (lat.faces[g].dim <= lat.faces[f].dim && IsSubsetOf(bits[g], bits[f])) {
          ++lat.k_counts[f][lat.faces[g].dim];
        }
      }
    }
  });
  return *lattice_;
}

const std::vector<Face>& GPerm::faces() const { return lattice().faces; }

const std::map<Composition, std::size_t>& GPerm::face_of_composition() const {
  return lattice().by_composition;
}

const std::vector<std::vector<std::size_t>>& GPerm::k_face_counts() const {
  return lattice().k_counts;
}

std::size_t GPerm::FaceIndexOf(const Composition& c) const {
  const auto& map = lattice().by_composition;
  auto it = map.find(c);
  if (it == map.end()) throw InputError("not a composition of the ground set");
  return it->second;
}

std::size_t GPerm::FaceIndexOfDirection(std::span<const int64_t> y) const {
  return lattice().by_packed.at(PackComposition(CompositionOfDirection(y)));
}

std::ptrdiff_t GPerm::FindFace(std::span<const int> vertex_ids) const {
  const auto& map = lattice().by_vertices;
  auto it = map.find(std::vector<int>(vertex_ids.begin(), vertex_ids.end()));
  return it == map.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

void GPerm::CheckM(int m) const {
  if (m < 1) throw InputError("m must be positive");
  if (m > limits_.max_m) {
    const std::string msg = "direction enumeration with m = " + std::to_string(m) +
                            " exceeds cap " + std::to_string(limits_.max_m);
    if (limits_.enforce) throw BudgetExceeded(msg);
    std::cerr << "warning: " << msg << "\n";
  }
}

Face FaceOfDirection(const GPerm& p, std::span<const Rat> y) {
  if (static_cast<int>(y.size()) != p.d()) throw InputError("direction length differs from d");
  if (p.d() <= p.limits().max_face_lattice_d) {
    return p.faces()[p.FaceIndexOf(CompositionOfDirection(y))];
  }
  std::vector<int> ids = p.MaximizingVertices(y);
  std::vector<RatVec> points;
  for (int id : ids) points.push_back(p.vertices()[id]);
  const int dim = static_cast<int>(AffineRank(points));
  return {std::move(ids), dim};
}

const std::vector<Face>& FaceLattice(const GPerm& p) { return p.faces(); }

std::size_t CountKFaces(const GPerm& p, const Face& f, int k) {
  const std::ptrdiff_t idx = p.FindFace(f.vertex_ids);
  if (idx < 0) throw InputError("not a face of this polytope");
  if (k < 0 || k > p.d()) throw InputError("face dimension out of range");
  return p.k_face_counts()[static_cast<std::size_t>(idx)][k];
}

DirectionTally TallyDirections(const GPerm& p, int m) {
  p.CheckM(m);
  const int d = p.d();
  const auto& faces = p.faces();
  const auto& counts = p.k_face_counts();

  DirectionTally tally{std::vector<uint64_t>(d + 1, 0), std::vector<uint64_t>(d + 1, 0)};
  std::vector<int64_t> y(d, 1);
  while (true) {
    const std::size_t f = p.FaceIndexOfDirection(y);
    ++tally.chi[faces[f].dim];
    for (int k = 0; k <= d; ++k) tally.rhs[k] += counts[f][k];
    int i = 0;
    while (i < d && y[i] == m) y[i++] = 1;
    if (i == d) break;
    ++y[i];
  }
  return tally;
}

uint64_t ChiDk(const GPerm& p, int k, int m) {
  if (k < 0 || k > p.d()) throw InputError("k out of range");
  return TallyDirections(p, m).chi[k];
}

uint64_t ReciprocityRhs(const GPerm& p, int k, int m) {
  if (k < 0 || k > p.d()) throw InputError("k out of range");
  return TallyDirections(p, m).rhs[k];
}

Polynomial ChiDkPolynomial(const GPerm& p, int k) {
  if (k < 0 || k > p.d() - 1) throw InputError("k must be in [0, d-1]");
  return InterpolateFromOne(p.d() - k, [&](int64_t m) {
    return Rat(ChiDk(p, k, static_cast<int>(m)));
  });
}

Report VerifyReciprocity(const GPerm& p, int k, int m_max) {
  if (m_max < 1) throw InputError("m_max must be positive");
  const Polynomial poly = ChiDkPolynomial(p, k);
  const int degree = p.d() - k;
  const int top = std::max(m_max, degree + 3);
  const std::string tag = "k=" + std::to_string(k) + " m=";
  Report report;
  for (int m = 1; m <= top; ++m) {
    const DirectionTally tally = TallyDirections(p, m);
    report.Add("interpolant " + tag + std::to_string(m), poly(m), Rat(tally.chi[k]));
    if (m <= m_max) {
      Rat lhs = poly(-m);
      if (degree % 2 != 0) lhs = -lhs;
      report.Add("reciprocity " + tag + std::to_string(m), lhs, Rat(tally.rhs[k]));
    }
  }
  return report;
}

}  // namespace gperm
