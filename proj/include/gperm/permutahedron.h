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
// Generalized permutahedra as base polytopes of submodular functions:
// vertices via the greedy rule, faces via braid-cone compositions, and the
// face-dimension counting polynomials over integer directions in [m]^d.

#ifndef GPERM_PERMUTAHEDRON_H_
#define GPERM_PERMUTAHEDRON_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gperm/polynomial.h"
#include "gperm/rational.h"
#include "gperm/report.h"
#include "gperm/setfn.h"

namespace gperm {

// Ordered set partition (T_1, ..., T_k) of the ground set, blocks as
// bitmasks. Identifies the relatively open braid cone of directions y with
// y constant on each block and strictly decreasing from block to block.
struct Composition {
  std::vector<Subset> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Level sets of y in strictly decreasing order of value.
Composition CompositionOfDirection(std::span<const Rat> y);
Composition CompositionOfDirection(std::span<const int64_t> y);

// All ordered set partitions of {0, ..., d-1} (the ordered Bell number).
std::vector<Composition> AllCompositions(int d);

// Block l (0-based) of a k-block composition gets value k - l.
std::vector<int64_t> RepresentativeDirection(const Composition& c, int d);

// True if every block of fine is contained in a block of coarse and the
// block order is respected, i.e. coarse is obtained by merging consecutive
// blocks of fine.
bool Coarsens(const Composition& coarse, const Composition& fine);

struct Face {
  std::vector<int> vertex_ids;  // sorted indices into GPerm::vertices()
  int dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

// Enumeration caps. When enforce is false, exceeding a cap prints a warning
// on stderr instead of throwing BudgetExceeded.
struct EnumerationLimits {
  int max_face_lattice_d = 6;
  int max_m = 8;
  bool enforce = true;
};

// {greedy_vertex(z, sigma) : sigma in S_d}, deduplicated and lex-sorted.
// Throws NotSubmodularError.
std::vector<RatVec> Vertices(const SetFn& z);

// Base polytope P(z) with its vertex set. The face lattice is materialized
// on first use; after that every query is read-only and thread-safe.
class GPerm {
 public:
  explicit GPerm(SetFn z, EnumerationLimits limits = {});

  const SetFn& z() const { return z_; }
  int d() const { return z_.d(); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const EnumerationLimits& limits() const { return limits_; }

  // Every nonempty face exactly once, including P itself.
  const std::vector<Face>& faces() const;
  std::size_t FaceIndexOf(const Composition& c) const;
  const std::map<Composition, std::size_t>& face_of_composition() const;
  // Number of k-dimensional faces contained in faces()[face] (itself
  // included); indexed [face][k].
  const std::vector<std::vector<std::size_t>>& k_face_counts() const;

  // Index of P_y for an integer direction y of length d.
  std::size_t FaceIndexOfDirection(std::span<const int64_t> y) const;

  // Index of the face with exactly these vertices, or -1.
  std::ptrdiff_t FindFace(std::span<const int> vertex_ids) const;

  // Argmax of y over the vertices without consulting the lattice.
  std::vector<int> MaximizingVertices(std::span<const Rat> y) const;
  std::vector<int> MaximizingVertices(std::span<const int64_t> y) const;

  void CheckM(int m) const;

 private:
  struct Lattice;
  const Lattice& lattice() const;

  SetFn z_;
  EnumerationLimits limits_;
  std::vector<RatVec> vertices_;
  // vertices_ scaled to a common integer denominator, when it fits.
  std::vector<std::vector<int64_t>> scaled_;
  std::shared_ptr<Lattice> lattice_;
};

// P_y: the face maximizing y.
Face FaceOfDirection(const GPerm& p, std::span<const Rat> y);

const std::vector<Face>& FaceLattice(const GPerm& p);

// Faces G with dim G = k and vertices(G) within vertices(F). Throws
// InputError if f is not a face of p.
std::size_t CountKFaces(const GPerm& p, const Face& f, int k);

// #{y in [m]^d : dim P_y = k}.
uint64_t ChiDk(const GPerm& p, int k, int m);

// Sum over y in [m]^d of the number of k-faces of P_y.
uint64_t ReciprocityRhs(const GPerm& p, int k, int m);

// Per-dimension tallies over y in [m]^d, index k = 0..d.
struct DirectionTally {
  std::vector<uint64_t> chi;
  std::vector<uint64_t> rhs;
};
DirectionTally TallyDirections(const GPerm& p, int m);

// Interpolates ChiDk at m = 1, ..., d-k+1.
Polynomial ChiDkPolynomial(const GPerm& p, int k);

// Checks the interpolant against direct counts for m up to
// max(m_max, d-k+3) and (-1)^(d-k) p(-m) against ReciprocityRhs for
// m = 1..m_max.
Report VerifyReciprocity(const GPerm& p, int k, int m_max);

}  // namespace gperm

#endif  // GPERM_PERMUTAHEDRON_H_
