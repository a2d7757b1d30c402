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

#include <random>
#include <thread>

#include "gtest/gtest.h"
#include "gperm/errors.h"
#include "gperm/hypergraph.h"
#include "gperm/verify.h"
#include "oracles.h"

namespace gperm {
namespace {

RatVec V(std::vector<int64_t> xs) { return ToRatVec(xs); }

Composition C(std::vector<Subset> blocks) { return Composition{std::move(blocks)}; }

GPerm Pi(int d) { return GPerm(StandardPermSetFn(d)); }

std::vector<int> Ids(const GPerm& p, std::vector<std::vector<int64_t>> points) {
  std::vector<int> ids;
  for (const auto& pt : points) {
    auto it = std::find(p.vertices().begin(), p.vertices().end(), V(pt));
    EXPECT_NE(it, p.vertices().end());
    ids.push_back(static_cast<int>(it - p.vertices().begin()));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<GPerm> RandomHypergraphicPolytopes(uint64_t seed, int count, int max_d) {
  Rng rng(seed);
  std::vector<GPerm> out;
  for (int i = 0; i < count; ++i) out.emplace_back(RandomHypergraphicSetFn(rng, 1, max_d));
  return out;
}

TEST(VerticesTest, Examples) {
  std::vector<RatVec> perms;
  std::vector<int64_t> p{1, 2, 3};
  do {
    perms.push_back(V(p));
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(Vertices(StandardPermSetFn(3)), perms);
  EXPECT_EQ(Vertices(SetFn::Zero(4)), std::vector<RatVec>{RatVec(4, Rat(0))});
  EXPECT_EQ(Vertices(HypergraphicSetFn(Hypergraph(3, {0b111}))),
            (std::vector<RatVec>{V({0, 0, 1}), V({0, 1, 0}), V({1, 0, 0})}));
  EXPECT_THROW(Vertices(SetFn(2, {Rat(0), Rat(0), Rat(0), Rat(1)})), NotSubmodularError);
}

TEST(VerticesTest, StandardPermutahedronCountsAndDimension) {
  int factorial = 1;
  for (int d = 1; d <= 7; ++d) {
    factorial *= d;
    const auto vs = Vertices(StandardPermSetFn(d));
    EXPECT_EQ(static_cast<int>(vs.size()), factorial);
    EXPECT_EQ(AffineRank(vs), static_cast<std::size_t>(d - 1));
    EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
  }
}

TEST(CompositionTest, OfDirection) {
  EXPECT_EQ(CompositionOfDirection(V({5, 5, 2})), C({0b011, 0b100}));
  EXPECT_EQ(CompositionOfDirection(V({1, 2, 3})), C({0b100, 0b010, 0b001}));
  EXPECT_EQ(CompositionOfDirection(V({2, 2, 2})), C({0b111}));
  const RatVec frac{Rat(1, 2), Rat(1, 3), Rat(1, 2)};
  EXPECT_EQ(CompositionOfDirection(frac), C({0b101, 0b010}));
}

TEST(CompositionTest, OrderedBellNumbers) {
  const std::vector<std::size_t> bell{1, 3, 13, 75, 541, 4683};
  for (int d = 1; d <= 6; ++d) {
    const auto all = AllCompositions(d);
    EXPECT_EQ(all.size(), bell[d - 1]);
    for (const Composition& c : all) {
      EXPECT_EQ(CompositionOfDirection(RepresentativeDirection(c, d)), c);
    }
  }
}

TEST(CompositionTest, Coarsens) {
  EXPECT_TRUE(Coarsens(C({0b111}), C({0b001, 0b010, 0b100})));
  EXPECT_TRUE(Coarsens(C({0b011, 0b100}), C({0b001, 0b010, 0b100})));
  EXPECT_FALSE(Coarsens(C({0b101, 0b010}), C({0b001, 0b010, 0b100})));
  EXPECT_FALSE(Coarsens(C({0b001, 0b110}), C({0b011, 0b100})));
  EXPECT_TRUE(Coarsens(C({0b011, 0b100}), C({0b011, 0b100})));
}

TEST(FaceOfDirectionTest, Examples) {
  const GPerm p = Pi(3);
  const Face whole = FaceOfDirection(p, V({1, 1, 1}));
  EXPECT_EQ(whole.vertex_ids.size(), 6u);
  EXPECT_EQ(whole.dim, 2);
  const Face vertex = FaceOfDirection(p, V({3, 2, 1}));
  EXPECT_EQ(vertex.vertex_ids, Ids(p, {{3, 2, 1}}));
  EXPECT_EQ(vertex.dim, 0);
  const Face edge = FaceOfDirection(p, V({2, 2, 1}));
  EXPECT_EQ(edge.vertex_ids, Ids(p, {{2, 3, 1}, {3, 2, 1}}));
  EXPECT_EQ(edge.dim, 1);
}

TEST(FaceOfDirectionTest, AgreesWithDirectArgmaxOnRationalDirections) {
  std::mt19937_64 rng(3);
  for (const GPerm& p : RandomHypergraphicPolytopes(17, 10, 5)) {
    for (int trial = 0; trial < 50; ++trial) {
      RatVec y;
      for (int i = 0; i < p.d(); ++i) y.emplace_back(static_cast<int64_t>(rng() % 4) - 1, 1 + rng() % 3);
      const Face f = FaceOfDirection(p, y);
      const auto direct = oracle::Argmax(p.vertices(), y, oracle::AllIds(p.vertices().size()));
      EXPECT_EQ(f.vertex_ids, direct);
      EXPECT_EQ(f.dim, oracle::Dim(p.vertices(), direct));
    }
  }
}

TEST(FaceOfDirectionTest, AboveLatticeCapComputesDirectly) {
  const GPerm p(StandardPermSetFn(7));
  const Face f = FaceOfDirection(p, V({7, 7, 5, 4, 3, 2, 1}));
  EXPECT_EQ(f.vertex_ids.size(), 2u);
  EXPECT_EQ(f.dim, 1);
  EXPECT_THROW(p.faces(), BudgetExceeded);
}

TEST(FaceLatticeTest, Examples) {
  const GPerm pi2 = Pi(2);
  ASSERT_EQ(FaceLattice(pi2).size(), 3u);
  std::vector<int> dims;
  for (const Face& f : FaceLattice(pi2)) dims.push_back(f.dim);
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{0, 0, 1}));

  const GPerm point(SetFn::Zero(3));
  ASSERT_EQ(FaceLattice(point).size(), 1u);
  EXPECT_EQ(FaceLattice(point)[0].dim, 0);

  std::vector<int> hist(3, 0);
  for (const Face& f : FaceLattice(Pi(3))) ++hist[f.dim];
  EXPECT_EQ(hist, (std::vector<int>{6, 6, 1}));
}

TEST(FaceLatticeTest, MatchesBruteForceFaces) {
  for (const GPerm& p : RandomHypergraphicPolytopes(29, 12, 4)) {
    const auto brute = oracle::FacesWithin(p.vertices(), oracle::AllIds(p.vertices().size()), p.d());
    ASSERT_EQ(p.faces().size(), brute.size());
    for (const Face& f : p.faces()) {
      auto it = brute.find(f.vertex_ids);
      ASSERT_NE(it, brute.end());
      EXPECT_EQ(f.dim, it->second);
    }
  }
}

TEST(FaceLatticeTest, StructuralInvariants) {
  std::vector<GPerm> polys = RandomHypergraphicPolytopes(41, 15, 4);
  polys.push_back(Pi(3));
  polys.push_back(Pi(4));
  for (const GPerm& p : polys) {
    const auto& faces = p.faces();
    // The whole polytope is a face, reached from the constant direction.
    const Face whole = FaceOfDirection(p, RatVec(p.d(), Rat(1)));
    EXPECT_EQ(whole.vertex_ids, oracle::AllIds(p.vertices().size()));
    EXPECT_EQ(std::count(faces.begin(), faces.end(), whole), 1);

    // Normal cone dimension = d - dim F.
    std::vector<int> max_blocks(faces.size(), 0);
    for (const auto& [c, f] : p.face_of_composition()) {
      max_blocks[f] = std::max(max_blocks[f], c.size());
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
      EXPECT_EQ(max_blocks[f], p.d() - faces[f].dim);
    }

    for (const Face& f : faces) {
      for (const Face& g : faces) {
        const bool subset = std::includes(g.vertex_ids.begin(), g.vertex_ids.end(),
                                          f.vertex_ids.begin(), f.vertex_ids.end());
        if (!subset) continue;
        EXPECT_LE(f.dim, g.dim);
        // Reversed inclusion of normal cones: each composition of G
        // coarsens some composition of F.
        for (const auto& [cg, gi] : p.face_of_composition()) {
          if (!(faces[gi] == g)) continue;
          bool found = false;
          for (const auto& [cf, fi] : p.face_of_composition()) {
            if (faces[fi] == f && Coarsens(cg, cf)) {
              found = true;
              break;
            }
          }
          EXPECT_TRUE(found);
        }
      }
    }
  }
}

TEST(CountKFacesTest, Examples) {
  const GPerm p = Pi(3);
  const Face whole = FaceOfDirection(p, V({1, 1, 1}));
  EXPECT_EQ(CountKFaces(p, whole, 0), 6u);
  EXPECT_EQ(CountKFaces(p, whole, 1), 6u);
  EXPECT_EQ(CountKFaces(p, whole, 2), 1u);
  for (const Face& f : p.faces()) {
    if (f.dim == 0) EXPECT_EQ(CountKFaces(p, f, 0), 1u);
    if (f.dim == 1) {
      EXPECT_EQ(CountKFaces(p, f, 1), 1u);
      EXPECT_EQ(CountKFaces(p, f, 0), 2u);
    }
  }
  EXPECT_THROW(CountKFaces(p, Face{{0, 5}, 1}, 0), InputError);
}

TEST(ChiDkTest, Examples) {
  const GPerm p = Pi(3);
  EXPECT_EQ(ChiDk(p, 0, 3), 6u);
  EXPECT_EQ(ChiDk(p, 0, 2), 0u);
  EXPECT_EQ(ChiDk(GPerm(SetFn::Zero(2)), 0, 3), 9u);
  EXPECT_THROW(ChiDk(p, 0, 9), BudgetExceeded);
  EXPECT_THROW(ChiDk(p, 0, 0), InputError);
}

TEST(ChiDkTest, CapCanBeDowngradedToWarning) {
  const GPerm p(StandardPermSetFn(2), EnumerationLimits{6, 8, false});
  EXPECT_EQ(ChiDk(p, 0, 9), 72u);  // 9^2 - 9 diagonal directions
}

TEST(ChiDkPolynomialTest, Examples) {
  EXPECT_EQ(ChiDkPolynomial(Pi(3), 0), Polynomial({Rat(0), Rat(2), Rat(-3), Rat(1)}));
  EXPECT_EQ(ChiDkPolynomial(GPerm(SetFn::Zero(2)), 0), Polynomial({Rat(0), Rat(0), Rat(1)}));
  EXPECT_EQ(ChiDkPolynomial(Pi(2), 1), Polynomial({Rat(0), Rat(1)}));
  EXPECT_THROW(ChiDkPolynomial(Pi(2), 2), InputError);
}

TEST(ChiDkPolynomialTest, DegreeIsExactForPermutahedra) {
  for (int d = 2; d <= 5; ++d) {
    const GPerm p = Pi(d);
    for (int k = 0; k < d; ++k) EXPECT_EQ(ChiDkPolynomial(p, k).degree(), d - k) << d << k;
  }
}

TEST(ReciprocityRhsTest, Examples) {
  EXPECT_EQ(ReciprocityRhs(Pi(3), 0, 1), 6u);
  EXPECT_EQ(ReciprocityRhs(Pi(2), 0, 2), 6u);
  EXPECT_EQ(ReciprocityRhs(GPerm(SetFn::Zero(2)), 0, 2), 4u);
}

// Lattice-based tallies against exact rational argmax plus independently
// enumerated faces of each P_y.
TEST(TallyTest, MatchesBruteForce) {
  std::vector<GPerm> polys = RandomHypergraphicPolytopes(53, 8, 4);
  polys.push_back(Pi(3));
  for (const GPerm& p : polys) {
    for (int m = 1; m <= 3; ++m) {
      const DirectionTally tally = TallyDirections(p, m);
      const oracle::ChiCounts brute = oracle::BruteChi(p.vertices(), p.d(), m);
      EXPECT_EQ(tally.chi, brute.chi);
      EXPECT_EQ(tally.rhs, brute.rhs);
    }
  }
}

TEST(TallyTest, EveryDirectionLandsInOneDimensionClass) {
  for (const GPerm& p : RandomHypergraphicPolytopes(59, 10, 5)) {
    for (int m = 1; m <= 4; ++m) {
      const DirectionTally tally = TallyDirections(p, m);
      uint64_t total = 0;
      for (uint64_t c : tally.chi) total += c;
      uint64_t expected = 1;
      for (int i = 0; i < p.d(); ++i) expected *= m;
      EXPECT_EQ(total, expected);
      EXPECT_EQ(tally.chi[p.d()], 0u);
    }
  }
}

TEST(VerifyReciprocityTest, Examples) {
  const Report r = VerifyReciprocity(Pi(3), 0, 3);
  EXPECT_TRUE(r.ok());
  // Reciprocity entries read m(m+1)(m+2).
  std::vector<Rat> rhs;
  for (const CheckEntry& e : r.entries()) {
    if (e.label.rfind("reciprocity", 0) == 0) rhs.push_back(e.rhs);
  }
  EXPECT_EQ(rhs, (std::vector<Rat>{Rat(6), Rat(24), Rat(60)}));
  EXPECT_EQ(std::count_if(r.entries().begin(), r.entries().end(),
                          [](const CheckEntry& e) { return e.label.rfind("interpolant", 0) == 0; }),
            6);

  for (const GPerm& p : RandomHypergraphicPolytopes(61, 6, 4)) {
    for (int k = 0; k < p.d(); ++k) EXPECT_TRUE(VerifyReciprocity(p, k, 3).ok());
  }

  Report perturbed = r;
  for (std::size_t i = 0; i < perturbed.entries().size(); ++i) {
    if (perturbed.entries()[i].label == "reciprocity k=0 m=2") {
      perturbed.OverrideRhs(i, perturbed.entries()[i].rhs + 1);
    }
  }
  EXPECT_EQ(perturbed.failures(), 1u);
}

TEST(VerifyReciprocityTest, VertexCountAtMinusOne) {
  const Polynomial chi = ChiDkPolynomial(Pi(3), 0);
  EXPECT_EQ(-chi(-1), Rat(6));
}

TEST(GPermTest, ConcurrentQueriesAfterMaterialization) {
  const GPerm p = Pi(5);
  std::vector<std::thread> workers;
  std::vector<uint64_t> results(4);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] { results[w] = ChiDk(p, 0, 5); });
  }
  for (auto& t : workers) t.join();
  for (uint64_t r : results) EXPECT_EQ(r, 120u);  // 5!
}

}  // namespace
}  // namespace gperm
