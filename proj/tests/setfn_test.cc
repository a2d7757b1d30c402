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

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "gperm/errors.h"
#include "gperm/hypergraph.h"
#include "gperm/permutahedron.h"
#include "oracles.h"

namespace gperm {
namespace {

SetFn Table(int d, std::initializer_list<int64_t> values) {
  std::vector<Rat> v;
  for (int64_t x : values) v.emplace_back(x);
  return SetFn(d, v);
}

// Edge-intersection function of a single edge.
SetFn EdgeFn(int d, Subset edge) { return HypergraphicSetFn(Hypergraph(d, {edge})); }

TEST(SetFnTest, ConstructionErrors) {
  EXPECT_THROW(SetFn(0, {Rat(0)}), InputError);
  EXPECT_THROW(SetFn(9, std::vector<Rat>(512)), InputError);
  EXPECT_THROW(SetFn(2, std::vector<Rat>(3)), InputError);
  EXPECT_THROW(Table(1, {1, 1}), InputError);
}

TEST(IsSubmodularTest, Examples) {
  EXPECT_TRUE(IsSubmodular(Table(2, {0, 2, 2, 3})));
  EXPECT_FALSE(IsSubmodular(Table(2, {0, 0, 0, 1})));
  EXPECT_TRUE(IsSubmodular(Table(2, {0, 1, 1, 1})));
}

TEST(IsSubmodularTest, LocalCriterionMatchesDefinitionOnRandomTables) {
  std::mt19937_64 rng(11);
  int submodular_seen = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    std::vector<Rat> values(std::size_t{1} << d);
    // Mostly sums of random edge functions (submodular), perturbed half of
    // the time so both outcomes are exercised.
    for (int e = 0; e < 3; ++e) {
      const Subset edge = 1 + static_cast<Subset>(rng() % ((1u << d) - 1));
      for (Subset t = 1; t < values.size(); ++t) values[t] += (t & edge) ? 1 : 0;
    }
    if (rng() % 2) {
      const Subset t = 1 + static_cast<Subset>(rng() % ((1u << d) - 1));
      values[t] += static_cast<int64_t>(rng() % 5) - 2;
    }
    const SetFn z(d, values);
    const bool local = IsSubmodular(z);
    EXPECT_EQ(local, oracle::SubmodularByDefinition(z));
    submodular_seen += local;
  }
  EXPECT_GT(submodular_seen, 100);
  EXPECT_LT(submodular_seen, 3900);
}

TEST(StandardPermSetFnTest, Examples) {
  EXPECT_EQ(StandardPermSetFn(1), Table(1, {0, 1}));
  EXPECT_EQ(StandardPermSetFn(2), Table(2, {0, 2, 2, 3}));
  EXPECT_EQ(StandardPermSetFn(3), Table(3, {0, 3, 3, 5, 3, 5, 5, 6}));
  for (int d = 1; d <= 8; ++d) EXPECT_TRUE(IsSubmodular(StandardPermSetFn(d)));
  EXPECT_THROW(StandardPermSetFn(0), InputError);
  EXPECT_THROW(StandardPermSetFn(9), InputError);
}

TEST(GreedyVertexTest, Examples) {
  const std::vector<int> id3{0, 1, 2};
  EXPECT_EQ(GreedyVertex(StandardPermSetFn(3), id3), ToRatVec(std::vector<int64_t>{3, 2, 1}));
  EXPECT_EQ(GreedyVertex(SetFn::Zero(3), std::vector<int>{2, 0, 1}), RatVec(3, Rat(0)));
  EXPECT_EQ(GreedyVertex(EdgeFn(3, 0b111), std::vector<int>{1, 0, 2}),
            ToRatVec(std::vector<int64_t>{0, 1, 0}));
}

TEST(GreedyVertexTest, Errors) {
  EXPECT_THROW(GreedyVertex(Table(2, {0, 0, 0, 1}), std::vector<int>{0, 1}),
               NotSubmodularError);
  EXPECT_THROW(GreedyVertex(StandardPermSetFn(3), std::vector<int>{0, 0, 1}), InputError);
  EXPECT_THROW(GreedyVertex(StandardPermSetFn(3), std::vector<int>{0, 1}), InputError);
}

TEST(SetFnSumTest, Examples) {
  const SetFn z = StandardPermSetFn(3);
  EXPECT_EQ(SetFnSum(z, SetFn::Zero(3)), z);
  const SetFn sum = SetFnSum(SetFnSum(EdgeFn(2, 0b11), EdgeFn(2, 0b01)), EdgeFn(2, 0b10));
  EXPECT_EQ(sum, StandardPermSetFn(2));
  EXPECT_EQ(Vertices(sum),
            (std::vector<RatVec>{ToRatVec(std::vector<int64_t>{1, 2}),
                                 ToRatVec(std::vector<int64_t>{2, 1})}));
  EXPECT_EQ(SetFnSum(EdgeFn(2, 0b11), EdgeFn(2, 0b11)), Table(2, {0, 2, 2, 2}));
  EXPECT_THROW(SetFnSum(SetFn::Zero(2), SetFn::Zero(3)), InputError);
}

// P(z1 + z2) = P(z1) + P(z2): the vertex set of the sum equals the vertices
// of the Minkowski sum of the vertex sets, i.e. the sums v1 + v2 that are
// extreme. Checked through z_P of the pointwise-summed point cloud.
TEST(SetFnSumTest, MinkowskiSumOfBasePolytopes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    auto random_fn = [&] {
      SetFn z = SetFn::Zero(d);
      for (int e = 0; e < 2; ++e) z = SetFnSum(z, EdgeFn(d, 1 + rng() % ((1u << d) - 1)));
      return z;
    };
    const SetFn a = random_fn();
    const SetFn b = random_fn();
    const SetFn sum = SetFnSum(a, b);
    EXPECT_TRUE(IsSubmodular(sum));
    std::vector<RatVec> cloud;
    for (const RatVec& u : Vertices(a)) {
      for (const RatVec& v : Vertices(b)) {
        RatVec w(d);
        for (int i = 0; i < d; ++i) w[i] = u[i] + v[i];
        cloud.push_back(w);
      }
    }
    EXPECT_EQ(SetFnFromVertices(cloud), sum);
    // Every vertex of P(sum) is a point of the Minkowski cloud.
    for (const RatVec& v : Vertices(sum)) {
      EXPECT_NE(std::find(cloud.begin(), cloud.end(), v), cloud.end());
    }
  }
}

TEST(SetFnFromVerticesTest, Examples) {
  EXPECT_EQ(SetFnFromVertices(std::vector<RatVec>{ToRatVec(std::vector<int64_t>{1, 1})}),
            Table(2, {0, 1, 1, 2}));
  std::vector<RatVec> perms;
  std::vector<int64_t> p{1, 2, 3};
  do {
    perms.push_back(ToRatVec(p));
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(SetFnFromVertices(perms), StandardPermSetFn(3));
  EXPECT_EQ(SetFnFromVertices(std::vector<RatVec>{ToRatVec(std::vector<int64_t>{1, 0}),
                                                  ToRatVec(std::vector<int64_t>{0, 1})}),
            EdgeFn(2, 0b11));
}

TEST(SetFnFromVerticesTest, Errors) {
  EXPECT_THROW(SetFnFromVertices(std::vector<RatVec>{}), InputError);
  EXPECT_THROW(SetFnFromVertices(std::vector<RatVec>{ToRatVec(std::vector<int64_t>{1, 0}),
                                                     ToRatVec(std::vector<int64_t>{1, 1})}),
               InputError);
  EXPECT_THROW(SetFnFromVertices(std::vector<RatVec>{ToRatVec(std::vector<int64_t>{1, 0}),
                                                     ToRatVec(std::vector<int64_t>{1})}),
               InputError);
}

// Greedy membership and round trip for random rational submodular
// functions (nonnegative rational combinations of edge functions).
TEST(GreedyVertexTest, MembershipAndRoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 6);
    SetFn z = SetFn::Zero(d);
    for (int e = 0, n = 1 + static_cast<int>(rng() % 4); e < n; ++e) {
      const Subset edge = 1 + static_cast<Subset>(rng() % ((1u << d) - 1));
      const Rat weight(1 + static_cast<int64_t>(rng() % 5), 1 + static_cast<int64_t>(rng() % 3));
      std::vector<Rat> values(std::size_t{1} << d);
      for (Subset t = 0; t < values.size(); ++t) values[t] = (t & edge) ? weight : Rat(0);
      z = SetFnSum(z, SetFn(d, values));
    }
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const RatVec x = GreedyVertex(z, perm);
      Subset chain = 0;
      for (int i : perm) {
        chain |= Subset{1} << i;
        EXPECT_EQ(oracle::SubsetSum(x, chain), z(chain));
      }
      for (Subset a = 0; a <= z.full(); ++a) EXPECT_LE(oracle::SubsetSum(x, a), z(a));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(SetFnFromVertices(Vertices(z)), z);
  }
}

// For a direction y in the braid cone of sigma's chain (any composition
// that sigma refines), the greedy vertex of sigma maximizes y among all
// greedy vertices.
TEST(GreedyVertexTest, OptimalOverBraidCone) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    SetFn z = SetFn::Zero(d);
    for (int e = 0; e < 3; ++e) {
      z = SetFnSum(z, EdgeFn(d, 1 + static_cast<Subset>(rng() % ((1u << d) - 1))));
    }
    std::vector<int> sigma(d);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<RatVec> all;
    std::vector<std::vector<int>> perms;
    do {
      all.push_back(GreedyVertex(z, sigma));
      perms.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    for (std::size_t s = 0; s < perms.size(); ++s) {
      // Coarsen sigma's chain by cutting between consecutive positions at
      // random; y is weakly decreasing along sigma.
      RatVec y(d);
      int64_t level = d;
      for (int j = 0; j < d; ++j) {
        y[perms[s][j]] = level;
        if (rng() % 2) --level;
      }
      const Rat mine = Dot(y, all[s]);
      for (const RatVec& other : all) EXPECT_GE(mine, Dot(y, other));
    }
  }
}

// Sum of pair simplices is a translate of the standard permutahedron by
// the sum of the singleton simplices, with the same face structure.
TEST(SetFnSumTest, PairSimplicesGivePermutahedronUpToTranslation) {
  for (int d = 2; d <= 5; ++d) {
    SetFn pairs = SetFn::Zero(d);
    SetFn singles = SetFn::Zero(d);
    for (int i = 0; i < d; ++i) {
      singles = SetFnSum(singles, EdgeFn(d, Subset{1} << i));
      for (int j = i + 1; j < d; ++j) {
        pairs = SetFnSum(pairs, EdgeFn(d, (Subset{1} << i) | (Subset{1} << j)));
      }
    }
    EXPECT_EQ(SetFnSum(pairs, singles), StandardPermSetFn(d)) << d;
    if (d == 2) EXPECT_NE(pairs, StandardPermSetFn(d));

    const GPerm a(pairs);
    const GPerm b(StandardPermSetFn(d));
    ASSERT_EQ(a.vertices().size(), b.vertices().size());
    for (const auto& [c, f] : a.face_of_composition()) {
      EXPECT_EQ(a.faces()[f].dim, b.faces()[b.FaceIndexOf(c)].dim);
    }
    EXPECT_EQ(a.faces().size(), b.faces().size());
  }
}

}  // namespace
}  // namespace gperm
