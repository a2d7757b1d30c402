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
// Hypergraphs with headings and colorings. Nodes are 0..d-1 internally;
// node_names keeps the input labels in input order.

#ifndef GPERM_HYPERGRAPH_H_
#define GPERM_HYPERGRAPH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gperm/polynomial.h"
#include "gperm/setfn.h"

namespace gperm {

// Edges form a multiset kept in input order; singleton and repeated edges
// are allowed.
class Hypergraph {
 public:
  // Throws InputError on an empty edge or a node outside [0, d).
  Hypergraph(int d, std::vector<Subset> edges, std::vector<std::string> node_names = {});

  int d() const { return d_; }
  const std::vector<Subset>& edges() const { return edges_; }
  const std::vector<std::string>& node_names() const { return node_names_; }

 private:
  int d_;
  std::vector<Subset> edges_;
  std::vector<std::string> node_names_;
};

// heads[e] is the head node of edge e.
struct Heading {
  std::vector<int> heads;
  friend auto operator<=>(const Heading&, const Heading&) = default;
};

// colors[i] in [1, m].
struct Coloring {
  std::vector<int> colors;
  int m = 1;
};

struct EnumerationBudget {
  uint64_t max_headings = 10'000'000;
  uint64_t max_colorings = 10'000'000;
};

// z(T) = number of edges meeting T, with multiplicity.
SetFn HypergraphicSetFn(const Hypergraph& h);

void ValidateHeading(const Hypergraph& h, const Heading& s);
void ValidateColoring(const Hypergraph& h, const Coloring& c);

// No oriented cycle of edges. Decided as cycle detection in the digraph
// with an arc u -> heads[e] for every edge e and u in e other than its head.
bool IsAcyclic(const Hypergraph& h, const Heading& s);

std::vector<int64_t> IndegreeVector(const Hypergraph& h, const Heading& s);

// All acyclic headings in lexicographic order of the heads sequence.
std::vector<Heading> AcyclicHeadings(const Hypergraph& h, const EnumerationBudget& budget = {});

// Deduplicated, lex-sorted in-degree vectors of acyclic headings.
std::vector<std::vector<int64_t>> HgVerticesViaHeadings(const Hypergraph& h,
                                                        const EnumerationBudget& budget = {});

// Every edge has a unique node of maximal color.
bool IsProper(const Hypergraph& h, const Coloring& c);

// Every head has the maximal color of its edge.
bool IsCompatible(const Hypergraph& h, const Heading& s, const Coloring& c);

uint64_t ChromaticCount(const Hypergraph& h, int m, const EnumerationBudget& budget = {});

// Interpolation of ChromaticCount at m = 1..d+1.
Polynomial ChromaticPolynomial(const Hypergraph& h, const EnumerationBudget& budget = {});

// Pairs (acyclic heading, m-coloring) that are compatible.
uint64_t CompatiblePairsCount(const Hypergraph& h, int m, const EnumerationBudget& budget = {});

}  // namespace gperm

#endif  // GPERM_HYPERGRAPH_H_
