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

#include "gperm/hypergraph.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "gperm/errors.h"

namespace gperm {

namespace {

uint64_t CheckedPower(uint64_t base, int exponent, uint64_t limit, const char* what) {
  uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && total > limit / base) {
      throw BudgetExceeded(std::string(what) + " exceed " + std::to_string(limit));
    }
    total *= base;
  }
  return total;
}

std::vector<int> Members(Subset s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i) {
    if ((s >> i) & 1) out.push_back(i);
  }
  return out;
}

// Acyclicity on the head digraph; adjacency as bitmasks over nodes.
bool HeadsAcyclic(const Hypergraph& h, const std::vector<int>& heads) {
  const int d = h.d();
  std::vector<Subset> in(d, 0);  // in[v]: tails of arcs into v
  for (std::size_t e = 0; e < heads.size(); ++e) {
    const int head = heads[e];
    in[head] |= h.edges()[e] & ~(Subset{1} << head);
  }
  // Peel off nodes without incoming arcs from the remaining set.
  Subset remaining = (Subset{1} << d) - 1;
  bool progress = true;
  while (remaining && progress) {
    progress = false;
    for (int v = 0; v < d; ++v) {
      if (((remaining >> v) & 1) && (in[v] & remaining) == 0) {
        remaining &= ~(Subset{1} << v);
        progress = true;
      }
    }
  }
  return remaining == 0;
}

// Calls visit(heads) for every element of the product of choices, in
// lexicographic order.
template <typename Visit>
void ForEachHeading(const std::vector<std::vector<int>>& choices, Visit&& visit) {
  const std::size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<int> heads(n);
  for (std::size_t e = 0; e < n; ++e) heads[e] = choices[e][0];
  while (true) {
    visit(heads);
    std::size_t e = n;
    while (e > 0) {
      --e;
      if (++pos[e] < choices[e].size()) {
        heads[e] = choices[e][pos[e]];
        break;
      }
      pos[e] = 0;
      heads[e] = choices[e][0];
      if (e == 0) return;
    }
    if (n == 0) return;
  }
}

template <typename Visit>
void ForEachColoring(int d, int m, Visit&& visit) {
  std::vector<int> colors(d, 1);
  while (true) {
    visit(colors);
    int i = 0;
    while (i < d && colors[i] == m) colors[i++] = 1;
    if (i == d) return;
    ++colors[i];
  }
}

bool ProperColors(const Hypergraph& h, const std::vector<int>& colors) {
  for (Subset e : h.edges()) {
    int best = 0;
    int ties = 0;
    for (int i : Members(e)) {
      if (colors[i] > best) {
        best = colors[i];
        ties = 1;
      } else if (colors[i] == best) {
        ++ties;
      }
    }
    if (ties != 1) return false;
  }
  return true;
}

}  // namespace

Hypergraph::Hypergraph(int d, std::vector<Subset> edges, std::vector<std::string> node_names)
    : d_(d), edges_(std::move(edges)), node_names_(std::move(node_names)) {
  if (d < 1 || d > kMaxGroundSet) {
    throw InputError("hypergraph node count must be in [1, " +
                     std::to_string(kMaxGroundSet) + "]");
  }
  const Subset all = (Subset{1} << d) - 1;
  for (Subset e : edges_) {
    if (e == 0) throw InputError("hypergraph edge is empty");
    if (e & ~all) throw InputError("hypergraph edge mentions a node outside [d]");
  }
  if (node_names_.empty()) {
    for (int i = 1; i <= d; ++i) node_names_.push_back(std::to_string(i));
  }
  if (static_cast<int>(node_names_.size()) != d) {
    throw InputError("hypergraph node name count differs from d");
  }
}

SetFn HypergraphicSetFn(const Hypergraph& h) {
  std::vector<Rat> values(std::size_t{1} << h.d());
  for (Subset t = 0; t < values.size(); ++t) {
    int64_t meets = 0;
    for (Subset e : h.edges()) meets += (e & t) != 0;
    values[t] = meets;
  }
  return SetFn(h.d(), std::move(values));
}

void ValidateHeading(const Hypergraph& h, const Heading& s) {
  if (s.heads.size() != h.edges().size()) {
    throw InputError("heading length differs from the edge count");
  }
  for (std::size_t e = 0; e < s.heads.size(); ++e) {
    const int head = s.heads[e];
    if (head < 0 || head >= h.d() || !((h.edges()[e] >> head) & 1)) {
      throw InputError("head of edge " + std::to_string(e) + " is not in the edge");
    }
  }
}

void ValidateColoring(const Hypergraph& h, const Coloring& c) {
  if (c.m < 1) throw InputError("coloring needs m >= 1");
  if (static_cast<int>(c.colors.size()) != h.d()) {
    throw InputError("coloring length differs from d");
  }
  for (int color : c.colors) {
    if (color < 1 || color > c.m) throw InputError("color outside [1, m]");
  }
}

bool IsAcyclic(const Hypergraph& h, const Heading& s) {
  ValidateHeading(h, s);
  return HeadsAcyclic(h, s.heads);
}

std::vector<int64_t> IndegreeVector(const Hypergraph& h, const Heading& s) {
  ValidateHeading(h, s);
  std::vector<int64_t> delta(h.d(), 0);
  for (int head : s.heads) ++delta[head];
  return delta;
}

std::vector<Heading> AcyclicHeadings(const Hypergraph& h, const EnumerationBudget& budget) {
  std::vector<std::vector<int>> choices;
  uint64_t total = 1;
  for (Subset e : h.edges()) {
    choices.push_back(Members(e));
    const uint64_t size = choices.back().size();
    if (total > budget.max_headings / size) {
      throw BudgetExceeded("headings exceed " + std::to_string(budget.max_headings));
    }
    total *= size;
  }
  std::vector<Heading> out;
  ForEachHeading(choices, [&](const std::vector<int>& heads) {
    if (HeadsAcyclic(h, heads)) out.push_back({heads});
  });
  return out;
}

std::vector<std::vector<int64_t>> HgVerticesViaHeadings(const Hypergraph& h,
                                                        const EnumerationBudget& budget) {
  std::set<std::vector<int64_t>> unique;
  for (const Heading& s : AcyclicHeadings(h, budget)) unique.insert(IndegreeVector(h, s));
  return {unique.begin(), unique.end()};
}

bool IsProper(const Hypergraph& h, const Coloring& c) {
  ValidateColoring(h, c);
  return ProperColors(h, c.colors);
}

bool IsCompatible(const Hypergraph& h, const Heading& s, const Coloring& c) {
  ValidateHeading(h, s);
  ValidateColoring(h, c);
  for (std::size_t e = 0; e < s.heads.size(); ++e) {
    int best = 0;
    for (int i : Members(h.edges()[e])) best = std::max(best, c.colors[i]);
    if (c.colors[s.heads[e]] != best) return false;
  }
  return true;
}

uint64_t ChromaticCount(const Hypergraph& h, int m, const EnumerationBudget& budget) {
  if (m < 1) throw InputError("m must be positive");
  CheckedPower(m, h.d(), budget.max_colorings, "colorings");
  uint64_t count = 0;
  ForEachColoring(h.d(), m, [&](const std::vector<int>& colors) {
    count += ProperColors(h, colors);
  });
  return count;
}

Polynomial ChromaticPolynomial(const Hypergraph& h, const EnumerationBudget& budget) {
  return InterpolateFromOne(h.d(), [&](int64_t m) {
    return Rat(ChromaticCount(h, static_cast<int>(m), budget));
  });
}

uint64_t CompatiblePairsCount(const Hypergraph& h, int m, const EnumerationBudget& budget) {
  if (m < 1) throw InputError("m must be positive");
  CheckedPower(m, h.d(), budget.max_colorings, "colorings");
  uint64_t product = 1;
  for (Subset e : h.edges()) {
    const uint64_t size = std::popcount(e);
    if (product > budget.max_headings / size) {
      throw BudgetExceeded("headings exceed " + std::to_string(budget.max_headings));
    }
    product *= size;
  }

  uint64_t count = 0;
  std::vector<std::vector<int>> choices(h.edges().size());
  ForEachColoring(h.d(), m, [&](const std::vector<int>& colors) {
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
      const std::vector<int> members = Members(h.edges()[e]);
      int best = 0;
      for (int i : members) best = std::max(best, colors[i]);
      choices[e].clear();
      for (int i : members) {
        if (colors[i] == best) choices[e].push_back(i);
      }
    }
    ForEachHeading(choices, [&](const std::vector<int>& heads) {
      count += HeadsAcyclic(h, heads);
    });
  });
  return count;
}

}  // namespace gperm
