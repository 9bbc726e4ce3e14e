// Copyright 2026 The reglab Authors
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


#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reglab/graph.hpp"
#include "reglab/szemeredi.hpp"

namespace reglab {

struct Embedding {
  std::vector<int> map;              // map[u] = image of H-vertex u
  std::vector<int> candidate_trace;  // |Y(u_j)| when u_j was embedded
};

struct PackingResult {
  std::vector<Embedding> copies;
  bool perfect = false;
};

// Vertex (i, t) of the blow-up is i*s + t.
Graph blow_up(const Graph& r, int s);

struct GreedyResult {
  std::optional<Embedding> embedding;
  int failed_step = -1;              // index of the H-vertex with no valid candidate
  std::vector<int> candidate_sizes;  // per step, as far as the search got
  bool counting_bound_held = true;   // every |Y(u_j)| >= s + Delta eps m
};

// sigma[u] is a vertex of r.r (a cluster position). Hypothesis failures throw
// PreconditionError; search failures are reported in the result.
GreedyResult greedy_embed(const Graph& h, const Graph& g, const Partition& p, const ReducedGraph<Graph>& r,
                          const std::vector<int>& sigma, int s);

std::optional<Embedding> subgraph_oracle(const Graph& h, const Graph& g, int cap = 10);
std::optional<Embedding> subgraph_oracle(const Digraph& h, const Digraph& g, int cap = 10);
bool contains_subgraph(const Graph& g, const Graph& h);

struct ExtremalResult {
  long value = 0;
  Graph witness;
  int extremal_count = 0;  // isomorphism classes attaining the value
};

ExtremalResult extremal_number(int n, const Graph& h, int cap = 8);

struct RamseyResult {
  std::optional<int> value;
  int largest_avoiding = 0;  // largest n <= n_max with a colouring avoiding H
  Graph certificate;         // one colour class of such a colouring
};

RamseyResult ramsey_oracle(const Graph& h, int n_max = 7);

enum class PackingMode { Perfect, Maximum };

PackingResult packing_oracle(const Graph& g, const Graph& f, PackingMode mode = PackingMode::Perfect,
                             int cap = 18);

int chromatic_number(const Graph& h);
int greedy_colour_bound(const Graph& h);  // Delta + 1

}  // namespace reglab
