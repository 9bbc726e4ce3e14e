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

#include <cstdint>
#include <vector>

#include "reglab/graph.hpp"

namespace reglab {

// Class sizes of T_{r-1}(n), larger classes first.
std::vector<int> turan_class_sizes(int n, int r);
Graph turan_graph(int n, int r);
long turan_count(int n, int r);

Graph chvatal_extremal(int n, int r);
Digraph regular_tournament(int m);

// Vertex blocks of the two four-part constructions, in id order.
struct FourParts {
  int a_begin, b_begin, c_begin, d_begin, end;
};
FourParts haggkvist_parts(int m);
Digraph haggkvist_graph(int m);
FourParts antidirected_parts(int m);
Digraph antidirected_counterexample(int m);

Graph c6_sharpness_graph(int n);

Graph random_graph(int n, double p, std::uint64_t seed);
Digraph random_digraph(int n, double p, std::uint64_t seed);
// A = 0..a-1, B = a..a+b-1; only A-B edges.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);
Digraph random_tournament(int n, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen_graph();
Digraph complete_digraph(int n);
Digraph directed_cycle(int n);

}  // namespace reglab
