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
#include <functional>
#include <vector>

#include "reglab/graph.hpp"

namespace reglab {

struct CanonicalForm {
  std::vector<std::uint8_t> code;  // adjacency matrix in canonical order, row-major
  std::vector<int> order;          // order[i] = original vertex placed at position i
};

// Colour refinement followed by individualization; the code is minimal over
// the leaves of the search tree, so two graphs share a code iff isomorphic.
CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Digraph& g);

Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);
bool isomorphic(const Digraph& g, const Digraph& h);

// All graphs on n vertices up to isomorphism, level e holding those with e
// edges. keep() must be closed under deleting edges; rejected graphs are
// dropped and never extended. Levels past the last nonempty one are trimmed.
std::vector<std::vector<Graph>> enumerate_graphs(int n, const std::function<bool(const Graph&)>& keep = {},
                                                 int cap = 9);

// Tournaments on n vertices up to isomorphism.
std::vector<Digraph> enumerate_tournaments(int n, int cap = 8);

}  // namespace reglab
