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

#include <utility>
#include <vector>

#include "reglab/rational.hpp"
#include "reglab/vertex_set.hpp"

namespace reglab {

// Largest vertex count accepted by Graph and Digraph (default 4096).
int vertex_cap();
void set_vertex_cap(int cap);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  long edge_count() const;
  int min_degree() const;
  int max_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

  int n() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return out_[u].contains(v); }
  const VertexSet& out(int v) const { return out_[v]; }
  const VertexSet& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return out_[v].size(); }
  int in_degree(int v) const { return in_[v].size(); }
  long edge_count() const;
  int min_out_degree() const;
  int min_in_degree() const;
  int min_semidegree() const;
  // True when no pair carries both uv and vu.
  bool is_oriented() const;
  bool is_tournament() const;
  Digraph reverse() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_pair(int u, int v) const;
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Symmetric closure of a graph as a digraph (both arcs per edge).
Digraph as_digraph(const Graph& g);

template <typename G>
struct Induced {
  G graph;
  std::vector<int> labels;  // labels[i] = original id of new vertex i
};

// e(A,B): edges with one end in A and the other in B; for digraphs only A->B.
long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);
long edges_between(const Digraph& g, const VertexSet& a, const VertexSet& b);

Rational density(const Graph& g, const VertexSet& a, const VertexSet& b);
Rational density(const Digraph& g, const VertexSet& a, const VertexSet& b);

std::vector<int> degree_sequence(const Graph& g);
std::pair<std::vector<int>, std::vector<int>> degree_sequences(const Digraph& g);

Graph complement(const Graph& g);
Digraph complement(const Digraph& g);

Induced<Graph> induced(const Graph& g, const VertexSet& s);
Induced<Digraph> induced(const Digraph& g, const VertexSet& s);

// Relabel so that new vertex perm[v] is old vertex v.
Graph relabel(const Graph& g, const std::vector<int>& perm);
Digraph relabel(const Digraph& g, const std::vector<int>& perm);

// Disjoint union with the second graph's vertices shifted by g.n().
Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
bool is_strongly_connected(const Digraph& g);

}  // namespace reglab
