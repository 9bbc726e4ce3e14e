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
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"
#include "reglab/regularity.hpp"

namespace reglab {

struct Partition {
  std::vector<VertexSet> classes;
  std::optional<std::vector<int>> balancing;
  std::optional<int> exceptional;

  int size() const { return static_cast<int>(classes.size()); }
  // Indices of the clusters: the balancing subset if present, otherwise every
  // class except the exceptional one.
  std::vector<int> cluster_indices() const;
  // Throws DomainError unless the classes are a disjoint cover of 0..n-1 with
  // only the exceptional class allowed to be empty.
  void validate(int n) const;
};

Partition singleton_partition(int n);
Partition single_class_partition(int n);
// k equal classes in id order, the remaining n mod k highest ids as an extra
// class.
Partition equal_partition(int n, int k);

struct EnergyReport {
  mpq_class value;
  int class_count = 0;
  std::vector<std::vector<Rational>> densities;  // d(I,J), diagonal included
};

EnergyReport energy(const Graph& g, const Partition& p);
EnergyReport energy(const Digraph& g, const Partition& p);

// Split every class in ascending id order into chunks of t = ceil(eps n/|P|)
// plus at most one smaller chunk.
Partition balance_refine(const Partition& p, const Rational& eps, int n);

struct PairWitness {
  int i = 0;
  int j = 0;
  VertexSet x;  // subset of class i
  VertexSet y;  // subset of class j
};

struct WitnessRefinement {
  Partition refined;
  mpq_class energy_before;
  mpq_class energy_after;
  mpq_class gain;
  mpq_class bound;  // sum of |X||Y| (d(X,Y) - d(I,J))^2
  bool bound_holds = true;
};

// Venn-atom refinement of every class by the witness sets that live in it.
// Atoms are ordered by their smallest vertex.
WitnessRefinement witness_refine(const Graph& g, const Partition& p, const std::vector<PairWitness>& witnesses,
                                 const Rational& eps);
WitnessRefinement witness_refine(const Digraph& g, const Partition& p, const std::vector<PairWitness>& witnesses,
                                 const Rational& eps);

struct PartitionOptions {
  int cap = 14;  // exhaustive check when both classes have at most this many vertices
  std::uint64_t seed = 0;
  int trials = 200;
};

struct RegularityRun {
  // Clusters first, then the exceptional class.
  Partition partition;
  Partition raw;
  int iterations = 0;
  long iteration_cap = 0;
  std::vector<mpq_class> energy_trace;
  mpq_class increment_threshold;  // eps^5 n^2 / 4
  bool increments_ok = true;
  // Irregular cluster pairs; unordered (i < j) for graphs, ordered for digraphs.
  std::vector<std::pair<int, int>> irregular_pairs;
  bool exact = true;
  std::uint64_t seed = 0;
};

RegularityRun regularity_partition(const Graph& g, const Rational& eps, int k0, const PartitionOptions& opt = {});
RegularityRun regularity_partition(const Digraph& g, const Rational& eps, int k0, const PartitionOptions& opt = {});

struct DegreeFormOptions {
  std::optional<Rational> inner_eps;
  std::optional<int> inner_k0;
  PartitionOptions partition;
};

struct DegreeFormAudit {
  bool exceptional_small = false;  // |V0| <= eps n and k >= k0
  bool equal_sizes = false;
  bool degree_loss = false;        // every vertex loses < (d + eps) n
  bool clusters_empty = false;     // no edge inside a cluster
  bool pairs_regular = false;      // each pair empty or eps-regular with density > d
  bool pairs_exact = true;
  int worst_vertex = -1;
  int worst_loss = 0;
  std::vector<std::pair<int, int>> failing_pairs;

  bool all() const { return exceptional_small && equal_sizes && degree_loss && clusters_empty && pairs_regular; }
};

template <typename G>
struct DegreeForm {
  G pure;
  Partition partition;  // clusters then V0
  DegreeFormAudit audit;
  RegularityRun inner;
  Rational inner_eps;
  int inner_k0 = 0;
  int evicted_red = 0;
  int evicted_marked = 0;
  int cluster_size = 0;
};

// The inner constants are eps' = min(eps/40, d/10, eps^2 d) and
// k0' = max(k0, ceil(10/eps)), raised to the least k with n mod k <= eps' n.
DegreeForm<Graph> degree_form(const Graph& g, const Rational& eps, const Rational& d, int k0,
                              const DegreeFormOptions& opt = {});
DegreeForm<Digraph> degree_form(const Digraph& g, const Rational& eps, const Rational& d, int k0,
                                const DegreeFormOptions& opt = {});

DegreeFormAudit audit_degree_form(const Graph& g, const Graph& pure, const Partition& p, const Rational& eps,
                                  const Rational& d, int k0, const PartitionOptions& opt = {});
DegreeFormAudit audit_degree_form(const Digraph& g, const Digraph& pure, const Partition& p, const Rational& eps,
                                  const Rational& d, int k0, const PartitionOptions& opt = {});

template <typename G>
struct ReducedGraph {
  G r;
  Rational eps;
  Rational d;
  G pure;
  std::vector<int> cluster_of;  // R vertex -> class index in the partition
  bool exact = true;
};

// Graph: ij is an edge iff the pair is eps-regular with density > d.
// Digraph: i->j iff (V_i,V_j) is eps-regular with density >= d.
ReducedGraph<Graph> reduced_graph(const Graph& pure, const Partition& p, const Rational& eps, const Rational& d,
                                  const PartitionOptions& opt = {});
ReducedGraph<Digraph> reduced_graph(const Digraph& pure, const Partition& p, const Rational& eps, const Rational& d,
                                    const PartitionOptions& opt = {});

struct MindegAudit {
  bool applicable = false;  // 2 eps <= d <= c/2
  bool holds = false;       // delta(R) >= (c - 2d)|R|
  Rational c;
  int min_degree_r = 0;
};

MindegAudit mindeg_audit(const Graph& g, const ReducedGraph<Graph>& r);

struct Superregularized {
  std::vector<VertexSet> subclusters;  // indexed like the partition's clusters
  VertexSet moved;                     // vertices sent to V0
  int size = 0;
  int max_degree = 0;
  Rational audit_eps;
  Rational audit_d;
  bool audit_holds = false;
  bool audit_exact = true;
  std::vector<std::pair<int, int>> failing_edges;
};

// Edges index clusters (positions in p.cluster_indices()). Removes the
// low-degree vertices of every selected pair, then pads the removal to
// floor(2 Delta eps m) per cluster with the highest remaining ids.
Superregularized superregularize_path(const Graph& pure, const Partition& p,
                                      const std::vector<std::pair<int, int>>& edges, const Rational& eps,
                                      const Rational& d, const PartitionOptions& opt = {});

}  // namespace reglab
