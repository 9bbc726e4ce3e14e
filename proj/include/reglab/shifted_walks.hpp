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

namespace reglab {

struct FactorContext {
  Digraph r;
  std::vector<int> succ;  // F-successor of each cluster
  std::vector<int> pred;
  std::vector<int> cycle_of;
  int cycle_count = 0;

  bool hamiltonian() const { return cycle_count == 1; }
};

// Throws PreconditionError unless succ is a permutation whose arcs lie in r
// and has no fixed points.
FactorContext make_context(const Digraph& r, const std::vector<int>& succ);
// Uses one_factor(r); throws Infeasible when r has none.
FactorContext context_from_one_factor(const Digraph& r);

struct ShiftedWalk {
  std::vector<int> entries;  // X_1 = A, ..., X_{t+1} = B
  std::vector<int> exits;    // X_i^- for i <= t
  int cycles_traversed() const { return static_cast<int>(exits.size()); }
};

// Least t; ties broken towards smaller cluster indices. Internal entries and
// exits avoid the given set.
std::optional<ShiftedWalk> find_shifted_walk(const FactorContext& ctx, int a, int b, const VertexSet& avoid,
                                             int t_max);

// Cluster sequence X_1 C_1 X_1^- X_2 ... X_t^- X_{t+1}.
std::vector<int> expand_walk(const FactorContext& ctx, const ShiftedWalk& w);

struct WalkAudit {
  bool hops_are_edges = false;
  bool exits_are_predecessors = false;
  bool unique_entries = false;
  bool unique_exits = false;
  bool avoids_internally = false;
  bool equal_visits = false;  // per F-cycle, ignoring the final B

  bool all() const {
    return hops_are_edges && exits_are_predecessors && unique_entries && unique_exits && avoids_internally &&
           equal_visits;
  }
};

WalkAudit audit_shifted_walk(const FactorContext& ctx, const ShiftedWalk& w, int a, int b, const VertexSet& avoid);

struct SkewedTraverse {
  std::vector<std::pair<int, int>> edges;  // A V_{i1}, V_{i1 - 1} V_{i2}, ..., V_{it - 1} B
  int length() const { return static_cast<int>(edges.size()) - 1; }
};

// Minimal length; A = B asks for a closed traverse.
std::optional<SkewedTraverse> find_skewed_traverse(const FactorContext& ctx, int a, int b);

bool audit_skewed_traverse(const FactorContext& ctx, const SkewedTraverse& t, int a, int b);

// A V_{i1} F V_{i1 - 1} V_{i2} ... V_{it} F V_{it - 1} B built from a traverse.
std::vector<int> walk_from_traverse(const FactorContext& ctx, const SkewedTraverse& t);

struct ClusterAssignment {
  std::vector<long> a;
  std::vector<long> neutral_slots;
  long m = 0;

  bool balanced() const;
};

enum class RebalanceMode { Traverse, Walk };

struct RebalanceStep {
  ClusterAssignment after;
  int over = 0;
  int under = 0;
  std::optional<SkewedTraverse> traverse;   // traverse mode
  std::vector<int> consumed;                // clusters whose neutral slot was used
  std::vector<int> replacement;             // walk mode: closed walk from V_{i-1} to V_{i-1}
  int copies_replaced = 0;                  // walk mode: copies of F replaced
};

// One unit moves from cluster over to cluster under.
RebalanceStep rebalance(const ClusterAssignment& assign, const FactorContext& ctx, int over, int under,
                        RebalanceMode mode);

// Repeats rebalance on the least over- and under-full clusters until balanced.
std::vector<RebalanceStep> balance(const ClusterAssignment& assign, const FactorContext& ctx, RebalanceMode mode);

}  // namespace reglab
