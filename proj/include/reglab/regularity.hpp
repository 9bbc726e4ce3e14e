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

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"

namespace reglab {

// A bipartite pair (A,B) in a host graph. For digraph hosts only A->B arcs
// count.
struct PairSpec {
  VertexSet a;
  VertexSet b;
  Rational epsilon{1, 2};
  Rational d{0};
};

enum class WitnessKind {
  Deviation,    // |d(X,Y) - reference| >= epsilon
  LowDensity,   // d(X,Y) <= d in a superregularity check
  LowDegree,    // a single vertex with too few neighbours on the other side
};

struct RegularityWitness {
  VertexSet x;
  VertexSet y;
  // |d(X,Y) - reference| for Deviation, d(X,Y) for LowDensity, and the
  // offending degree ratio for LowDegree.
  Rational deviation;
  WitnessKind kind = WitnessKind::Deviation;
};

struct RegularityVerdict {
  bool holds = true;
  std::optional<RegularityWitness> witness;
  std::uint64_t checked_pairs = 0;
  bool exhaustive = true;
};

struct CheckOptions {
  int cap = 14;  // per side for pairs, total order for digraphs
  bool sampled = false;
  std::uint64_t seed = 0;
  int trials = 200;
};

// Witness order: X by characteristic vector over A's members in ascending
// id order (bit i = i-th smallest member), then Y likewise.
RegularityVerdict check_pair_regular(const Graph& g, const PairSpec& spec, const CheckOptions& opt = {});
RegularityVerdict check_pair_regular(const Digraph& g, const PairSpec& spec, const CheckOptions& opt = {});

RegularityVerdict check_pair_superregular(const Graph& g, const PairSpec& spec, const CheckOptions& opt = {});
RegularityVerdict check_pair_superregular(const Digraph& g, const PairSpec& spec, const CheckOptions& opt = {});

// X and Y range over all of V(D) and may intersect.
RegularityVerdict check_digraph_regular(const Digraph& g, const Rational& eps, const Rational& d,
                                        const CheckOptions& opt = {});
RegularityVerdict check_digraph_superregular(const Digraph& g, const Rational& eps, const Rational& d,
                                             const CheckOptions& opt = {});

// {a in A : deg(a,Y) <= (d - eps)|Y|}.
VertexSet low_degree_vertices(const Graph& g, const PairSpec& spec, const VertexSet& y);
VertexSet low_degree_vertices(const Digraph& g, const PairSpec& spec, const VertexSet& y);

}  // namespace reglab
