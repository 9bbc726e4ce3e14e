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
#include "reglab/hamiltonicity.hpp"
#include "reglab/rational.hpp"

namespace reglab {

enum class Direction { Out, In };
enum class ExpansionMode { Out, In, Di };

struct ExpansionSpec {
  Rational nu;
  Rational tau;
  ExpansionMode mode = ExpansionMode::Out;
};

struct ExpansionVerdict {
  bool holds = true;
  std::optional<VertexSet> violator;
  Direction direction = Direction::Out;  // direction in which the violator fails
  std::uint64_t checked = 0;
  bool exhaustive = true;
};

struct ExpanderOptions {
  int cap = 18;
  bool sampled = false;
  std::uint64_t seed = 0;
  int trials = 2000;
};

// Out: vertices with at least nu n inneighbours in S. In: at least nu n
// outneighbours in S.
VertexSet robust_neighbourhood(const Digraph& g, const VertexSet& s, const Rational& nu, Direction dir);

// Scans every S with tau n < |S| < (1 - tau) n by increasing bitmask and
// returns the least violator.
ExpansionVerdict check_expander(const Digraph& g, const ExpansionSpec& spec, const ExpanderOptions& opt = {});

bool violates(const Digraph& g, const VertexSet& s, const ExpansionSpec& spec, Direction dir);

Certificate robdegseq_condition(const Digraph& g, const Rational& eta);

}  // namespace reglab
