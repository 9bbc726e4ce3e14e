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
#include <string>
#include <vector>

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"

namespace reglab {

struct HamCycle {
  std::vector<int> order;
};

enum class CertificateKind { Dirac, Posa, Chvatal, GhouilaHouri, NashWilliamsStyle, RobDegSeq };

struct Certificate {
  CertificateKind kind;
  bool satisfied = false;
  std::optional<int> failing_index;  // 1-based position in the sorted degree sequence
  std::string detail;
};

const char* kind_name(CertificateKind kind);
std::optional<CertificateKind> parse_kind(const std::string& name);

// Degrees are sorted ascending, d_1 <= ... <= d_n.
Certificate certify(const Graph& g, CertificateKind kind);
Certificate certify(const Digraph& g, CertificateKind kind, const Rational& eta = Rational(0));

std::optional<HamCycle> hamilton_oracle(const Graph& g, int cap = 20);
std::optional<HamCycle> hamilton_oracle(const Digraph& g, int cap = 20);

bool is_hamilton_cycle(const Graph& g, const std::vector<int>& order);
bool is_hamilton_cycle(const Digraph& g, const std::vector<int>& order);

// Letter i of a word fixes the edge between positions i and i+1 (mod n):
// 'f' is order[i] -> order[i+1], 'b' the reverse.
bool matches_pattern(const Digraph& g, const std::vector<int>& order, const std::string& word);
std::string alternating_word(int n);

enum class OrientedStatus { Found, None, Impossible };

struct OrientedResult {
  OrientedStatus status = OrientedStatus::None;
  std::vector<int> order;
  int rotation = 0;  // the word was rotated left by this much
};

// Rotations of the word are tried, reflections are not.
OrientedResult oriented_hamilton_oracle(const Digraph& g, const std::string& word, int cap = 16);

struct NeutralCount {
  long count = 0;
  bool has_two_cycles = false;  // the count ignores both arcs of every 2-cycle
};

NeutralCount neutral_pairs(const Digraph& g);
int neutral_pairs_cycle(const std::string& word);

// Path x = v_0, ..., v_k = y realizing the word letter by letter.
std::optional<std::vector<int>> find_oriented_path(const Digraph& g, int x, int y, const std::string& word,
                                                   int cap = 16);

struct MatchingResult {
  std::vector<int> match_a;  // partner in B or -1
  std::vector<int> match_b;
  int size = 0;
  bool saturating = false;
  std::optional<std::vector<int>> violator;  // S in A with |N(S)| < |S|
};

// Hopcroft-Karp on A = 0..na-1, B = 0..nb-1.
MatchingResult bipartite_matching(int na, int nb, const std::vector<std::pair<int, int>>& edges);

struct OneFactor {
  std::vector<std::vector<int>> cycles;  // ordered by smallest vertex, each starting there
  std::vector<int> successor;
};

struct OneFactorResult {
  std::optional<OneFactor> factor;
  std::optional<std::vector<int>> violator;
};

OneFactorResult one_factor(const Digraph& g);

struct RotationResult {
  std::optional<HamCycle> cycle;
  std::string failed_step;  // "one-factor", "close" or "absorb" on failure
  int closures = 0;
  int case1 = 0;
  int case2 = 0;
};

RotationResult rotation_extension_hamilton(const Digraph& g);

}  // namespace reglab
