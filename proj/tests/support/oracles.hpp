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


// Independent reference implementations used to cross-check the library.
// Everything here is written from the definitions, with no shared code paths
// beyond the graph containers.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"

namespace oracle {

using reglab::Digraph;
using reglab::Graph;
using reglab::Rational;

mpq_class q(const Rational& r);

// c * base^(1/root), base >= 0. Lets the perturbation propositions use
// sqrt(eps) and eps^(1/4) thresholds without rounding.
struct Surd {
  mpq_class c;
  mpq_class base;
  int root = 1;
};

Surd exact(const mpq_class& v);
// sign(value - t)
int compare(const Surd& s, const mpq_class& t);

// 0/1 bipartite block: rows are A, columns are B.
using Block = std::vector<std::vector<int>>;

Block block(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);
Block block(const Digraph& g, const std::vector<int>& a, const std::vector<int>& b);

// Plain double loop over all X subset A, Y subset B straight from the
// definition: regular iff every pair with |X| >= eps|A| and |Y| >= eps|B| has
// |d(X,Y) - d(A,B)| < eps.
bool naive_regular(const Block& m, const Surd& eps);
// Every large sub-pair has density > d - minus and every vertex has more than
// (d - minus) times the other side as neighbours. No regularity clause.
bool naive_superregular(const Block& m, const Surd& eps, const mpq_class& d, const Surd& minus);
mpq_class block_density(const Block& m);

// Whole-digraph check: X, Y range over all subsets of V and may overlap.
bool naive_digraph_regular(const Digraph& g, const Rational& eps, const Rational& d);

bool held_karp(const Graph& g);
bool held_karp(const Digraph& g);

// Squared Frobenius norm of the block-mean projection, entry by entry.
mpq_class projection_energy(const Graph& g, const std::vector<std::vector<int>>& classes);
mpq_class projection_energy(const Digraph& g, const std::vector<std::vector<int>>& classes);

// Some S subset A with |N(S)| < |S|, by subset enumeration.
std::optional<std::vector<int>> brute_hall_violator(int na, int nb, const std::vector<std::pair<int, int>>& edges);
bool brute_perfect_matching(int na, int nb, const std::vector<std::pair<int, int>>& edges);

// Robust expansion straight from the definition, with S over every subset.
bool naive_out_expander(const Digraph& g, const mpq_class& nu, const mpq_class& tau);
bool naive_in_expander(const Digraph& g, const mpq_class& nu, const mpq_class& tau);

// splitmix64 stream for picking test instances.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next();
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin(int num, int den) { return below(den) < num; }
};

Graph random_pair(int a, int b, int num, int den, Rng& rng);  // A = 0..a-1, B = a..a+b-1

// Perturbation propositions. Each returns true when the implication holds
// (including when its hypothesis fails); `applied` reports whether the
// hypothesis held, so callers can insist on non-vacuous coverage.
struct Outcome {
  bool ok = true;
  bool applied = false;
};

Outcome prop_neighbours(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps);
Outcome prop_complement(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps);
Outcome prop_subsets(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps,
                     const Rational& alpha, Rng& rng);
Outcome prop_supersets(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps,
                       Rng& rng);
Outcome prop_removing(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps,
                      const Rational& d, Rng& rng);
Outcome prop_adding(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps,
                    const Rational& d, Rng& rng);

Outcome prop_removing_robexp(const Digraph& g, const Rational& nu, const Rational& tau,
                             const std::vector<int>& removed);
Outcome prop_adding_robexp(const Digraph& g, const Rational& nu, const Rational& tau, int added, Rng& rng);
Outcome prop_inout(const Digraph& g, const Rational& nu, const Rational& tau, const Rational& eta);

}  // namespace oracle
