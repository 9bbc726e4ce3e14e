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


#include <doctest.h>

#include <algorithm>

#include "reglab/constructions.hpp"
#include "reglab/errors.hpp"
#include "reglab/szemeredi.hpp"
#include "support/oracles.hpp"

using namespace reglab;

namespace {

std::vector<std::vector<int>> members(const Partition& p) {
  std::vector<std::vector<int>> out;
  for (const auto& c : p.classes) out.push_back(c.members());
  return out;
}

Partition from_lists(int n, const std::vector<std::vector<int>>& lists) {
  Partition p;
  for (const auto& l : lists) p.classes.emplace_back(n, l);
  return p;
}

// Splits every class of p in two at a random point.
Partition random_refinement(const Partition& p, oracle::Rng& rng) {
  Partition q;
  for (const auto& c : p.classes) {
    auto m = c.members();
    if (m.size() < 2) {
      q.classes.push_back(c);
      continue;
    }
    std::vector<int> a, b;
    for (int v : m) (rng.coin(1, 2) ? a : b).push_back(v);
    if (!a.empty()) q.classes.emplace_back(c.universe(), a);
    if (!b.empty()) q.classes.emplace_back(c.universe(), b);
  }
  return q;
}

Partition clusters_with_empty_v0(int n, int k) {
  Partition p;
  int m = n / k;
  for (int i = 0; i < k; ++i) {
    std::vector<int> c;
    for (int v = i * m; v < (i + 1) * m; ++v) c.push_back(v);
    p.classes.emplace_back(n, c);
  }
  std::vector<int> rest;
  for (int v = k * m; v < n; ++v) rest.push_back(v);
  p.classes.emplace_back(n, rest);
  p.exceptional = k;
  return p;
}

}  // namespace

TEST_CASE("energy of trivial partitions") {
  Graph g = random_graph(12, 0.4, 3);
  long e = g.edge_count();
  CHECK(energy(g, singleton_partition(12)).value == mpq_class(2 * e));
  mpq_class single(4 * e * e, 144);
  single.canonicalize();
  CHECK(energy(g, single_class_partition(12)).value == single);
}

TEST_CASE("energy matches the projection oracle") {
  Graph c4 = cycle_graph(4);
  Partition p = from_lists(4, {{0, 2}, {1, 3}});
  CHECK(energy(c4, p).value == oracle::projection_energy(c4, members(p)));
  CHECK(energy(c4, p).value == 8);

  oracle::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    int n = 6 + rng.below(10);
    Graph g = random_graph(n, 0.5, t);
    Digraph d = random_digraph(n, 0.4, t);
    Partition q = single_class_partition(n);
    for (int r = 0; r < 2; ++r) q = random_refinement(q, rng);
    CHECK(energy(g, q).value == oracle::projection_energy(g, members(q)));
    CHECK(energy(d, q).value == oracle::projection_energy(d, members(q)));
  }
}

TEST_CASE("energy grows under refinement and stays below n^2") {
  oracle::Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    int n = 10 + rng.below(20);
    Graph g = random_graph(n, 0.5, 100 + t);
    Partition p = single_class_partition(n);
    mpq_class last = energy(g, p).value;
    for (int r = 0; r < 4; ++r) {
      p = random_refinement(p, rng);
      mpq_class now = energy(g, p).value;
      CHECK(now >= last);
      CHECK(now <= mpq_class(n * n));
      last = now;
    }
    CHECK(last <= mpq_class(2 * g.edge_count()));
  }
}

TEST_CASE("balance refine traces") {
  Partition p = from_lists(10, {{0, 1, 2, 3, 4, 5, 6}, {7, 8, 9}});
  Partition q = balance_refine(p, Rational(1, 2), 10);
  std::vector<int> sizes;
  for (const auto& c : q.classes) sizes.push_back(c.size());
  CHECK(sizes == std::vector<int>{3, 3, 1, 3});
  CHECK(q.size() <= 6);
  REQUIRE(q.balancing);
  CHECK(q.balancing->size() >= 2);

  Partition even = from_lists(6, {{0, 1, 2}, {3, 4, 5}});
  Partition split = balance_refine(even, Rational(1, 2), 6);
  CHECK(members(split) == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}, {5}});

  Partition four = balance_refine(single_class_partition(8), Rational(1, 4), 8);
  CHECK(four.size() == 4);
  for (const auto& c : four.classes) CHECK(c.size() == 2);

  CHECK_THROWS(balance_refine(singleton_partition(8), Rational(1, 4), 8));
}

TEST_CASE("witness refinement") {
  // half graph between every two classes: position i of class a sees
  // position j of class b when i <= j
  Graph g(18);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) g.add_edge(6 * a + i, 6 * b + j);
  Partition p = from_lists(18, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}, {12, 13, 14, 15, 16, 17}});

  WitnessRefinement none = witness_refine(g, p, {}, Rational(1, 4));
  CHECK(members(none.refined) == members(p));
  CHECK(none.gain == 0);

  PairWitness w{0, 1, VertexSet(18, {3, 4, 5}), VertexSet(18, {6, 7, 8})};
  WitnessRefinement r = witness_refine(g, p, {w}, Rational(1, 4));
  CHECK(r.bound_holds);
  CHECK(r.gain >= r.bound);
  CHECK(r.gain > 0);
  CHECK(r.energy_after == oracle::projection_energy(g, members(r.refined)));

  PairWitness w2{0, 2, VertexSet(18, {0, 1, 4}), VertexSet(18, {15, 16, 17})};
  WitnessRefinement two = witness_refine(g, p, {w, w2}, Rational(1, 4));
  CHECK(two.gain >= two.bound);
  int inside = 0;
  for (const auto& c : two.refined.classes)
    if (c.subset_of(p.classes[0])) ++inside;
  CHECK(inside == 4);

  CHECK_THROWS_AS(witness_refine(g, p, {w, w}, Rational(1, 4)), PreconditionError);
  PairWitness small{0, 1, VertexSet(18, {5}), VertexSet(18, {6})};
  CHECK_THROWS_AS(witness_refine(g, p, {small}, Rational(1, 4)), PreconditionError);
}

TEST_CASE("regularity partition boosts on half graphs") {
  // With two starting classes one irregular pair is tolerated unless eps < 1/4.
  for (int n : {20, 30, 40}) {
    Graph g(n);
    const int h = n / 2;
    for (int i = 0; i < h; ++i)
      for (int j = i; j < h; ++j) g.add_edge(i, h + j);
    RegularityRun wide = regularity_partition(g, Rational(1, 4), 2);
    CHECK(wide.iterations == 0);
    RegularityRun run = regularity_partition(g, Rational(1, 5), 2);
    CHECK(run.iterations >= 1);
    CHECK(run.iterations <= run.iteration_cap);
    CHECK(run.increments_ok);
    for (std::size_t i = 1; i < run.energy_trace.size(); ++i)
      CHECK(run.energy_trace[i] - run.energy_trace[i - 1] >= run.increment_threshold);
    CHECK(run.energy_trace.back() == oracle::projection_energy(g, members(run.raw)));
  }
}

TEST_CASE("regularity partition on trivial graphs") {
  for (const Graph& g : {complete_graph(12), Graph(12)}) {
    RegularityRun run = regularity_partition(g, Rational(1, 4), 3);
    CHECK(run.iterations == 0);
    CHECK(run.irregular_pairs.empty());
  }
}

TEST_CASE("regularity partition on G(60,1/2)") {
  Graph g = random_graph(60, 0.5, 7);
  Rational eps(45, 100);
  RegularityRun run = regularity_partition(g, eps, 2);
  CHECK(run.iterations <= 216);
  CHECK(run.iteration_cap == 216);
  CHECK(run.increments_ok);
  for (std::size_t i = 1; i < run.energy_trace.size(); ++i)
    CHECK(run.energy_trace[i] - run.energy_trace[i - 1] >= run.increment_threshold);
  run.partition.validate(60);
  REQUIRE(run.partition.exceptional);
  CHECK_FALSE(eps.lt_count(run.partition.classes[*run.partition.exceptional].size(), 60));
}

TEST_CASE("regularity partition rejects infeasible input") {
  CHECK_THROWS_AS(regularity_partition(complete_graph(10), Rational(3, 4), 2), Infeasible);
  CHECK_THROWS_AS(regularity_partition(complete_graph(10), Rational(1, 20), 3), Infeasible);
  CHECK_THROWS_AS(regularity_partition(complete_graph(4), Rational(1, 4), 5), Infeasible);
}

TEST_CASE("degree form on trivial graphs") {
  Graph k = complete_graph(20);
  auto df = degree_form(k, Rational(1, 4), Rational(1, 10), 2);
  CHECK(df.audit.all());
  for (int i : df.partition.cluster_indices())
    for (int j : df.partition.cluster_indices())
      if (i < j) CHECK(density(df.pure, df.partition.classes[i], df.partition.classes[j]) == Rational(1));

  auto empty = degree_form(Graph(20), Rational(1, 4), Rational(1, 10), 2);
  CHECK(empty.pure == Graph(20));
  CHECK(empty.audit.all());
}

TEST_CASE("degree form on G(60,1/2)") {
  Graph g = random_graph(60, 0.5, 7);
  Rational eps(45, 100), d(5, 100);
  auto df = degree_form(g, eps, d, 2);
  CHECK(df.audit.exceptional_small);
  CHECK(df.audit.equal_sizes);
  CHECK(df.audit.degree_loss);
  CHECK(df.audit.clusters_empty);
  CHECK(df.audit.pairs_regular);
  auto redo = audit_degree_form(g, df.pure, df.partition, eps, d, 2);
  CHECK(redo.all());

  auto red = reduced_graph(df.pure, df.partition, eps, d);
  Rational c(g.min_degree(), 60);
  MindegAudit md = mindeg_audit(g, red);
  CHECK(md.c == c);
  if (md.applicable) CHECK(md.holds);
}

TEST_CASE("reduced graph extremes") {
  Partition p = clusters_with_empty_v0(12, 3);
  auto full = reduced_graph(complete_multipartite({4, 4, 4}), p, Rational(1, 4), Rational(1, 2));
  CHECK(full.r.edge_count() == 3);
  auto none = reduced_graph(Graph(12), p, Rational(1, 4), Rational(0));
  CHECK(none.r.edge_count() == 0);

  Digraph d(12);
  for (int u = 0; u < 4; ++u)
    for (int v = 4; v < 8; ++v) d.add_edge(u, v);
  auto dr = reduced_graph(d, p, Rational(1, 4), Rational(1, 2));
  CHECK(dr.r.has_edge(0, 1));
  CHECK_FALSE(dr.r.has_edge(1, 0));
  CHECK(dr.r.edge_count() == 1);
}

TEST_CASE("superregularize complete pairs") {
  Partition p = clusters_with_empty_v0(30, 3);
  Graph g = complete_multipartite({10, 10, 10});
  Superregularized s = superregularize_path(g, p, {{0, 1}, {1, 2}}, Rational(1, 10), Rational(1, 2));
  CHECK(s.max_degree == 2);
  // floor(2 * 2 * 1/10 * 10) = 4 padding vertices leave each cluster.
  CHECK(s.size == 6);
  CHECK(s.moved.size() == 12);
  CHECK(s.audit_holds);
  for (const auto& c : s.subclusters) CHECK(c.size() == 6);
}

TEST_CASE("superregularize drops the low degree vertex") {
  Partition p = clusters_with_empty_v0(20, 2);
  Graph g = complete_multipartite({10, 10});
  for (int v = 10; v < 20; ++v)
    if (v != 10) g.remove_edge(3, v);
  for (int u = 0; u < 10; ++u)
    if (u != 0) g.remove_edge(u, 17);
  Superregularized s = superregularize_path(g, p, {{0, 1}}, Rational(1, 3), Rational(1, 2));
  CHECK(s.size == 4);
  CHECK(s.moved.contains(3));
  CHECK(s.moved.contains(17));
  CHECK_FALSE(s.subclusters[0].contains(3));
}

TEST_CASE("superregularize a dense random pair") {
  oracle::Rng rng(4);
  int ok = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Graph g(20);
    for (int u = 0; u < 10; ++u)
      for (int v = 10; v < 20; ++v)
        if (rng.coin(19, 20)) g.add_edge(u, v);
    Partition p = clusters_with_empty_v0(20, 2);
    try {
      auto s = superregularize_path(g, p, {{0, 1}}, Rational(3, 10), Rational(1, 2));
      CHECK(s.size == 4);
      CHECK(s.audit_holds);
      ++ok;
    } catch (const PreconditionError&) {
      // the pair is not regular, so the hypothesis fails
    }
  }
  CHECK(ok > 0);
}
