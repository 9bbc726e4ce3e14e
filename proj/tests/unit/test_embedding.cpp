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

#include "reglab/constructions.hpp"
#include "reglab/embedding.hpp"
#include "reglab/enumerate.hpp"
#include "reglab/errors.hpp"
#include "support/oracles.hpp"

using namespace reglab;

TEST_CASE("blow up of a triangle") {
  Graph b = blow_up(cycle_graph(3), 2);
  CHECK(b.n() == 6);
  CHECK(b.edge_count() == 12);
  CHECK_FALSE(b.has_edge(0, 1));  // same cluster
  CHECK(b.has_edge(0, 2));
}

TEST_CASE("greedy embedding of K3 into a triangle blow-up") {
  // Noisy pairs are never (1/50)-regular at this size, so the host is the
  // complete blow-up.
  const int m = 10;
  Graph g = blow_up(complete_graph(3), m);
  Partition p;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> c;
    for (int v = i * m; v < (i + 1) * m; ++v) c.push_back(v);
    p.classes.emplace_back(3 * m, c);
  }
  p.classes.emplace_back(3 * m);
  p.exceptional = 3;
  Rational eps(1, 50), d(1, 2);
  PartitionOptions opt;
  opt.seed = 1;
  auto red = reduced_graph(g, p, eps, d, opt);
  REQUIRE(red.r.edge_count() == 3);
  GreedyResult r = greedy_embed(complete_graph(3), g, p, red, {0, 1, 2}, 1);
  REQUIRE(r.embedding);
  const auto& map = r.embedding->map;
  CHECK(g.has_edge(map[0], map[1]));
  CHECK(g.has_edge(map[1], map[2]));
  CHECK(g.has_edge(map[0], map[2]));
  CHECK(r.counting_bound_held);

  CHECK_THROWS_AS(greedy_embed(complete_graph(3), g, p, red, {0, 0, 1}, 1), PreconditionError);
}

TEST_CASE("subgraph oracle") {
  CHECK_FALSE(subgraph_oracle(complete_graph(3), cycle_graph(5)));
  auto e = subgraph_oracle(cycle_graph(4), complete_graph(4));
  REQUIRE(e);
  for (auto [u, v] : cycle_graph(4).edges()) CHECK(complete_graph(4).has_edge(e->map[u], e->map[v]));
  CHECK(subgraph_oracle(directed_cycle(3), complete_digraph(4)));
  CHECK_FALSE(subgraph_oracle(directed_cycle(3), regular_tournament(1)));
  CHECK(contains_subgraph(petersen_graph(), cycle_graph(5)));
  CHECK_FALSE(contains_subgraph(petersen_graph(), cycle_graph(4)));
}

TEST_CASE("subgraph oracle agrees with brute force on small hosts") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    Graph g = random_graph(6, 0.5, s);
    bool brute = false;
    for (int a = 0; a < 6 && !brute; ++a)
      for (int b = a + 1; b < 6 && !brute; ++b)
        for (int c = b + 1; c < 6 && !brute; ++c)
          brute = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
    CHECK(contains_subgraph(g, complete_graph(3)) == brute);
  }
}

TEST_CASE("dense six vertex graphs") {
  // Every graph on 6 vertices with t_2(6) + 1 = 10 edges has a triangle; none
  // of them has room for the 12-edge K(2,2,2).
  Graph k222 = complete_multipartite({2, 2, 2});
  auto levels = enumerate_graphs(6);
  REQUIRE(levels.size() > 10);
  for (const Graph& g : levels[10]) {
    CHECK(contains_subgraph(g, complete_graph(3)));
    CHECK_FALSE(contains_subgraph(g, k222));
  }
  for (const Graph& g : levels[12]) CHECK(contains_subgraph(g, k222) == isomorphic(g, k222));
}

TEST_CASE("extremal numbers") {
  ExtremalResult k3 = extremal_number(5, complete_graph(3));
  CHECK(k3.value == 6);
  CHECK(isomorphic(k3.witness, turan_graph(5, 3)));
  CHECK(k3.extremal_count == 1);
  CHECK(extremal_number(4, cycle_graph(4)).value == 4);
  CHECK_THROWS_AS(extremal_number(5, Graph(2)), DomainError);
}

TEST_CASE("ramsey numbers") {
  RamseyResult k3 = ramsey_oracle(complete_graph(3));
  REQUIRE(k3.value);
  CHECK(*k3.value == 6);
  CHECK(k3.certificate.n() == 5);
  CHECK_FALSE(contains_subgraph(k3.certificate, complete_graph(3)));
  CHECK_FALSE(contains_subgraph(complement(k3.certificate), complete_graph(3)));
  CHECK(ramsey_oracle(path_graph(3)).value == 3);
  CHECK(ramsey_oracle(complete_graph(2)).value == 2);
  RamseyResult k4 = ramsey_oracle(complete_graph(4), 6);
  CHECK_FALSE(k4.value);
  CHECK(k4.largest_avoiding == 6);
}

TEST_CASE("C6 packings") {
  Graph two = c6_sharpness_graph(12);
  CHECK_FALSE(packing_oracle(two, cycle_graph(6)).perfect);
  PackingResult k33 = packing_oracle(complete_bipartite(3, 3), cycle_graph(6));
  CHECK(k33.perfect);
  REQUIRE(k33.copies.size() == 1);
  PackingResult most = packing_oracle(two, cycle_graph(6), PackingMode::Maximum);
  CHECK(most.copies.size() == 1);
  CHECK_FALSE(most.perfect);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(petersen_graph()) == 3);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_bipartite(3, 4)) == 2);
  CHECK(chromatic_number(complete_graph(5)) == 5);
  CHECK(greedy_colour_bound(petersen_graph()) == 4);
}
