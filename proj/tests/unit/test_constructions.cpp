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
#include "reglab/enumerate.hpp"
#include "reglab/errors.hpp"
#include "reglab/graph.hpp"

using namespace reglab;

TEST_CASE("turan graph counts") {
  Graph t = turan_graph(9, 6);  // five parts
  CHECK(t.edge_count() == 32);
  CHECK(turan_class_sizes(9, 6) == std::vector<int>{2, 2, 2, 2, 1});
  CHECK(turan_count(9, 6) == 32);
  CHECK(turan_count(4, 3) == 4);
  for (int n = 2; n <= 12; ++n)
    for (int r = 2; r <= n; ++r) CHECK(turan_graph(n, r).edge_count() == turan_count(n, r));
}

TEST_CASE("chvatal extremal family") {
  Graph g = chvatal_extremal(8, 3);
  CHECK(g.n() == 8);
  for (int n = 3; n <= 10; ++n)
    for (int r = 1; 2 * r < n; ++r) {
      auto d = degree_sequence(chvatal_extremal(n, r));
      CHECK(d[r - 1] == r);
      CHECK(d[n - r - 1] == n - r - 1);
    }
  auto d1 = degree_sequence(chvatal_extremal(6, 1));
  CHECK(d1[0] == 1);
}

TEST_CASE("regular tournament") {
  for (int m : {1, 3, 5, 7}) {
    Digraph t = regular_tournament(m);
    CHECK(t.is_tournament());
    for (int v = 0; v < m; ++v) CHECK(t.out_degree(v) == (m - 1) / 2);
  }
}

TEST_CASE("haggkvist family") {
  Digraph g = haggkvist_graph(3);
  CHECK(g.n() == 15);
  CHECK(g.is_oriented());
  CHECK(g.min_semidegree() == 5);
  Digraph g1 = haggkvist_graph(1);
  CHECK(g1.n() == 7);
  CHECK(g1.min_semidegree() == 2);
  CHECK_THROWS(haggkvist_graph(2));
}

TEST_CASE("antidirected counterexample") {
  Digraph g = antidirected_counterexample(1);
  CHECK(g.n() == 12);
  CHECK(g.is_oriented());
  CHECK(g.min_semidegree() == 4);
}

TEST_CASE("c6 sharpness graph") {
  Graph g = c6_sharpness_graph(12);
  CHECK(g.min_degree() == 4);
  CHECK(g.edge_count() == 31);
  CHECK(isomorphic(g, disjoint_union(complete_graph(7), complete_graph(5))));
}

TEST_CASE("seeded generators are reproducible") {
  CHECK(random_graph(10, 0.5, 1) == random_graph(10, 0.5, 1));
  CHECK(random_digraph(12, 0.3, 9) == random_digraph(12, 0.3, 9));
  CHECK_FALSE(random_graph(20, 0.5, 1) == random_graph(20, 0.5, 2));
  CHECK(random_tournament(9, 4).is_tournament());
  Graph b = random_bipartite(4, 5, 1.0, 3);
  CHECK(b.edge_count() == 20);
  CHECK(random_graph(10, 0.0, 5).edge_count() == 0);
}

TEST_CASE("seeded G(10,1/2) fixture") {
  // Frozen at build time.
  CHECK(random_graph(10, 0.5, 1).edge_count() == 29);
}

TEST_CASE("small named graphs") {
  CHECK(petersen_graph().edge_count() == 15);
  CHECK(petersen_graph().min_degree() == 3);
  CHECK(complete_digraph(5).edge_count() == 20);
  CHECK(directed_cycle(6).min_semidegree() == 1);
  CHECK(complete_multipartite({1, 2, 3}).edge_count() == 11);
}

TEST_CASE("isomorph-free enumeration counts") {
  auto levels = enumerate_graphs(5);
  std::size_t total = 0;
  for (const auto& l : levels) total += l.size();
  CHECK(total == 34);
  CHECK(enumerate_tournaments(5).size() == 12);
  CHECK(enumerate_tournaments(6).size() == 56);
}
