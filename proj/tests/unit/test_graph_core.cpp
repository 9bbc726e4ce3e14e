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
#include "reglab/graph_io.hpp"
#include "reglab/rational.hpp"

using namespace reglab;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("1/4") == Rational(1, 4));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1."), DomainError);
  CHECK(Rational(2, 4).str() == "1/2");
}

TEST_CASE("rational counting comparisons") {
  Rational eps(1, 4);
  CHECK(eps.le_count(2, 8));
  CHECK_FALSE(eps.lt_count(2, 8));
  CHECK(eps.lt_count(3, 8));
  CHECK_FALSE(eps.le_count(1, 8));
  CHECK(Rational(7, 3).ceil() == 3);
  CHECK(Rational(-7, 3).floor() == -3);
}

TEST_CASE("vertex set basics") {
  VertexSet s(70, {0, 5, 69});
  CHECK(s.size() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(68));
  CHECK(s.members() == std::vector<int>{0, 5, 69});
  VertexSet t(70, {5, 6});
  CHECK(s.intersects(t));
  CHECK(s.intersection_size(t) == 1);
}

TEST_CASE("density of K33 halves") {
  Graph g = complete_bipartite(3, 3);
  VertexSet a(6, {0, 1, 2}), b(6, {3, 4, 5});
  CHECK(density(g, a, b) == Rational(1));
  CHECK(edges_between(g, a, b) == 9);
  CHECK(density(g, VertexSet(6, {0, 1}), VertexSet(6, {2})) == Rational(0));
  CHECK_THROWS_AS(density(g, a, a), DomainError);
  CHECK_THROWS_AS(density(g, VertexSet(6), b), DomainError);
}

TEST_CASE("digraph density counts one direction") {
  Digraph d(4, {{0, 2}, {0, 3}, {3, 1}});
  VertexSet a(4, {0, 1}), b(4, {2, 3});
  CHECK(density(d, a, b) == Rational(1, 2));
  CHECK(density(d, b, a) == Rational(1, 4));
}

TEST_CASE("graph rejects loops and out of range") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
  Digraph d(3);
  CHECK_THROWS_AS(d.add_edge(2, 2), DomainError);
}

TEST_CASE("chvatal extremal degree sequence") {
  CHECK(degree_sequence(chvatal_extremal(8, 3)) == std::vector<int>{3, 3, 3, 4, 4, 7, 7, 7});
}

TEST_CASE("complement of C5 is C5") {
  Graph c5 = cycle_graph(5);
  Graph co = complement(c5);
  CHECK(co.edge_count() == 5);
  // 0,2,4,1,3 walks around the complement.
  std::vector<int> walk = {0, 2, 4, 1, 3};
  for (int i = 0; i < 5; ++i) CHECK(co.has_edge(walk[i], walk[(i + 1) % 5]));
  CHECK(isomorphic(co, c5));
}

TEST_CASE("induced subgraph keeps labels") {
  Graph g = cycle_graph(6);
  auto ind = induced(g, VertexSet(6, {0, 1, 2, 4}));
  CHECK(ind.graph.n() == 4);
  CHECK(ind.labels == std::vector<int>{0, 1, 2, 4});
  CHECK(ind.graph.edge_count() == 2);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(disjoint_union(complete_graph(3), complete_graph(2))));
  CHECK(is_strongly_connected(directed_cycle(5)));
  CHECK_FALSE(is_strongly_connected(Digraph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("graph file round trip") {
  Graph g = petersen_graph();
  AnyGraph back = parse_graph_text(format_graph(g));
  REQUIRE(std::holds_alternative<Graph>(back));
  CHECK(std::get<Graph>(back) == g);

  Digraph d = directed_cycle(4);
  AnyGraph dback = parse_graph_text("# comment\n" + format_graph(d) + "\n");
  REQUIRE(std::holds_alternative<Digraph>(dback));
  CHECK(std::get<Digraph>(dback) == d);
}

TEST_CASE("graph file errors") {
  CHECK_THROWS_AS(parse_graph_text("graph 3\n0 3\n"), DomainError);
  CHECK_THROWS_AS(parse_graph_text("graph 3\n0 1\n1 0\n"), DomainError);
  CHECK_THROWS_AS(parse_graph_text("digraph 3\n0 1\n0 1\n"), DomainError);
  CHECK_THROWS_AS(parse_graph_text("graph 3\n2 2\n"), DomainError);
  CHECK_THROWS_AS(parse_graph_text("0 1\n"), DomainError);
  CHECK_THROWS_AS(parse_graph_text("graph 3\n0 1 2\n"), DomainError);
  CHECK_NOTHROW(parse_graph_text("digraph 2\n0 1\n1 0\n"));
}

TEST_CASE("vertex ranges") {
  VertexSet s = parse_vertex_set("0-5,7", 10);
  CHECK(s.members() == std::vector<int>{0, 1, 2, 3, 4, 5, 7});
  CHECK(format_vertex_set(s) == "0-5,7");
  CHECK(parse_vertex_set("", 4).empty());
  CHECK_THROWS_AS(parse_vertex_set("3-1", 5), DomainError);
  CHECK_THROWS_AS(parse_vertex_set("0-9", 5), DomainError);
}
