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
#include "reglab/hamiltonicity.hpp"
#include "reglab/robust_expansion.hpp"
#include "support/oracles.hpp"

using namespace reglab;

TEST_CASE("graph certificates") {
  CHECK(certify(complete_graph(6), CertificateKind::Dirac).satisfied);
  CHECK_FALSE(certify(cycle_graph(6), CertificateKind::Dirac).satisfied);
  CHECK(certify(complete_graph(6), CertificateKind::Posa).satisfied);

  Certificate c = certify(chvatal_extremal(8, 3), CertificateKind::Chvatal);
  CHECK_FALSE(c.satisfied);
  REQUIRE(c.failing_index);
  CHECK(*c.failing_index == 3);

  CHECK_THROWS_AS(certify(complete_graph(5), CertificateKind::GhouilaHouri), PreconditionError);
  CHECK_THROWS_AS(certify(complete_graph(2), CertificateKind::Dirac), PreconditionError);
}

TEST_CASE("digraph certificates") {
  CHECK(certify(complete_digraph(6), CertificateKind::GhouilaHouri).satisfied);
  CHECK_FALSE(certify(directed_cycle(6), CertificateKind::GhouilaHouri).satisfied);
  CHECK(certify(complete_digraph(6), CertificateKind::NashWilliamsStyle).satisfied);
  Digraph split(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK_FALSE(certify(split, CertificateKind::NashWilliamsStyle).satisfied);

  CHECK(robdegseq_condition(complete_digraph(10), Rational(1, 10)).satisfied);
  Certificate cyc = robdegseq_condition(directed_cycle(10), Rational(2, 10));
  CHECK_FALSE(cyc.satisfied);
  CHECK_THROWS(robdegseq_condition(complete_digraph(5), Rational(0)));
}

TEST_CASE("certificates are sound on random graphs") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph g = random_graph(9, 0.3 + 0.01 * static_cast<double>(s), s);
    bool ham = oracle::held_karp(g);
    for (auto k : {CertificateKind::Dirac, CertificateKind::Posa, CertificateKind::Chvatal})
      if (certify(g, k).satisfied) CHECK(ham);
    Digraph d = random_digraph(8, 0.5 + 0.005 * static_cast<double>(s), s);
    bool dham = oracle::held_karp(d);
    for (auto k : {CertificateKind::GhouilaHouri, CertificateKind::NashWilliamsStyle})
      if (certify(d, k).satisfied) CHECK(dham);
  }
}

TEST_CASE("hamilton oracle agrees with Held-Karp") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    int n = 4 + static_cast<int>(s % 9);
    Graph g = random_graph(n, 0.35, s);
    auto h = hamilton_oracle(g);
    CHECK(h.has_value() == oracle::held_karp(g));
    if (h) CHECK(is_hamilton_cycle(g, h->order));
    Digraph d = random_digraph(n, 0.3, s);
    auto hd = hamilton_oracle(d);
    CHECK(hd.has_value() == oracle::held_karp(d));
    if (hd) CHECK(is_hamilton_cycle(d, hd->order));
  }
}

TEST_CASE("known non-hamiltonian graphs") {
  CHECK_FALSE(hamilton_oracle(petersen_graph()));
  CHECK_FALSE(oracle::held_karp(petersen_graph()));
  CHECK_FALSE(hamilton_oracle(chvatal_extremal(8, 3)));
  CHECK_FALSE(hamilton_oracle(haggkvist_graph(3)));
  CHECK(hamilton_oracle(complete_graph(7)));
  CHECK_THROWS_AS(hamilton_oracle(complete_graph(21)), CapExceeded);
}

TEST_CASE("oriented cycles") {
  CHECK(oriented_hamilton_oracle(antidirected_counterexample(1), alternating_word(12)).status ==
        OrientedStatus::None);
  OrientedResult k4 = oriented_hamilton_oracle(complete_digraph(4), "fbfb");
  REQUIRE(k4.status == OrientedStatus::Found);
  CHECK(matches_pattern(complete_digraph(4), k4.order, "fbfb"));
  CHECK(oriented_hamilton_oracle(complete_digraph(5), alternating_word(5)).status == OrientedStatus::Impossible);
  CHECK(oriented_hamilton_oracle(directed_cycle(6), "ffffff").status == OrientedStatus::Found);
  CHECK(oriented_hamilton_oracle(directed_cycle(6), "fffffb").status == OrientedStatus::None);
  CHECK_THROWS_AS(oriented_hamilton_oracle(directed_cycle(4), "fxff"), PreconditionError);
}

TEST_CASE("oriented paths in random outexpanders") {
  oracle::Rng rng(77);
  int tried = 0;
  for (std::uint64_t s = 0; tried < 50 && s < 500; ++s) {
    Digraph d = random_digraph(12, 0.6, s);
    if (!check_expander(d, {Rational(1, 12), Rational(1, 4), ExpansionMode::Out}).holds) continue;
    ++tried;
    std::string w;
    for (int i = 0; i < 5; ++i) w += rng.coin(1, 2) ? 'f' : 'b';
    int x = rng.below(12), y = (x + 1 + rng.below(11)) % 12;
    auto p = find_oriented_path(d, x, y, w);
    REQUIRE(p);
    CHECK(p->front() == x);
    CHECK(p->back() == y);
    for (std::size_t i = 0; i < w.size(); ++i) {
      int u = (*p)[i], v = (*p)[i + 1];
      CHECK((w[i] == 'f' ? d.has_edge(u, v) : d.has_edge(v, u)));
    }
  }
  CHECK(tried == 50);
}

TEST_CASE("neutral pairs") {
  CHECK(neutral_pairs_cycle("fbfb") == 2);
  CHECK(neutral_pairs_cycle("fffb") == 1);
  CHECK(neutral_pairs_cycle("ffff") == 0);
  // sinks and sources of a cyclic word balance
  for (const char* w : {"ffbbfb", "fbbbff", "bffbfb"}) {
    std::string s(w);
    int fb = 0, bf = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char a = s[i], b = s[(i + 1) % s.size()];
      fb += a == 'f' && b == 'b';
      bf += a == 'b' && b == 'f';
    }
    CHECK(fb == bf);
    CHECK(neutral_pairs_cycle(s) == fb);
  }
  NeutralCount nc = neutral_pairs(Digraph(3, {{0, 1}, {2, 1}}));
  CHECK(nc.count == 1);
  CHECK_FALSE(nc.has_two_cycles);
  CHECK(neutral_pairs(complete_digraph(3)).has_two_cycles);
}

TEST_CASE("oriented paths") {
  auto single = find_oriented_path(directed_cycle(5), 2, 3, "f");
  REQUIRE(single);
  CHECK(*single == std::vector<int>{2, 3});
  auto fb = find_oriented_path(Digraph(3, {{0, 2}, {1, 2}}), 0, 1, "fb");
  REQUIRE(fb);
  CHECK(*fb == std::vector<int>{0, 2, 1});
  auto p = find_oriented_path(complete_digraph(4), 0, 3, "fbf");
  REQUIRE(p);
  CHECK(p->size() == 4);
  CHECK(find_oriented_path(directed_cycle(4), 0, 3, "fff"));
  CHECK_FALSE(find_oriented_path(directed_cycle(4), 0, 3, "fb"));
}

TEST_CASE("bipartite matching against brute force") {
  oracle::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    int na = 1 + rng.below(6), nb = 1 + rng.below(6);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b)
        if (rng.coin(2, 5)) edges.emplace_back(a, b);
    MatchingResult m = bipartite_matching(na, nb, edges);
    CHECK(m.saturating == oracle::brute_perfect_matching(na, nb, edges));
    CHECK(m.saturating == !oracle::brute_hall_violator(na, nb, edges));
    if (m.violator) {
      std::vector<char> nbr(nb, 0);
      for (auto [a, b] : edges)
        if (std::find(m.violator->begin(), m.violator->end(), a) != m.violator->end()) nbr[b] = 1;
      CHECK(std::count(nbr.begin(), nbr.end(), 1) < static_cast<long>(m.violator->size()));
    }
    int size = 0;
    for (int a = 0; a < na; ++a)
      if (m.match_a[a] >= 0) {
        ++size;
        CHECK(m.match_b[m.match_a[a]] == a);
      }
    CHECK(size == m.size);
  }
}

TEST_CASE("one factors") {
  OneFactorResult k = one_factor(complete_digraph(5));
  REQUIRE(k.factor);
  for (int v = 0; v < 5; ++v) CHECK(complete_digraph(5).has_edge(v, k.factor->successor[v]));
  OneFactorResult h = one_factor(haggkvist_graph(3));
  CHECK_FALSE(h.factor);
  CHECK(h.violator);
}

TEST_CASE("rotation extension on D(40,1/2)") {
  Digraph d = random_digraph(40, 0.5, 3);
  RotationResult r = rotation_extension_hamilton(d);
  REQUIRE(r.cycle);
  CHECK(is_hamilton_cycle(d, r.cycle->order));
  CHECK_FALSE(rotation_extension_hamilton(directed_cycle(5)).cycle == std::nullopt);
  RotationResult none = rotation_extension_hamilton(haggkvist_graph(3));
  CHECK_FALSE(none.cycle);
  CHECK(none.failed_step == "one-factor");
}
