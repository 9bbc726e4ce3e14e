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
#include "reglab/enumerate.hpp"
#include "reglab/errors.hpp"
#include "reglab/robust_expansion.hpp"
#include "support/oracles.hpp"

using namespace reglab;

namespace {

mpq_class q(const Rational& r) { return oracle::q(r); }

}  // namespace

TEST_CASE("robust neighbourhoods") {
  Digraph k = complete_digraph(8);
  CHECK(robust_neighbourhood(k, VertexSet(8, {0, 1}), Rational(1, 8), Direction::Out).size() == 8);
  CHECK(robust_neighbourhood(Digraph(8), VertexSet(8, {0, 1}), Rational(1, 8), Direction::Out).empty());
  VertexSet rn = robust_neighbourhood(directed_cycle(8), VertexSet(8, {0, 1, 2, 3}), Rational(1, 8), Direction::Out);
  CHECK(rn.members() == std::vector<int>{1, 2, 3, 4});
  VertexSet rin = robust_neighbourhood(directed_cycle(8), VertexSet(8, {0, 1, 2, 3}), Rational(1, 8), Direction::In);
  CHECK(rin.members() == std::vector<int>{0, 1, 2, 7});
  CHECK_THROWS_AS(robust_neighbourhood(k, VertexSet(8), Rational(1, 8), Direction::Out), DomainError);
}

TEST_CASE("expander examples") {
  CHECK(check_expander(complete_digraph(10), {Rational(1, 10), Rational(1, 5), ExpansionMode::Out}).holds);
  ExpansionVerdict c = check_expander(directed_cycle(10), {Rational(1, 5), Rational(1, 5), ExpansionMode::Out});
  CHECK_FALSE(c.holds);
  REQUIRE(c.violator);
  CHECK(violates(directed_cycle(10), *c.violator, {Rational(1, 5), Rational(1, 5), ExpansionMode::Out},
                 Direction::Out));
  CHECK_THROWS_AS(check_expander(complete_digraph(5), {Rational(1, 2), Rational(1, 4), ExpansionMode::Out}),
                  DomainError);
  CHECK_THROWS_AS(check_expander(complete_digraph(20), {Rational(1, 10), Rational(1, 5), ExpansionMode::Out}),
                  CapExceeded);
  ExpanderOptions sampled;
  sampled.sampled = true;
  sampled.cap = 10;
  ExpansionVerdict s =
      check_expander(complete_digraph(20), {Rational(1, 10), Rational(1, 5), ExpansionMode::Out}, sampled);
  CHECK(s.holds);
  CHECK_FALSE(s.exhaustive);
}

TEST_CASE("random tournament n=13 seed 5") {
  Digraph t = random_tournament(13, 5);
  ExpansionSpec spec{Rational(1, 13), Rational(1, 4), ExpansionMode::Out};
  ExpansionVerdict v = check_expander(t, spec);
  CHECK(v.holds == oracle::naive_out_expander(t, q(spec.nu), q(spec.tau)));
  if (v.violator) CHECK(violates(t, *v.violator, spec, Direction::Out));
}

TEST_CASE("expander agrees with definition") {
  for (int n = 3; n <= 6; ++n)
    for (const Digraph& t : enumerate_tournaments(n)) {
      ExpansionSpec spec{Rational(1, 8), Rational(1, 4), ExpansionMode::Di};
      ExpansionVerdict v = check_expander(t, spec);
      bool out = oracle::naive_out_expander(t, q(spec.nu), q(spec.tau));
      bool in = oracle::naive_in_expander(t, q(spec.nu), q(spec.tau));
      CHECK(v.holds == (out && in));
      if (v.violator) CHECK(violates(t, *v.violator, spec, v.direction));
    }
  for (std::uint64_t s = 0; s < 40; ++s) {
    Digraph d = random_digraph(8 + static_cast<int>(s % 5), 0.55, s);
    ExpansionSpec spec{Rational(1, 10), Rational(1, 5), ExpansionMode::Out};
    CHECK(check_expander(d, spec).holds == oracle::naive_out_expander(d, q(spec.nu), q(spec.tau)));
    spec.mode = ExpansionMode::In;
    CHECK(check_expander(d, spec).holds == oracle::naive_in_expander(d, q(spec.nu), q(spec.tau)));
  }
}

TEST_CASE("least violator") {
  Digraph d = random_digraph(10, 0.3, 4);
  ExpansionSpec spec{Rational(1, 10), Rational(1, 5), ExpansionMode::Out};
  ExpansionVerdict v = check_expander(d, spec);
  REQUIRE(v.violator);
  std::uint64_t least = 0;
  for (int x : v.violator->members()) least |= std::uint64_t{1} << x;
  for (std::uint64_t mask = 1; mask < least; ++mask) {
    VertexSet s(10);
    for (int x = 0; x < 10; ++x)
      if (mask >> x & 1) s.insert(x);
    if (static_cast<int>(s.size()) * 5 <= 10 || static_cast<int>(s.size()) * 5 >= 40) continue;
    CHECK_FALSE(violates(d, s, spec, Direction::Out));
  }
}

TEST_CASE("degree sequence condition") {
  CHECK(robdegseq_condition(complete_digraph(10), Rational(1, 10)).satisfied);
  CHECK_FALSE(robdegseq_condition(directed_cycle(10), Rational(2, 10)).satisfied);
  CHECK_THROWS_AS(robdegseq_condition(complete_digraph(5), Rational(0)), DomainError);
  Digraph d = random_digraph(14, 0.8, 0);
  Certificate c = robdegseq_condition(d, Rational(1, 10));
  // direct evaluation with floored subscripts
  std::vector<int> out, in;
  for (int v = 0; v < 14; ++v) {
    out.push_back(d.out_degree(v));
    in.push_back(d.in_degree(v));
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  bool ok = true;
  for (int i = 1; 2 * i < 14; ++i) {
    bool a = 10 * out[i - 1] >= 10 * i + 14;
    int j = (10 * (14 - i) - 14) / 10;
    bool b = j >= 1 && in[j - 1] >= 14 - i;
    ok = ok && (a || b);
  }
  CHECK(c.satisfied == ok);
}

TEST_CASE("perturbation properties") {
  oracle::Rng rng(11);
  int removed = 0, added = 0, inout = 0;
  for (std::uint64_t s = 0; s < 12; ++s) {
    Digraph d = random_digraph(16, 0.9, s);
    Rational nu(1, 4), tau(1, 3);
    oracle::Outcome r = oracle::prop_removing_robexp(d, nu, tau, {rng.below(16)});
    CHECK(r.ok);
    removed += r.applied;
    oracle::Outcome a = oracle::prop_adding_robexp(d, nu, tau, 1, rng);
    CHECK(a.ok);
    added += a.applied;
    oracle::Outcome io = oracle::prop_inout(d, Rational(1, 16), Rational(1, 4), Rational(1, 4));
    CHECK(io.ok);
    inout += io.applied;
  }
  CHECK(removed > 5);
  CHECK(added > 5);
  CHECK(inout > 5);
}
