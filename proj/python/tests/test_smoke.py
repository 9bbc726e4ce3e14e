# Copyright 2026 The reglab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import reglab


def test_graph_roundtrip():
    g = reglab.cycle_graph(5)
    text = reglab.format_graph(g)
    assert text.startswith("graph 5\n")
    assert reglab.parse_graph(text) == g


def test_parse_rejects_loops():
    with pytest.raises(ValueError):
        reglab.parse_graph("graph 3\n1 1\n")


def test_density_is_exact():
    g = reglab.Graph(4, [(0, 2), (0, 3), (1, 2)])
    assert reglab.density(g, [0, 1], [2, 3]) == Fraction(3, 4)


def test_complete_pair_is_regular():
    g = reglab.Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    verdict = reglab.check_pair_regular(g, [0, 1, 2], [3, 4, 5], "1/4")
    assert verdict["holds"]
    assert verdict["exhaustive"]


def test_half_pair_has_witness():
    g = reglab.Graph(8, [(0, 4), (0, 5), (1, 4), (1, 5)])
    verdict = reglab.check_pair_regular(g, [0, 1, 2, 3], [4, 5, 6, 7], Fraction(1, 4))
    assert not verdict["holds"]
    assert verdict["value"] >= Fraction(1, 4)


def test_hamiltonicity():
    assert reglab.hamilton_cycle(reglab.petersen_graph()) is None
    cyc = reglab.hamilton_cycle(reglab.complete_graph(5))
    assert sorted(cyc) == list(range(5))
    assert reglab.hamilton_cycle(reglab.haggkvist_graph(3)) is None


def test_chvatal_certificate():
    ok, index = reglab.certify(reglab.chvatal_extremal(8, 3), "chvatal")
    assert not ok
    assert index == 3


def test_turan_and_ramsey():
    value, witness = reglab.extremal_number(6, reglab.complete_graph(3))
    assert value == 9
    assert witness.edge_count() == 9
    assert reglab.ramsey_number(reglab.complete_graph(3)) == 6


def test_expander_and_rotation():
    ok, violator = reglab.is_robust_outexpander(reglab.complete_digraph(8), "1/8", "1/4")
    assert ok and violator is None
    d = reglab.random_digraph(30, 0.5, 7)
    cyc = reglab.rotation_hamilton(d)
    if cyc is not None:
        assert sorted(cyc) == list(range(30))


def test_partition_runs():
    run = reglab.regularity_partition(reglab.random_graph(20, 0.5, 1), "1/2", 2)
    assert run["increments_ok"]
    assert sum(len(c) for c in run["classes"]) == 20
