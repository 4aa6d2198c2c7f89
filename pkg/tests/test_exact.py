"""Exact clique and chromatic solvers against brute-force oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chibound import (
    BudgetExhausted,
    Coloring,
    SolveBudget,
    chromatic_number,
    clique_number,
    complete,
    cycle,
    empty,
    gnp,
    greedy_coloring,
    join,
    k_colorable,
    named_graph,
    require_chromatic,
    require_clique_number,
    verify_coloring,
)

from oracles import brute_chromatic_number, brute_clique_number


class TestCliqueNumber:
    def test_named_values(self):
        assert clique_number(named_graph("grotzsch")).value == 2
        assert clique_number(complete(5)).value == 5
        assert clique_number(named_graph("schlafli_complement")).value == 3

    def test_witness_is_a_clique(self):
        res = clique_number(named_graph("schlafli_complement"))
        g = named_graph("schlafli_complement")
        assert len(res.vertices) == 3
        for i, u in enumerate(res.vertices):
            for v in res.vertices[i + 1 :]:
                assert g.has_edge(u, v)

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=50, deadline=None)
    def test_matches_oracle(self, seed):
        g = gnp(6, 0.5, seed)
        assert clique_number(g).value == brute_clique_number(g)


class TestKColorable:
    def test_named_values(self):
        assert k_colorable(complete(4), 3).status == "uncolorable"
        assert k_colorable(cycle(5), 3).status == "colorable"
        grotzsch = named_graph("grotzsch")
        assert k_colorable(grotzsch, 3).status == "uncolorable"
        found = k_colorable(grotzsch, 4)
        assert found.status == "colorable"
        assert verify_coloring(grotzsch, found.coloring) is None

    def test_zero_colors(self):
        assert k_colorable(empty(0), 0).status == "colorable"
        assert k_colorable(complete(1), 0).status == "uncolorable"

    def test_budget_exhaustion_is_unknown(self):
        g = join(named_graph("grotzsch"), named_graph("grotzsch"))
        res = k_colorable(g, 7, SolveBudget(node_limit=5, time_limit=60))
        assert res.status == "unknown"


class TestChromaticNumber:
    def test_named_values(self):
        assert chromatic_number(cycle(5)).value == 3
        assert chromatic_number(named_graph("schlafli_complement")).value == 6
        doubled = join(named_graph("grotzsch"), named_graph("grotzsch"))
        assert chromatic_number(doubled).value == 8

    def test_empty_graph(self):
        res = chromatic_number(empty(0))
        assert res.value == 0 and res.coloring is not None

    def test_witness_is_proper_and_tight(self):
        g = named_graph("grotzsch")
        res = chromatic_number(g)
        assert res.value == 4
        assert res.coloring is not None
        assert verify_coloring(g, res.coloring) is None
        assert res.coloring.palette == 4

    def test_bounds_on_exhaustion(self):
        g = join(named_graph("grotzsch"), named_graph("grotzsch"))
        res = chromatic_number(g, SolveBudget(node_limit=10, time_limit=60))
        assert not res.complete
        assert res.lower <= 8 <= res.upper
        with pytest.raises(BudgetExhausted):
            require_chromatic(g, SolveBudget(node_limit=10, time_limit=60))
        with pytest.raises(BudgetExhausted):
            require_clique_number(g, SolveBudget(node_limit=2, time_limit=60))

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=40, deadline=None)
    def test_matches_oracle(self, seed):
        g = gnp(6, 0.5, seed)
        assert chromatic_number(g).value == brute_chromatic_number(g)

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=30, deadline=None)
    def test_sandwich_and_monotonicity(self, seed):
        g = gnp(7, 0.5, seed)
        omega = clique_number(g).value
        chi = chromatic_number(g).value
        assert omega <= chi
        sub = g.induced([0, 2, 4, 6])
        assert chromatic_number(sub).value <= chi

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=25, deadline=None)
    def test_join_additivity(self, seed):
        g = gnp(5, 0.5, seed)
        h = gnp(5, 0.5, seed + 1)
        j = join(g, h)
        assert (
            chromatic_number(j).value
            == chromatic_number(g).value + chromatic_number(h).value
        )
        assert clique_number(j).value == clique_number(g).value + clique_number(h).value


class TestVerifyAndGreedy:
    def test_verify_examples(self):
        k3 = complete(3)
        assert verify_coloring(k3, Coloring((0, 1, 2))) is None
        assert verify_coloring(k3, Coloring((0, 0, 1))) == (0, 1)
        with pytest.raises(ValueError):
            verify_coloring(k3, Coloring((0, 1)))

    def test_greedy_examples(self):
        assert greedy_coloring(complete(5)).palette == 5
        assert greedy_coloring(empty(4)).palette == 1
        assert greedy_coloring(cycle(5)).palette == 3

    def test_greedy_needs_permutation(self):
        with pytest.raises(ValueError):
            greedy_coloring(complete(3), order=[0, 1])

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=40, deadline=None)
    def test_greedy_always_proper(self, seed):
        g = gnp(9, 0.4, seed)
        assert verify_coloring(g, greedy_coloring(g)) is None


class TestBudgetValidation:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SolveBudget(node_limit=0)
        with pytest.raises(ValueError):
            SolveBudget(time_limit=0)
