"""Induced-pattern detection and hereditary class membership."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chibound import (
    CLASSES,
    PATTERNS,
    Pattern,
    class_by_name,
    complete,
    count_induced,
    cycle,
    disjoint_union,
    embedding_is_induced,
    expansion,
    find_induced,
    gnp,
    is_member,
    named_graph,
    path,
    pattern_by_name,
)

from oracles import brute_find_induced


class TestFindInduced:
    def test_c5_has_no_p3_union_p2(self):
        assert find_induced(cycle(5), PATTERNS["p3_union_p2"]) is None

    def test_kite_contains_diamond(self):
        emb = find_induced(named_graph("kite"), PATTERNS["diamond"])
        assert emb is not None
        assert embedding_is_induced(named_graph("kite"), PATTERNS["diamond"], emb)

    def test_grotzsch_is_triangle_free(self):
        assert find_induced(named_graph("grotzsch"), PATTERNS["k3"]) is None

    def test_witnesses_satisfy_induced_condition(self):
        host = named_graph("schlafli_complement")
        for name in ("k3", "c5", "p3_union_p2", "kite"):
            pattern = PATTERNS[name]
            emb = find_induced(host, pattern)
            if emb is not None:
                assert embedding_is_induced(host, pattern, emb)

    def test_pattern_order_cap(self):
        with pytest.raises(ValueError):
            Pattern("too-big", complete(9))

    def test_agrees_with_oracle_on_catalog_hosts(self):
        hosts = [named_graph(name) for name in ("kite", "hammer", "gem", "house", "w4")]
        for host in hosts:
            for pattern in PATTERNS.values():
                if pattern.graph.n > host.n:
                    continue
                mine = find_induced(host, pattern)
                oracle = brute_find_induced(host, pattern.graph)
                assert (mine is None) == (oracle is None), (host.name, pattern.name)

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_oracle_on_random_hosts(self, seed):
        host = gnp(6, 0.45, seed)
        for name in ("p3", "k3", "p3_union_p2", "diamond", "c5"):
            pattern = PATTERNS[name]
            mine = find_induced(host, pattern)
            oracle = brute_find_induced(host, pattern.graph)
            assert (mine is None) == (oracle is None), name
            if mine is not None:
                assert embedding_is_induced(host, pattern, mine)


class TestMembership:
    def test_schlafli_is_k4_free(self):
        assert is_member(named_graph("schlafli_complement"), CLASSES["K4Free"])

    def test_grotzsch_expansions_are_kite_free(self):
        g = named_graph("grotzsch")
        assert is_member(g, CLASSES["KiteFree"])
        doubled = expansion(complete(2), [g, g])
        assert is_member(doubled, CLASSES["KiteFree"])

    def test_c5_rejected_with_identity_witness(self):
        verdict = is_member(cycle(5), CLASSES["C5Free"])
        assert not verdict
        assert verdict.witness is not None
        assert verdict.witness.pattern == "c5"
        assert sorted(verdict.witness.vertices) == [0, 1, 2, 3, 4]

    def test_hereditary_consistency(self):
        g = named_graph("schlafli_complement")
        spec = CLASSES["K4Free"]
        assert is_member(g, spec)
        for pick in ([0, 3, 5, 9, 12, 20], [1, 2, 4, 8, 16], list(range(14))):
            assert is_member(g.induced(pick), spec)

    def test_class_by_name_normalizes(self):
        assert class_by_name("kitefree").name == "KiteFree"
        assert class_by_name("K4-Free").name == "K4Free"
        assert class_by_name("p2_k3_free").name == "P2K3Free"
        with pytest.raises(ValueError):
            class_by_name("cographs")

    def test_every_class_lists_its_patterns(self):
        assert {p.name for p in CLASSES["TriangleFree"].forbidden} == {
            "p3_union_p2",
            "k3",
        }
        for name, spec in CLASSES.items():
            assert spec.forbidden, name


class TestCountInduced:
    def test_k3_in_k4(self):
        assert count_induced(complete(4), PATTERNS["k3"]) == 4

    def test_k3_in_2k3(self):
        assert count_induced(named_graph("2k3"), PATTERNS["k3"]) == 2

    def test_c5_in_grotzsch_positive(self):
        assert count_induced(named_graph("grotzsch"), PATTERNS["c5"]) > 0

    def test_cap_truncates(self):
        assert count_induced(complete(6), PATTERNS["k3"], cap=5) == 5

    def test_counts_vertex_sets_not_maps(self):
        assert count_induced(path(3), PATTERNS["p3"]) == 1


class TestPatternByName:
    def test_lookup_and_errors(self):
        assert pattern_by_name("kite").graph.n == 5
        assert pattern_by_name("P3_UNION_P2").name == "p3_union_p2"
        with pytest.raises(ValueError):
            pattern_by_name("heptagon")

    def test_catalog_patterns_match_named_graphs(self):
        for name in ("kite", "hammer", "diamond", "gem", "house"):
            assert list(pattern_by_name(name).graph.edges()) == list(
                named_graph(name).edges()
            )
