"""DIMACS and graph6 reading, writing, and round-trip identity."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chibound import (
    Graph,
    GraphParseError,
    complete,
    cycle,
    dumps,
    gnp,
    loads,
    named_graph,
    read_dimacs,
    read_graph,
    read_graph6,
    write_dimacs,
    write_graph,
    write_graph6,
)

from oracles import decode_graph6_reference


class TestDimacs:
    def test_reads_k3(self):
        text = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
        g = read_dimacs(text)
        assert g.n == 3 and g.edge_count == 3

    def test_tolerates_comments_and_blank_lines(self):
        text = "c a comment\n\np edge 2 1\nc another\ne 1 2\n"
        g = read_dimacs(text)
        assert g.n == 2 and g.edge_count == 1

    def test_write_then_read_identity(self):
        g = named_graph("grotzsch")
        assert list(read_dimacs(write_dimacs(g)).edges()) == list(g.edges())

    def test_write_is_canonical_fixpoint(self):
        g = cycle(6)
        once = write_dimacs(g)
        assert write_dimacs(read_dimacs(once)) == once

    def test_errors_carry_position(self):
        with pytest.raises(GraphParseError, match="line 1"):
            read_dimacs("q edge 1 0\n")
        with pytest.raises(GraphParseError, match="line 2"):
            read_dimacs("p edge 2 1\ne 1 5\n")
        with pytest.raises(GraphParseError):
            read_dimacs("e 1 2\n")


class TestGraph6:
    def test_known_small_encoding(self):
        g = read_graph6("D?{")
        assert g.n == 5
        assert write_graph6(g) == "D?{"

    def test_header_prefix_accepted(self):
        assert read_graph6(">>graph6<<D?{").n == 5

    def test_reference_decoder_agreement_small(self):
        for seed in range(40):
            g = gnp(1 + seed % 11, 0.4, seed)
            line = write_graph6(g)
            n, edges = decode_graph6_reference(line)
            assert n == g.n
            assert edges == set(g.edges())

    def test_reference_decoder_agreement_large_order(self):
        g = gnp(70, 0.05, 3)
        line = write_graph6(g)
        n, edges = decode_graph6_reference(line)
        assert (n, edges) == (g.n, set(g.edges()))

    def test_four_byte_size_form(self):
        g = Graph(100, [(0, 99)])
        line = write_graph6(g)
        assert line.startswith("~")
        back = read_graph6(line)
        assert back.n == 100 and list(back.edges()) == [(0, 99)]

    def test_eight_byte_size_form_rejected(self):
        with pytest.raises(GraphParseError):
            read_graph6("~~" + "?" * 10)

    def test_padding_must_be_zero(self):
        # C5 fills 10 of 12 bit slots, so the final group ends in two
        # padding bits; setting the lowest one must be rejected.
        line = write_graph6(cycle(5))
        group = ord(line[-1]) - 63
        assert group & 1 == 0
        corrupted = line[:-1] + chr(63 + (group | 1))
        with pytest.raises(GraphParseError):
            read_graph6(corrupted)

    def test_out_of_range_byte_rejected(self):
        with pytest.raises(GraphParseError):
            read_graph6("D?\x1f")


class TestFileLevel:
    def test_extension_detection(self, tmp_path):
        g = named_graph("kite")
        for name in ("g.col", "g.dimacs", "g.g6", "g.graph6"):
            p = tmp_path / name
            write_graph(g, p)
            back = read_graph(p)
            assert list(back.edges()) == list(g.edges())

    def test_unknown_extension_needs_fmt(self, tmp_path):
        p = tmp_path / "g.xyz"
        with pytest.raises(ValueError):
            write_graph(complete(3), p)
        write_graph(complete(3), p, fmt="graph6")
        assert read_graph(p, fmt="graph6").edge_count == 3

    def test_dumps_loads_both_formats(self):
        g = cycle(7)
        for fmt in ("dimacs", "graph6"):
            assert list(loads(dumps(g, fmt), fmt).edges()) == list(g.edges())


class TestRoundTripProperty:
    @given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=0, max_value=14))
    @settings(max_examples=80, deadline=None)
    def test_seeded_round_trips(self, seed, n):
        g = gnp(n, 0.35, seed)
        for fmt in ("dimacs", "graph6"):
            back = loads(dumps(g, fmt), fmt)
            assert back.n == g.n
            assert list(back.edges()) == list(g.edges())
