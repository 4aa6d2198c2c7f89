"""Audit-step evaluation, trace recording, and replay."""

import pytest

from chibound import (
    AuditViolation,
    ProofTrace,
    complete,
    cycle,
    disjoint_union,
    empty,
    evaluate_step,
    named_graph,
    path,
    replay,
)


def _eval(g, kind, sets=None, numbers=None):
    frozen = {k: tuple(v) for k, v in (sets or {}).items()}
    return evaluate_step(g, kind, frozen, numbers or {})


class TestEvaluateStep:
    def test_value_le(self):
        g = empty(1)
        assert _eval(g, "value-le", numbers={"value": 4, "bound": 4})
        assert not _eval(g, "value-le", numbers={"value": 5, "bound": 4})

    def test_empty_set(self):
        g = empty(3)
        assert _eval(g, "empty-set", sets={"X": []})
        assert not _eval(g, "empty-set", sets={"X": [1]})

    def test_independent(self):
        g = cycle(5)
        assert _eval(g, "independent", sets={"X": [0, 2]})
        assert not _eval(g, "independent", sets={"X": [0, 1]})
        assert _eval(g, "independent", sets={"X": []})

    def test_clique(self):
        g = complete(4)
        assert _eval(g, "clique", sets={"X": [0, 1, 3]})
        assert not _eval(cycle(4), "clique", sets={"X": [0, 1, 2]})

    def test_p3_free_means_clique_components(self):
        two_triangles = disjoint_union(complete(3), complete(3))
        assert _eval(two_triangles, "p3-free", sets={"X": range(6)})
        assert not _eval(path(3), "p3-free", sets={"X": [0, 1, 2]})

    def test_components_le_2(self):
        g = disjoint_union(complete(2), empty(2))
        assert _eval(g, "components-le-2", sets={"X": range(4)})
        assert not _eval(path(3), "components-le-2", sets={"X": [0, 1, 2]})

    def test_triangle_free(self):
        assert _eval(cycle(5), "triangle-free", sets={"X": range(5)})
        assert not _eval(complete(3), "triangle-free", sets={"X": [0, 1, 2]})
        # The triangle must live inside X, not just in the graph.
        g = disjoint_union(complete(3), empty(2))
        assert _eval(g, "triangle-free", sets={"X": [0, 1, 3, 4]})

    def test_k1k3_absent(self):
        g = disjoint_union(complete(3), empty(1))
        assert not _eval(g, "k1k3-absent", sets={"X": range(4)})
        assert _eval(g, "k1k3-absent", sets={"X": [0, 1, 2]})
        assert _eval(complete(4), "k1k3-absent", sets={"X": range(4)})

    def test_omega_le(self):
        g = named_graph("grotzsch")
        assert _eval(g, "omega-le", sets={"X": range(11)}, numbers={"bound": 2})
        assert not _eval(g, "omega-le", sets={"X": range(11)}, numbers={"bound": 1})

    def test_anticomplete(self):
        g = path(4)
        assert _eval(g, "anticomplete", sets={"X": [0], "Y": [2, 3]})
        assert not _eval(g, "anticomplete", sets={"X": [0], "Y": [1]})
        # Overlapping sets never count as anticomplete.
        assert not _eval(empty(3), "anticomplete", sets={"X": [0], "Y": [0, 2]})

    def test_complete_between(self):
        g = complete(4)
        assert _eval(g, "complete-between", sets={"X": [0, 1], "Y": [2, 3]})
        assert not _eval(path(3), "complete-between", sets={"X": [0], "Y": [2]})
        assert not _eval(complete(3), "complete-between", sets={"X": [0], "Y": [0, 1]})

    def test_subset_and_sets_equal(self):
        g = empty(5)
        assert _eval(g, "subset", sets={"X": [1, 2], "Y": [0, 1, 2]})
        assert not _eval(g, "subset", sets={"X": [3], "Y": [0, 1]})
        assert _eval(g, "sets-equal", sets={"X": [2, 4], "Y": [4, 2]})
        assert not _eval(g, "sets-equal", sets={"X": [2], "Y": [2, 4]})

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError, match="unknown audit kind"):
            _eval(empty(2), "majority-vote", sets={"X": [0]})

    def test_out_of_range_vertex_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            _eval(empty(2), "independent", sets={"X": [5]})


class TestProofTrace:
    def test_holds_step_recorded(self):
        g = cycle(5)
        trace = ProofTrace("Demo")
        ok = trace.audit(g, "root/indep", "independent",
                         "chosen set is independent", sets={"X": [2, 0]})
        assert ok
        step = trace.steps[0]
        assert step.verdict == "holds"
        assert step.sets == (("X", (0, 2)),)
        assert trace.holds_count == 1
        assert trace.soft_gap_count == 0

    def test_soft_failure_continues(self):
        g = cycle(5)
        trace = ProofTrace("Demo")
        ok = trace.audit(g, "root/padding", "independent",
                         "palette slack stays tight", sets={"X": [0, 1]}, soft=True)
        assert not ok
        assert trace.steps[0].verdict == "soft-gap"
        assert trace.soft_gap_tags() == ["root/padding"]
        assert trace.violated_count == 0

    def test_hard_failure_raises(self):
        g = cycle(5)
        trace = ProofTrace("Demo")
        with pytest.raises(AuditViolation) as exc:
            trace.audit(g, "root/bad", "clique", "span forms a clique",
                        sets={"X": [0, 1, 2]})
        assert exc.value.step.tag == "root/bad"
        assert exc.value.step.verdict == "violated"
        assert exc.value.trace is trace
        assert "root/bad" in str(exc.value)
        assert trace.violated_count == 1

    def test_serialize_shape(self):
        g = cycle(5)
        trace = ProofTrace("Demo")
        trace.audit(g, "a", "independent", "first", sets={"X": [0, 2]})
        trace.audit(g, "b", "value-le", "second",
                    numbers={"value": 1, "bound": 3})
        text = trace.serialize()
        lines = text.splitlines()
        assert lines[0] == "trace|Demo|steps=2"
        assert lines[1] == "a|independent|holds|first|X=0,2|"
        assert lines[2] == "b|value-le|holds|second||value=1;bound=3"
        assert text.endswith("\n")


class TestReplay:
    def _trace_on_cycle(self):
        g = cycle(5)
        trace = ProofTrace("Demo")
        trace.audit(g, "ok/indep", "independent", "holds here",
                    sets={"X": [0, 2]})
        trace.audit(g, "gap/indep", "independent", "soft here",
                    sets={"X": [0, 1]}, soft=True)
        return g, trace

    def test_clean_replay(self):
        g, trace = self._trace_on_cycle()
        assert replay(g, trace) == []

    def test_mismatch_when_holds_step_breaks(self):
        _, trace = self._trace_on_cycle()
        bad = replay(complete(5), trace)
        assert [s.tag for s in bad] == ["ok/indep"]

    def test_mismatch_when_soft_gap_starts_holding(self):
        _, trace = self._trace_on_cycle()
        bad = replay(empty(5), trace)
        assert [s.tag for s in bad] == ["gap/indep"]
