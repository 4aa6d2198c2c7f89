"""Runtime audit traces for the structural coloring procedures.

Every structural fact a colorer relies on is checked on the concrete vertex
sets and recorded as a step.  Steps carry enough data (a predicate kind, the
named sets, the named numbers) to re-evaluate them later against the graph,
which is what replay() does.  A failed hard step raises immediately; steps
marked soft record a "soft-gap" verdict and execution continues, since the
surrounding procedure still guarantees the final palette bound.

All vertex ids in a trace refer to the original input graph, no matter how
deep the recursion that produced the step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph, bits, mask_of

HOLDS = "holds"
SOFT_GAP = "soft-gap"
VIOLATED = "violated"


@dataclass(frozen=True)
class TraceStep:
    tag: str
    kind: str
    assertion: str
    verdict: str
    sets: tuple[tuple[str, tuple[int, ...]], ...] = ()
    numbers: tuple[tuple[str, int], ...] = ()

    def line(self) -> str:
        sets = ";".join(f"{k}={','.join(map(str, v))}" for k, v in self.sets)
        nums = ";".join(f"{k}={v}" for k, v in self.numbers)
        return "|".join((self.tag, self.kind, self.verdict, self.assertion, sets, nums))


class AuditViolation(RuntimeError):
    """A hard structural assertion failed at runtime."""

    def __init__(self, step: TraceStep, trace: "ProofTrace"):
        super().__init__(f"audit violated at {step.tag}: {step.assertion}")
        self.step = step
        self.trace = trace


def _mask(g: Graph, xs: Iterable[int]) -> int:
    m = mask_of(xs)
    if m >> g.n:
        raise ValueError("vertex id out of range in audit set")
    return m


def _components(g: Graph, m: int) -> list[int]:
    comps = []
    rest = m
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grown = comp
            for v in bits(frontier):
                grown |= g.rows[v] & m
            frontier = grown & ~comp
            comp = grown
        comps.append(comp)
        rest &= ~comp
    return comps


def _is_independent(g: Graph, m: int) -> bool:
    return all(g.rows[v] & m == 0 for v in bits(m))


def _is_clique(g: Graph, m: int) -> bool:
    return all(g.rows[v] & m == m & ~(1 << v) for v in bits(m))


def _clique_components(g: Graph, m: int) -> bool:
    return all(_is_clique(g, comp) for comp in _components(g, m))


def _has_triangle(g: Graph, m: int) -> bool:
    for v in bits(m):
        for w in bits(g.rows[v] & m):
            if w <= v:
                continue
            if g.rows[v] & g.rows[w] & m:
                return True
    return False


def _has_k1_union_k3(g: Graph, m: int) -> bool:
    for v in bits(m):
        for w in bits(g.rows[v] & m):
            if w <= v:
                continue
            for x in bits(g.rows[v] & g.rows[w] & m):
                lonely = m & ~g.rows[v] & ~g.rows[w] & ~g.rows[x]
                lonely &= ~(1 << v) & ~(1 << w) & ~(1 << x)
                if lonely:
                    return True
    return False


def evaluate_step(g: Graph, kind: str, sets: dict[str, tuple[int, ...]],
                  numbers: dict[str, int]) -> bool:
    """Re-evaluate one audit predicate against the graph."""
    if kind == "value-le":
        return numbers["value"] <= numbers["bound"]
    if kind == "empty-set":
        return len(sets["X"]) == 0
    x = _mask(g, sets["X"]) if "X" in sets else 0
    if kind == "independent":
        return _is_independent(g, x)
    if kind == "clique":
        return _is_clique(g, x)
    if kind == "p3-free":
        return _clique_components(g, x)
    if kind == "components-le-2":
        return all(c.bit_count() <= 2 for c in _components(g, x))
    if kind == "triangle-free":
        return not _has_triangle(g, x)
    if kind == "k1k3-absent":
        return not _has_k1_union_k3(g, x)
    if kind == "omega-le":
        from .exact import require_clique_number

        sub = g.induced(sets["X"])
        return require_clique_number(sub).lower <= numbers["bound"]
    y = _mask(g, sets["Y"]) if "Y" in sets else 0
    if kind == "anticomplete":
        return x & y == 0 and all(g.rows[v] & y == 0 for v in bits(x))
    if kind == "complete-between":
        return x & y == 0 and all(g.rows[v] & y == y for v in bits(x))
    if kind == "subset":
        return x & ~y == 0
    if kind == "sets-equal":
        return x == y
    raise ValueError(f"unknown audit kind {kind!r}")


class ProofTrace:
    """Ordered log of audited decomposition steps for one coloring run."""

    def __init__(self, label: str):
        self.label = label
        self.steps: list[TraceStep] = []

    def audit(
        self,
        g: Graph,
        tag: str,
        kind: str,
        assertion: str,
        sets: dict[str, Iterable[int]] | None = None,
        numbers: dict[str, int] | None = None,
        soft: bool = False,
    ) -> bool:
        """Evaluate a predicate, record the step, raise on hard failure."""
        frozen_sets = tuple(
            (name, tuple(sorted(vals))) for name, vals in (sets or {}).items()
        )
        frozen_nums = tuple((numbers or {}).items())
        ok = evaluate_step(g, kind, dict(frozen_sets), dict(frozen_nums))
        verdict = HOLDS if ok else (SOFT_GAP if soft else VIOLATED)
        step = TraceStep(tag, kind, assertion, verdict, frozen_sets, frozen_nums)
        self.steps.append(step)
        if verdict == VIOLATED:
            raise AuditViolation(step, self)
        return ok

    @property
    def holds_count(self) -> int:
        return sum(1 for s in self.steps if s.verdict == HOLDS)

    @property
    def soft_gap_count(self) -> int:
        return sum(1 for s in self.steps if s.verdict == SOFT_GAP)

    @property
    def violated_count(self) -> int:
        return sum(1 for s in self.steps if s.verdict == VIOLATED)

    def soft_gap_tags(self) -> list[str]:
        return [s.tag for s in self.steps if s.verdict == SOFT_GAP]

    def serialize(self) -> str:
        head = f"trace|{self.label}|steps={len(self.steps)}"
        return "\n".join([head] + [s.line() for s in self.steps]) + "\n"


def replay(g: Graph, trace: ProofTrace) -> list[TraceStep]:
    """Re-evaluate every step against the graph; return the mismatches.

    A step replays cleanly when re-evaluation agrees with the recorded
    verdict: holds-steps still hold, soft-gap steps still fail.
    """
    bad = []
    for step in trace.steps:
        ok = evaluate_step(g, step.kind, dict(step.sets), dict(step.numbers))
        if ok != (step.verdict == HOLDS):
            bad.append(step)
    return bad
