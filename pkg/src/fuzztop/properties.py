"""Deciders for compactness, connectedness, separation axioms and topology equality.

Conventions (fixed in :mod:`fuzztop.fuzzcore`): a crisp element is *in* an
open set when its grade is 1 and *avoids* a closed set when its grade is 0;
containment is pointwise ``<=``; disjoint means pointwise min identically 0;
a cover has pointwise sup identically 1.

Chain topologies are decided from their grade laws and then re-decided on
the materialized window by the generic explicit deciders; a disagreement
raises :class:`~fuzztop.errors.ConsistencyError`.  The one exception is
compactness of the increasing ``tau1_complement`` chain, which no finite
window can represent faithfully.

T0 is decided over a finite grid of degrees: every grade occurring in the
(windowed) topology, the midpoints between consecutive occurring grades,
and 1.  Membership of a fuzzy point only depends on comparisons with
occurring grades, so the grid is exhaustive for the windowed family.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Union

from .constructions import (
    TAU1C,
    ChainFamily,
    ExplicitTopology,
    default_window,
    materialize_chain,
)
from .errors import ConsistencyError, InputError, PreconditionError
from .fuzzcore import (
    ONE,
    ZERO,
    FuzzyPoint,
    FuzzySet,
    complement,
    disjoint,
    leq,
    union_all,
)

__all__ = [
    "Verdict",
    "PropertyReport",
    "T0_MODES",
    "is_cover",
    "has_finite_subcover",
    "is_compact",
    "is_connected",
    "is_t0",
    "is_regular",
    "is_normal",
    "is_lindelof",
    "topologies_equal",
    "property_report",
    "degree_grid",
]

Topology = Union[ChainFamily, ExplicitTopology]

T0_MODES = ("crisp", "paper_fuzzy_pair", "fuzzy_full")
SUBCOVER_SEARCH_CAP = 12


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: Any = None
    justification: str | None = None

    def __bool__(self) -> bool:
        return self.value


def _sets(*sets: FuzzySet) -> list[list[str]]:
    return [s.to_strings() for s in sets]


def _point(x: int, p: Fraction) -> list:
    return FuzzyPoint(x, p).to_json()


def _window(t: ChainFamily, window: int | None) -> int:
    w = default_window(t.carrier) if window is None else window
    if w < t.min_window():
        raise PreconditionError(
            f"window {w} is too small for this chain; at least {t.min_window()} is needed"
        )
    return w


def _agree(name: str, symbolic: Verdict, explicit: Verdict) -> Verdict:
    if symbolic.value != explicit.value:
        raise ConsistencyError(
            f"{name}: symbolic verdict {symbolic.value} but windowed verdict {explicit.value}"
        )
    return symbolic


# ---------------------------------------------------------------- covers / compactness


def is_cover(t: Topology, family: Iterable[FuzzySet]) -> bool:
    family = list(family)
    for s in family:
        if not t.contains(s):
            raise InputError(f"{s} is not open in the given topology")
    return union_all(t.carrier, family).is_whole()


def has_finite_subcover(cover: list[FuzzySet]) -> list[FuzzySet] | None:
    """An irredundant subcover of a finite cover (None when ``cover`` is not a cover)."""
    if not cover or not union_all(cover[0].carrier, cover).is_whole():
        return None
    kept = list(cover)
    for s in list(cover):
        rest = [r for r in kept if r is not s]
        if rest and union_all(s.carrier, rest).is_whole():
            kept = rest
    return kept


def _irredundant(masks: list[int], full: int) -> list[int]:
    kept = list(masks)
    for m in masks:
        rest = list(kept)
        rest.remove(m)
        acc = 0
        for r in rest:
            acc |= r
        if rest and acc == full:
            kept = rest
    return kept


def _explicit_compact(t: ExplicitTopology) -> Verdict:
    sub = has_finite_subcover(list(t.opens))
    if sub is None:  # pragma: no cover - X is always open
        raise ConsistencyError("explicit topology does not cover X")
    if len(t) <= SUBCOVER_SEARCH_CAP:
        # a finite family covers iff every point reaches grade 1 in some member,
        # so covers are decided on bitmasks of grade-1 points
        full = (1 << t.carrier.size) - 1
        masks = [sum(1 << x for x, g in enumerate(s.grades) if g == 1) for s in t.opens]
        for bits in range(1, 1 << len(masks)):
            chosen = [m for i, m in enumerate(masks) if bits >> i & 1]
            acc = 0
            for m in chosen:
                acc |= m
            if acc == full:
                sub_masks = _irredundant(chosen, full)
                acc = 0
                for m in sub_masks:
                    acc |= m
                if acc != full:  # pragma: no cover
                    raise ConsistencyError("finite cover without a finite subcover")
    return Verdict(
        True,
        justification=f"finitely many opens ({len(t)}); e.g. finite subcover {_sets(*sub)}",
    )


def is_compact(t: Topology, window: int | None = None) -> Verdict:
    if isinstance(t, ExplicitTopology):
        return _explicit_compact(t)
    w = _window(t, window)
    if t.kind == TAU1C:
        if t.is_finite():  # pragma: no cover - coratio laws are never finite
            return Verdict(True, justification="finite chain")
        return Verdict(
            False,
            witness={
                "cover": "{B_n : n >= 2}",
                "reason": "pointwise sup of (n-1)/n is 1, every finite subfamily has sup (N-1)/N < 1",
            },
        )
    b1 = t.member(1)
    if not b1.is_whole():  # pragma: no cover
        raise ConsistencyError("decreasing chain with B_1 != X")
    sym = Verdict(True, justification="B_1 = X, so {B_1} is a finite subcover of every cover")
    return _agree("compact", sym, _explicit_compact(materialize_chain(t, w)))


# ---------------------------------------------------------------- connectedness


def _explicit_connected(t: ExplicitTopology) -> Verdict:
    nonempty = [s for s in t.opens if not s.is_empty()]
    for i, u in enumerate(nonempty):
        for v in nonempty[i + 1 :]:
            if disjoint(u, v) and union_all(t.carrier, (u, v)).is_whole():
                return Verdict(False, witness={"pair": _sets(u, v)})
    return Verdict(True, justification="no pair of disjoint nonempty opens has union X")


def is_connected(t: Topology, window: int | None = None) -> Verdict:
    if isinstance(t, ExplicitTopology):
        return _explicit_connected(t)
    w = _window(t, window)
    why = (
        "nonempty opens are uniform positive sets or X"
        if t.kind == TAU1C
        else "every nonempty open is positive at every point, so no two are disjoint"
    )
    return _agree("connected", Verdict(True, justification=why), _explicit_connected(materialize_chain(t, w)))


# ---------------------------------------------------------------- T0


def degree_grid(grades: Iterable[Fraction]) -> list[Fraction]:
    """Positive occurring grades, midpoints between consecutive grades, and 1."""
    g = sorted(set(grades) | {ZERO, ONE})
    grid = set(x for x in g if x > 0)
    grid.update((a + b) / 2 for a, b in zip(g, g[1:]))
    return sorted(grid)


def _first_collision(points: list[tuple[int, Fraction]], signature, same_degree: bool):
    """Least pair of distinct points with equal membership signature."""
    best = None
    groups: dict = {}
    for pt in points:
        groups.setdefault(signature(pt), []).append(pt)
    for members in groups.values():
        if same_degree:
            by_degree: dict = {}
            for x, p in members:
                by_degree.setdefault(p, []).append((x, p))
            candidates = [sorted(v)[:2] for v in by_degree.values() if len({x for x, _ in v}) > 1]
        else:
            candidates = [sorted(members)[:2]] if len(members) > 1 else []
        for pair in candidates:
            if best is None or pair < best:
                best = pair
    return best


def _t0_from_signatures(n: int, grid: list[Fraction], mode: str, signature) -> Verdict:
    points = [(x, p) for x in range(n) for p in grid]
    clash = _first_collision(points, signature, same_degree=mode == "paper_fuzzy_pair")
    if clash is None:
        return Verdict(True, justification=f"every pair of distinct points is separated ({mode})")
    (x, p), (y, q) = clash
    return Verdict(False, witness={"points": [_point(x, p), _point(y, q)]})


def _explicit_t0(t: ExplicitTopology, mode: str) -> Verdict:
    n = t.carrier.size
    if mode == "crisp":
        for x, y in itertools.combinations(range(n), 2):
            if all(u[x] == u[y] for u in t.opens):
                return Verdict(False, witness={"elements": [x, y]})
        return Verdict(True, justification="every pair of elements has an open with different grades")
    grid = degree_grid(t.grade_set())
    return _t0_from_signatures(
        n, grid, mode, lambda pt: tuple(u[pt[0]] >= pt[1] for u in t.opens)
    )


def _chain_count(t: ChainFamily, x: int, p: Fraction, w: int) -> int:
    """Number of opens of the windowed chain containing the fuzzy point (x, p)."""
    law = t.laws[x]
    if law.kind == "one":
        return w
    if law.kind == "ratio":
        return min(w, math.floor(Fraction(law.j) / p))
    if law.kind == "coratio":
        # (n-1)/n >= p  <=>  n >= 1/(1-p);  plus X itself
        if p == 1:
            return 1
        first = math.ceil(1 / (ONE - p))
        return max(0, w - max(first, 1) + 1) + 1
    return 0


def _chain_t0(t: ChainFamily, mode: str, w: int) -> Verdict:
    n = t.carrier.size
    if mode == "crisp":
        for x, y in itertools.combinations(range(n), 2):
            if t.laws[x] == t.laws[y]:
                return Verdict(False, witness={"elements": [x, y]})
        return Verdict(True, justification="grade laws are pairwise distinct")
    grades = {law.at(m) for law in t.laws for m in range(1, w + 1)}
    if t.kind == TAU1C:
        grades.add(ONE)
    grid = degree_grid(grades)
    # memberships along a chain are nested, so the count determines the signature
    return _t0_from_signatures(n, grid, mode, lambda pt: _chain_count(t, pt[0], pt[1], w))


def is_t0(t: Topology, mode: str = "paper_fuzzy_pair", window: int | None = None) -> Verdict:
    """T0 under ``mode``.

    ``crisp``: distinct elements are told apart by some open's grades.
    ``paper_fuzzy_pair``: for distinct elements x, y and every grid degree p,
    some open contains exactly one of (x, p), (y, p).
    ``fuzzy_full``: the same for every pair of distinct fuzzy points.
    """
    if mode not in T0_MODES:
        raise InputError(f"unknown T0 mode {mode!r}")
    if isinstance(t, ExplicitTopology):
        return _explicit_t0(t, mode)
    w = _window(t, window)
    return _agree(f"t0[{mode}]", _chain_t0(t, mode, w), _explicit_t0(materialize_chain(t, w), mode))


# ---------------------------------------------------------------- regular / normal


def _explicit_regular(t: ExplicitTopology) -> Verdict:
    opens = t.opens
    for x in t.carrier:
        nbhds = [u for u in opens if u[x] == 1]
        for g in opens:
            if g[x] != 1 or g.is_whole():
                continue
            closed = complement(g)
            hulls = [v for v in opens if leq(closed, v)]
            if not any(disjoint(u, v) for u in nbhds for v in hulls):
                return Verdict(False, witness={"element": x, "closed": closed.to_strings()})
    return Verdict(True, justification="every point is separated from every closed set avoiding it")


def _chain_regular(t: ChainFamily) -> Verdict:
    if t.kind == TAU1C:
        return Verdict(True, justification="no proper open has a grade-1 point, so no closed set avoids a point")
    for x in t.carrier:
        for n in range(1, t.min_window() + 1):
            b = t.member(n)
            if not b.is_whole() and b[x] == 1:
                return Verdict(False, witness={"element": x, "closed": complement(b).to_strings()})
    return Verdict(True, justification="no proper member of the chain reaches grade 1")


def is_regular(t: Topology, window: int | None = None) -> Verdict:
    if isinstance(t, ExplicitTopology):
        return _explicit_regular(t)
    w = _window(t, window)
    return _agree("regular", _chain_regular(t), _explicit_regular(materialize_chain(t, w)))


def _explicit_normal(t: ExplicitTopology) -> Verdict:
    closed = sorted(
        (complement(u) for u in t.opens if not u.is_whole()), key=lambda s: s.key()
    )
    hulls = {c.grades: [u for u in t.opens if leq(c, u)] for c in closed}
    for i, a in enumerate(closed):
        for b in closed[i + 1 :]:
            if not disjoint(a, b):
                continue
            if not any(disjoint(u, v) for u in hulls[a.grades] for v in hulls[b.grades]):
                return Verdict(False, witness={"closed": _sets(a, b)})
    return Verdict(True, justification="every disjoint pair of nonempty closed sets is separated")


def is_normal(t: Topology, window: int | None = None) -> Verdict:
    if isinstance(t, ExplicitTopology):
        return _explicit_normal(t)
    w = _window(t, window)
    sym = Verdict(True, justification="closed sets form a chain, so no two nonempty ones are disjoint")
    return _agree("normal", sym, _explicit_normal(materialize_chain(t, w)))


def is_lindelof(t: Topology, window: int | None = None) -> Verdict:
    if isinstance(t, ExplicitTopology):
        n = len(t.basis) if t.basis is not None else len(t)
        return Verdict(True, justification=f"finite basis of {n} sets")
    return Verdict(True, justification="countable basis {B_n : n in N}")


# ---------------------------------------------------------------- equality


def _chain_subset(a: ChainFamily, b: Topology) -> FuzzySet | None:
    """Least member of chain ``a``'s topology that is not open in ``b``."""
    if isinstance(b, ChainFamily):
        n = b.first_outside(a.laws)
        if n is not None:
            return a.member(n)
        return None
    if a.is_finite():
        cand = [a.member(1)]
    else:
        # infinitely many distinct members cannot fit in a finite topology
        cand = (a.member(n) for n in itertools.count(1))
    for s in cand:
        if not b.contains(s):
            return s
    return None


def _explicit_subset(a: ExplicitTopology, b: Topology) -> FuzzySet | None:
    for s in a.opens:
        if not b.contains(s):
            return s
    return None


def _subset(a: Topology, b: Topology) -> FuzzySet | None:
    if isinstance(a, ChainFamily):
        extra = [FuzzySet.whole(a.carrier)] if a.kind == TAU1C else []
        for s in extra:
            if not b.contains(s):
                return s
        return _chain_subset(a, b)
    return _explicit_subset(a, b)


def topologies_equal(a: Topology, b: Topology, window: int | None = None) -> Verdict:
    if a.carrier != b.carrier:
        raise InputError("topologies live on different carriers")
    missing = _subset(a, b)
    side = "left"
    if missing is None:
        missing = _subset(b, a)
        side = "right"
    sym = (
        Verdict(True, justification="each topology is contained in the other")
        if missing is None
        else Verdict(False, witness={"open": missing.to_strings(), "only_in": side})
    )

    chains = [t for t in (a, b) if isinstance(t, ChainFamily)]
    if chains:
        w = max(_window(c, window) for c in chains)
        ea = materialize_chain(a, w) if isinstance(a, ChainFamily) else a
        eb = materialize_chain(b, w) if isinstance(b, ChainFamily) else b
        windowed = ea.key_set() == eb.key_set()
        if windowed != sym.value:
            raise ConsistencyError("equality: symbolic and windowed verdicts disagree")
    return sym


# ---------------------------------------------------------------- report


@dataclass(frozen=True)
class PropertyReport:
    compact: bool
    connected: bool
    t0: dict[str, bool]
    regular: bool
    normal: bool
    lindelof: bool
    witnesses: dict[str, Any] = field(default_factory=dict)
    justifications: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "compact": self.compact,
            "connected": self.connected,
            "t0": dict(self.t0),
            "regular": self.regular,
            "normal": self.normal,
            "lindelof": self.lindelof,
            "witnesses": dict(sorted(self.witnesses.items())),
            "justifications": dict(sorted(self.justifications.items())),
        }


def property_report(t: Topology, window: int | None = None) -> PropertyReport:
    verdicts = {
        "compact": is_compact(t, window),
        "connected": is_connected(t, window),
        "regular": is_regular(t, window),
        "normal": is_normal(t, window),
        "lindelof": is_lindelof(t, window),
    }
    for mode in T0_MODES:
        verdicts[f"t0.{mode}"] = is_t0(t, mode, window)
    witnesses = {k: v.witness for k, v in verdicts.items() if not v.value}
    justifications = {k: v.justification for k, v in verdicts.items() if v.value and v.justification}
    return PropertyReport(
        compact=verdicts["compact"].value,
        connected=verdicts["connected"].value,
        t0={m: verdicts[f"t0.{m}"].value for m in T0_MODES},
        regular=verdicts["regular"].value,
        normal=verdicts["normal"].value,
        lindelof=verdicts["lindelof"].value,
        witnesses=witnesses,
        justifications=justifications,
    )

