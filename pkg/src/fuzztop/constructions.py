"""Endofunction analysis and the three induced fuzzy topologies.

Two of the topologies come from infinite nested bases ``B_1 ⊇ B_2 ⊇ ...``
(``A_n`` for tau1, ``K_m`` for tau2).  Each is held symbolically as a
:class:`ChainFamily`: every carrier element carries a :class:`GradeLaw`, a
closed-form rule ``n -> grade``.  Membership of an arbitrary fuzzy set in the
(infinite) chain topology is decided exactly from the laws, so nothing is
ever truncated unless a caller asks for :func:`materialize_chain`.

The third topology (tau3) is finite on a finite carrier and is built
explicitly by :func:`generate_topology`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ConsistencyError, InputError, PreconditionError
from .fuzzcore import (
    ONE,
    ZERO,
    Carrier,
    FuzzySet,
    intersection,
    union,
    union_all,
)

__all__ = [
    "EndoFunction",
    "SampledMap",
    "FunctionProfile",
    "JPartition",
    "GradeLaw",
    "ChainFamily",
    "OrbitData",
    "ExplicitTopology",
    "profile",
    "j_partition",
    "tau1_basis",
    "tau1_complement_basis",
    "tau2_basis",
    "orbit_data",
    "tau3_basis",
    "tau3_topology",
    "generate_topology",
    "materialize_chain",
    "default_window",
    "law_member",
    "TAU1",
    "TAU1C",
    "TAU2",
]

TAU1 = "tau1"
TAU1C = "tau1_complement"
TAU2 = "tau2"


@dataclass(frozen=True)
class EndoFunction:
    """A total self-map of a finite carrier, ``mapping[x] == f(x)``."""

    carrier: Carrier
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if len(mapping) != self.carrier.size:
            raise InputError(
                f"map has {len(mapping)} entries for a carrier of size {self.carrier.size}"
            )
        for y in mapping:
            self.carrier.check_index(y)
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def of(cls, mapping: Sequence[int], labels: Sequence[str] | None = None) -> "EndoFunction":
        carrier = Carrier(len(mapping), tuple(labels) if labels is not None else None)
        return cls(carrier, tuple(mapping))

    @classmethod
    def identity(cls, size: int) -> "EndoFunction":
        return cls(Carrier(size), tuple(range(size)))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __len__(self) -> int:
        return self.carrier.size

    def image(self, xs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.mapping[x] for x in xs)

    def preimage(self, y: int) -> list[int]:
        return [x for x, fx in enumerate(self.mapping) if fx == y]

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)


@dataclass(frozen=True)
class SampledMap:
    """Finitely many representatives of a map on an infinite domain.

    Only the data the chain bases depend on is stored: which representatives
    are periodic, and the shell number ``j`` with ``x ∈ J_j`` (0 for the
    eventual image).  Used for the successor-type examples on ℕ, which have
    no finite realisation with the same periodic structure.
    """

    carrier: Carrier
    periodic: frozenset[int]
    shells: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "periodic", frozenset(self.periodic))
        object.__setattr__(self, "shells", tuple(self.shells))
        for x in self.periodic:
            self.carrier.check_index(x)
        if len(self.shells) != self.carrier.size or any(j < 0 for j in self.shells):
            raise InputError("shells must give a non-negative shell number per element")

    @classmethod
    def successor(cls, count: int) -> "SampledMap":
        """``n -> n + 1`` on ℕ, sampled at ``1..count``: no periodic points, ``J_n = {n}``."""
        carrier = Carrier(count, tuple(str(n) for n in range(1, count + 1)))
        return cls(carrier, frozenset(), tuple(range(1, count + 1)))


@dataclass(frozen=True)
class FunctionProfile:
    onto: bool
    injective: bool
    periodic: frozenset[int]
    all_periodic: bool


@dataclass(frozen=True)
class JPartition:
    core: frozenset[int]
    shells: tuple[frozenset[int], ...]
    index_of: tuple[int, ...]


def profile(f: EndoFunction) -> FunctionProfile:
    n = f.carrier.size
    periodic = set()
    for x in range(n):
        y = x
        for _ in range(n):
            y = f(y)
            if y == x:
                periodic.add(x)
                break
    onto = len(set(f.mapping)) == n
    return FunctionProfile(
        onto=onto,
        injective=f.is_injective(),
        periodic=frozenset(periodic),
        all_periodic=len(periodic) == n,
    )


def j_partition(f: EndoFunction) -> JPartition:
    """Shells ``J_n = f^{n-1}(X) - f^n(X)`` and core ``J_0`` (the eventual image)."""
    current = frozenset(range(f.carrier.size))
    shells = []
    # the image chain strictly shrinks until it stabilises, so size steps suffice
    for _ in range(f.carrier.size + 1):
        nxt = f.image(current)
        if nxt == current:
            break
        shells.append(current - nxt)
        current = nxt
    else:  # pragma: no cover
        raise ConsistencyError("image chain failed to stabilise")
    index_of = [0] * f.carrier.size
    for j, shell in enumerate(shells, start=1):
        for x in shell:
            index_of[x] = j
    return JPartition(core=current, shells=tuple(shells), index_of=tuple(index_of))


@dataclass(frozen=True)
class GradeLaw:
    """Closed-form grade of one element along a chain, as a function of ``n >= 1``.

    ``one``: 1;  ``zero``: 0;  ``ratio``: ``min(1, j/n)``;  ``coratio``: ``1 - 1/n``.
    """

    kind: str
    j: int = 0

    def at(self, n: int) -> Fraction:
        if self.kind == "one":
            return ONE
        if self.kind == "zero":
            return ZERO
        if self.kind == "ratio":
            return min(ONE, Fraction(self.j, n))
        if self.kind == "coratio":
            return ONE - Fraction(1, n)
        raise InputError(f"unknown grade law {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "ratio":
            return f"min(1,{self.j}/n)"
        return {"one": "1", "zero": "0", "coratio": "1-1/n"}[self.kind]


LAW_ONE = GradeLaw("one")
LAW_ZERO = GradeLaw("zero")
LAW_CORATIO = GradeLaw("coratio")


def join_laws(laws: Iterable[GradeLaw]) -> GradeLaw:
    """Pointwise supremum of laws from one chain (used by the Zadeh image)."""
    laws = list(laws)
    kinds = {law.kind for law in laws}
    if not laws or kinds == {"zero"}:
        return LAW_ZERO
    if "coratio" in kinds and kinds - {"coratio", "zero"}:
        raise InputError("cannot join laws from different chain kinds")
    if "one" in kinds:
        return LAW_ONE
    if "ratio" in kinds:
        return GradeLaw("ratio", max(law.j for law in laws if law.kind == "ratio"))
    return LAW_CORATIO


def law_member(carrier: Carrier, laws: Sequence[GradeLaw], n: int) -> FuzzySet:
    if n < 1:
        raise InputError("chain indices start at 1")
    return FuzzySet._trusted(carrier, tuple(law.at(n) for law in laws))


def _max_j(laws: Iterable[GradeLaw]) -> int:
    return max((law.j for law in laws if law.kind == "ratio"), default=0)


@dataclass(frozen=True)
class ChainFamily:
    """The nested basis ``{B_n : n >= 1}`` of tau1, tau2 or the tau1 complements.

    The topology it generates is ``{∅} ∪ {B_n}`` for the decreasing kinds and
    ``{B_n} ∪ {X}`` for ``tau1_complement`` (whose union over all ``n`` is X).
    """

    carrier: Carrier
    kind: str
    laws: tuple[GradeLaw, ...]

    def __post_init__(self):
        if self.kind not in (TAU1, TAU1C, TAU2):
            raise InputError(f"unknown chain kind {self.kind!r}")
        if len(self.laws) != self.carrier.size:
            raise InputError("one grade law per carrier element is required")

    def grade_at(self, n: int, x: int) -> Fraction:
        if n < 1:
            raise InputError("chain indices start at 1")
        return self.laws[self.carrier.check_index(x)].at(n)

    def member(self, n: int) -> FuzzySet:
        return law_member(self.carrier, self.laws, n)

    def members(self, window: int) -> list[FuzzySet]:
        return [self.member(n) for n in range(1, window + 1)]

    @property
    def decreasing(self) -> bool:
        return self.kind != TAU1C

    def max_shell(self) -> int:
        """Largest ``j`` among ratio laws; beyond index ``max_shell()`` every ratio grade is < 1."""
        return _max_j(self.laws)

    def min_window(self) -> int:
        """Smallest window whose members already separate every pair of distinct laws."""
        return self.max_shell() + 1

    def is_finite(self) -> bool:
        """True when the chain has only finitely many distinct members."""
        return all(law.kind in ("one", "zero") for law in self.laws)

    def _solve_index(self, s: FuzzySet) -> int | None:
        n = None
        for law, v in zip(self.laws, s.grades):
            if law.kind == "one":
                if v != 1:
                    return None
                continue
            if v == 1:
                continue
            if law.kind == "ratio":
                if v == 0:
                    return None
                cand = Fraction(law.j) / v
            else:
                cand = 1 / (ONE - v)
            if cand.denominator != 1 or (n is not None and cand != n):
                return None
            n = int(cand)
        return 1 if n is None else n

    def contains(self, s: FuzzySet) -> bool:
        """Exact membership of ``s`` in the (infinite) topology this chain generates."""
        if s.carrier != self.carrier:
            raise InputError("fuzzy set and chain live on different carriers")
        if s.is_empty():
            return True
        if self.kind == TAU1C and s.is_whole():
            return True
        n = self._solve_index(s)
        return n is not None and n >= 1 and self.member(n) == s

    def first_outside(self, laws: Sequence[GradeLaw]) -> int | None:
        """Least ``n`` whose member of the law family ``laws`` is not open here, or None.

        Indices up to the largest ratio parameter are checked one by one; past
        that point every ratio grade is below 1 and the family is inside the
        topology for all larger ``n`` iff it matches this chain up to an
        integer rescaling of the index.
        """
        laws = tuple(laws)
        bound = max(_max_j(laws), self.max_shell()) + 1
        for n in range(1, bound + 1):
            if not self.contains(law_member(self.carrier, laws, n)):
                return n
        if self._tail_within(laws):
            return None
        # a non-integer rescaling fails within one period of its denominator
        for n in range(bound + 1, 2 * bound + _max_j(laws) * self.max_shell() + 3):
            if not self.contains(law_member(self.carrier, laws, n)):
                return n
        raise ConsistencyError("tail analysis predicted an escape that was not found")

    def _tail_within(self, laws: tuple[GradeLaw, ...]) -> bool:
        kinds = {law.kind for law in laws}
        if kinds <= {"zero"} or kinds <= {"one"}:
            return True
        if self.kind == TAU1C:
            return kinds == {"coratio"}
        if kinds & {"zero", "coratio"}:
            return False
        src_one = {x for x, law in enumerate(laws) if law.kind == "one"}
        dst_one = {x for x, law in enumerate(self.laws) if law.kind == "one"}
        if src_one != dst_one:
            return False
        scales = {Fraction(t.j, s.j) for s, t in zip(laws, self.laws) if s.kind == "ratio"}
        return len(scales) == 1 and next(iter(scales)).denominator == 1


MapLike = Union[EndoFunction, SampledMap]


def _periodic_of(f: MapLike) -> frozenset[int]:
    return f.periodic if isinstance(f, SampledMap) else profile(f).periodic


def _shells_of(f: MapLike) -> tuple[int, ...]:
    return f.shells if isinstance(f, SampledMap) else j_partition(f).index_of


def tau1_basis(f: MapLike) -> ChainFamily:
    """``A_n``: grade 1 on periodic points, ``1/n`` elsewhere."""
    periodic = _periodic_of(f)
    laws = tuple(LAW_ONE if x in periodic else GradeLaw("ratio", 1) for x in f.carrier)
    return ChainFamily(f.carrier, TAU1, laws)


def tau1_complement_basis(f: MapLike) -> ChainFamily:
    """Complements ``A_n^c`` with uniform grade ``(n-1)/n``.

    Only defined when there are no periodic points; with a periodic point
    the complements vanish there and no longer cover X.
    """
    periodic = _periodic_of(f)
    if periodic:
        raise PreconditionError(
            "the complements A_n^c form a base only when f has no periodic points "
            f"(periodic points here: {sorted(periodic)}); every self-map of a finite "
            "carrier has one"
        )
    return ChainFamily(f.carrier, TAU1C, (LAW_CORATIO,) * f.carrier.size)


def tau2_basis(f: MapLike) -> ChainFamily:
    """``K_m``: grade 1 on the core ``J_0``, ``min(1, j/m)`` on shell ``J_j``."""
    laws = tuple(LAW_ONE if j == 0 else GradeLaw("ratio", j) for j in _shells_of(f))
    return ChainFamily(f.carrier, TAU2, laws)


@dataclass(frozen=True)
class OrbitData:
    carrier: Carrier
    x0: int
    k: int
    orbit: tuple[int, ...]
    off_orbit: frozenset[int]

    @property
    def length(self) -> int:
        return len(self.orbit)

    def position(self, x: int) -> int | None:
        try:
            return self.orbit.index(x)
        except ValueError:
            return None


def orbit_data(f: EndoFunction, x0: int, k: int) -> OrbitData:
    """The cycle ``x0, f(x0), ...`` through ``x0``; requires one-to-one ``f``."""
    f.carrier.check_index(x0)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError(f"k must be a positive integer, got {k!r}")
    if not f.is_injective():
        raise PreconditionError("tau3 is defined only for a one-to-one f; this map is not injective")
    orbit = [x0]
    y = f(x0)
    while y != x0:
        orbit.append(y)
        y = f(y)
    return OrbitData(
        carrier=f.carrier,
        x0=x0,
        k=k,
        orbit=tuple(orbit),
        off_orbit=frozenset(f.carrier) - frozenset(orbit),
    )


def tau3_basis(o: OrbitData) -> tuple[FuzzySet, tuple[FuzzySet, ...]]:
    """``C`` and ``C_0 .. C_{L-1}``; ``C_n`` depends on ``n`` only through ``n mod L``."""
    on_orbit = set(o.orbit)
    c = FuzzySet(o.carrier, tuple(ZERO if x in on_orbit else ONE for x in o.carrier))
    low = Fraction(1, o.k)
    cn = []
    for n, peak in enumerate(o.orbit):
        grades = []
        for x in o.carrier:
            if x == peak:
                grades.append(ONE)
            elif x in on_orbit:
                grades.append(low)
            else:
                grades.append(ZERO)
        cn.append(FuzzySet(o.carrier, tuple(grades)))
    return c, tuple(cn)


@dataclass(frozen=True)
class ExplicitTopology:
    """A finite fuzzy topology: opens sorted canonically, closure verified on construction."""

    carrier: Carrier
    opens: tuple[FuzzySet, ...]
    provenance: str = "custom"
    basis: tuple[FuzzySet, ...] | None = None
    _index: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        uniq = {s.grades: s for s in self.opens}
        opens = tuple(uniq[g] for g in sorted(uniq))
        object.__setattr__(self, "opens", opens)
        object.__setattr__(self, "_index", frozenset(uniq))
        for s in opens:
            if s.carrier != self.carrier:
                raise InputError("open set on a different carrier")
        empty, whole = FuzzySet.empty(self.carrier), FuzzySet.whole(self.carrier)
        if empty.grades not in self._index or whole.grades not in self._index:
            raise InputError("a topology must contain the empty set and X")
        keys = [s.grades for s in opens]
        for i, a in enumerate(keys):
            for b in keys[i + 1 :]:
                if tuple(map(max, a, b)) not in self._index or tuple(map(min, a, b)) not in self._index:
                    raise InputError("family is not closed under union and intersection")

    def __len__(self) -> int:
        return len(self.opens)

    def __iter__(self):
        return iter(self.opens)

    def contains(self, s: FuzzySet) -> bool:
        return s.grades in self._index

    def grade_set(self) -> list[Fraction]:
        return sorted({g for s in self.opens for g in s.grades})

    def key_set(self) -> frozenset:
        return self._index


def _covers(carrier: Carrier, sets: Iterable[FuzzySet]) -> bool:
    return union_all(carrier, sets).is_whole()


def generate_topology(
    basis: Iterable[FuzzySet], carrier: Carrier | None = None, provenance: str = "custom"
) -> ExplicitTopology:
    """Least family containing ``basis``, ∅ and X, closed under pairwise max/min."""
    basis = tuple(basis)
    if carrier is None:
        if not basis:
            raise InputError("cannot infer the carrier of an empty basis")
        carrier = basis[0].carrier
    if not _covers(carrier, basis):
        raise InputError("basis does not cover X (pointwise sup of the basis is not 1 everywhere)")
    found = {s.grades: s for s in basis}
    for s in (FuzzySet.empty(carrier), FuzzySet.whole(carrier)):
        found.setdefault(s.grades, s)
    work = list(found.values())
    while work:
        a = work.pop()
        for b in list(found.values()):
            for c in (union(a, b), intersection(a, b)):
                if c.grades not in found:
                    found[c.grades] = c
                    work.append(c)
    return ExplicitTopology(carrier, tuple(found.values()), provenance, basis)


def tau3_topology(o: OrbitData) -> ExplicitTopology:
    c, cn = tau3_basis(o)
    return generate_topology((c,) + cn, o.carrier, provenance="tau3")


def default_window(carrier: Carrier) -> int:
    return carrier.size + 2


@lru_cache(maxsize=4096)
def materialize_chain(c: ChainFamily, window: int) -> ExplicitTopology:
    """Finite window ``{∅} ∪ {B_1..B_window}`` (plus X for the increasing kind)."""
    if window < 1:
        raise InputError("window must be at least 1")
    members = c.members(window)
    for a, b in zip(members, members[1:]):
        ok = all(p >= q for p, q in zip(a.grades, b.grades)) if c.decreasing else all(
            p <= q for p, q in zip(a.grades, b.grades)
        )
        if not ok:
            raise ConsistencyError(f"chain {c.kind} is not monotone")
    opens = [FuzzySet.empty(c.carrier)] + members
    if not c.decreasing:
        opens.append(FuzzySet.whole(c.carrier))
    return ExplicitTopology(
        c.carrier, tuple(opens), provenance=f"materialized_chain({c.kind},{window})", basis=tuple(members)
    )
