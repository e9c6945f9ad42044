"""Fuzzy sets over a finite carrier with exact rational grades.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``; nothing in the
package ever touches a float, so equality tests such as ``1/n == min(1, j/m)``
are exact.

Membership conventions used by the property deciders:

* a crisp element ``x`` is *in* a fuzzy set when its grade is 1
  (``mode="full"``) or merely positive (``mode="positive"``);
* a fuzzy point ``(x, p)`` belongs to ``A`` when ``p <= A(x)``;
* two fuzzy sets are disjoint when their pointwise minimum is identically 0;
* containment is pointwise ``<=``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InputError

__all__ = [
    "Carrier",
    "FuzzySet",
    "FuzzyPoint",
    "to_grade",
    "format_grade",
    "union",
    "intersection",
    "complement",
    "leq",
    "disjoint",
    "crisp_in",
    "fuzzy_point_in",
    "union_all",
    "intersection_all",
]

GradeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_grade(value: GradeLike) -> Fraction:
    """Coerce ``value`` to an exact grade, rejecting floats and out-of-range values."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"grades must be exact rationals, got {value!r}")
    try:
        g = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse grade {value!r}") from exc
    if not ZERO <= g <= ONE:
        raise InputError(f"grade {g} outside [0, 1]")
    return g


def format_grade(g: Fraction) -> str:
    """Serialize a grade as ``"p/q"`` in lowest terms (``"0"`` and ``"1"`` bare)."""
    return str(g.numerator) if g.denominator == 1 else f"{g.numerator}/{g.denominator}"


@dataclass(frozen=True)
class Carrier:
    """A finite set canonically indexed ``0..size-1``, optionally labelled."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"carrier size must be a positive integer, got {self.size!r}")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.size:
                raise InputError("carrier labels must have one entry per element")
            if len(set(labels)) != len(labels):
                raise InputError("carrier labels must be pairwise distinct")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, spec: int | Sequence[str]) -> "Carrier":
        if isinstance(spec, int):
            return cls(spec)
        labels = tuple(spec)
        return cls(len(labels), labels)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def check_index(self, x: int) -> int:
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.size:
            raise InputError(f"{x!r} is not an element of a carrier of size {self.size}")
        return x


@dataclass(frozen=True)
class FuzzySet:
    """Grades of each carrier element, in carrier order."""

    carrier: Carrier
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        grades = tuple(to_grade(g) for g in self.grades)
        if len(grades) != self.carrier.size:
            raise InputError(
                f"fuzzy set has {len(grades)} grades for a carrier of size {self.carrier.size}"
            )
        object.__setattr__(self, "grades", grades)

    @classmethod
    def _trusted(cls, carrier: Carrier, grades: tuple[Fraction, ...]) -> "FuzzySet":
        # skips validation; callers pass grades derived from valid grades
        obj = object.__new__(cls)
        object.__setattr__(obj, "carrier", carrier)
        object.__setattr__(obj, "grades", grades)
        return obj

    @classmethod
    def of(cls, carrier: Carrier | int, grades: Iterable[GradeLike]) -> "FuzzySet":
        if isinstance(carrier, int):
            carrier = Carrier(carrier)
        return cls(carrier, tuple(grades))

    @classmethod
    def empty(cls, carrier: Carrier) -> "FuzzySet":
        return cls(carrier, (ZERO,) * carrier.size)

    @classmethod
    def whole(cls, carrier: Carrier) -> "FuzzySet":
        return cls(carrier, (ONE,) * carrier.size)

    @classmethod
    def indicator(cls, carrier: Carrier, members: Iterable[int]) -> "FuzzySet":
        members = set(members)
        return cls(carrier, tuple(ONE if x in members else ZERO for x in carrier))

    def __getitem__(self, x: int) -> Fraction:
        return self.grades[x]

    def __len__(self) -> int:
        return len(self.grades)

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        return union(self, other)

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        return intersection(self, other)

    def __invert__(self) -> "FuzzySet":
        return complement(self)

    def is_empty(self) -> bool:
        return all(g == 0 for g in self.grades)

    def is_whole(self) -> bool:
        return all(g == 1 for g in self.grades)

    def is_crisp(self) -> bool:
        return all(g in (ZERO, ONE) for g in self.grades)

    def support(self) -> frozenset[int]:
        return frozenset(x for x, g in enumerate(self.grades) if g > 0)

    def key(self) -> tuple[Fraction, ...]:
        """Sort key giving the canonical (lexicographic) order of fuzzy sets."""
        return self.grades

    def to_strings(self) -> list[str]:
        return [format_grade(g) for g in self.grades]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_strings()) + ")"


@dataclass(frozen=True)
class FuzzyPoint:
    """The fuzzy point ``(x, degree)``; degree 0 is excluded."""

    element: int
    degree: Fraction

    def __post_init__(self):
        d = to_grade(self.degree)
        if d == 0:
            raise InputError("fuzzy point degree must be positive")
        object.__setattr__(self, "degree", d)

    def key(self) -> tuple[int, Fraction]:
        return (self.element, self.degree)

    def to_json(self) -> list:
        return [self.element, format_grade(self.degree)]


def _same_carrier(a: FuzzySet, b: FuzzySet) -> None:
    if a.carrier is not b.carrier and a.carrier != b.carrier:
        raise InputError("fuzzy sets live on different carriers")


def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_carrier(a, b)
    return FuzzySet._trusted(a.carrier, tuple(map(max, a.grades, b.grades)))


def intersection(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_carrier(a, b)
    return FuzzySet._trusted(a.carrier, tuple(map(min, a.grades, b.grades)))


def complement(a: FuzzySet) -> FuzzySet:
    return FuzzySet._trusted(a.carrier, tuple(ONE - g for g in a.grades))


def leq(a: FuzzySet, b: FuzzySet) -> bool:
    """Pointwise containment ``a ⊆ b``."""
    _same_carrier(a, b)
    return all(map(operator.le, a.grades, b.grades))


def disjoint(a: FuzzySet, b: FuzzySet) -> bool:
    _same_carrier(a, b)
    return not any(map(min, a.grades, b.grades))


def union_all(carrier: Carrier, sets: Iterable[FuzzySet]) -> FuzzySet:
    out = FuzzySet.empty(carrier)
    for s in sets:
        out = union(out, s)
    return out


def intersection_all(carrier: Carrier, sets: Iterable[FuzzySet]) -> FuzzySet:
    out = FuzzySet.whole(carrier)
    for s in sets:
        out = intersection(out, s)
    return out


def crisp_in(x: int, a: FuzzySet, mode: str = "full") -> bool:
    """Crisp membership of element ``x``: grade 1 (``full``) or grade > 0 (``positive``)."""
    a.carrier.check_index(x)
    if mode == "full":
        return a[x] == 1
    if mode == "positive":
        return a[x] > 0
    raise InputError(f"unknown membership mode {mode!r}")


def fuzzy_point_in(p: FuzzyPoint, a: FuzzySet) -> bool:
    a.carrier.check_index(p.element)
    return p.degree <= a[p.element]
