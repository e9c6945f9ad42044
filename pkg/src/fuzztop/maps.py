"""Zadeh extension of a self-map and the open-map / continuity deciders.

A topology handle is either a :class:`~fuzztop.constructions.ChainFamily`
(evaluated symbolically and, as a cross-check, on a materialized window) or
an :class:`~fuzztop.constructions.ExplicitTopology`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .constructions import (
    ChainFamily,
    EndoFunction,
    ExplicitTopology,
    GradeLaw,
    default_window,
    join_laws,
    law_member,
    materialize_chain,
)
from .errors import ConsistencyError, InputError, PreconditionError
from .fuzzcore import ZERO, FuzzySet

__all__ = [
    "MapReport",
    "MapWitness",
    "zadeh_image",
    "zadeh_preimage",
    "image_laws",
    "preimage_laws",
    "is_open_map",
    "is_continuous",
    "map_report",
]

Topology = Union[ChainFamily, ExplicitTopology]


def _check(f: EndoFunction, a: FuzzySet) -> None:
    if f.carrier != a.carrier:
        raise InputError("map and fuzzy set live on different carriers")


def zadeh_image(f: EndoFunction, a: FuzzySet) -> FuzzySet:
    """``f(a)(y) = sup{a(x) : f(x) = y}``, with the empty sup equal to 0."""
    _check(f, a)
    out = [ZERO] * f.carrier.size
    for x, y in enumerate(f.mapping):
        if a[x] > out[y]:
            out[y] = a[x]
    return FuzzySet._trusted(f.carrier, tuple(out))


def zadeh_preimage(f: EndoFunction, a: FuzzySet) -> FuzzySet:
    """``f^{-1}(a)(x) = a(f(x))``."""
    _check(f, a)
    return FuzzySet._trusted(f.carrier, tuple(a[y] for y in f.mapping))


def image_laws(f: EndoFunction, c: ChainFamily) -> tuple[GradeLaw, ...]:
    """Closed-form laws of the family ``n -> f(B_n)``."""
    return tuple(join_laws(c.laws[x] for x in f.preimage(y)) for y in f.carrier)


def preimage_laws(f: EndoFunction, c: ChainFamily) -> tuple[GradeLaw, ...]:
    return tuple(c.laws[y] for y in f.mapping)


@dataclass(frozen=True)
class MapWitness:
    """A basic open set whose image (or preimage) is not open."""

    source: FuzzySet
    result: FuzzySet
    index: int | None = None

    def to_json(self) -> dict:
        out = {"set": self.source.to_strings(), "result": self.result.to_strings()}
        if self.index is not None:
            out["index"] = self.index
        return out


@dataclass(frozen=True)
class MapReport:
    open_map: bool
    continuous: bool
    witnesses: dict[str, MapWitness] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "open_map": self.open_map,
            "continuous": self.continuous,
            "witnesses": {k: w.to_json() for k, w in sorted(self.witnesses.items())},
        }


def _window_for(c: ChainFamily, window: int | None) -> int:
    w = default_window(c.carrier) if window is None else window
    if w < c.min_window():
        raise PreconditionError(
            f"window {w} is too small for this chain; at least {c.min_window()} is needed "
            "to separate its grade laws"
        )
    return w


def _explicit_sets(f: EndoFunction, t: ExplicitTopology, image: bool, exhaustive: bool):
    # preimage commutes with max and min, so the generating family suffices;
    # image commutes with min only for injective f
    if t.basis is not None and not exhaustive and (not image or f.is_injective()):
        return t.basis
    return t.opens


def _explicit_check(f: EndoFunction, t: ExplicitTopology, image: bool, exhaustive: bool):
    op = zadeh_image if image else zadeh_preimage
    for s in _explicit_sets(f, t, image, exhaustive):
        r = op(f, s)
        if not t.contains(r):
            return MapWitness(s, r)
    return None


def _chain_check(f: EndoFunction, c: ChainFamily, image: bool, window: int | None):
    if f.carrier != c.carrier:
        raise InputError("map and topology live on different carriers")
    w = _window_for(c, window)
    laws = image_laws(f, c) if image else preimage_laws(f, c)
    n = c.first_outside(laws)
    symbolic = None if n is None else MapWitness(c.member(n), law_member(c.carrier, laws, n), n)

    windowed = _explicit_check(f, materialize_chain(c, w), image, exhaustive=False)
    # a symbolic escape beyond the window is invisible to the windowed check
    if (symbolic is None) != (windowed is None) and not (symbolic is not None and n > w):
        raise ConsistencyError(
            f"{'image' if image else 'preimage'} check: symbolic and windowed verdicts disagree "
            f"for f={list(f.mapping)} on {c.kind}"
        )
    return symbolic


def _check_map(f: EndoFunction, t: Topology, image: bool, window: int | None, exhaustive: bool):
    if isinstance(t, ChainFamily):
        return _chain_check(f, t, image, window)
    if f.carrier != t.carrier:
        raise InputError("map and topology live on different carriers")
    return _explicit_check(f, t, image, exhaustive)


def is_open_map(
    f: EndoFunction, t: Topology, window: int | None = None, exhaustive: bool = False
) -> tuple[bool, MapWitness | None]:
    """Whether every open set has an open Zadeh image; returns (verdict, witness)."""
    w = _check_map(f, t, True, window, exhaustive)
    return w is None, w


def is_continuous(
    f: EndoFunction, t: Topology, window: int | None = None, exhaustive: bool = False
) -> tuple[bool, MapWitness | None]:
    """Whether every open set has an open Zadeh preimage; returns (verdict, witness)."""
    w = _check_map(f, t, False, window, exhaustive)
    return w is None, w


def map_report(f: EndoFunction, t: Topology, window: int | None = None) -> MapReport:
    is_open, w_open = is_open_map(f, t, window)
    cont, w_cont = is_continuous(f, t, window)
    witnesses = {}
    if w_open is not None:
        witnesses["open_map"] = w_open
    if w_cont is not None:
        witnesses["continuous"] = w_cont
    return MapReport(is_open, cont, witnesses)
