"""Registry of the numbered claims and an exhaustive sweep over small instances.

Each :class:`TheoremClaim` is a (hypothesis, conclusion, direction) triple
over an :class:`Instance`.  :func:`sweep` enumerates every self-map of
carriers of size ``1..max_size`` (and, for tau3, every bijection, base
point and ``k``), evaluates every applicable claim and records the
lexicographically least disagreeing instance per claim.

Claims marked ``asserted`` must agree everywhere; ``report_only`` claims
depend on definitional conventions or finite-carrier artefacts and are
reported with their counterexamples instead.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from . import constructions as cons
from .constructions import EndoFunction, ExplicitTopology, materialize_chain
from .errors import InputError
from .fuzzcore import FuzzySet
from .maps import MapReport, map_report, zadeh_preimage
from .properties import PropertyReport, property_report, topologies_equal

__all__ = [
    "Instance",
    "InstanceContext",
    "TheoremClaim",
    "ClaimVerdict",
    "theorem_registry",
    "CLAIM_IDS",
    "check_claim",
    "sweep",
    "recheck",
    "enumerate_instances",
    "MAX_SWEEP_SIZE",
]

MAX_SWEEP_SIZE = 6
SPACES = ("tau1", "tau2", "tau3")


@dataclass(frozen=True)
class Instance:
    f: EndoFunction
    space: str
    window: int
    x0: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.space not in SPACES:
            raise InputError(f"unknown space {self.space!r}")
        if self.space == "tau3":
            if self.x0 is None or self.k is None:
                raise InputError("tau3 instances need x0 and k")
            if not self.f.is_injective():
                raise InputError("tau3 instances need an injective f")

    def key(self) -> tuple:
        return (
            self.f.carrier.size,
            self.f.mapping,
            self.space,
            -1 if self.x0 is None else self.x0,
            -1 if self.k is None else self.k,
        )

    def to_json(self) -> dict:
        out = {"size": self.f.carrier.size, "f": list(self.f.mapping), "space": self.space, "window": self.window}
        if self.space == "tau3":
            out["x0"] = self.x0
            out["k"] = self.k
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Instance":
        return cls(EndoFunction.of(d["f"]), d["space"], d["window"], d.get("x0"), d.get("k"))


class InstanceContext:
    """Lazily computed constructions and reports for one instance."""

    def __init__(self, instance: Instance):
        self.instance = instance
        self.f = instance.f
        self.window = instance.window

    @cached_property
    def profile(self) -> cons.FunctionProfile:
        return cons.profile(self.f)

    @cached_property
    def tau1(self) -> cons.ChainFamily:
        return cons.tau1_basis(self.f)

    @cached_property
    def tau2(self) -> cons.ChainFamily:
        return cons.tau2_basis(self.f)

    @cached_property
    def orbit(self) -> cons.OrbitData:
        return cons.orbit_data(self.f, self.instance.x0, self.instance.k)

    @cached_property
    def tau3_basis(self) -> tuple[FuzzySet, tuple[FuzzySet, ...]]:
        return cons.tau3_basis(self.orbit)

    @cached_property
    def tau3(self) -> ExplicitTopology:
        return cons.tau3_topology(self.orbit)

    @property
    def space(self):
        return getattr(self, self.instance.space)

    @cached_property
    def props(self) -> PropertyReport:
        return property_report(self.space, self.window)

    @cached_property
    def maps(self) -> MapReport:
        return map_report(self.f, self.space, self.window)

    @cached_property
    def tau1_eq_tau2(self):
        return topologies_equal(self.tau1, self.tau2, self.window)

    @cached_property
    def tau1_eq_tau3(self):
        return topologies_equal(self.tau1, self.tau3, self.window)

    @cached_property
    def tau2_eq_tau3(self):
        return topologies_equal(self.tau2, self.tau3, self.window)


Predicate = Callable[[InstanceContext], bool]


def _always(ctx: InstanceContext) -> bool:
    return True


@dataclass(frozen=True)
class TheoremClaim:
    id: str
    description: str
    spaces: tuple[str, ...]
    direction: str  # "iff" | "implies" | "exists"
    expectation: str  # "asserted" | "report_only"
    hypothesis: Predicate
    conclusion: Predicate
    applicable: Predicate = _always
    note: str = ""
    evidence: Callable[[InstanceContext], dict] | None = None

    def applies_to(self, ctx: InstanceContext) -> bool:
        return ctx.instance.space in self.spaces and self.applicable(ctx)


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    instance: Instance
    hypothesis: bool
    conclusion: bool
    agrees: bool

    def to_json(self) -> dict:
        return {
            "instance": self.instance.to_json(),
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
        }


# ------------------------------------------------------------------ evidence helpers


def _gradeset(t: ExplicitTopology) -> list[list[str]]:
    return [s.to_strings() for s in t.opens]


def _laws(c: cons.ChainFamily) -> list[str]:
    return [str(law) for law in c.laws]


def _ev_tau1_tau2(ctx: InstanceContext) -> dict:
    w = ctx.window
    v = ctx.tau1_eq_tau2
    return {
        "periodic": sorted(ctx.profile.periodic),
        "tau1_laws": _laws(ctx.tau1),
        "tau2_laws": _laws(ctx.tau2),
        "tau1_window": _gradeset(materialize_chain(ctx.tau1, w)),
        "tau2_window": _gradeset(materialize_chain(ctx.tau2, w)),
        "equality_witness": v.witness,
    }


def _ev_tau3(ctx: InstanceContext) -> dict:
    return {"orbit": list(ctx.orbit.orbit), "tau3": _gradeset(ctx.tau3)}


def _ev_with(key: str, what: str):
    def ev(ctx: InstanceContext) -> dict:
        out = _ev_tau3(ctx) if ctx.instance.space == "tau3" else {}
        out[what] = ctx.props.witnesses.get(key)
        return out

    return ev


def _ev_complements(ctx: InstanceContext) -> dict:
    sup = ["0" if law.kind == "one" else "1" for law in ctx.tau1.laws]
    return {"periodic": sorted(ctx.profile.periodic), "sup_of_complements": sup}


def _ev_equal(attr: str):
    def ev(ctx: InstanceContext) -> dict:
        out = _ev_tau3(ctx)
        out["equality_witness"] = getattr(ctx, attr).witness
        return out

    return ev


def _ev_map(kind: str):
    def ev(ctx: InstanceContext) -> dict:
        w = ctx.maps.witnesses.get(kind)
        return {"witness": w.to_json() if w is not None else None}

    return ev


# ------------------------------------------------------------------ predicates


def _onto(ctx):
    return ctx.profile.onto


def _injective(ctx):
    return ctx.profile.injective


def _open(ctx):
    return ctx.maps.open_map


def _continuous(ctx):
    return ctx.maps.continuous


def _two_points(ctx):
    return ctx.f.carrier.size >= 2


def _c_empty(ctx):
    return ctx.tau3_basis[0].is_empty()


def _orbit_is_x(ctx):
    return ctx.orbit.length == ctx.f.carrier.size


def _x0_fixed(ctx):
    return ctx.f(ctx.instance.x0) == ctx.instance.x0


def _crisp_tau3(ctx):
    return all(s.is_crisp() for s in ctx.tau3.opens)


def _complements_form_base(ctx):
    # sup_n (1 - A_n(x)) is 0 on periodic points and 1 elsewhere; the
    # complements are closed under finite intersection, so covering decides
    return all(law.kind != "one" for law in ctx.tau1.laws)


def _tau2_indiscrete(ctx):
    t = materialize_chain(ctx.tau2, ctx.window)
    return len(t) == 2 and all(law.kind == "one" for law in ctx.tau2.laws)


def _c_invariant(ctx):
    c = ctx.tau3_basis[0]
    return zadeh_preimage(ctx.f, c) == c


def _thm_4_3_hyp(ctx):
    return ctx.profile.onto and _orbit_is_x(ctx) and ctx.instance.k == 1


def _t0_pair(ctx):
    return ctx.props.t0["paper_fuzzy_pair"]


def _small_c_and_fixed(ctx):
    c = ctx.tau3_basis[0]
    return len(c.support()) <= 1 and _x0_fixed(ctx)


def _not(p: Predicate) -> Predicate:
    return lambda ctx: not p(ctx)


def _true(ctx):
    return True


def theorem_registry() -> list[TheoremClaim]:
    C = TheoremClaim
    A, R = "asserted", "report_only"
    return [
        C("Prop2.2", "if every point is periodic, {A_n^c} is a base", ("tau1",), "implies", R,
          lambda c: c.profile.all_periodic, _complements_form_base,
          note="statement assumes all points periodic, but the complements only cover X "
               "when no point is periodic; on a finite carrier the complements never form a base",
          evidence=_ev_complements),
        C("Lemma2.4", "f onto implies tau2 is indiscrete", ("tau2",), "implies", A,
          _onto, _tau2_indiscrete),
        C("Lemma2.6(1)", "C is empty iff A(x0) = X", ("tau3",), "iff", A,
          _c_empty, _orbit_is_x, evidence=_ev_tau3),
        C("Lemma2.6(2)", "tau3 is crisp (a topological space) iff k = 1", ("tau3",), "iff", A,
          _crisp_tau3, lambda c: c.instance.k == 1,
          note="when x0 is a fixed point no grade 1/k ever occurs, so tau3 is crisp for every k",
          evidence=_ev_tau3),
        C("Thm2.7", "tau1: f onto iff f open", ("tau1",), "iff", A, _onto, _open,
          evidence=_ev_map("open_map")),
        C("Thm2.8", "tau1: f one-to-one implies f continuous", ("tau1",), "implies", A,
          _injective, _continuous, evidence=_ev_map("continuous")),
        C("Ex2.9", "tau1: some continuous f is not one-to-one", ("tau1",), "exists", A,
          _not(_injective), _continuous),
        C("Thm2.10", "tau2: f open iff f onto", ("tau2",), "iff", A, _onto, _open,
          evidence=_ev_map("open_map")),
        C("Thm2.11", "tau2: f onto implies f continuous", ("tau2",), "implies", A,
          _onto, _continuous, evidence=_ev_map("continuous")),
        C("Ex2.12", "tau2: some continuous f is not onto", ("tau2",), "exists", A,
          _not(_onto), _continuous),
        C("Thm2.13", "tau3: f open iff f onto", ("tau3",), "iff", A, _onto, _open,
          evidence=_ev_map("open_map")),
        C("Lemma2.14", "tau3: f^-1(C) = C", ("tau3",), "implies", A, _true, _c_invariant,
          evidence=_ev_tau3),
        C("Thm2.15", "tau3: k = 1 implies f continuous", ("tau3",), "implies", A,
          lambda c: c.instance.k == 1, _continuous, evidence=_ev_map("continuous")),
        C("Thm2.15-converse", "tau3: f continuous implies k = 1", ("tau3",), "implies", R,
          _continuous, lambda c: c.instance.k == 1,
          note="the sweep looks for counterexamples among injective maps",
          evidence=_ev_tau3),
        C("Prop3.1", "tau1 is compact", ("tau1",), "implies", A, _true, lambda c: c.props.compact),
        C("Prop3.2", "tau1 is connected", ("tau1",), "implies", A, _true, lambda c: c.props.connected,
          evidence=_ev_with("connected", "witness")),
        C("Prop3.3", "tau1 is not T0", ("tau1",), "implies", R, _true, _not(_t0_pair),
          applicable=_two_points,
          note="T0 in paper_fuzzy_pair mode over the windowed degree grid; needs two distinct elements",
          evidence=_ev_with("t0.paper_fuzzy_pair", "witness")),
        C("Prop3.4", "tau1 regular iff no point is periodic", ("tau1",), "iff", R,
          lambda c: not c.profile.periodic, lambda c: c.props.regular,
          note="every self-map of a finite carrier has a periodic point, yet bijections give the "
               "indiscrete (vacuously regular) tau1",
          evidence=_ev_with("regular", "witness")),
        C("Remark3.5", "tau1 is normal", ("tau1",), "implies", A, _true, lambda c: c.props.normal,
          evidence=_ev_with("normal", "witness")),
        C("Prop3.6", "tau1, tau2, tau3 are Lindelof", SPACES, "implies", A, _true,
          lambda c: c.props.lindelof),
        C("Prop3.7", "tau2 is connected", ("tau2",), "implies", A, _true, lambda c: c.props.connected,
          evidence=_ev_with("connected", "witness")),
        C("Prop3.8", "tau2 is compact", ("tau2",), "implies", A, _true, lambda c: c.props.compact),
        C("Prop3.9", "tau2 is not T0", ("tau2",), "implies", A, _true, _not(_t0_pair),
          applicable=_two_points,
          note="T0 in paper_fuzzy_pair mode over the windowed degree grid; needs two distinct elements",
          evidence=_ev_with("t0.paper_fuzzy_pair", "witness")),
        C("Prop3.10", "tau2 regular iff f onto", ("tau2",), "iff", A, _onto, lambda c: c.props.regular,
          evidence=_ev_with("regular", "witness")),
        C("Prop3.11", "tau2 is normal", ("tau2",), "implies", A, _true, lambda c: c.props.normal,
          evidence=_ev_with("normal", "witness")),
        C("Prop3.12", "tau3 connected iff C is empty", ("tau3",), "iff", A,
          _c_empty, lambda c: c.props.connected, evidence=_ev_with("connected", "witness")),
        C("Prop3.13", "tau3 compact iff N0 finite", ("tau3",), "iff", A,
          _true, lambda c: c.props.compact,
          note="N0 is represented by residues mod the orbit length, so only the finite branch is "
               "reachable on a finite carrier; the infinite branch is unreachable at this scale"),
        C("Prop3.14", "tau3 T0 iff |C| <= 1 and f(x0) = x0", ("tau3",), "iff", R,
          _small_c_and_fixed, _t0_pair, evidence=_ev_with("t0.paper_fuzzy_pair", "witness")),
        C("Prop3.15", "tau3 regular iff f(x0) = x0", ("tau3",), "iff", R,
          _x0_fixed, lambda c: c.props.regular,
          note="the converse argument uses the grade (k-1)/k > 0 and so needs k >= 2",
          evidence=_ev_with("regular", "witness")),
        C("Prop3.16", "tau3 is normal", ("tau3",), "implies", A, _true, lambda c: c.props.normal,
          evidence=_ev_with("normal", "witness")),
        C("Thm4.1", "all points periodic implies tau1 = tau2", ("tau1",), "implies", A,
          lambda c: c.profile.all_periodic, lambda c: c.tau1_eq_tau2.value, evidence=_ev_tau1_tau2),
        C("Thm4.1-converse", "tau1 = tau2 implies all points periodic", ("tau1",), "implies", R,
          lambda c: c.tau1_eq_tau2.value, lambda c: c.profile.all_periodic, evidence=_ev_tau1_tau2),
        C("Thm4.2", "tau1 and tau3 are never equal", ("tau3",), "implies", A,
          _true, lambda c: not c.tau1_eq_tau3.value,
          note="fails when f is a single cycle and k = 1 (both topologies indiscrete), "
               "the equality that claims Thm4.1 and Thm4.3 together force",
          evidence=_ev_equal("tau1_eq_tau3")),
        C("Thm4.3", "f onto, A(x0) = X and k = 1 imply tau2 = tau3", ("tau3",), "implies", A,
          _thm_4_3_hyp, lambda c: c.tau2_eq_tau3.value, evidence=_ev_equal("tau2_eq_tau3")),
        C("Thm4.3-converse", "tau2 = tau3 implies f onto, A(x0) = X and k = 1", ("tau3",), "implies", R,
          lambda c: c.tau2_eq_tau3.value, _thm_4_3_hyp, evidence=_ev_equal("tau2_eq_tau3")),
    ]


CLAIM_IDS = (
    "Prop2.2", "Lemma2.4", "Lemma2.6(1)", "Lemma2.6(2)", "Thm2.7", "Thm2.8", "Ex2.9",
    "Thm2.10", "Thm2.11", "Ex2.12", "Thm2.13", "Lemma2.14", "Thm2.15", "Thm2.15-converse",
    "Prop3.1", "Prop3.2", "Prop3.3", "Prop3.4", "Remark3.5", "Prop3.6", "Prop3.7", "Prop3.8",
    "Prop3.9", "Prop3.10", "Prop3.11", "Prop3.12", "Prop3.13", "Prop3.14", "Prop3.15",
    "Prop3.16", "Thm4.1", "Thm4.1-converse", "Thm4.2", "Thm4.3", "Thm4.3-converse",
)


def check_claim(c: TheoremClaim, i: Instance | InstanceContext) -> ClaimVerdict | None:
    """Evaluate one claim on one instance; None when the claim does not apply."""
    ctx = i if isinstance(i, InstanceContext) else InstanceContext(i)
    if not c.applies_to(ctx):
        return None
    h = bool(c.hypothesis(ctx))
    concl = bool(c.conclusion(ctx))
    if c.direction == "iff":
        agrees = h == concl
    elif c.direction == "implies":
        agrees = (not h) or concl
    else:  # exists: this instance is a witness
        agrees = h and concl
    return ClaimVerdict(c.id, ctx.instance, h, concl, agrees)


def enumerate_instances(max_size: int, k_values: Iterable[int], window: int) -> Iterable[Instance]:
    ks = sorted(set(k_values))
    for size in range(1, max_size + 1):
        for mapping in itertools.product(range(size), repeat=size):
            f = EndoFunction.of(mapping)
            yield Instance(f, "tau1", window)
            yield Instance(f, "tau2", window)
            if f.is_injective():
                for x0 in range(size):
                    for k in ks:
                        yield Instance(f, "tau3", window, x0, k)


def _estimate(max_size: int, n_k: int) -> int:
    total = 0
    for size in range(1, max_size + 1):
        total += 2 * size**size + math.factorial(size) * size * n_k
    return total


@dataclass
class _Tally:
    instances: int = 0
    hypothesis_true: int = 0
    agreements: int = 0
    first_failure: ClaimVerdict | None = None
    first_witness: ClaimVerdict | None = None
    by_k: dict = field(default_factory=dict)


def _record(ctx: InstanceContext, claim: TheoremClaim, v: ClaimVerdict) -> dict:
    out = v.to_json()
    out["evidence"] = claim.evidence(ctx) if claim.evidence else {}
    return out


def sweep(max_size: int, k_values: Iterable[int] = (1, 2, 3), window: int | None = None) -> dict:
    """Evaluate every applicable claim on every instance up to ``max_size``."""
    k_values = sorted(set(k_values))
    if window is None:
        window = max_size + 2
    if max_size < 1:
        raise InputError("max_size must be at least 1")
    if max_size > MAX_SWEEP_SIZE:
        raise InputError(
            f"max_size {max_size} exceeds the cost guard {MAX_SWEEP_SIZE} "
            f"(about {_estimate(max_size, len(k_values))} instances)"
        )
    if window < max_size + 2:
        raise InputError(f"window must be at least max_size + 2 = {max_size + 2}")
    if not k_values or any(k < 1 for k in k_values):
        raise InputError("k values must be positive integers")

    registry = theorem_registry()
    tallies = {c.id: _Tally() for c in registry}
    records: dict[str, dict] = {}
    n_instances = 0
    for inst in enumerate_instances(max_size, k_values, window):
        n_instances += 1
        ctx = InstanceContext(inst)
        for claim in registry:
            v = check_claim(claim, ctx)
            if v is None:
                continue
            t = tallies[claim.id]
            t.instances += 1
            t.hypothesis_true += v.hypothesis
            t.agreements += v.agrees
            if inst.k is not None:
                bk = t.by_k.setdefault(inst.k, [0, 0])
                bk[0] += 1
                bk[1] += v.agrees
            if claim.direction == "exists":
                if v.agrees and t.first_witness is None:
                    t.first_witness = v
                    records[claim.id] = _record(ctx, claim, v)
            elif not v.agrees and t.first_failure is None:
                t.first_failure = v
                records[claim.id] = _record(ctx, claim, v)

    claims_out = []
    asserted_failures, divergences = [], []
    for c in registry:
        t = tallies[c.id]
        entry = {
            "id": c.id,
            "description": c.description,
            "direction": c.direction,
            "expectation": c.expectation,
            "instances": t.instances,
            "hypothesis_true": t.hypothesis_true,
            "agreements": t.agreements,
            "counterexample": None,
        }
        if c.direction == "exists":
            entry["witness"] = records.get(c.id)
            if t.first_witness is None:
                entry["counterexample"] = {"reason": "no witness instance found in the sweep"}
        else:
            entry["counterexample"] = records.get(c.id)
        if t.by_k:
            entry["by_k"] = {
                str(k): {"instances": n, "agreements": a} for k, (n, a) in sorted(t.by_k.items())
            }
        if c.note:
            entry["note"] = c.note
        claims_out.append(entry)
        if entry["counterexample"] is not None:
            (asserted_failures if c.expectation == "asserted" else divergences).append(c.id)
    return {
        "params": {"max_size": max_size, "k_values": k_values, "window": window, "instances": n_instances},
        "claims": claims_out,
        "summary": {
            "asserted_failures": asserted_failures,
            "report_only_divergences": divergences,
        },
    }


def recheck(claim_id: str, record: dict) -> bool:
    """Re-evaluate a recorded counterexample or witness; True when the verdict reproduces."""
    claim = {c.id: c for c in theorem_registry()}[claim_id]
    inst = Instance.from_json(record["instance"])
    v = check_claim(claim, inst)
    return (
        v is not None
        and v.hypothesis == record["hypothesis"]
        and v.conclusion == record["conclusion"]
    )

