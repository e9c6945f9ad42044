import json
from fractions import Fraction as F

import pytest

from fuzztop import EndoFunction, InputError, materialize_chain, tau1_basis, tau2_basis
from fuzztop.oracle import (
    CLAIM_IDS,
    Instance,
    InstanceContext,
    check_claim,
    enumerate_instances,
    recheck,
    sweep,
    theorem_registry,
)

ASSERTED = {
    "Lemma2.4", "Lemma2.6(1)", "Lemma2.6(2)", "Thm2.7", "Thm2.8", "Ex2.9", "Thm2.10", "Thm2.11",
    "Ex2.12", "Thm2.13", "Lemma2.14", "Thm2.15", "Prop3.1", "Prop3.2", "Remark3.5", "Prop3.6",
    "Prop3.7", "Prop3.8", "Prop3.9", "Prop3.10", "Prop3.11", "Prop3.12", "Prop3.13", "Prop3.16",
    "Thm4.1", "Thm4.2", "Thm4.3",
}
REPORT_ONLY = {
    "Prop2.2", "Prop3.3", "Prop3.4", "Prop3.14", "Prop3.15", "Thm2.15-converse",
    "Thm4.1-converse", "Thm4.3-converse",
}


@pytest.fixture(scope="module")
def registry():
    return {c.id: c for c in theorem_registry()}


@pytest.fixture(scope="module")
def small_sweep():
    return sweep(3, (1, 2), 5)


def inst(mapping, space, window=5, x0=None, k=None):
    return Instance(EndoFunction.of(mapping), space, window, x0, k)


def test_registry_is_complete_and_unique(registry):
    ids = [c.id for c in theorem_registry()]
    assert len(ids) == len(set(ids))
    assert tuple(ids) == CLAIM_IDS
    assert {i for i, c in registry.items() if c.expectation == "asserted"} == ASSERTED
    assert {i for i, c in registry.items() if c.expectation == "report_only"} == REPORT_ONLY


def test_claim_examples(registry):
    v = check_claim(registry["Thm4.2"], inst([1, 2, 0], "tau3", x0=0, k=2))
    assert v.hypothesis and v.conclusion and v.agrees
    v = check_claim(registry["Lemma2.6(1)"], inst([1, 2, 0], "tau3", x0=0, k=2))
    assert v.hypothesis and v.conclusion and v.agrees
    v = check_claim(registry["Thm2.7"], inst([0, 1, 2], "tau1"))
    assert v.hypothesis and v.conclusion and v.agrees
    v = check_claim(registry["Thm2.10"], inst([0, 0, 0], "tau2"))
    assert not v.hypothesis and not v.conclusion and v.agrees
    v = check_claim(registry["Thm4.1-converse"], inst([0, 0], "tau1", window=8))
    assert v.hypothesis and not v.conclusion and not v.agrees


def test_inapplicable_instances_are_skipped(registry):
    assert check_claim(registry["Thm2.13"], inst([0, 0], "tau1")) is None
    assert check_claim(registry["Prop3.9"], inst([0], "tau2")) is None


def test_instance_validation():
    with pytest.raises(InputError):
        inst([0, 0], "tau3", x0=0, k=1)
    with pytest.raises(InputError):
        inst([0], "tau4")
    i = inst([1, 0], "tau3", x0=1, k=2)
    assert Instance.from_json(json.loads(json.dumps(i.to_json()))) == i


def test_sweep_counts():
    report = sweep(2, (1, 2, 3), 4)
    n_maps, n_tau3 = 1 + 4, 1 * 1 * 3 + 2 * 2 * 3
    assert report["params"]["instances"] == 2 * n_maps + n_tau3
    by_id = {c["id"]: c for c in report["claims"]}
    assert by_id["Thm2.7"]["instances"] == n_maps
    assert by_id["Thm2.13"]["instances"] == n_tau3
    assert by_id["Prop3.6"]["instances"] == 2 * n_maps + n_tau3


def test_thm41_converse_counterexample_at_size_two():
    report = sweep(2, (1,), 4)
    entry = next(c for c in report["claims"] if c["id"] == "Thm4.1-converse")
    ce = entry["counterexample"]
    assert ce["instance"]["f"] == [0, 0]
    f = EndoFunction.of([0, 0])
    a = materialize_chain(tau1_basis(f), 8)
    b = materialize_chain(tau2_basis(f), 8)
    assert a.key_set() == b.key_set()
    assert {s.grades for s in a} == {(0, 0)} | {(1, F(1, n)) for n in range(1, 9)}


def test_sweep_is_reproducible(small_sweep):
    assert json.dumps(small_sweep, sort_keys=True) == json.dumps(sweep(3, (2, 1), 5), sort_keys=True)


def test_counterexamples_are_minimal_and_recheck(small_sweep, registry):
    verdicts = {}
    for i in enumerate_instances(3, (1, 2), 5):
        ctx = InstanceContext(i)
        for c in registry.values():
            v = check_claim(c, ctx)
            if v is not None:
                verdicts.setdefault(c.id, []).append(v)
    for entry in small_sweep["claims"]:
        cid = entry["id"]
        if entry["direction"] == "exists":
            first = min((v for v in verdicts[cid] if v.agrees), key=lambda v: v.instance.key())
            assert Instance.from_json(entry["witness"]["instance"]) == first.instance
            assert recheck(cid, entry["witness"])
            continue
        failing = [v for v in verdicts[cid] if not v.agrees]
        if entry["counterexample"] is None:
            assert not failing
            continue
        least = min(failing, key=lambda v: v.instance.key())
        assert Instance.from_json(entry["counterexample"]["instance"]) == least.instance
        assert recheck(cid, entry["counterexample"])


def test_sweep_guards():
    with pytest.raises(InputError, match="instances"):
        sweep(7, (1,), 9)
    with pytest.raises(InputError, match="window"):
        sweep(3, (1,), 4)
    with pytest.raises(InputError):
        sweep(2, (0,), 4)


def test_report_only_records(small_sweep):
    by_id = {c["id"]: c for c in small_sweep["claims"]}
    assert by_id["Prop3.15"]["by_k"]["1"]["agreements"] < by_id["Prop3.15"]["by_k"]["1"]["instances"]
    assert by_id["Prop3.15"]["by_k"]["2"]["agreements"] == by_id["Prop3.15"]["by_k"]["2"]["instances"]
    assert by_id["Prop2.2"]["counterexample"] is not None
    assert by_id["Prop2.2"]["counterexample"]["evidence"]["sup_of_complements"]


def test_known_gaps_in_asserted_claims(small_sweep):
    """The asserted claims that fail have genuine, independently checkable counterexamples."""
    by_id = {c["id"]: c for c in small_sweep["claims"]}
    failing = {c["id"] for c in small_sweep["claims"] if c["expectation"] == "asserted" and c["counterexample"]}
    assert failing == {"Lemma2.6(2)", "Prop3.16", "Thm4.2"}

    # a fixed base point puts no 1/k grade anywhere, so tau3 is crisp for k = 2
    ce = by_id["Lemma2.6(2)"]["counterexample"]["instance"]
    assert ce == {"size": 1, "f": [0], "space": "tau3", "window": 5, "x0": 0, "k": 2}

    # on the 2-cycle, (0, 1/2) and (1/2, 0) are disjoint closed sets but all nonempty opens meet
    ce = by_id["Prop3.16"]["counterexample"]
    assert ce["instance"]["f"] == [1, 0] and ce["instance"]["k"] == 2
    assert ce["evidence"]["witness"] == {"closed": [["0", "1/2"], ["1/2", "0"]]}

    # on a single point both topologies are {∅, X}
    ce = by_id["Thm4.2"]["counterexample"]["instance"]
    assert ce["f"] == [0] and ce["k"] == 1
