import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import all_bijections, all_maps, endofunctions, fs
from fuzztop import (
    Carrier,
    EndoFunction,
    FuzzySet,
    InputError,
    PreconditionError,
    SampledMap,
    generate_topology,
    intersection,
    j_partition,
    leq,
    materialize_chain,
    orbit_data,
    profile,
    tau1_basis,
    tau1_complement_basis,
    tau2_basis,
    tau3_basis,
    tau3_topology,
)
from fuzztop.constructions import GradeLaw, join_laws

EXAMPLE_K = [
    (1, 1, 1, 1, 1),
    (1, F(1, 2), F(1, 2), 1, 1),
    (1, F(1, 3), F(1, 3), F(2, 3), F(2, 3)),
]


def brute_closure(sets, carrier):
    """Independent closure: repeat all pairwise max/min until nothing new appears."""
    family = {s.grades for s in sets} | {(F(0),) * carrier.size, (F(1),) * carrier.size}
    while True:
        new = set(family)
        for a, b in itertools.product(family, repeat=2):
            new.add(tuple(map(max, a, b)))
            new.add(tuple(map(min, a, b)))
        if new == family:
            return family
        family = new


def brute_periodic(f):
    out = set()
    for x in f.carrier:
        y = x
        for _ in range(f.carrier.size):
            y = f(y)
            if y == x:
                out.add(x)
    return out


# ---------------------------------------------------------------- profile / partition


def test_profile_examples(example_map):
    p = profile(EndoFunction.identity(3))
    assert p.onto and p.periodic == {0, 1, 2} and p.all_periodic
    p = profile(EndoFunction.of([0, 0, 0]))
    assert not p.onto and p.periodic == {0}
    p = profile(example_map)
    assert p.periodic == {0} and not p.onto and not p.injective


def test_j_partition_examples(example_map):
    jp = j_partition(EndoFunction.of([1, 2, 0]))
    assert jp.core == {0, 1, 2} and jp.shells == ()
    jp = j_partition(example_map)
    assert jp.core == {0}
    assert jp.shells == (frozenset({1, 2}), frozenset({3, 4}))
    assert jp.index_of == (0, 1, 1, 2, 2)
    jp = j_partition(EndoFunction.of([0, 0]))
    assert jp.core == {0} and jp.shells == (frozenset({1}),)


def test_core_equals_periodic_points_exhaustively():
    for f in all_maps(5):
        assert j_partition(f).core == profile(f).periodic == brute_periodic(f)


@given(endofunctions(6))
def test_shell_numbers_increase_along_f(f):
    idx = j_partition(f).index_of
    for x in f.carrier:
        if idx[x] == 0:
            assert idx[f(x)] == 0
        else:
            assert idx[f(x)] == 0 or idx[f(x)] > idx[x]
    jp = j_partition(f)
    assert len(jp.shells) <= f.carrier.size
    assert set().union(jp.core, *jp.shells) == set(f.carrier)


def test_endofunction_validation():
    with pytest.raises(InputError):
        EndoFunction.of([0, 2])
    with pytest.raises(InputError):
        EndoFunction(Carrier(2), (0,))


# ---------------------------------------------------------------- chain bases


def test_tau2_grades_on_a_five_point_map(example_map):
    k = tau2_basis(example_map)
    for n, expected in enumerate(EXAMPLE_K, start=1):
        assert k.member(n).grades == expected


def test_tau2_on_the_sampled_successor_map():
    # f(1) = 1, f(n) = n + 2 sampled at 1..5 gives the shells 0, 1, 1, 2, 2
    sampled = SampledMap(Carrier(5, ("1", "2", "3", "4", "5")), frozenset({0}), (0, 1, 1, 2, 2))
    k = tau2_basis(sampled)
    for n, expected in enumerate(EXAMPLE_K, start=1):
        assert k.member(n).grades == expected


def test_tau2_chain_is_decreasing(example_map):
    k = tau2_basis(example_map)
    assert leq(k.member(3), k.member(2)) and leq(k.member(2), k.member(1))
    assert not leq(k.member(1), k.member(2))
    assert intersection(k.member(2), k.member(3)) == k.member(3)


def test_tau1_basis_grades():
    a = tau1_basis(EndoFunction.of([1, 2, 0]))
    assert all(a.member(n).is_whole() for n in range(1, 6))
    a = tau1_basis(EndoFunction.of([0, 0]))
    assert a.member(3) == fs(1, F(1, 3))
    assert leq(a.member(3), a.member(2))
    assert intersection(a.member(2), a.member(3)) == a.member(3) == fs(1, F(1, 3))


def test_tau1_complement_needs_no_periodic_points():
    for f in all_maps(3):
        with pytest.raises(PreconditionError, match="periodic"):
            tau1_complement_basis(f)
    c = tau1_complement_basis(SampledMap.successor(3))
    half = (F(1, 2),) * 3
    assert c.member(2).grades == half
    assert intersection(c.member(2), c.member(3)).grades == half
    assert c.contains(FuzzySet.whole(c.carrier))


def test_chain_membership_is_exact(example_map):
    k = tau2_basis(example_map)
    for n in range(1, 30):
        assert k.contains(k.member(n))
    assert k.contains(FuzzySet.empty(k.carrier))
    assert not k.contains(fs(1, F(1, 2), F(1, 3), 1, 1))
    assert not k.contains(fs(1, F(2, 5), F(2, 5), F(4, 5), F(3, 5)))


def test_join_laws():
    assert join_laws([]) == GradeLaw("zero")
    assert join_laws([GradeLaw("ratio", 1), GradeLaw("ratio", 3)]) == GradeLaw("ratio", 3)
    assert join_laws([GradeLaw("ratio", 1), GradeLaw("one")]) == GradeLaw("one")
    with pytest.raises(InputError):
        join_laws([GradeLaw("coratio"), GradeLaw("one")])


@given(endofunctions(5))
def test_first_outside_matches_brute_force(f):
    # compare the closed-form escape index with a direct scan far past the tail
    for a in (tau1_basis(f), tau2_basis(f)):
        for b in (tau1_basis(f), tau2_basis(f)):
            n = b.first_outside(a.laws)
            scan = next((m for m in range(1, 200) if not b.contains(a.member(m))), None)
            assert n == scan


# ---------------------------------------------------------------- materialization


def test_materialize_examples(example_map):
    for f in all_bijections(3):
        assert {s.grades for s in materialize_chain(tau1_basis(f), 5)} == {
            (F(0),) * f.carrier.size,
            (F(1),) * f.carrier.size,
        }
    t = materialize_chain(tau1_basis(EndoFunction.of([0, 0])), 3)
    assert {s.grades for s in t} == {(0, 0), (1, 1), (1, F(1, 2)), (1, F(1, 3))}
    t = materialize_chain(tau2_basis(example_map), 3)
    assert {s.grades for s in t} == {(0,) * 5} | set(EXAMPLE_K)


def test_onto_maps_give_indiscrete_tau2():
    for f in all_bijections(4):
        for w in (1, 3, 8):
            assert len(materialize_chain(tau2_basis(f), w)) == 2


# ---------------------------------------------------------------- tau3


def test_orbit_examples():
    o = orbit_data(EndoFunction.identity(3), 0, 1)
    assert o.orbit == (0,) and o.length == 1
    o = orbit_data(EndoFunction.of([1, 2, 0]), 0, 2)
    assert o.orbit == (0, 1, 2) and o.off_orbit == frozenset()
    o = orbit_data(EndoFunction.of([1, 0, 2]), 0, 2)
    assert o.orbit == (0, 1) and o.off_orbit == {2}


def test_orbit_rejects_non_injective_maps_and_bad_k():
    with pytest.raises(PreconditionError, match="one-to-one"):
        orbit_data(EndoFunction.of([0, 0]), 0, 1)
    with pytest.raises(InputError):
        orbit_data(EndoFunction.identity(2), 0, 0)


def test_tau3_basis_postconditions():
    for f in all_bijections(4):
        for x0 in f.carrier:
            for k in (1, 2, 3):
                o = orbit_data(f, x0, k)
                c, cn = tau3_basis(o)
                assert len(cn) == o.length
                assert c.support() == o.off_orbit
                for n, s in enumerate(cn):
                    peak = o.orbit[n]
                    for x in f.carrier:
                        if x == peak:
                            assert s[x] == 1
                        elif x in o.orbit:
                            assert s[x] == F(1, k)
                        else:
                            assert s[x] == 0
                # C is empty exactly when the orbit is everything
                assert c.is_empty() == (o.length == f.carrier.size)


def test_tau3_grades_are_crisp_for_k_one_or_a_fixed_base_point():
    for f in all_bijections(4):
        for x0 in f.carrier:
            for k in (1, 2, 3):
                t = tau3_topology(orbit_data(f, x0, k))
                crisp = all(s.is_crisp() for s in t)
                assert crisp == (k == 1 or f(x0) == x0)


def test_closure_of_the_three_cycle_basis():
    t = tau3_topology(orbit_data(EndoFunction.of([1, 2, 0]), 0, 2))
    h = F(1, 2)
    expected = {
        (0, 0, 0), (1, 1, 1),
        (1, h, h), (h, 1, h), (h, h, 1),
        (1, 1, h), (1, h, 1), (h, 1, 1),
        (h, h, h),
    }
    assert {s.grades for s in t} == expected
    assert len(t) == 9
    c, cn = tau3_basis(orbit_data(EndoFunction.of([1, 2, 0]), 0, 2))
    assert {s.grades for s in t} == brute_closure((c,) + cn, t.carrier)


def test_closure_with_an_off_orbit_point():
    t = tau3_topology(orbit_data(EndoFunction.of([1, 0, 2]), 0, 2))
    h = F(1, 2)
    keys = {s.grades for s in t}
    assert {(0, 0, 1), (1, h, 0), (h, 1, 0), (1, h, 1), (h, 1, 1), (h, h, 0)} <= keys


def test_generated_topologies_are_closed_and_match_brute_force():
    for f in all_bijections(4):
        for x0 in f.carrier:
            for k in (1, 2):
                o = orbit_data(f, x0, k)
                c, cn = tau3_basis(o)
                t = tau3_topology(o)
                assert {s.grades for s in t} == brute_closure((c,) + cn, f.carrier)
                again = generate_topology(t.opens, f.carrier)
                assert again.key_set() == t.key_set()


def test_generate_topology_examples_and_errors():
    whole = FuzzySet.whole(Carrier(2))
    assert {s.grades for s in generate_topology([whole])} == {(0, 0), (1, 1)}
    with pytest.raises(InputError, match="cover"):
        generate_topology([fs(1, F(1, 2))])
