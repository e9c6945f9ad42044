from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from conftest import all_bijections, all_maps, endofunctions, fs, fuzzy_sets
from fuzztop import (
    EndoFunction,
    FuzzySet,
    intersection,
    is_continuous,
    is_open_map,
    leq,
    map_report,
    materialize_chain,
    orbit_data,
    tau1_basis,
    tau2_basis,
    tau3_basis,
    tau3_topology,
    union,
    zadeh_image,
    zadeh_preimage,
)

CONST3 = EndoFunction.of([0, 0, 0])
CYCLE3 = EndoFunction.of([1, 2, 0])


@st.composite
def map_and_sets(draw):
    f = draw(endofunctions(4))
    n = f.carrier.size
    a, b = draw(fuzzy_sets(n)), draw(fuzzy_sets(n))
    return f, FuzzySet(f.carrier, a.grades), FuzzySet(f.carrier, b.grades)


def test_image_examples():
    empty = FuzzySet.empty(CONST3.carrier)
    assert zadeh_image(CONST3, empty) == empty
    assert zadeh_image(CONST3, FuzzySet.whole(CONST3.carrier)) == fs(1, 0, 0)
    c0 = fs(1, F(1, 2), F(1, 2))
    assert zadeh_image(CYCLE3, c0) == fs(F(1, 2), 1, F(1, 2))


def test_preimage_examples():
    whole = FuzzySet.whole(CONST3.carrier)
    assert zadeh_preimage(CONST3, whole) == whole
    assert zadeh_preimage(CONST3, fs(1, F(1, 2), F(1, 2))) == whole
    for f in all_bijections(4):
        for x0 in f.carrier:
            c, _ = tau3_basis(orbit_data(f, x0, 2))
            assert zadeh_preimage(f, c) == c


def test_identity_is_open_and_continuous_everywhere():
    f = EndoFunction.identity(3)
    for t in (tau1_basis(f), tau2_basis(f), tau3_topology(orbit_data(f, 0, 2))):
        assert is_open_map(f, t)[0] and is_continuous(f, t)[0]


def test_constant_map_reports():
    ok, w = is_open_map(CONST3, tau2_basis(CONST3))
    assert not ok and w.source.is_whole() and w.result == fs(1, 0, 0)
    r = map_report(CONST3, tau1_basis(CONST3))
    assert (r.open_map, r.continuous) == (False, True)
    r = map_report(CONST3, tau2_basis(CONST3))
    assert (r.open_map, r.continuous) == (False, True)
    for n in range(1, 9):
        assert zadeh_preimage(CONST3, tau1_basis(CONST3).member(n)).is_whole()
        assert zadeh_preimage(CONST3, tau2_basis(CONST3).member(n)).is_whole()


def test_bijections_shift_the_orbit_sets():
    for f in all_bijections(4):
        for x0 in f.carrier:
            for k in (1, 2, 3):
                o = orbit_data(f, x0, k)
                c, cn = tau3_basis(o)
                assert zadeh_image(f, c) == c
                for n, s in enumerate(cn):
                    assert zadeh_image(f, s) == cn[(n + 1) % o.length]
                assert is_open_map(f, tau3_topology(o))[0]


def test_witnesses_recheck():
    for f in all_maps(3):
        for t in (tau1_basis(f), tau2_basis(f)):
            r = map_report(f, t, 6)
            explicit = materialize_chain(t, 6)
            for kind, w in r.witnesses.items():
                op = zadeh_image if kind == "open_map" else zadeh_preimage
                assert t.contains(w.source)
                assert op(f, w.source) == w.result
                assert not t.contains(w.result)
                if w.index is not None and w.index <= 6:
                    assert not explicit.contains(w.result)


def test_basis_check_agrees_with_exhaustive_check():
    for f in all_bijections(3):
        for x0 in f.carrier:
            for k in (1, 2):
                t = tau3_topology(orbit_data(f, x0, k))
                for g in all_maps(f.carrier.size):
                    if g.carrier.size != f.carrier.size:
                        continue
                    for check in (is_open_map, is_continuous):
                        assert check(g, t)[0] == check(g, t, exhaustive=True)[0]


@given(map_and_sets())
def test_image_preimage_adjunction(data):
    f, a, b = data
    assert leq(zadeh_image(f, a), b) == leq(a, zadeh_preimage(f, b))


@given(map_and_sets())
def test_image_commutes_with_union(data):
    f, a, b = data
    assert zadeh_image(f, union(a, b)) == union(zadeh_image(f, a), zadeh_image(f, b))


@given(map_and_sets())
def test_preimage_commutes_with_union_and_intersection(data):
    f, a, b = data
    assert zadeh_preimage(f, union(a, b)) == union(zadeh_preimage(f, a), zadeh_preimage(f, b))
    assert zadeh_preimage(f, intersection(a, b)) == intersection(
        zadeh_preimage(f, a), zadeh_preimage(f, b)
    )


@given(map_and_sets())
def test_bijection_image_inverts_preimage(data):
    f, a, _ = data
    if f.is_injective():
        assert zadeh_image(f, zadeh_preimage(f, a)) == a
        assert zadeh_preimage(f, zadeh_image(f, a)) == a
    else:
        assert leq(zadeh_image(f, zadeh_preimage(f, a)), a)
        assert leq(a, zadeh_preimage(f, zadeh_image(f, a)))
