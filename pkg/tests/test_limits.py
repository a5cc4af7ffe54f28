import warnings

import pytest

from ssetlab.hom import enumerate_maps
from ssetlab.limits import (
    CapWarning,
    PreconditionError,
    arrow_iso_search,
    iso_search,
    iso_under,
    iter_isos,
    pullback,
    pushout_along_mono,
)
from ssetlab.monotone import MonotoneMap
from ssetlab.scenario import PUSHOUT_NAMES, build_objects, hand_built_S
from ssetlab.simplicial import (
    MapError,
    compose_maps,
    horn,
    horn_inclusion,
    identity_map,
    is_monomorphism,
    simplex_map,
    standard_simplex,
    terminal_map,
)

from oracles import oracle_hom

ENV = build_objects()
TESTS = [standard_simplex(0), standard_simplex(1), standard_simplex(2), hand_built_S()]


def _key(m):
    return tuple(sorted((g, str(r)) for g, r in m.assignment.items()))


def _vertex(v):
    return simplex_map(MonotoneMap((v,), 1))


PUSHOUTS = {
    "collapse-edge": (ENV["d2"], ENV["bang"]),
    "inner-horn": (horn_inclusion(2, 1), ENV["h"]),
    "wedge": (_vertex(1), _vertex(0)),
    "outer-horn": (horn_inclusion(2, 0), identity_map(horn(2, 0))),
}


@pytest.mark.parametrize("case", sorted(PUSHOUTS))
def test_pushout_universal_property(case):
    i, u = PUSHOUTS[case]
    po = pushout_along_mono(i, u)
    P = po.object
    assert P.validate().ok
    # the square commutes
    assert compose_maps(po.from_mono_cod, i).assignment == compose_maps(po.from_right_leg, u).assignment
    assert is_monomorphism(po.from_right_leg)
    for T in TESTS:
        cocones = []
        for b in oracle_hom(i.codomain, T):
            bi = compose_maps(b, i).assignment
            for c in oracle_hom(u.codomain, T):
                if compose_maps(c, u).assignment == bi:
                    cocones.append((_key(b), _key(c)))
        maps = enumerate_maps(P, T)
        restricted = [(_key(compose_maps(h, po.from_mono_cod)), _key(compose_maps(h, po.from_right_leg))) for h in maps]
        # Hom(P, T) -> cocones is a bijection
        assert len(set(restricted)) == len(restricted)
        assert sorted(restricted) == sorted(cocones)


def test_pushout_builds_S():
    po = pushout_along_mono(ENV["d2"], ENV["bang"], names=PUSHOUT_NAMES, name="S")
    assert po.object == hand_built_S()
    assert po.naming[("C", "0")] == "x" and po.naming[("B", "012")] == "alpha"
    inner = pushout_along_mono(horn_inclusion(2, 1), ENV["h"])
    psi = iso_under(inner.from_right_leg, ENV["g"])
    assert psi is not None
    assert compose_maps(psi, inner.from_right_leg) == ENV["g"]
    # the leg is g; no automorphism of S exchanges f and g
    assert iso_under(inner.from_right_leg, ENV["f"]) is None


def test_pushout_preconditions():
    with pytest.raises(PreconditionError):
        pushout_along_mono(ENV["bang"], ENV["bang"])
    with pytest.raises(MapError):
        pushout_along_mono(ENV["d2"], ENV["h"])


def test_pushout_renames_clashes():
    a = _vertex(0)
    po = pushout_along_mono(a, a)
    assert sorted(po.object.gens(0)) == ["0", "1", "1'"]


PULLBACKS = {
    "f-along-alpha": (ENV["f"], ENV["alpha"]),
    "product-1x1": (terminal_map(standard_simplex(1)), terminal_map(standard_simplex(1))),
    "product-1x2": (terminal_map(standard_simplex(1)), terminal_map(standard_simplex(2))),
    "intersection": (ENV["d1"], ENV["d2"]),
    "fibre-of-r": (ENV["r"], _vertex(1)),
}


@pytest.mark.parametrize("case", sorted(PULLBACKS))
def test_pullback_universal_property(case):
    p, q = PULLBACKS[case]
    pb = pullback(p, q)
    Q = pb.object
    assert Q.validate().ok
    assert compose_maps(p, pb.proj_left).assignment == compose_maps(q, pb.proj_right).assignment
    # levelwise: n-simplices are matching pairs
    for n in range(5):
        pairs = {(x, y) for x in p.domain.simplices(n) for y in q.domain.simplices(n) if p.apply(x) == q.apply(y)}
        got = [(pb.proj_left.apply(z), pb.proj_right.apply(z)) for z in Q.simplices(n)]
        assert len(set(got)) == len(got)
        assert set(got) == pairs
    # and for a test object that is not representable
    T = hand_built_S()
    cones = [
        (_key(a), _key(b))
        for a in oracle_hom(T, p.domain)
        for b in oracle_hom(T, q.domain)
        if compose_maps(p, a).assignment == compose_maps(q, b).assignment
    ]
    maps = enumerate_maps(T, Q)
    got = [(_key(compose_maps(pb.proj_left, h)), _key(compose_maps(pb.proj_right, h))) for h in maps]
    assert sorted(got) == sorted(cones)


def test_product_census():
    D1 = standard_simplex(1)
    pb = pullback(terminal_map(D1), terminal_map(D1))
    assert pb.object.census() == (4, 5, 2)
    D2 = standard_simplex(2)
    assert pullback(terminal_map(D1), terminal_map(D2)).object.census() == (6, 12, 10, 3)


def test_pullback_of_f_along_alpha_is_the_outer_horn():
    pb = pullback(ENV["f"], ENV["alpha"])
    assert pb.object.census() == (3, 2)
    assert pb.object.all_generators() == ["0~0", "0~1", "1~2", "01~02", "0^00~01"]
    assert arrow_iso_search(pb.proj_right, horn_inclusion(2, 0)) is not None
    assert arrow_iso_search(pb.proj_right, horn_inclusion(2, 1)) is None


def test_pullback_cap_warning():
    with pytest.warns(CapWarning):
        pb = pullback(terminal_map(standard_simplex(1)), terminal_map(standard_simplex(1)), cap=1)
    assert pb.object.census() == (4, 5)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        pullback(ENV["f"], ENV["alpha"])
    with pytest.raises(MapError):
        pullback(ENV["f"], ENV["d1"])


def test_isomorphism_search():
    S = ENV["S"]
    m, inv = iso_search(S, hand_built_S())
    assert compose_maps(inv, m) == identity_map(S)
    assert iso_search(standard_simplex(1), horn(2, 0)) is None
    assert iso_search(horn(2, 0), horn(2, 1)) is None
    autos = list(iter_isos(horn(2, 1), horn(2, 1)))
    assert len(autos) == 1
    D1 = standard_simplex(1)
    two_points = pushout_along_mono(_vertex(0), terminal_map(standard_simplex(0))).object
    assert len(list(iter_isos(two_points, two_points))) == 1
    assert len(list(iter_isos(D1, D1))) == 1
