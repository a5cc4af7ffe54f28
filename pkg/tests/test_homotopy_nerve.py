import pytest

from ssetlab.categories import (
    CategoryError,
    FiniteCategory,
    Functor,
    category_iso_search,
    compose_functors,
    identity_functor,
    poset_category,
)
from ssetlab.homotopy import UnboundedCategoryError, ho_functor, is_cat_iso, is_isofibration, tau1
from ssetlab.lifting import is_inner_fibration, is_quasicategory
from ssetlab.limits import arrow_iso_search, iso_search
from ssetlab.nerve import has_chains_above, nerve_functor, nerve_truncated
from ssetlab.scenario import build_objects
from ssetlab.simplicial import SimplicialSet, boundary, horn, horn_inclusion, standard_simplex

ENV = build_objects()


def iso_pair():
    return FiniteCategory(["a", "b"], [("u", "a", "b"), ("v", "b", "a")], {("v", "u"): "id_a", ("u", "v"): "id_b"}, "IsoPair")


def idempotent():
    return FiniteCategory(["o"], [("e", "o", "o")], {("e", "e"): "e"}, "Idem")


def z2():
    return FiniteCategory(["o"], [("t", "o", "o")], {("t", "t"): "id_o"}, "Z2")


def z3():
    return FiniteCategory(
        ["o"], [("t", "o", "o"), ("t2", "o", "o")],
        {("t", "t"): "t2", ("t", "t2"): "id_o", ("t2", "t"): "id_o", ("t2", "t2"): "t"}, "Z3",
    )


def square(commutes):
    arrows = [("ab", "a", "b"), ("ac", "a", "c"), ("bd", "b", "d"), ("cd", "c", "d")]
    if commutes:
        arrows.append(("ad", "a", "d"))
        comp = {("bd", "ab"): "ad", ("cd", "ac"): "ad"}
    else:
        arrows += [("p", "a", "d"), ("q", "a", "d")]
        comp = {("bd", "ab"): "p", ("cd", "ac"): "q"}
    return FiniteCategory(["a", "b", "c", "d"], arrows, comp, "Square" if commutes else "NonSquare")


CATEGORIES = {
    "span": lambda: ENV["Span"],
    "ord0": lambda: poset_category(0),
    "ord1": lambda: poset_category(1),
    "ord2": lambda: poset_category(2),
    "ord3": lambda: poset_category(3),
    "iso-pair": iso_pair,
    "idempotent": idempotent,
    "z2": z2,
    "z3": z3,
    "square": lambda: square(True),
    "non-square": lambda: square(False),
}


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_fundamental_category_of_nerve_recovers_the_category(name):
    C = CATEGORIES[name]()
    assert C.is_valid()
    N = nerve_truncated(C, 3)
    assert N.validate().ok
    t = tau1(N)
    assert t.category.is_valid()
    F = category_iso_search(t.category, C)
    assert F is not None
    assert len(t.category.all_arrows()) == len(C.all_arrows())


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_nerves_are_quasicategories(name):
    C = CATEGORIES[name]()
    assert is_quasicategory(nerve_truncated(C, 4), 3)


def test_nerves_of_small_categories():
    assert iso_search(nerve_truncated(poset_category(2), 3), standard_simplex(2)) is not None
    assert iso_search(nerve_truncated(ENV["Span"], 2), horn(2, 0)) is not None
    assert not has_chains_above(ENV["Span"], 1)
    assert has_chains_above(poset_category(2), 1) and not has_chains_above(poset_category(2), 2)
    assert has_chains_above(iso_pair(), 10)


def test_nerve_of_a_functor():
    J = ENV["J"]
    NJ = nerve_functor(J, 2)
    assert arrow_iso_search(NJ, horn_inclusion(2, 0)) is not None
    assert is_inner_fibration(NJ, 3)


def test_tau1_examples():
    S = ENV["S"]
    t = tau1(S)
    assert t.category.objects == ("x", "y")
    assert len(t.category.all_arrows()) == 3
    labels = {str(k): v for k, v in t.labels.items()}
    assert labels["f"] == labels["g"] == "f"
    assert len(tau1(standard_simplex(1)).category.all_arrows()) == 3
    assert len(tau1(horn(2, 0)).category.all_arrows()) == 5
    spine = tau1(horn(2, 1)).category
    assert len(spine.all_arrows()) == 6 and spine.comp("12", "01") == "01*12"
    tri = tau1(boundary(2)).category
    assert len(tri.all_arrows()) == 7
    assert tri.comp("12", "01") != "02"
    assert category_iso_search(tau1(standard_simplex(3)).category, poset_category(3)) is not None


def test_tau1_of_a_circle_is_infinite():
    circle = SimplicialSet([["v"], ["e"]], {"e": ["v", "v"]}, name="Circle")
    with pytest.raises(UnboundedCategoryError) as err:
        tau1(circle, arrow_cap=20)
    assert set(err.value.word) == {"e"}


def test_ho_of_f_is_an_isomorphism_and_r_inverts_it():
    f, r = ENV["f"], ENV["r"]
    tD, tS = tau1(f.domain), tau1(f.codomain)
    F = ho_functor(f, tD, tS)
    R = ho_functor(r, tS, tD)
    assert is_cat_iso(F) and is_cat_iso(R)
    assert is_isofibration(F)
    assert compose_functors(R, F) == identity_functor(tD.category)
    assert compose_functors(F, R) == identity_functor(tS.category)
    alpha = ENV["alpha"]
    A = ho_functor(alpha, tau1(alpha.domain), tS)
    assert not is_cat_iso(A)


def test_isofibration_on_an_iso_pair():
    C = iso_pair()
    point = poset_category(0)
    collapse = Functor(C, point, {"a": "0", "b": "0"}, {"u": "id_0", "v": "id_0"})
    assert collapse.is_valid() and is_isofibration(collapse)
    include = Functor(point, C, {"0": "a"}, {})
    assert not is_isofibration(include)


def test_category_law_checks():
    bad = FiniteCategory(["o"], [("e", "o", "o")], {}, "Missing")
    assert any("missing" in p for p in bad.problems())
    nonassoc = FiniteCategory(
        ["o"], [("a", "o", "o"), ("b", "o", "o")],
        {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}, "NonAssoc",
    )
    assert any("associativity" in p for p in nonassoc.problems())
    with pytest.raises(CategoryError):
        FiniteCategory(["o"], [("e", "o", "p")])
    with pytest.raises(CategoryError):
        iso_pair().comp("u", "u")
