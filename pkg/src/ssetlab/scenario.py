"""The counterexample: a map Delta^1 -> S that is a monomorphism, bijective
on vertices, a weak categorical equivalence and an inner fibration, yet not
inner anodyne and not a Joyal fibration.

``S`` is Delta^2 with its edge 01 collapsed to a point: vertices x, y;
edges f (= 02) and g (= 12) from x to y; one 2-simplex alpha with
``d0 alpha = g``, ``d1 alpha = f`` and ``d2 alpha = s0 x``.
"""

from __future__ import annotations

import time

from .categories import FiniteCategory, Functor, poset_category
from .certificates import (
    HO_ISO,
    INNER_ANODYNE,
    INNER_FIBRATION,
    NOT_FIBRATION,
    NOT_INNER_ANODYNE,
    WCE,
    Certificate,
    check_certificate,
    node,
)
from .hom import enumerate_maps
from .homotopy import ho_functor, is_cat_iso, is_isofibration, tau1
from .limits import arrow_iso_search, iso_search, pullback, pushout_along_mono
from .report import Report, ReportItem
from .lifting import (
    fill_inner_horns,
    has_rlp,
    is_inner_fibration,
    is_isomorphism,
    is_levelwise_epi,
    is_quasicategory,
)
from .simplicial import (
    SimplicialMap,
    SimplicialSet,
    bijective_on_vertices,
    coface_map,
    compose_maps,
    horn,
    horn_inclusion,
    identity_map,
    is_monomorphism,
    nondeg,
    standard_simplex,
    terminal_map,
)

PUSHOUT_NAMES = {"0": "x", "2": "y", "02": "f", "12": "g", "012": "alpha"}


def hand_built_S() -> SimplicialSet:
    return SimplicialSet(
        [["x", "y"], ["f", "g"], ["alpha"]],
        {"f": ["y", "x"], "g": ["y", "x"], "alpha": ["g", "f", ("x", (0, 0))]},
        name="S",
    )


def corrupted_S() -> SimplicialSet:
    """S with ``d2 alpha`` rewired to ``s0 y``; breaks a simplicial identity."""
    return SimplicialSet(
        [["x", "y"], ["f", "g"], ["alpha"]],
        {"f": ["y", "x"], "g": ["y", "x"], "alpha": ["g", "f", ("y", (0, 0))]},
        name="S",
    )


def build_objects() -> dict:
    """Every object and map of the counterexample, keyed by name."""
    D0, D1, D2 = standard_simplex(0), standard_simplex(1), standard_simplex(2)
    d0, d1, d2 = coface_map(2, 0), coface_map(2, 1), coface_map(2, 2)
    bang = terminal_map(D1)
    po = pushout_along_mono(d2, bang, names=PUSHOUT_NAMES, name="S")
    S = po.object
    alpha = po.from_mono_cod.named("alpha")
    x = po.from_right_leg.named("x")
    f = compose_maps(alpha, d1).named("f")
    g = compose_maps(alpha, d0).named("g")
    r = SimplicialMap(S, D1, {"x": "0", "y": "1", "f": "01", "g": "01", "alpha": ("01", (0, 0, 1))}, name="r")
    H21 = horn(2, 1)
    h = SimplicialMap(H21, D1, {"0": "0", "1": "0", "2": "1", "01": ("0", (0, 0)), "12": "01"}, name="h")
    span = FiniteCategory(["0", "1", "2"], [("01", "0", "1"), ("02", "0", "2")], {}, name="Span")
    ord2 = poset_category(2, name="Ord2")
    J = Functor(span, ord2, {"0": "0", "1": "1", "2": "2"}, {"01": "01", "02": "02"}, name="J")
    objs = {
        "Delta0": D0,
        "Delta1": D1,
        "Delta2": D2,
        "Horn2_0": horn(2, 0),
        "Horn2_1": H21,
        "S": S,
        "d0": d0,
        "d1": d1,
        "d2": d2,
        "bang": bang,
        "alpha": alpha,
        "x": x,
        "f": f,
        "g": g,
        "r": r,
        "h": h,
        "id_Delta1": identity_map(D1),
        "id_S": identity_map(S),
        "incl_Horn2_0": horn_inclusion(2, 0),
        "incl_Horn2_1": horn_inclusion(2, 1),
        "Span": span,
        "Ord2": ord2,
        "J": J,
    }
    return objs


def wce_certificate() -> Certificate:
    """f is a weak categorical equivalence: g is a pushout of an inner horn,
    r retracts both f and g, then two-out-of-three twice."""
    return Certificate(
        "f_weak_equivalence",
        (
            node("g_anodyne", "R1", INNER_ANODYNE, "g", n=2, k=1, along="h"),
            node("g_wce", "R2", WCE, "g", ["g_anodyne"]),
            node("id_wce", "R9", WCE, "id_Delta1"),
            node("r_wce", "R3", WCE, "r", ["g_wce", "id_wce"], first="g", second="r", composite="id_Delta1"),
            node("f_wce", "R3", WCE, "f", ["r_wce", "id_wce"], first="f", second="r", composite="id_Delta1"),
        ),
        "f_wce",
    )


def inner_fibration_certificate() -> Certificate:
    return Certificate(
        "f_inner_fibration",
        (
            node("horn_fib", "R4", INNER_FIBRATION, "incl_Horn2_0", functor="J", dim=2),
            node("f_fib", "R5", INNER_FIBRATION, "f", ["horn_fib"], base="alpha"),
        ),
        "f_fib",
    )


def not_anodyne_certificate() -> Certificate:
    base = inner_fibration_certificate()
    return Certificate(
        "f_not_inner_anodyne",
        base.nodes + (node("f_not_anodyne", "R6", NOT_INNER_ANODYNE, "f", ["f_fib"]),),
        "f_not_anodyne",
    )


def not_fibration_certificate() -> Certificate:
    base = wce_certificate()
    return Certificate(
        "f_not_fibration",
        base.nodes + (node("f_not_fib", "R8", NOT_FIBRATION, "f", ["f_wce"]),),
        "f_not_fib",
    )


def ho_iso_certificate() -> Certificate:
    return Certificate("f_ho_iso", (node("f_ho", "HO", HO_ISO, "f"),), "f_ho")


def filling_certificate(subject: str, dim: int, steps: int) -> Certificate:
    return Certificate(
        "j_inner_anodyne",
        (node("j_anodyne", "R1", INNER_ANODYNE, subject, fill_dim=dim, fill_steps=steps),),
        "j_anodyne",
    )


def paper_certificates() -> dict[str, Certificate]:
    return {
        c.name: c
        for c in (
            wce_certificate(),
            inner_fibration_certificate(),
            not_anodyne_certificate(),
            not_fibration_certificate(),
            ho_iso_certificate(),
        )
    }


# -- the report ----------------------------------------------------------------


def map_table(m: SimplicialMap) -> dict:
    return {g: str(r) for g, r in m.assignment.items()}


def horn_faces(u: SimplicialMap, n: int) -> dict:
    """Images of the (n-1)-faces of a horn map, keyed ``d{i}``."""
    out = {}
    for g, r in u.assignment.items():
        if len(g) == n:
            missing = (set(range(n + 1)) - {int(c) for c in g}).pop()
            out[f"d{missing}"] = str(r)
    return dict(sorted(out.items()))


class _Run:
    def __init__(self, report: Report):
        self.report = report

    def item(self, name, claim, fn):
        t = time.perf_counter()
        try:
            ok, witness, bounded, detail = fn()
        except Exception as exc:  # a crash is a failed item, reported as such
            ok, witness, bounded, detail = False, None, False, f"{type(exc).__name__}: {exc}"
        self.report.items.append(
            ReportItem(name, claim, "accepted" if ok else "rejected", witness, bounded, detail, time.perf_counter() - t)
        )
        return ok


def paper_scenario(
    max_dim: int = 4,
    fill_dim: int = 3,
    fill_steps: int = 2,
    fixture: SimplicialSet | None = None,
) -> Report:
    """Rebuild the counterexample and check every claim made about it.

    ``max_dim`` bounds the direct inner-horn checks; the certificates do
    not depend on it.  ``fixture`` is a hand-built S to compare against
    the pushout (defaults to :func:`hand_built_S`).
    """
    report = Report(params={"max_dim": max_dim, "fill_dim": fill_dim, "fill_steps": fill_steps})
    run = _Run(report)
    fixture = fixture if fixture is not None else hand_built_S()

    def valid():
        rep = fixture.validate()
        return rep.ok, None, False, "" if rep.ok else "; ".join(map(str, rep.violations))

    if not run.item("S-valid", "the hand-built S satisfies the simplicial identities", valid):
        return report

    env = build_objects()
    S, f, g, r, alpha = env["S"], env["f"], env["g"], env["r"], env["alpha"]
    D1 = env["Delta1"]

    def census():
        faces = [str(x) for x in S.faces["alpha"]]
        ok = (
            S.census() == (2, 2, 1)
            and faces == ["g", "f", "x@[0,0]"]
            and iso_search(S, fixture) is not None
        )
        return ok, {"census": list(S.census()), "alpha": {"d0": faces[0], "d1": faces[1], "d2": faces[2]}}, False, "pushout of Delta^1 -> Delta^0 along d2, isomorphic to the fixture"

    run.item("S-census", "S has 2 vertices, 2 edges and one 2-simplex with d2 = s0 x", census)
    run.item("f-monomorphism", "f is a monomorphism", lambda: (is_monomorphism(f), None, False, ""))
    run.item("f-bijective-on-vertices", "f is bijective on 0-simplices", lambda: (bijective_on_vertices(f), None, False, ""))

    def wce():
        ident = identity_map(D1)
        retracts = compose_maps(r, f) == ident and compose_maps(r, g) == ident
        v = check_certificate(wce_certificate(), env)
        return v.accepted and retracts, None, v.bounded, v.reason or "r o f = r o g = id; g is a pushout of Lambda^2_1 -> Delta^2"

    run.item("f-weak-equivalence", "f is a weak categorical equivalence (certificate)", wce)

    def fib():
        v = check_certificate(inner_fibration_certificate(), env)
        return v.accepted, None, v.bounded, v.reason or "pullback along the epimorphism alpha is Lambda^2_0 -> Delta^2, a map of nerves"

    run.item("f-inner-fibration", "f is an inner fibration (certificate)", fib)

    def fib_direct():
        pb = pullback(f, alpha)
        iso = arrow_iso_search(pb.proj_right, env["incl_Horn2_0"]) is not None
        res = is_inner_fibration(f, max_dim)
        horns = [{"n": n, "k": k, "squares": c} for n, k, c in res.horns]
        ok = iso and is_levelwise_epi(alpha, 2) and res.holds
        return ok, {"horns": horns}, True, f"direct lifting check for inner horns with n <= {max_dim} only"

    run.item("f-inner-fibration-direct", "f lifts against every inner horn up to the bound", fib_direct)

    def not_anodyne():
        v = check_certificate(not_anodyne_certificate(), env)
        return v.accepted and not is_isomorphism(f), None, v.bounded, v.reason or "inner fibration, not an isomorphism"

    run.item("f-not-inner-anodyne", "f is not inner anodyne (certificate)", not_anodyne)

    def no_self_lift():
        res = has_rlp(f, f)
        homs = len(enumerate_maps(S, D1))
        ok = not res.holds and homs == 3 and res.witness is not None
        w = None
        if res.witness:
            u, v = res.witness
            w = {"u": map_table(u), "v": map_table(v), "hom_S_Delta1": homs,
                 "u_is_identity": u == identity_map(D1), "v_is_identity": v == identity_map(S)}
        return ok, w, False, "no filler for the square (id, id) of f against itself"

    run.item("f-no-self-lift", "f does not lift against itself", no_self_lift)

    def left_cancellation():
        tr = fill_inner_horns(S, fill_dim, fill_steps)
        env2 = dict(env)
        env2["j"] = tr.inclusion
        jf = compose_maps(tr.inclusion, f)
        v_j = check_certificate(filling_certificate("j", fill_dim, fill_steps), env2)
        v_f = check_certificate(not_anodyne_certificate(), env)
        ok = tr.is_inner() and is_monomorphism(jf) and bijective_on_vertices(jf) and v_j.accepted and v_f.accepted
        w = {"attached_per_step": tr.per_step, "result_census": list(tr.result.census())}
        return ok, w, True, (
            f"j is {fill_steps} filling steps up to dimension {fill_dim}; the full quasi-category "
            "needs infinitely many and is not constructed"
        )

    run.item(
        "left-cancellation",
        "j is inner anodyne by construction, j o f is a monomorphism bijective on vertices, f is not inner anodyne",
        left_cancellation,
    )

    def not_fibration():
        tS, tD = tau1(S), tau1(D1)
        F = ho_functor(f, tD, tS)
        cat = tS.category
        same = tS.labels[nondeg("f", 1)] == tS.labels[nondeg("g", 1)]
        v = check_certificate(not_fibration_certificate(), env)
        v_ho = check_certificate(ho_iso_certificate(), env)
        fib = check_certificate(inner_fibration_certificate(), env)
        ok = (
            len(cat.objects) == 2
            and len(cat.all_arrows()) == 3
            and same
            and is_cat_iso(F)
            and is_isofibration(F)
            and v.accepted
            and v_ho.accepted
            and fib.accepted
            and not has_rlp(f, f).holds
        )
        w = {"ho_S_objects": len(cat.objects), "ho_S_arrows": len(cat.all_arrows()), "f_equals_g_in_ho": same}
        return ok, w, False, v.reason or "inner fibration, isofibration on ho, but a non-invertible trivial cofibration"

    run.item("f-not-fibration", "f is not a Joyal fibration (certificate)", not_fibration)

    def not_qcat():
        res = is_quasicategory(S, 3, exhaustive=True)
        w = {
            f"Lambda3_{k}": horn_faces(sq["u"], 3) for (n, k), sq in sorted(res.failures.items())
        }
        return not res.holds, w, False, "S has unfillable inner 3-horns, so it is not a quasi-category"

    run.item("S-not-quasicategory", "S is not a quasi-category", not_qcat)
    return report
