"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line and appends it to the summary
shown at the end of the pytest run.  Run this file directly to get only
those lines.
"""

import subprocess
import sys
import time
from pathlib import Path

from conftest import ACCEPTANCE_LINES
from oracles import S_GENERATORS, collapse_model, word_of
from ssetlab.certificates import check_certificate
from ssetlab.hom import enumerate_maps
from ssetlab.homotopy import ho_functor, is_cat_iso, tau1
from ssetlab.lifting import (
    bijective_on_vertices,
    fill_inner_horns,
    has_rlp,
    is_inner_fibration,
    is_isomorphism,
    is_levelwise_epi,
    is_quasicategory,
)
from ssetlab.limits import arrow_iso_search, iso_under, pullback, pushout_along_mono
from ssetlab.scenario import (
    PUSHOUT_NAMES,
    build_objects,
    horn_faces,
    inner_fibration_certificate,
    not_anodyne_certificate,
    not_fibration_certificate,
    paper_scenario,
    wce_certificate,
)
from ssetlab.simplicial import (
    coface_map,
    compose_maps,
    degen,
    horn_inclusion,
    identity_map,
    is_monomorphism,
    nondeg,
    terminal_map,
)

ROOT = Path(__file__).resolve().parent.parent


def _verdict(n, text, limit, checks, t0):
    seconds = time.perf_counter() - t0
    failed = [k for k, ok in checks.items() if not ok]
    ok = not failed and seconds < limit
    why = "" if ok else f" [failed: {', '.join(failed) or 'time limit'}]"
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text} ({seconds:.2f}s < {limit}s){why}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_census():
    t0 = time.perf_counter()
    bang = terminal_map(build_objects()["Delta1"])
    S = pushout_along_mono(coface_map(2, 2), bang, names=PUSHOUT_NAMES).object
    faces = S.faces["alpha"]
    model = collapse_model()
    oracle = tuple(sum(1 for t in model.simplices(m) if not model.is_degenerate(t)) for m in range(4))
    checks = {
        "census": S.census() == (2, 2, 1),
        "d2 = s0 x": faces[2] == degen("x", [0, 0]),
        "d1 = f": faces[1] == nondeg("f", 1),
        "d0 = g": faces[0] == nondeg("g", 1),
        "oracle census": oracle == (2, 2, 1, 0),
    }
    _verdict(1, "S has 2 vertices, 2 edges, 1 triangle with d2 = s0 x, d1 = f, d0 = g", 1, checks, t0)


def test_criterion_2_mono_bijective():
    t0 = time.perf_counter()
    f = build_objects()["f"]
    checks = {"monomorphism": is_monomorphism(f), "bijective on vertices": bijective_on_vertices(f)}
    _verdict(2, "f is a monomorphism and bijective on vertices", 1, checks, t0)


def test_criterion_3_inner_fibration_structure():
    t0 = time.perf_counter()
    env = build_objects()
    f, alpha = env["f"], env["alpha"]
    pb = pullback(f, alpha)
    checks = {
        "pullback is Lambda^2_0 -> Delta^2": arrow_iso_search(pb.proj_right, horn_inclusion(2, 0)) is not None,
        "alpha levelwise epi": bool(is_levelwise_epi(alpha, 2)),
        "bounded direct check": is_inner_fibration(f, 4).holds,
    }
    _verdict(3, "pullback(f, alpha) is Lambda^2_0 -> Delta^2, alpha epi, inner fibration up to n = 4", 30, checks, t0)


def test_criterion_4_weak_equivalence_certificate():
    t0 = time.perf_counter()
    env = build_objects()
    f, g, r, h = env["f"], env["g"], env["r"], env["h"]
    po = pushout_along_mono(horn_inclusion(2, 1), h)
    ident = identity_map(env["Delta1"])
    checks = {
        "certificate accepted": check_certificate(wce_certificate(), env).accepted,
        "pushout of Lambda^2_1 is S with leg g": iso_under(po.from_right_leg, g) is not None,
        "r o f = id": compose_maps(r, f) == ident,
        "r o g = id": compose_maps(r, g) == ident,
    }
    _verdict(4, "weak equivalence certificate accepted; pushout recomputed; r o f = r o g = id", 5, checks, t0)


def test_criterion_5_not_inner_anodyne():
    t0 = time.perf_counter()
    env = build_objects()
    f, S, D1 = env["f"], env["S"], env["Delta1"]
    rlp = has_rlp(f, f)
    u, v = rlp.witness if rlp.witness else (None, None)
    checks = {
        "certificate accepted": check_certificate(not_anodyne_certificate(), env).accepted,
        "f not an isomorphism": not is_isomorphism(f),
        "no self lift": not rlp.holds,
        "witness (id, id)": u == identity_map(D1) and v == identity_map(S),
        "|Hom(S, Delta^1)| = 3": len(enumerate_maps(S, D1)) == 3,
    }
    _verdict(5, "f is not inner anodyne; f has no lift against itself at (id, id); |Hom(S, Delta^1)| = 3", 5, checks, t0)


def test_criterion_6_not_a_fibration():
    t0 = time.perf_counter()
    env = build_objects()
    f, S = env["f"], env["S"]
    tS = tau1(S)
    checks = {
        "2 objects": len(tS.category.objects) == 2,
        "3 arrows": len(tS.category.all_arrows()) == 3,
        "[f] = [g]": tS.labels[nondeg("f", 1)] == tS.labels[nondeg("g", 1)],
        "ho(f) iso": is_cat_iso(ho_functor(f, tau1(f.domain), tS)),
        "not-fibration certificate": check_certificate(not_fibration_certificate(), env).accepted,
    }
    _verdict(6, "tau1(S) has 2 objects, 3 arrows, [f] = [g]; ho(f) iso; not a fibration", 5, checks, t0)


def test_criterion_7_bounded_left_cancellation():
    t0 = time.perf_counter()
    env = build_objects()
    f, S = env["f"], env["S"]
    tr = fill_inner_horns(S, 3, 2)
    jf = compose_maps(tr.inclusion, f)
    item = next(i for i in paper_scenario(4, 3, 2).items if i.item == "left-cancellation")
    checks = {
        "inner attachments only": tr.is_inner(),
        "j o f monomorphism": is_monomorphism(jf),
        "j o f bijective on vertices": bijective_on_vertices(jf),
        "f not inner anodyne": check_certificate(not_anodyne_certificate(), env).accepted,
        "fibration certificate": check_certificate(inner_fibration_certificate(), env).accepted,
        "report item accepted and flagged bounded": item.accepted and item.bounded,
    }
    _verdict(7, "two filling steps j; j o f mono and bijective on vertices; flagged bounded", 60, checks, t0)


def _fillers(S, faces):
    return [t for t in S.simplices(3) if all(S.face(t, i) == r for i, r in faces.items())]


def _ref(S, text):
    for n in range(3):
        for r in S.simplices(n):
            if str(r) == text:
                return r
    raise KeyError(text)


def test_criterion_8_not_a_quasicategory():
    t0 = time.perf_counter()
    S = build_objects()["S"]
    res = is_quasicategory(S, 3, exhaustive=True)
    expected = {0: nondeg("alpha", 2), 1: degen("g", [0, 0, 1]), 3: degen("x", [0, 0, 0])}
    sq = res.failures.get((3, 2))
    got = horn_faces(sq["u"], 3) if sq else {}
    # independent cross-check in the collapsed-triangle word model
    model = collapse_model()
    want = {i: word_of(r, S_GENERATORS) for i, r in expected.items()}
    model_fillers = [t for t in model.simplices(3) if all(model.face(t, i) == w for i, w in want.items())]
    checks = {
        "not a quasi-category": not is_quasicategory(S, 3).holds,
        "Lambda^3_2 fails": sq is not None,
        "faces (alpha, s0 g, s0 s0 x)": got == {"d0": "alpha", "d1": "g@[0,0,1]", "d3": "x@[0,0,0]"},
        "no 3-simplex of S fills it": _fillers(S, expected) == [],
        "no 3-simplex of the word model fills it": model_fillers == [],
        "every failing horn is unfillable": all(
            not _fillers(S, {int(k[1:]): _ref(S, v) for k, v in horn_faces(s["u"], 3).items()})
            for s in res.failures.values()
        ),
    }
    _verdict(8, "S is not a quasi-category; Lambda^3_2 horn (alpha, s0 g, s0 s0 x) has no filler", 10, checks, t0)


def test_criterion_9_property_suites():
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "pytest", "-q", str(ROOT / "tests"), "--ignore", str(ROOT / "tests" / "test_acceptance.py"),
           "-p", "no:cacheprovider"]
    res = subprocess.run(cmd, capture_output=True, text=True, cwd=ROOT)
    tail = res.stdout.strip().splitlines()[-1] if res.stdout.strip() else res.stderr[-200:]
    _verdict(9, f"property suites green ({tail})", 300, {"suite exit 0": res.returncode == 0}, t0)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
