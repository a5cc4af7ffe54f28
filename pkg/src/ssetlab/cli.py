"""Command line interface.

Every subcommand reads one or more documents (``-f``, default: the shipped
fixture), prints a report in ``human`` or ``json-report`` format and exits
with 0 (success / accepted), 1 (rejected / absent) or 2 (usage or parse
error).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .categories import FiniteCategory, Functor
from .certificates import CertificateError, Certificate, audit, check_certificate
from .hom import enumerate_maps
from .homotopy import UnboundedCategoryError, tau1
from .lifting import (
    FillingOverflow,
    LiftingProblem,
    fill_inner_horns,
    has_rlp,
    is_inner_fibration,
    is_quasicategory,
    solve_lifting,
)
from .limits import PreconditionError, pullback, pushout_along_mono
from .report import Report, ReportItem
from .scenario import horn_faces, map_table, paper_scenario
from .simplicial import MapError, SimplicialMap, SimplicialSet, compose_maps, identity_map
from .textformat import FIXTURE, Document, ParseError, builtin, load, serialize


class Usage(Exception):
    """Bad arguments: exit code 2."""


class Absent(Exception):
    """A named object does not exist: exit code 1."""


# -- helpers ---------------------------------------------------------------------


def _lookup(env, name, kind, what):
    try:
        obj = env[name]
    except KeyError:
        raise Absent(f"no object named {name!r}") from None
    if not isinstance(obj, kind):
        raise Usage(f"{name!r} is not {what}")
    return obj


def _sset(env, name):
    return _lookup(env, name, SimplicialSet, "a simplicial set")


def _map(env, name):
    return _lookup(env, name, SimplicialMap, "a simplicial map")


def _generators(X: SimplicialSet) -> dict:
    return {str(n): list(row) for n, row in enumerate(X.generators)}


def _is_builtin(X: SimplicialSet) -> bool:
    return builtin(X.name) == X


def _document(*named) -> Document:
    """A self-contained document for ``(name, object)`` pairs: simplicial
    sets referenced by the maps are included unless they are built in."""
    doc = Document()
    for name, obj in named:
        if isinstance(obj, SimplicialMap):
            for X in (obj.domain, obj.codomain):
                if not _is_builtin(X) and X.name not in doc.items and all(X.name != n for n, _ in named):
                    doc.add(X.name, X)
        if name not in doc.items:
            doc.add(name, obj)
    return doc


def _write(path, doc: Document) -> None:
    Path(path).write_text(serialize(doc), encoding="utf-8")


def _run(report: Report, item: str, claim: str, fn):
    t = time.perf_counter()
    ok, witness, bounded, detail = fn()
    report.items.append(
        ReportItem(item, claim, "accepted" if ok else "rejected", witness, bounded, detail, time.perf_counter() - t)
    )


# -- commands --------------------------------------------------------------------


def cmd_validate(args, doc: Document, report: Report):
    for name, obj in doc.items.items():
        if isinstance(obj, SimplicialSet):
            rep = obj.validate()
            _run(report, f"validate:{name}", f"{name} satisfies the simplicial identities",
                 lambda rep=rep: (rep.ok, None, False, "; ".join(map(str, rep.violations))))
        elif isinstance(obj, SimplicialMap):
            bad = obj.face_violations()
            _run(report, f"validate:{name}", f"{name} commutes with faces",
                 lambda bad=bad: (not bad, None, False, "; ".join(bad)))
        elif isinstance(obj, (FiniteCategory, Functor)):
            bad = obj.problems()
            what = "the category laws" if isinstance(obj, FiniteCategory) else "the functor laws"
            _run(report, f"validate:{name}", f"{name} satisfies {what}",
                 lambda bad=bad: (not bad, None, False, "; ".join(bad)))
        elif isinstance(obj, Certificate):
            bad = audit(obj)
            _run(report, f"validate:{name}", f"{name} is a well-formed certificate",
                 lambda bad=bad: (not bad, None, False, "; ".join(bad)))
    if not report.items:
        raise Absent("the document is empty")


def cmd_census(args, doc, report):
    X = _sset(doc.env(), args.object)
    w = {"object": args.object, "census": list(X.census()), "dimension": X.dimension, "generators": _generators(X)}
    _run(report, "census", f"nondegenerate simplices of {args.object} by dimension", lambda: (True, w, False, ""))


def cmd_pushout(args, doc, report):
    env = doc.env()
    i, u = _map(env, args.left), _map(env, args.right)
    try:
        po = pushout_along_mono(i, u, name=args.name)
    except (PreconditionError, MapError) as exc:
        raise Usage(str(exc)) from None
    P = po.object
    legs = (
        (f"{args.name}_from_{u.codomain.name}", po.from_right_leg),
        (f"{args.name}_from_{i.codomain.name}", po.from_mono_cod),
    )
    out = _document((args.name, P), *legs)
    w = {
        "census": list(P.census()),
        "generators": _generators(P),
        "faces": {g: [str(r) for r in row] for g, row in P.faces.items()},
        "legs": {n: map_table(m) for n, m in legs},
    }
    if args.out:
        _write(args.out, out)
    _run(report, "pushout", f"pushout of {args.right} along the monomorphism {args.left}",
         lambda: (True, w, False, f"written to {args.out}" if args.out else ""))
    return serialize(out) if not args.out else None


def cmd_pullback(args, doc, report):
    env = doc.env()
    p, q = _map(env, args.left), _map(env, args.right)
    try:
        pb = pullback(p, q, name=args.name)
    except MapError as exc:
        raise Usage(str(exc)) from None
    Q = pb.object
    legs = ((f"{args.name}_to_{p.domain.name}", pb.proj_left), (f"{args.name}_to_{q.domain.name}", pb.proj_right))
    out = _document((args.name, Q), *legs)
    w = {
        "census": list(Q.census()),
        "generators": _generators(Q),
        "faces": {g: [str(r) for r in row] for g, row in Q.faces.items()},
        "cap": pb.cap,
        "legs": {n: map_table(m) for n, m in legs},
    }
    if args.out:
        _write(args.out, out)
    _run(report, "pullback", f"pullback of {args.left} and {args.right}",
         lambda: (True, w, False, f"written to {args.out}" if args.out else ""))
    return serialize(out) if not args.out else None


def cmd_compose(args, doc, report):
    env = doc.env()
    g, f = _map(env, args.left), _map(env, args.right)
    if g.domain != f.codomain:
        raise Usage(f"{args.left} o {args.right} is not composable")
    name = args.name or f"{args.left}_o_{args.right}"
    c = compose_maps(g, f).named(name)
    out = _document((name, c))
    if args.out:
        _write(args.out, out)
    _run(report, "compose", f"{args.left} o {args.right}",
         lambda: (True, {"map": map_table(c)}, False, f"written to {args.out}" if args.out else ""))
    return serialize(out) if not args.out else None


def cmd_hom(args, doc, report):
    env = doc.env()
    A, B = _sset(env, getattr(args, "from")), _sset(env, args.to)
    maps = enumerate_maps(A, B)
    w = {"count": len(maps)}
    if args.list:
        w["maps"] = [map_table(m) for m in maps]
    _run(report, "hom", f"simplicial maps {A.name} -> {B.name}", lambda: (bool(maps), w, False, ""))


def cmd_lift(args, doc, report):
    env = doc.env()
    prob = LiftingProblem(_map(env, args.i), _map(env, args.p), _map(env, args.u), _map(env, args.v))
    try:
        h = solve_lifting(prob)
    except PreconditionError as exc:
        raise Usage(str(exc)) from None
    w = {"filler": map_table(h)} if h is not None else None
    _run(report, "lift", f"a diagonal filler for the square ({args.u}, {args.v}) from {args.i} to {args.p}",
         lambda: (h is not None, w, False, "" if h is not None else "no filler exists"))


def cmd_rlp(args, doc, report):
    env = doc.env()
    p, i = _map(env, args.p), _map(env, args.i)
    res = has_rlp(p, i)
    w = {"squares": res.squares}
    if res.witness:
        u, v = res.witness
        w.update({
            "u": map_table(u), "v": map_table(v),
            "u_is_identity": u.domain == u.codomain and u == identity_map(u.domain),
            "v_is_identity": v.domain == v.codomain and v == identity_map(v.domain),
        })
    _run(report, "rlp", f"{args.p} has the right lifting property against {args.i}",
         lambda: (res.holds, w, False, "" if res.holds else "the witness square (u, v) has no filler"))


def _fib_witness(res, n_faces=False):
    w = {"horns": [{"n": n, "k": k, "squares": c} for n, k, c in res.horns]}
    if res.failures:
        w["failures"] = {}
        for (n, k), sq in sorted(res.failures.items()):
            entry = {"u": map_table(sq["u"]), "v": map_table(sq["v"])}
            if n_faces:
                entry = {"faces": horn_faces(sq["u"], n)}
            w["failures"][f"Lambda{n}_{k}"] = entry
    return w


def cmd_innerfib(args, doc, report):
    m = _map(doc.env(), args.map)
    res = is_inner_fibration(m, args.max_dim, exhaustive=args.exhaustive)
    detail = f"checked inner horns with n <= {args.max_dim} only" if res.holds else ""
    _run(report, "innerfib", f"{args.map} is an inner fibration",
         lambda: (res.holds, _fib_witness(res), res.holds, detail))


def cmd_qcat(args, doc, report):
    X = _sset(doc.env(), args.object)
    res = is_quasicategory(X, args.max_dim, exhaustive=args.exhaustive)
    detail = f"checked inner horns with n <= {args.max_dim} only" if res.holds else ""
    _run(report, "qcat", f"{args.object} is a quasi-category",
         lambda: (res.holds, _fib_witness(res, n_faces=True), res.holds, detail))


def cmd_tau1(args, doc, report):
    X = _sset(doc.env(), args.object)
    try:
        t = tau1(X, arrow_cap=args.cap)
    except UnboundedCategoryError as exc:
        w, msg = {"cap": exc.cap, "word": list(exc.word)}, str(exc)
        _run(report, "tau1", f"the fundamental category of {args.object} is finite", lambda: (False, w, False, msg))
        return
    C = t.category
    w = {
        "objects": list(C.objects),
        "arrows": [{"name": a, "src": s, "tgt": d} for a, s, d in C.arrows],
        "compose": {f"{g}.{f}": h for (g, f), h in C.table.items()},
        "edges": {str(r): a for r, a in t.labels.items() if not r.is_degenerate()},
        "count": len(C.all_arrows()),
    }
    _run(report, "tau1", f"the fundamental category of {args.object}", lambda: (True, w, False, ""))


def cmd_fill(args, doc, report):
    X = _sset(doc.env(), args.object)
    try:
        tr = fill_inner_horns(X, args.max_dim, args.steps, cap=args.cap)
    except FillingOverflow as exc:
        msg = str(exc)
        _run(report, "fill", f"inner horn filling of {args.object}", lambda: (False, None, False, msg))
        return
    name = args.name or f"{X.name}_filled"
    R = tr.result.renamed(name)
    j = SimplicialMap(X, R, tr.inclusion.assignment, name="j", check=False)
    if args.out:
        _write(args.out, _document((name, R), ("j", j)))
    w = {
        "attached_per_step": tr.per_step,
        "result_census": list(R.census()),
        "attachments": [{"step": a.step, "n": a.n, "k": a.k, "cell": a.cell} for a in tr.attachments],
    }
    detail = f"{args.steps} step(s) up to dimension {args.max_dim}; inner anodyne by construction"
    if args.out:
        detail += f"; written to {args.out}"
    _run(report, "fill", f"inner horn filling of {args.object}", lambda: (tr.is_inner(), w, True, detail))


def cmd_certify(args, doc, report):
    env = doc.env()
    c = _lookup(env, args.cert, Certificate, "a certificate")
    try:
        v = check_certificate(c, env)
    except CertificateError as exc:
        raise Usage(str(exc)) from None
    w = {
        "subject": v.subject,
        "conclusion": v.claim,
        "failing_node": v.failing_node,
        "nodes": [{"id": r.id, "rule": r.rule, "ok": r.ok, "detail": r.detail} for r in v.nodes],
    }
    _run(report, f"certify:{c.name}", f"{v.subject} is {v.claim}",
         lambda: (v.accepted, w, v.bounded, v.reason))


def cmd_paper(args, doc, report):
    S = doc.items.get("S")
    fixture = S if isinstance(S, SimplicialSet) else None
    rep = paper_scenario(args.max_dim, args.fill_dim, args.fill_steps, fixture=fixture)
    report.items.extend(rep.items)
    report.params.update(rep.params)
    if args.report:
        Path(args.report).write_text(report.to_json(args.timings), encoding="utf-8")


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json-report"), default=argparse.SUPPRESS)
    common.add_argument("-f", "--file", action="append", default=argparse.SUPPRESS,
                        help="input document (repeatable; default: the shipped fixture)")
    common.add_argument("--timings", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock timings (makes output non-reproducible)")

    parser = argparse.ArgumentParser(prog="ssetlab", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, "check every object of a document")
    p.add_argument("path", nargs="?", metavar="FILE")
    p = add("census", cmd_census, "count nondegenerate simplices")
    p.add_argument("path", nargs="?", metavar="FILE")
    p.add_argument("--object", required=True)
    for name, fn, help in (
        ("pushout", cmd_pushout, "pushout along a monomorphism (--left) of another map (--right)"),
        ("pullback", cmd_pullback, "pullback of two maps with a common codomain"),
        ("compose", cmd_compose, "the composite LEFT o RIGHT"),
    ):
        p = add(name, fn, help)
        p.add_argument("--left", required=True)
        p.add_argument("--right", required=True)
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--name", default={"pushout": "P", "pullback": "Q"}.get(name))
    p = add("hom", cmd_hom, "enumerate simplicial maps")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    p = add("lift", cmd_lift, "solve one lifting problem")
    for k in ("i", "p", "u", "v"):
        p.add_argument(f"--{k}", required=True)
    p = add("rlp", cmd_rlp, "right lifting property of P against I")
    p.add_argument("--p", required=True)
    p.add_argument("--i", required=True)
    p = add("innerfib", cmd_innerfib, "bounded inner fibration check")
    p.add_argument("--map", required=True)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--exhaustive", action="store_true", help="report every failing horn")
    p = add("qcat", cmd_qcat, "bounded quasi-category check")
    p.add_argument("--object", required=True)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--exhaustive", action="store_true", help="report every failing horn")
    p = add("tau1", cmd_tau1, "fundamental category")
    p.add_argument("--object", required=True)
    p.add_argument("--cap", type=int, default=1000)
    p = add("fill", cmd_fill, "attach fillers for unfilled inner horns")
    p.add_argument("--object", required=True)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--cap", type=int, default=2000)
    p.add_argument("--name")
    p.add_argument("--out", metavar="FILE")
    p = add("certify", cmd_certify, "check a certificate")
    p.add_argument("--cert", required=True)
    p = add("paper", cmd_paper, "rebuild the counterexample and check every claim")
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--fill-dim", type=int, default=3)
    p.add_argument("--fill-steps", type=int, default=2)
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    return parser


def _positive(args):
    for k in ("max_dim", "fill_dim", "steps", "fill_steps", "cap"):
        v = getattr(args, k, None)
        if v is not None and v < 1:
            raise Usage(f"--{k.replace('_', '-')} must be positive")
    for k in ("max_dim", "fill_dim"):
        v = getattr(args, k, None)
        if v is not None and v < 2:
            raise Usage(f"--{k.replace('_', '-')} must be at least 2")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "human")
    timings = getattr(args, "timings", False)
    args.timings = timings
    files = list(getattr(args, "file", None) or [])
    if getattr(args, "path", None):
        files.insert(0, args.path)
    if not files:
        files = [FIXTURE]
    report = Report(params={"command": args.command})
    try:
        _positive(args)
        # validate and paper report invalid objects instead of refusing them
        doc = load(files, validate=args.command not in ("validate", "paper"))
        extra = args.fn(args, doc, report)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return 2
    except Usage as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except Absent as exc:
        print(f"absent: {exc}", file=stderr)
        return 1
    if fmt == "json-report":
        stdout.write(report.to_json(timings))
    else:
        stdout.write(report.human(timings, witnesses=args.command != "paper"))
        if extra:
            stdout.write("\n" + extra)
    return 0 if report.ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
