"""Lifting problems, right lifting properties and horn filling.

Everything here is decided by exhaustive search over finite Hom-sets, so
every check is exact for the maps it is given but only bounded in the
dimension of the horns it looks at.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hom import enumerate_maps, search_assignments
from .limits import PreconditionError, pushout_along_mono
from .simplicial import (
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    bijective_on_vertices,
    compose_maps,
    coproduct,
    horn_inclusion,
    identity_map,
    is_monomorphism,
    nondeg,
    terminal_map,
)

__all__ = [
    "LiftingProblem",
    "RLPResult",
    "FillingTrace",
    "FillingOverflow",
    "solve_lifting",
    "has_rlp",
    "commuting_squares",
    "is_inner_fibration",
    "is_quasicategory",
    "is_monomorphism",
    "bijective_on_vertices",
    "is_isomorphism",
    "is_levelwise_epi",
    "fill_inner_horns",
]


@dataclass
class LiftingProblem:
    """The square ``p o u == v o i`` with ``i : A -> B`` and ``p : X -> Y``."""

    i: SimplicialMap
    p: SimplicialMap
    u: SimplicialMap
    v: SimplicialMap

    def commutes(self) -> bool:
        i, p, u, v = self.i, self.p, self.u, self.v
        if u.domain != i.domain or u.codomain != p.domain:
            return False
        if v.domain != i.codomain or v.codomain != p.codomain:
            return False
        return compose_maps(p, u).assignment == compose_maps(v, i).assignment


def _filler_search(prob: LiftingProblem):
    i, p, u, v = prob.i, prob.p, prob.u, prob.v
    X = p.domain
    forced: dict[str, list] = {}
    for a, r in i.assignment.items():
        forced.setdefault(r.generator, []).append((r.surjection, u.assignment[a]))

    def allow(b, c, partial):
        if p.apply(c) != v.assignment[b]:
            return False
        return all(X.act(c, s) == want for s, want in forced.get(b, ()))

    return search_assignments(i.codomain, X, allow)


def solve_lifting(prob: LiftingProblem) -> SimplicialMap | None:
    """The canonically first diagonal filler ``h``, or ``None`` if none exists."""
    if not prob.commutes():
        raise PreconditionError("the lifting square does not commute")
    found = [SimplicialMap(prob.i.codomain, prob.p.domain, a, check=False) for a in _filler_search(prob)]
    if not found:
        return None
    return min(found, key=SimplicialMap.key)


def _has_filler(prob: LiftingProblem) -> bool:
    return next(iter(_filler_search(prob)), None) is not None


def commuting_squares(i: SimplicialMap, p: SimplicialMap):
    """Every commuting square ``(u, v)`` from ``i`` to ``p``, canonically ordered
    by ``u`` and then ``v``."""
    A, B = i.domain, i.codomain
    X, Y = p.domain, p.codomain
    over: dict[str, list] = {}
    for a, r in i.assignment.items():
        over.setdefault(r.generator, []).append((r.surjection, a))
    for u in enumerate_maps(A, X):
        pu = {a: p.apply(r) for a, r in u.assignment.items()}

        def allow(b, c, partial, pu=pu):
            return all(Y.act(c, s) == pu[a] for s, a in over.get(b, ()))

        for v in enumerate_maps(B, Y, allow):
            yield u, v


@dataclass
class RLPResult:
    holds: bool
    witness: tuple | None = None
    squares: int = 0

    def __bool__(self):
        return self.holds


def has_rlp(p: SimplicialMap, i: SimplicialMap) -> RLPResult:
    """Does ``p`` have the right lifting property against ``i``?

    On failure the witness is the canonically first square ``(u, v)``
    without a filler.
    """
    count = 0
    for u, v in commuting_squares(i, p):
        count += 1
        if not _has_filler(LiftingProblem(i, p, u, v)):
            return RLPResult(False, (u, v), count)
    return RLPResult(True, None, count)


@dataclass
class InnerFibrationResult:
    holds: bool
    max_dim: int
    horns: list = field(default_factory=list)
    witness: dict | None = None
    failures: dict = field(default_factory=dict)
    bounded: bool = True

    def __bool__(self):
        return self.holds


def is_inner_fibration(p: SimplicialMap, max_dim: int = 4, exhaustive: bool = False) -> InnerFibrationResult:
    """Right lifting against every inner horn inclusion with ``n <= max_dim``.

    A positive answer is bounded: it says nothing about horns above
    ``max_dim``.  A negative answer comes with the first failing square in
    (n, k) order; with ``exhaustive=True`` every (n, k) is examined and
    ``failures`` maps each failing (n, k) to its first failing square.
    """
    if max_dim < 2:
        raise ValueError("the dimension bound must be at least 2")
    checked = []
    failures = {}
    for n in range(2, max_dim + 1):
        for k in range(1, n):
            res = has_rlp(p, horn_inclusion(n, k))
            checked.append((n, k, res.squares))
            if not res:
                u, v = res.witness
                failures[(n, k)] = {"n": n, "k": k, "u": u, "v": v}
                if not exhaustive:
                    return InnerFibrationResult(False, max_dim, checked, failures[(n, k)], failures)
    if failures:
        first = failures[min(failures)]
        return InnerFibrationResult(False, max_dim, checked, first, failures)
    return InnerFibrationResult(True, max_dim, checked)


def is_quasicategory(X: SimplicialSet, max_dim: int = 4, exhaustive: bool = False) -> InnerFibrationResult:
    return is_inner_fibration(terminal_map(X), max_dim, exhaustive)


def is_isomorphism(m: SimplicialMap) -> bool:
    """Search for a two-sided inverse."""
    A, B = m.domain, m.codomain
    if A.census() != B.census():
        return False

    def allow(b, c, partial):
        return m.apply(c) == nondeg(b, B.dims[b])

    for asg in search_assignments(B, A, allow):
        inv = SimplicialMap(B, A, asg, check=False)
        if compose_maps(inv, m).assignment == identity_map(A).assignment:
            return True
    return False


def is_levelwise_epi(m: SimplicialMap, max_dim: int | None = None) -> bool:
    """Surjectivity on n-simplices for ``n <= max_dim``.

    The default ``dim`` of the codomain suffices: every simplex above it is
    a degeneracy of one at or below it, and degeneracies of preimages are
    preimages of degeneracies.
    """
    if max_dim is None:
        max_dim = max(m.codomain.dimension, 0)
    for n in range(max_dim + 1):
        image = {m.apply(x) for x in m.domain.simplices(n)}
        if any(y not in image for y in m.codomain.simplices(n)):
            return False
    return True


# -- horn filling ------------------------------------------------------------------


class FillingOverflow(RuntimeError):
    def __init__(self, step: int, count: int, cap: int):
        super().__init__(f"step {step}: {count} unfilled inner horns exceed the cap of {cap}")
        self.step, self.count, self.cap = step, count, cap


@dataclass
class Attachment:
    step: int
    n: int
    k: int
    horn: SimplicialMap
    cell: str

    def faces(self) -> dict:
        return {g: str(r) for g, r in self.horn.assignment.items() if len(g) == self.n}


@dataclass
class FillingTrace:
    start: SimplicialSet
    result: SimplicialSet
    inclusion: SimplicialMap
    attachments: list[Attachment]
    per_step: list[int]
    max_dim: int

    def is_inner(self) -> bool:
        return all(0 < a.k < a.n for a in self.attachments)


def has_horn_filler(u: SimplicialMap, n: int, k: int) -> bool:
    incl = horn_inclusion(n, k)
    X = u.codomain

    def allow(g, c, partial):
        want = u.assignment.get(g)
        return want is None or c == want

    return next(iter(search_assignments(incl.codomain, X, allow)), None) is not None


def unfilled_inner_horns(X: SimplicialSet, max_dim: int, cap: int | None = None, step: int = 0):
    out = []
    for n in range(2, max_dim + 1):
        for k in range(1, n):
            H = horn_inclusion(n, k).domain
            for u in enumerate_maps(H, X):
                if not has_horn_filler(u, n, k):
                    out.append((n, k, u))
                    if cap is not None and len(out) > cap:
                        raise FillingOverflow(step, len(out), cap)
    return out


def fill_inner_horns(X: SimplicialSet, max_dim: int = 3, steps: int = 1, cap: int = 2000) -> FillingTrace:
    """Attach fillers for every unfilled inner horn of dimension ``<= max_dim``.

    Each step is one pushout of a coproduct of inner horn inclusions, so the
    resulting inclusion is inner anodyne by construction.  After step ``t``
    every inner horn (up to ``max_dim``) of the object before step ``t`` has
    a filler.
    """
    if max_dim < 2 or steps < 1:
        raise ValueError("fill_inner_horns needs max_dim >= 2 and steps >= 1")
    current = X
    incl = identity_map(X)
    attachments: list[Attachment] = []
    per_step = []
    for t in range(1, steps + 1):
        horns = unfilled_inner_horns(current, max_dim, cap, t)
        per_step.append(len(horns))
        if not horns:
            continue
        prefixes = [f"s{t}h{j}_" for j in range(len(horns))]
        hs = [horn_inclusion(n, k) for n, k, _ in horns]
        Acop, _ = coproduct([h.domain for h in hs], prefixes, name="horns")
        Bcop, _ = coproduct([h.codomain for h in hs], prefixes, name="simplices")
        icop = SimplicialMap(
            Acop, Bcop, {g: nondeg(g, d) for g, d in Acop.dims.items()}, check=False
        )
        ucop_asg: dict[str, SimplexRef] = {}
        for pre, (_, _, u) in zip(prefixes, horns):
            for g, r in u.assignment.items():
                ucop_asg[pre + g] = r
        ucop = SimplicialMap(Acop, current, ucop_asg, check=False)
        po = pushout_along_mono(icop, ucop, name=f"{X.name}+{t}")
        for pre, (n, k, u) in zip(prefixes, horns):
            top = pre + "".join(str(v) for v in range(n + 1))
            attachments.append(Attachment(t, n, k, u, po.naming[("B", top)]))
        incl = compose_maps(po.from_right_leg, incl)
        current = po.object
    return FillingTrace(X, current, incl, attachments, per_step, max_dim)
