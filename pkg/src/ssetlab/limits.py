"""Pushouts along monomorphisms, pullbacks and isomorphism search."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .hom import search_assignments
from .monotone import MonotoneMap
from .simplicial import (
    MapError,
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    compose_maps,
    is_monomorphism,
    nondeg,
)


class PreconditionError(ValueError):
    pass


class CapWarning(UserWarning):
    pass


@dataclass
class PushoutResult:
    object: SimplicialSet
    from_right_leg: SimplicialMap
    from_mono_cod: SimplicialMap
    naming: dict = field(default_factory=dict)


@dataclass
class PullbackResult:
    object: SimplicialSet
    proj_left: SimplicialMap
    proj_right: SimplicialMap
    cap: int = 0


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def pushout_along_mono(
    u: SimplicialMap,
    m: SimplicialMap,
    names: Mapping[str, str] | None = None,
    name: str = "P",
) -> PushoutResult:
    """Pushout of ``C <-m- A -u-> B`` with ``u`` a monomorphism.

    The result is C with the generators of B outside the image of ``u``
    glued on; their faces are rewritten through ``m`` wherever they land in
    the image of ``u``.  ``names`` optionally renames generators of B and C
    (keys are the original names, C taking precedence on clashes); the
    actual choice is returned in ``naming`` as ``{("C"|"B", old): new}``.
    """
    if u.domain != m.domain:
        raise MapError("the two legs of a span must share their domain")
    if not is_monomorphism(u):
        raise PreconditionError("pushout_along_mono needs a monomorphism as its first leg")
    names = dict(names or {})
    B, C = u.codomain, m.codomain
    preimage = {r.generator: a for a, r in u.assignment.items()}

    taken: set = set()
    naming = {}
    for c in C.all_generators():
        naming[("C", c)] = _fresh(names.get(c, c), taken)
    new_b = [b for b in B.all_generators() if b not in preimage]
    for b in new_b:
        naming[("B", b)] = _fresh(names.get(b, b), taken)

    def from_c(r: SimplexRef) -> SimplexRef:
        return SimplexRef(naming[("C", r.generator)], r.surjection)

    def from_b(r: SimplexRef) -> SimplexRef:
        a = preimage.get(r.generator)
        if a is None:
            return SimplexRef(naming[("B", r.generator)], r.surjection)
        return from_c(C.act(m.assignment[a], r.surjection))

    top = max(C.dimension, max((B.dims[b] for b in new_b), default=-1))
    gens = [[] for _ in range(top + 1)]
    faces = {}
    for c in C.all_generators():
        gens[C.dims[c]].append(naming[("C", c)])
        if c in C.faces:
            faces[naming[("C", c)]] = [from_c(r) for r in C.faces[c]]
    for b in new_b:
        gens[B.dims[b]].append(naming[("B", b)])
        if b in B.faces:
            faces[naming[("B", b)]] = [from_b(r) for r in B.faces[b]]
    P = SimplicialSet(gens, faces, name=name)

    right = SimplicialMap(C, P, {c: from_c(nondeg(c, d)) for c, d in C.dims.items()}, check=False)
    left = SimplicialMap(B, P, {b: from_b(nondeg(b, d)) for b, d in B.dims.items()}, check=False)
    return PushoutResult(P, right, left, naming)


# -- pullbacks -----------------------------------------------------------------


def _token(r: SimplexRef) -> str:
    if not r.is_degenerate():
        return r.generator
    sep = "" if r.dim < 10 else "_"
    return r.generator + "^" + sep.join(map(str, r.surjection.values))


def pair_name(a: SimplexRef, b: SimplexRef) -> str:
    return f"{_token(a)}~{_token(b)}"


def _joint_normal_form(a: SimplexRef, b: SimplexRef):
    """Split a pair of n-simplices as (nondegenerate pair) . e."""
    sa, sb = a.surjection.values, b.surjection.values
    n = len(sa) - 1
    e, keep, k = [0], [0], 0
    for j in range(n):
        if sa[j] == sa[j + 1] and sb[j] == sb[j + 1]:
            e.append(k)
        else:
            k += 1
            e.append(k)
            keep.append(j + 1)
    ra = SimplexRef(a.generator, MonotoneMap(tuple(sa[i] for i in keep), a.generator_dim))
    rb = SimplexRef(b.generator, MonotoneMap(tuple(sb[i] for i in keep), b.generator_dim))
    return ra, rb, MonotoneMap(tuple(e), k)


def pullback(p: SimplicialMap, q: SimplicialMap, cap: int | None = None, name: str = "Q") -> PullbackResult:
    """Pullback of ``X -p-> Z <-q- Y`` computed up to dimension ``cap``.

    Nondegenerate simplices of X x_Z Y are matching pairs that are not
    jointly degenerate; such a pair has dimension at most
    ``(dim X + 1)(dim Y + 1) - 1``, which is the default cap.
    """
    if p.codomain != q.codomain:
        raise MapError("pullback needs two maps with a common codomain")
    X, Y = p.domain, q.domain
    bound = (X.dimension + 1) * (Y.dimension + 1) - 1
    if cap is None:
        cap = bound
    elif cap < bound:
        warnings.warn(
            f"pullback computed up to dimension {cap}; nondegenerate pairs may exist up to {bound}",
            CapWarning,
            stacklevel=2,
        )

    gens, faces, pairs = [], {}, {}
    for n in range(cap + 1):
        over: dict = {}
        for y in Y.simplices(n):
            over.setdefault(q.apply(y), []).append(y)
        row = []
        for x in X.simplices(n):
            for y in over.get(p.apply(x), ()):
                ra, rb, e = _joint_normal_form(x, y)
                if e.source != e.target:
                    continue
                g = pair_name(x, y)
                pairs[g] = (x, y)
                row.append(g)
                if n:
                    fr = []
                    for i in range(n + 1):
                        fa, fb, fe = _joint_normal_form(X.face(x, i), Y.face(y, i))
                        fr.append(SimplexRef(pair_name(fa, fb), fe))
                    faces[g] = fr
        gens.append(row)
    Q = SimplicialSet(gens, faces, name=name)
    left = SimplicialMap(Q, X, {g: xy[0] for g, xy in pairs.items()}, check=False)
    right = SimplicialMap(Q, Y, {g: xy[1] for g, xy in pairs.items()}, check=False)
    return PullbackResult(Q, left, right, cap)


# -- isomorphisms --------------------------------------------------------------


def iter_isos(A: SimplicialSet, B: SimplicialSet, allow=None) -> Iterator[SimplicialMap]:
    """Isomorphisms A -> B, lazily, in search order (lexicographic in the
    images of A's generators taken in dimension-increasing order).

    ``allow(g, candidate, partial)`` may restrict the search further.
    """
    if A.census() != B.census():
        return

    def bijective(g, c, partial):
        if c.is_degenerate():
            return False
        if any(r.generator == c.generator for r in partial.values()):
            return False
        return allow is None or allow(g, c, partial)

    for asg in search_assignments(A, B, bijective):
        yield SimplicialMap(A, B, asg, check=False)


def iso_under(leg: SimplicialMap, target: SimplicialMap) -> SimplicialMap | None:
    """An isomorphism ``psi`` with ``psi o leg == target``, or ``None``."""
    if leg.domain != target.domain:
        return None
    fixed = {}
    for c, r in leg.assignment.items():
        want = target.assignment[c]
        if r.is_degenerate():
            continue
        fixed[r.generator] = want
    def allow(g, cand, partial):
        return g not in fixed or fixed[g] == cand
    for psi in iter_isos(leg.codomain, target.codomain, allow):
        if compose_maps(psi, leg).assignment == target.assignment:
            return psi
    return None


def inverse_of_iso(m: SimplicialMap) -> SimplicialMap:
    inv = {r.generator: nondeg(g, m.domain.dims[g]) for g, r in m.assignment.items()}
    return SimplicialMap(m.codomain, m.domain, inv)


def iso_search(A: SimplicialSet, B: SimplicialSet):
    """A mutually inverse pair ``(A -> B, B -> A)``, or ``None``."""
    for m in iter_isos(A, B):
        return m, inverse_of_iso(m)
    return None


def arrow_iso_search(a: SimplicialMap, b: SimplicialMap):
    """Isomorphisms ``(phi, psi)`` of domains and codomains with
    ``psi o a == b o phi``, or ``None``."""
    if a.domain.census() != b.domain.census():
        return None
    for psi in iter_isos(a.codomain, b.codomain):
        want = {g: psi.apply(r) for g, r in a.assignment.items()}

        def allow(g, cand, partial, want=want):
            return b.apply(cand) == want[g]

        for phi in iter_isos(a.domain, b.domain, allow):
            return phi, psi
    return None
