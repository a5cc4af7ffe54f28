"""Truncated nerves of finite categories.

An n-simplex of the nerve is a string of n composable arrows; it is
nondegenerate exactly when no arrow in the string is an identity.  Nerves
are only ever built up to a caller-chosen dimension.
"""

from __future__ import annotations

from .categories import Functor, FiniteCategory
from .monotone import MonotoneMap, coface
from .simplicial import SimplexRef, SimplicialMap, SimplicialSet


def chain_name(arrows) -> str:
    return "*".join(arrows)


def _normalize(C: FiniteCategory, objs, arrows):
    """Split a string of arrows (identities allowed) into its nondegenerate
    part and the surjection recording where identities sat."""
    kept, vals, k = [], [0], 0
    for a in arrows:
        if not C.is_identity(a):
            kept.append(a)
            k += 1
        vals.append(k)
    name = chain_name(kept) if kept else objs[0]
    return SimplexRef(name, MonotoneMap(tuple(vals), k))


def _restrict(C: FiniteCategory, objs, arrows, m: MonotoneMap):
    out = []
    for j in range(1, m.source + 1):
        lo, hi = m.values[j - 1], m.values[j]
        a = C.identity(objs[lo])
        for t in range(lo, hi):
            a = C.comp(arrows[t], a)
        out.append(a)
    return [objs[v] for v in m.values], out


def nerve_truncated(C: FiniteCategory, max_dim: int, name: str | None = None) -> SimplicialSet:
    """The nerve of ``C`` up to dimension ``max_dim``.

    Vertices keep the object names; a nondegenerate n-simplex is named by
    its arrows joined with ``*`` in the order they are traversed.
    """
    gens = [list(C.objects)]
    faces = {}
    for n in range(1, max_dim + 1):
        row = []
        for ch in C.chains(n):
            objs = [C.src(ch[0])] + [C.tgt(a) for a in ch]
            g = chain_name(ch)
            row.append(g)
            faces[g] = [_normalize(C, *_restrict(C, objs, ch, coface(n, i))) for i in range(n + 1)]
        if not row:
            break
        gens.append(row)
    return SimplicialSet(gens, faces, name=name or f"N{C.name}")


def nerve_map(F: Functor, source: SimplicialSet, target: SimplicialSet) -> SimplicialMap:
    """The map of truncated nerves induced by a functor."""
    C, D = F.domain, F.codomain
    img = {}
    for x in C.objects:
        img[x] = SimplexRef(F.fobj(x), MonotoneMap((0,), 0))
    for g in source.all_generators():
        if source.dims[g] == 0:
            continue
        ch = g.split("*")
        objs = [F.fobj(C.src(ch[0]))] + [F.fobj(C.tgt(a)) for a in ch]
        img[g] = _normalize(D, objs, [F(a) for a in ch])
    return SimplicialMap(source, target, img)


def nerve_functor(F: Functor, max_dim: int) -> SimplicialMap:
    return nerve_map(F, nerve_truncated(F.domain, max_dim), nerve_truncated(F.codomain, max_dim))


def has_chains_above(C: FiniteCategory, max_dim: int) -> bool:
    """True when the nerve of ``C`` has nondegenerate simplices above ``max_dim``."""
    return bool(C.chains(max_dim + 1))
