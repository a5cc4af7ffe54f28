"""Backtracking enumeration of simplicial maps between finite simplicial sets."""

from __future__ import annotations

from typing import Callable, Iterator

from .simplicial import SimplexRef, SimplicialMap, SimplicialSet


class HomOverflow(RuntimeError):
    pass


Allow = Callable[[str, SimplexRef, dict], bool]


def search_assignments(A: SimplicialSet, B: SimplicialSet, allow: Allow | None = None) -> Iterator[dict]:
    """Yield every face-compatible assignment of A's generators into B.

    Generators are assigned in dimension-increasing order, so the faces of
    a generator are already mapped when it is reached and the candidates are
    exactly the simplices of B with the required faces.  ``allow`` prunes
    further; it sees the generator, the candidate and the partial assignment.
    """
    order = A.all_generators()
    partial: dict[str, SimplexRef] = {}

    def candidates(g):
        n = A.dims[g]
        if n == 0:
            return B.simplices(0)
        want = tuple(B.act(partial[r.generator], r.surjection) for r in A.faces[g])
        return B.simplices_by_faces(n).get(want, ())

    def rec(i):
        if i == len(order):
            yield dict(partial)
            return
        g = order[i]
        for c in candidates(g):
            if allow is not None and not allow(g, c, partial):
                continue
            partial[g] = c
            yield from rec(i + 1)
            del partial[g]

    yield from rec(0)


def enumerate_maps(
    A: SimplicialSet,
    B: SimplicialSet,
    allow: Allow | None = None,
    limit: int | None = None,
) -> list[SimplicialMap]:
    """All simplicial maps A -> B (optionally filtered), in canonical order."""
    out = []
    for asg in search_assignments(A, B, allow):
        out.append(SimplicialMap(A, B, asg, check=False))
        if limit is not None and len(out) > limit:
            raise HomOverflow(f"more than {limit} maps {A.name} -> {B.name}")
    out.sort(key=SimplicialMap.key)
    return out


def count_maps(A: SimplicialSet, B: SimplicialSet) -> int:
    return sum(1 for _ in search_assignments(A, B))
