"""Monotone maps between finite ordinals [m] -> [n].

Every face/degeneracy operator in the engine is a value table of a monotone
map; the elementary cofaces and codegeneracies are just named constructors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class CompositionError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class MonotoneMap:
    """A weakly increasing map ``[source] -> [target]``.

    ``values[i]`` is the image of ``i``; ``source == len(values) - 1``.
    """

    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        vals = self.values
        if not vals:
            raise ValueError("a monotone map needs a non-empty domain")
        if vals[0] < 0 or vals[-1] > self.target:
            raise ValueError(f"values {vals} out of range 0..{self.target}")
        for a, b in zip(vals, vals[1:]):
            if a > b:
                raise ValueError(f"values {vals} are not weakly increasing")

    @property
    def source(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __repr__(self):
        return f"MonotoneMap({list(self.values)}: [{self.source}]->[{self.target}])"

    def is_identity(self) -> bool:
        return self.source == self.target and self.values == tuple(range(self.target + 1))

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return self.values[0] == 0 and self.values[-1] == self.target and all(
            b - a <= 1 for a, b in zip(self.values, self.values[1:])
        )

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def __matmul__(self, other: "MonotoneMap") -> "MonotoneMap":
        return compose_monotone(self, other)


def identity(n: int) -> MonotoneMap:
    return _identity(n)


@lru_cache(maxsize=None)
def _identity(n):
    return MonotoneMap(tuple(range(n + 1)), n)


def coface(n: int, i: int) -> MonotoneMap:
    """delta_i : [n-1] -> [n], the injection missing ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"no coface delta_{i} into [{n}]")
    return MonotoneMap(tuple(j if j < i else j + 1 for j in range(n)), n)


def codegeneracy(n: int, j: int) -> MonotoneMap:
    """sigma_j : [n+1] -> [n], the surjection hitting ``j`` twice."""
    if n < 0 or not 0 <= j <= n:
        raise ValueError(f"no codegeneracy sigma_{j} onto [{n}]")
    return MonotoneMap(tuple(k if k <= j else k - 1 for k in range(n + 2)), n)


def compose_monotone(a: MonotoneMap, b: MonotoneMap) -> MonotoneMap:
    """Return ``a o b`` (apply ``b`` first)."""
    if b.target != a.source:
        raise CompositionError(
            f"cannot compose [{a.source}]->[{a.target}] after [{b.source}]->[{b.target}]"
        )
    av = a.values
    return MonotoneMap(tuple(av[v] for v in b.values), a.target)


def epi_mono_factor(m: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Unique factorisation ``m = mono o epi`` in the simplex category."""
    img = m.image()
    pos = {v: k for k, v in enumerate(img)}
    r = len(img) - 1
    epi = MonotoneMap(tuple(pos[v] for v in m.values), r)
    mono = MonotoneMap(img, m.target)
    return epi, mono


def monotone_maps(m: int, n: int) -> list[MonotoneMap]:
    """All monotone maps [m] -> [n], lexicographic in their value tables."""
    out = []
    # weakly increasing words of length m+1 over 0..n, via stars and bars
    for cut in combinations(range(m + n + 1), m + 1):
        out.append(MonotoneMap(tuple(c - k for k, c in enumerate(cut)), n))
    return out


def surjections(n: int, p: int) -> list[MonotoneMap]:
    """All monotone surjections [n] -> [p], lexicographic in their values."""
    return list(_surjections(n, p))


@lru_cache(maxsize=None)
def _surjections(n, p):
    if p > n or p < 0:
        return ()
    out = []
    # choose the p positions 1..n where the value steps up by one
    for steps in combinations(range(1, n + 1), p):
        vals, v = [], 0
        step_set = set(steps)
        for i in range(n + 1):
            if i in step_set:
                v += 1
            vals.append(v)
        out.append(MonotoneMap(tuple(vals), p))
    out.sort(key=lambda s: s.values)
    return tuple(out)


def injections(r: int, n: int) -> list[MonotoneMap]:
    """All strictly increasing maps [r] -> [n]."""
    return [MonotoneMap(c, n) for c in combinations(range(n + 1), r + 1)]
