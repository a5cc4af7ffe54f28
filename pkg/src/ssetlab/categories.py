"""Finite categories and functors, with exhaustive law checking."""

from __future__ import annotations

from itertools import permutations, product
from typing import Mapping, Sequence


class CategoryError(ValueError):
    pass


def identity_name(obj: str) -> str:
    return f"id_{obj}"


class FiniteCategory:
    """A finite category given by its non-identity arrows and composition table.

    ``compose[(g, f)]`` is ``g o f`` for composable non-identity ``f, g``;
    it may name an identity (``id_x``).  Identities are implicit.
    """

    def __init__(
        self,
        objects: Sequence[str],
        arrows: Sequence[tuple[str, str, str]],
        compose: Mapping[tuple[str, str], str] | None = None,
        name: str = "C",
    ):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = tuple((a, s, t) for a, s, t in arrows)
        self.table = dict(compose or {})
        self._src = {identity_name(x): x for x in self.objects}
        self._ids = frozenset(self._src)
        self._tgt = dict(self._src)
        for a, s, t in self.arrows:
            if a in self._src:
                raise CategoryError(f"arrow name {a!r} used twice")
            if s not in self.objects or t not in self.objects:
                raise CategoryError(f"arrow {a!r} has an unknown endpoint")
            self._src[a], self._tgt[a] = s, t

    def __repr__(self):
        return f"FiniteCategory({self.name!r}, objects={len(self.objects)}, arrows={len(self.all_arrows())})"

    def identity(self, x: str) -> str:
        return identity_name(x)

    def is_identity(self, a: str) -> bool:
        return a in self._ids

    def src(self, a: str) -> str:
        return self._src[a]

    def tgt(self, a: str) -> str:
        return self._tgt[a]

    def non_identity(self) -> list[str]:
        return [a for a, _, _ in self.arrows]

    def all_arrows(self) -> list[str]:
        return [identity_name(x) for x in self.objects] + self.non_identity()

    def hom(self, x: str, y: str) -> list[str]:
        return [a for a in self.all_arrows() if self._src[a] == x and self._tgt[a] == y]

    def comp(self, g: str, f: str) -> str:
        """``g o f``."""
        if self._tgt[f] != self._src[g]:
            raise CategoryError(f"{g} o {f} is not composable")
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(f"composite {g} o {f} is missing") from None

    def problems(self) -> list[str]:
        out = []
        arrows = self.non_identity()
        for (g, f), h in self.table.items():
            if f not in self._src or g not in self._src or h not in self._src:
                out.append(f"composite {g}.{f} = {h} names an unknown arrow")
            elif self._tgt[f] != self._src[g]:
                out.append(f"{g}.{f} is listed but not composable")
            elif (self._src[h], self._tgt[h]) != (self._src[f], self._tgt[g]):
                out.append(f"{g}.{f} = {h} has the wrong endpoints")
        if out:
            return out
        for f, g in product(arrows, arrows):
            if self._tgt[f] == self._src[g] and (g, f) not in self.table:
                out.append(f"composite {g}.{f} is missing")
        if out:
            return out
        everything = self.all_arrows()
        for f, g, h in product(everything, everything, everything):
            if self._tgt[f] == self._src[g] and self._tgt[g] == self._src[h]:
                if self.comp(h, self.comp(g, f)) != self.comp(self.comp(h, g), f):
                    out.append(f"associativity fails for {h}.{g}.{f}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def inverse(self, a: str) -> str | None:
        for b in self.hom(self._tgt[a], self._src[a]):
            if self.comp(b, a) == identity_name(self._src[a]) and self.comp(a, b) == identity_name(self._tgt[a]):
                return b
        return None

    def isomorphisms(self) -> list[str]:
        return [a for a in self.all_arrows() if self.inverse(a) is not None]

    def chains(self, n: int) -> list[tuple[str, ...]]:
        """Composable strings ``(a1, ..., an)`` of non-identity arrows."""
        if n == 0:
            return [()]
        out = [(a,) for a in self.non_identity()]
        for _ in range(n - 1):
            out = [c + (a,) for c in out for a in self.non_identity() if self._src[a] == self._tgt[c[-1]]]
        return out


class Functor:
    def __init__(self, domain: FiniteCategory, codomain: FiniteCategory, obj_map: Mapping[str, str], arr_map: Mapping[str, str], name: str = "F"):
        self.domain, self.codomain, self.name = domain, codomain, name
        self.obj_map = {x: obj_map[x] for x in domain.objects}
        self.arr_map = {a: (arr_map[a] if a in arr_map else None) for a in domain.non_identity()}

    def __call__(self, a: str) -> str:
        if self.domain.is_identity(a):
            return identity_name(self.obj_map[self.domain.src(a)])
        return self.arr_map[a]

    def fobj(self, x: str) -> str:
        return self.obj_map[x]

    def problems(self) -> list[str]:
        C, D = self.domain, self.codomain
        out = []
        for a, img in self.arr_map.items():
            if img is None:
                out.append(f"no image for arrow {a}")
                continue
            if img not in D._src:
                out.append(f"image {img} of {a} is not an arrow of {D.name}")
                continue
            if (D.src(img), D.tgt(img)) != (self.obj_map[C.src(a)], self.obj_map[C.tgt(a)]):
                out.append(f"{a} -> {img} does not respect endpoints")
        if out:
            return out
        for f, g in product(C.all_arrows(), C.all_arrows()):
            if C.tgt(f) == C.src(g) and self(C.comp(g, f)) != D.comp(self(g), self(f)):
                out.append(f"F({g}.{f}) != F({g}).F({f})")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def table(self) -> dict[str, str]:
        return {a: self(a) for a in self.domain.all_arrows()}

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return self.obj_map == other.obj_map and self.table() == other.table()

    def __repr__(self):
        return f"Functor({self.name}: {self.domain.name} -> {self.codomain.name})"


def identity_functor(C: FiniteCategory) -> Functor:
    return Functor(C, C, {x: x for x in C.objects}, {a: a for a in C.non_identity()}, name=f"id_{C.name}")


def compose_functors(G: Functor, F: Functor) -> Functor:
    """``G o F``."""
    return Functor(
        F.domain,
        G.codomain,
        {x: G.fobj(y) for x, y in F.obj_map.items()},
        {a: G(F(a)) for a in F.domain.non_identity()},
        name=f"{G.name}.{F.name}",
    )


def poset_category(n: int, name: str | None = None) -> FiniteCategory:
    """The ordinal [n] as a category; arrows named by their endpoint pair."""
    objs = [str(i) for i in range(n + 1)]
    arrows = [(f"{i}{j}", str(i), str(j)) for i in range(n + 1) for j in range(i + 1, n + 1)]
    comp = {}
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                comp[(f"{j}{k}", f"{i}{j}")] = f"{i}{k}"
    return FiniteCategory(objs, arrows, comp, name=name or f"Ord{n}")


def category_iso_search(C: FiniteCategory, D: FiniteCategory) -> Functor | None:
    """An isomorphism of categories C -> D, or ``None``."""
    if len(C.objects) != len(D.objects) or len(C.all_arrows()) != len(D.all_arrows()):
        return None
    for perm in permutations(D.objects):
        om = dict(zip(C.objects, perm))
        blocks = []
        ok = True
        for x in C.objects:
            for y in C.objects:
                cs = [a for a in C.hom(x, y) if not C.is_identity(a)]
                ds = [a for a in D.hom(om[x], om[y]) if not D.is_identity(a)]
                if len(cs) != len(ds):
                    ok = False
                    break
                blocks.append((cs, ds))
            if not ok:
                break
        if not ok:
            continue
        for choice in product(*[permutations(ds) for _, ds in blocks]):
            am = {}
            for (cs, _), ds in zip(blocks, choice):
                am.update(zip(cs, ds))
            F = Functor(C, D, om, am)
            if F.is_valid():
                return F
    return None
