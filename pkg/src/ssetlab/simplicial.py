"""Finite simplicial sets in Eilenberg-Zilber normal form.

A simplicial set is presented by its nondegenerate generators and, for each
generator of positive dimension, the table of its faces.  Faces may be
degenerate, so a face is a :class:`SimplexRef`, i.e. a generator together
with a monotone surjection.  Every simplex, degenerate or not, has exactly
one such normal form, and :meth:`SimplicialSet.act` computes the normal form
of ``x . m`` for any monotone operator ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from .monotone import (
    MonotoneMap,
    codegeneracy,
    coface,
    compose_monotone,
    epi_mono_factor,
    identity,
    surjections,
)


class SimplicialSetError(ValueError):
    pass


class ActionError(ValueError):
    pass


class MapError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class SimplexRef:
    """The simplex ``generator . surjection``."""

    generator: str
    surjection: MonotoneMap

    def __post_init__(self):
        if not self.surjection.is_surjective():
            raise SimplicialSetError(
                f"{self.surjection!r} is not a surjection (generator {self.generator!r})"
            )

    @property
    def dim(self) -> int:
        return self.surjection.source

    @property
    def generator_dim(self) -> int:
        return self.surjection.target

    def is_degenerate(self) -> bool:
        return self.surjection.source != self.surjection.target

    def __str__(self):
        if not self.is_degenerate():
            return self.generator
        return f"{self.generator}@[{','.join(map(str, self.surjection.values))}]"

    __repr__ = __str__


def nondeg(generator: str, dim: int) -> SimplexRef:
    return SimplexRef(generator, identity(dim))


def degen(generator: str, values: Sequence[int]) -> SimplexRef:
    values = tuple(values)
    return SimplexRef(generator, MonotoneMap(values, values[-1]))


RefLike = Union[SimplexRef, str, tuple]


@dataclass
class Violation:
    generator: str
    kind: str
    detail: str

    def __str__(self):
        return f"{self.generator}: {self.kind}: {self.detail}"


@dataclass
class ValidationReport:
    name: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"{self.name}: valid"
        return f"{self.name}: invalid\n" + "\n".join(f"  {v}" for v in self.violations)


class SimplicialSet:
    """A finitely generated simplicial set.

    Parameters
    ----------
    generators : sequence of sequences of str
        ``generators[n]`` lists the nondegenerate n-simplices in declaration
        order.
    faces : mapping
        For every generator of dimension ``n >= 1``, its ``n + 1`` faces,
        ``faces[s][i] = d_i s``.  A face is a :class:`SimplexRef`, a bare
        generator name (nondegenerate face) or a ``(name, values)`` pair.
    name : str
        Display name; it plays no part in equality.

    Instances are treated as immutable.  Structural errors (unknown
    generators, wrong face counts) raise; violations of the simplicial
    identities are left for :meth:`validate` to report.
    """

    def __init__(
        self,
        generators: Sequence[Sequence[str]],
        faces: Mapping[str, Sequence[RefLike]] | None = None,
        name: str = "X",
    ):
        faces = dict(faces or {})
        self.name = name
        self.duplicates: list[str] = []
        dims: dict[str, int] = {}
        gens = []
        for n, names in enumerate(generators):
            row = []
            for g in names:
                if g in dims:
                    self.duplicates.append(g)
                    continue
                dims[g] = n
                row.append(g)
            gens.append(tuple(row))
        while gens and not gens[-1]:
            gens.pop()
        self.generators: tuple[tuple[str, ...], ...] = tuple(gens)
        self.dims = dims
        self.index = {g: i for row in self.generators for i, g in enumerate(row)}

        table: dict[str, tuple[SimplexRef, ...]] = {}
        for g, n in dims.items():
            if n == 0:
                if faces.get(g):
                    raise SimplicialSetError(f"vertex {g!r} cannot have faces")
                continue
            if g not in faces:
                raise SimplicialSetError(f"generator {g!r} of dimension {n} has no faces")
            row = tuple(self._coerce(r) for r in faces[g])
            if len(row) != n + 1:
                raise SimplicialSetError(
                    f"generator {g!r} of dimension {n} needs {n + 1} faces, got {len(row)}"
                )
            table[g] = row
        extra = set(faces) - set(dims)
        if extra:
            raise SimplicialSetError(f"faces given for unknown generators {sorted(extra)}")
        self.faces = table
        self._act_cache: dict = {}
        self._simplex_cache: dict = {}
        self._by_faces_cache: dict = {}
        self._hash = None

    def _coerce(self, r: RefLike) -> SimplexRef:
        if isinstance(r, SimplexRef):
            g = r.generator
        elif isinstance(r, str):
            g = r
        else:
            g = r[0]
        if g not in self.dims:
            raise SimplicialSetError(f"face refers to unknown generator {g!r}")
        if isinstance(r, SimplexRef):
            return r
        if isinstance(r, str):
            return nondeg(r, self.dims[r])
        return degen(r[0], r[1])

    # -- basic structure -------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.generators) - 1

    def gens(self, n: int) -> tuple[str, ...]:
        if 0 <= n < len(self.generators):
            return self.generators[n]
        return ()

    def all_generators(self) -> list[str]:
        """Generators in dimension-increasing, then declaration, order."""
        return [g for row in self.generators for g in row]

    def census(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.generators)

    def ref(self, r: RefLike) -> SimplexRef:
        return self._coerce(r)

    def face(self, x: RefLike, i: int) -> SimplexRef:
        x = self.ref(x)
        if x.dim < 1 or not 0 <= i <= x.dim:
            raise ActionError(f"no face d_{i} of a {x.dim}-simplex")
        return self.act(x, coface(x.dim, i))

    def degeneracy(self, x: RefLike, j: int) -> SimplexRef:
        x = self.ref(x)
        return self.act(x, codegeneracy(x.dim, j))

    def __repr__(self):
        return f"SimplicialSet({self.name!r}, census={self.census()})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SimplicialSet):
            return NotImplemented
        return self.generators == other.generators and self.faces == other.faces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.generators, tuple(sorted(self.faces.items()))))
        return self._hash

    def renamed(self, name: str) -> "SimplicialSet":
        return SimplicialSet(self.generators, self.faces, name=name)

    # -- the action of the simplex category --------------------------------

    def act(self, x: SimplexRef, m: MonotoneMap) -> SimplexRef:
        """Normal form of ``x . m`` for ``m : [q'] -> [q]``, ``q = dim x``."""
        key = (x, m)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if m.target != x.dim:
            raise ActionError(
                f"operator [{m.source}]->[{m.target}] cannot act on the {x.dim}-simplex {x}"
            )
        if x.generator not in self.dims:
            raise ActionError(f"{x.generator!r} is not a generator of {self.name}")
        epi, mono = epi_mono_factor(compose_monotone(x.surjection, m))
        y = self._restrict(x.generator, mono)
        out = SimplexRef(y.generator, compose_monotone(y.surjection, epi))
        self._act_cache[key] = out
        return out

    def _restrict(self, g: str, mono: MonotoneMap) -> SimplexRef:
        # g . mono for an injective mono, peeling off one coface at a time
        if mono.source == mono.target:
            return nondeg(g, mono.target)
        p = mono.target
        present = set(mono.values)
        i = max(k for k in range(p + 1) if k not in present)
        rest = MonotoneMap(tuple(v if v < i else v - 1 for v in mono.values), p - 1)
        return self.act(self.faces[g][i], rest)

    # -- enumeration -------------------------------------------------------

    def simplex_key(self, x: SimplexRef) -> tuple:
        """Canonical order: higher generator dimension first, then
        declaration order, then lexicographic surjection values."""
        return (-x.generator_dim, self.index[x.generator], x.surjection.values)

    def simplices(self, n: int) -> list[SimplexRef]:
        hit = self._simplex_cache.get(n)
        if hit is None:
            hit = []
            for p in range(min(n, self.dimension), -1, -1):
                for g in self.gens(p):
                    for s in surjections(n, p):
                        hit.append(SimplexRef(g, s))
            self._simplex_cache[n] = hit
        return list(hit)

    def simplices_by_faces(self, n: int) -> dict[tuple, list[SimplexRef]]:
        """n-simplices grouped by their tuple of faces (n >= 1)."""
        hit = self._by_faces_cache.get(n)
        if hit is None:
            hit = {}
            for x in self.simplices(n):
                key = tuple(self.face(x, i) for i in range(n + 1))
                hit.setdefault(key, []).append(x)
            self._by_faces_cache[n] = hit
        return hit

    # -- validation --------------------------------------------------------

    def validate(self) -> ValidationReport:
        report = ValidationReport(self.name)
        for g in self.duplicates:
            report.violations.append(Violation(g, "duplicate-name", "declared more than once"))
        dims_ok = True
        for g, row in self.faces.items():
            n = self.dims[g]
            for i, r in enumerate(row):
                if r.dim != n - 1:
                    dims_ok = False
                    report.violations.append(
                        Violation(g, "face-dimension", f"d_{i} = {r} has dimension {r.dim}, expected {n - 1}")
                    )
                elif r.generator_dim != self.dims[r.generator]:
                    dims_ok = False
                    report.violations.append(
                        Violation(
                            g,
                            "face-dimension",
                            f"d_{i} = {r} treats {r.generator!r} as a {r.generator_dim}-simplex",
                        )
                    )
        if not dims_ok:
            return report
        for g in self.all_generators():
            n = self.dims[g]
            if n < 2:
                continue
            row = self.faces[g]
            for j in range(n + 1):
                for i in range(j):
                    lhs = self.act(row[j], coface(n - 1, i))
                    rhs = self.act(row[i], coface(n - 1, j - 1))
                    if lhs != rhs:
                        report.violations.append(
                            Violation(
                                g,
                                "simplicial-identity",
                                f"(i={i}, j={j}): d_{i} d_{j} = {lhs} but d_{j - 1} d_{i} = {rhs}",
                            )
                        )
        return report


def enumerate_simplices(X: SimplicialSet, n: int) -> list[SimplexRef]:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return X.simplices(n)


def act(X: SimplicialSet, x: RefLike, m: MonotoneMap) -> SimplexRef:
    return X.act(X.ref(x), m)


def validate(X: SimplicialSet) -> ValidationReport:
    return X.validate()


class SimplicialMap:
    """A map of simplicial sets, given on nondegenerate generators.

    ``assignment[g]`` is the image of the generator ``g`` as a simplex of
    the codomain of the same dimension.  With ``check=True`` the face
    compatibility is verified and :class:`MapError` raised on failure.
    """

    def __init__(
        self,
        domain: SimplicialSet,
        codomain: SimplicialSet,
        assignment: Mapping[str, RefLike],
        name: str | None = None,
        check: bool = True,
    ):
        self.domain = domain
        self.codomain = codomain
        self.name = name
        missing = [g for g in domain.all_generators() if g not in assignment]
        if missing:
            raise MapError(f"no image given for {missing}")
        extra = set(assignment) - set(domain.dims)
        if extra:
            raise MapError(f"images given for unknown generators {sorted(extra)}")
        self.assignment: dict[str, SimplexRef] = {
            g: codomain.ref(assignment[g]) for g in domain.all_generators()
        }
        for g, r in self.assignment.items():
            if r.dim != domain.dims[g]:
                raise MapError(f"{g!r} has dimension {domain.dims[g]} but its image {r} has dimension {r.dim}")
        if check:
            bad = self.face_violations()
            if bad:
                raise MapError("not a simplicial map: " + "; ".join(bad))

    def apply(self, x: RefLike) -> SimplexRef:
        x = self.domain.ref(x)
        return self.codomain.act(self.assignment[x.generator], x.surjection)

    __call__ = apply

    def face_violations(self) -> list[str]:
        bad = []
        for g, row in self.domain.faces.items():
            img = self.assignment[g]
            for i, r in enumerate(row):
                lhs = self.apply(r)
                rhs = self.codomain.face(img, i)
                if lhs != rhs:
                    bad.append(f"{g}: image of d_{i} is {lhs} but d_{i} of image is {rhs}")
        return bad

    def key(self) -> tuple:
        cod = self.codomain
        order = [g for row in reversed(self.domain.generators) for g in row]
        return tuple(cod.simplex_key(self.assignment[g]) for g in order)

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash(tuple(self.assignment.items()))

    def __repr__(self):
        label = self.name or "map"
        body = ", ".join(f"{g}->{r}" for g, r in self.assignment.items())
        return f"<{label}: {self.domain.name} -> {self.codomain.name} {{{body}}}>"

    def named(self, name: str) -> "SimplicialMap":
        return SimplicialMap(self.domain, self.codomain, self.assignment, name=name, check=False)


def identity_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {g: nondeg(g, n) for g, n in X.dims.items()}, name=f"id_{X.name}", check=False)


def compose_maps(a: SimplicialMap, b: SimplicialMap) -> SimplicialMap:
    """``a o b`` (apply ``b`` first)."""
    if b.codomain != a.domain:
        raise MapError(f"cannot compose {a.domain.name}->{a.codomain.name} after {b.domain.name}->{b.codomain.name}")
    img = {g: a.apply(r) for g, r in b.assignment.items()}
    return SimplicialMap(b.domain, a.codomain, img, check=False)


def maps_equal(a: SimplicialMap, b: SimplicialMap) -> bool:
    if a.domain != b.domain or a.codomain != b.codomain:
        raise MapError("maps_equal needs maps with the same endpoints")
    return a.assignment == b.assignment


def is_monomorphism(m: SimplicialMap) -> bool:
    """Levelwise injectivity: generators go to distinct nondegenerate simplices."""
    seen = set()
    for r in m.assignment.values():
        if r.is_degenerate() or r.generator in seen:
            return False
        seen.add(r.generator)
    return True


def bijective_on_vertices(m: SimplicialMap) -> bool:
    images = [m.assignment[v].generator for v in m.domain.gens(0)]
    return len(set(images)) == len(images) == len(m.codomain.gens(0))


# -- canonical complexes ----------------------------------------------------


def _word(w: Iterable[int], n: int) -> str:
    sep = "" if n < 10 else "_"
    return sep.join(str(v) for v in w)


def _simplex_family(n: int, keep, name: str) -> SimplicialSet:
    gens, faces = [], {}
    for d in range(n + 1):
        row = []
        for w in combinations(range(n + 1), d + 1):
            if not keep(w):
                continue
            g = _word(w, n)
            row.append(g)
            if d:
                faces[g] = [_word(w[:i] + w[i + 1 :], n) for i in range(d + 1)]
        gens.append(row)
    return SimplicialSet(gens, faces, name=name)


def standard_simplex(n: int) -> SimplicialSet:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _simplex_family(n, lambda w: True, f"Delta{n}")


def boundary(n: int) -> SimplicialSet:
    if n < 1:
        raise ValueError("the boundary needs n >= 1")
    return _simplex_family(n, lambda w: len(w) <= n, f"Boundary{n}")


def horn(n: int, k: int) -> SimplicialSet:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"no horn Lambda^{n}_{k}")
    full = set(range(n + 1))
    opposite = full - {k}
    return _simplex_family(n, lambda w: len(w) <= n and set(w) != opposite, f"Horn{n}_{k}")


def canonical_complex(kind: str, n: int, k: int | None = None) -> SimplicialSet:
    if kind == "standard":
        return standard_simplex(n)
    if kind == "boundary":
        return boundary(n)
    if kind == "horn":
        if k is None:
            raise ValueError("a horn needs an index k")
        return horn(n, k)
    raise ValueError(f"unknown complex kind {kind!r}")


def inclusion(sub: SimplicialSet, n: int) -> SimplicialMap:
    """Inclusion of a sub-family of Delta^n (horn or boundary) into Delta^n."""
    D = standard_simplex(n)
    m = SimplicialMap(sub, D, {g: nondeg(g, d) for g, d in sub.dims.items()}, check=False)
    return m.named(f"incl_{sub.name}")


def horn_inclusion(n: int, k: int) -> SimplicialMap:
    return inclusion(horn(n, k), n)


def coface_map(n: int, i: int) -> SimplicialMap:
    """The map Delta^{n-1} -> Delta^n induced by delta_i."""
    src, dst = standard_simplex(n - 1), standard_simplex(n)
    d = coface(n, i)
    return simplex_map(d, src, dst).named(f"d{i}")


def simplex_map(m: MonotoneMap, src: SimplicialSet | None = None, dst: SimplicialSet | None = None) -> SimplicialMap:
    """The map Delta^p -> Delta^q induced by a monotone ``m : [p] -> [q]``."""
    src = src or standard_simplex(m.source)
    dst = dst or standard_simplex(m.target)
    top = dst.all_generators()[-1]
    img = {}
    for g, d in src.dims.items():
        verts = [int(c) for c in (g.split("_") if m.source >= 10 else g)]
        img[g] = dst.act(nondeg(top, m.target), MonotoneMap(tuple(m.values[v] for v in verts), m.target))
    return SimplicialMap(src, dst, img, check=False)


def point() -> SimplicialSet:
    return standard_simplex(0)


def terminal_map(X: SimplicialSet) -> SimplicialMap:
    P = point()
    return SimplicialMap(X, P, {g: degen("0", (0,) * (d + 1)) for g, d in X.dims.items()}, name=f"term_{X.name}", check=False)


def coproduct(parts: Sequence[SimplicialSet], prefixes: Sequence[str] | None = None, name: str = "coprod"):
    """Disjoint union with generators renamed ``prefix + name``.

    Returns the object and the list of coprojections.
    """
    if prefixes is None:
        prefixes = [f"c{i}_" for i in range(len(parts))]
    top = max((P.dimension for P in parts), default=-1)
    gens = [[] for _ in range(top + 1)]
    faces = {}
    for P, pre in zip(parts, prefixes):
        for g in P.all_generators():
            gens[P.dims[g]].append(pre + g)
        for g, row in P.faces.items():
            faces[pre + g] = [SimplexRef(pre + r.generator, r.surjection) for r in row]
    X = SimplicialSet(gens, faces, name=name)
    legs = [
        SimplicialMap(P, X, {g: nondeg(pre + g, d) for g, d in P.dims.items()}, check=False)
        for P, pre in zip(parts, prefixes)
    ]
    return X, legs
