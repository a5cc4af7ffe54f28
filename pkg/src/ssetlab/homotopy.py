"""The fundamental category of a finite simplicial set.

Objects are the vertices; arrows are paths of nondegenerate edges modulo
``d1(s) = d0(s) o d2(s)`` for every 2-simplex ``s`` (degenerate edges count
as identities).  The quotient is computed by Todd-Coxeter style enumeration
of arrow classes under right multiplication by edges, which terminates
exactly when the category is finite; ``arrow_cap`` turns the infinite case
into an explicit error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .categories import FiniteCategory, Functor, identity_name
from .simplicial import SimplexRef, SimplicialMap, SimplicialSet


class UnboundedCategoryError(RuntimeError):
    def __init__(self, cap: int, word: tuple):
        self.cap, self.word = cap, word
        shown = "*".join(word) if word else "(identity)"
        super().__init__(f"more than {cap} arrow classes; shortest unresolved word: {shown}")


@dataclass
class Tau1:
    category: FiniteCategory
    labels: dict[SimplexRef, str]
    words: dict[str, tuple[str, ...]]

    def __iter__(self):
        yield self.category
        yield self.labels

    def label(self, x) -> str:
        return self.labels[x]


class _Enumerator:
    def __init__(self, edges, cap):
        self.edges = edges          # name -> (src, tgt)
        self.cap = cap
        self.parent: list[int] = []
        self.src: list[str] = []
        self.tgt: list[str] = []
        self.word: list[tuple] = []
        self.table: list[dict] = []

    def new(self, src, tgt, word):
        self.parent.append(len(self.parent))
        self.src.append(src)
        self.tgt.append(tgt)
        self.word.append(word)
        self.table.append({})
        return len(self.parent) - 1

    def find(self, c):
        while self.parent[c] != c:
            self.parent[c] = self.parent[self.parent[c]]
            c = self.parent[c]
        return c

    def alive(self):
        return [c for c in range(len(self.parent)) if self.parent[c] == c]

    def step(self, c, e):
        c = self.find(c)
        t = self.table[c].get(e)
        if t is None:
            t = self.new(self.src[c], self.edges[e][1], self.word[c] + (e,))
            self.table[c][e] = t
        return self.find(t)

    def trace(self, c, w):
        for e in w:
            c = self.step(c, e)
        return self.find(c)

    def union(self, a, b):
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.parent[b] = a
            for e, t in self.table[b].items():
                if e in self.table[a]:
                    queue.append((self.table[a][e], t))
                else:
                    self.table[a][e] = t
            self.table[b] = {}


def _edge_word(r: SimplexRef) -> tuple:
    return () if r.is_degenerate() else (r.generator,)


def tau1(X: SimplicialSet, arrow_cap: int = 1000) -> Tau1:
    """The fundamental (homotopy) category of ``X``.

    Arrows other than identities are named by a shortest representative
    path, edges joined with ``*`` in the order they are traversed.
    """
    vertices = list(X.gens(0))
    edges = {}
    for e in X.gens(1):
        d0, d1 = X.faces[e]
        edges[e] = (d1.generator, d0.generator)
    relations = []
    seen = set()
    for s in X.simplices(2):
        d0, d1, d2 = (X.face(s, i) for i in range(3))
        lhs, rhs = _edge_word(d1), _edge_word(d2) + _edge_word(d0)
        start = X.face(d2, 1).generator
        if lhs != rhs and (start, lhs, rhs) not in seen:
            seen.add((start, lhs, rhs))
            relations.append((start, lhs, rhs))

    en = _Enumerator(edges, arrow_cap)
    for v in vertices:
        en.new(v, v, ())
    i = 0
    while i < len(en.parent):
        if en.find(i) == i:
            for start, lhs, rhs in relations:
                if en.find(i) != i:
                    break
                if start == en.tgt[i]:
                    en.union(en.trace(i, lhs), en.trace(i, rhs))
            if en.find(i) == i:
                for e, (s, _) in edges.items():
                    if s == en.tgt[i]:
                        en.step(i, e)
        live = en.alive()
        if len(live) > arrow_cap:
            pending = [c for c in live if c > i] or live
            raise UnboundedCategoryError(arrow_cap, min((en.word[c] for c in pending), key=lambda w: (len(w), w)))
        i += 1

    # shortest representatives, breadth first from the identities
    rep: dict[int, tuple] = {}
    frontier = [en.find(k) for k in range(len(vertices))]
    for k, c in enumerate(frontier):
        rep.setdefault(c, ())
    while frontier:
        nxt = []
        for c in frontier:
            for e in edges:
                if edges[e][0] == en.tgt[c]:
                    t = en.trace(c, (e,))
                    if t not in rep:
                        rep[t] = rep[c] + (e,)
                        nxt.append(t)
        frontier = nxt

    id_class = {en.find(k): vertices[k] for k in range(len(vertices))}
    names = {}
    arrows = []
    words = {}
    for c in sorted(rep, key=lambda c: (len(rep[c]), rep[c], en.src[c])):
        if c in id_class:
            names[c] = identity_name(id_class[c])
            words[names[c]] = ()
            continue
        n = "*".join(rep[c])
        names[c] = n
        words[n] = rep[c]
        arrows.append((n, en.src[c], en.tgt[c]))
    compose = {}
    for f, s, t in arrows:
        for g, s2, t2 in arrows:
            if s2 == t:
                cf = en.trace(en.find(vertices.index(s)), words[f])
                compose[(g, f)] = names[en.trace(cf, words[g])]
    C = FiniteCategory(vertices, arrows, compose, name=f"ho({X.name})")
    labels = {}
    for r in X.simplices(1):
        if r.is_degenerate():
            labels[r] = identity_name(r.generator)
        else:
            c = en.trace(en.find(vertices.index(edges[r.generator][0])), (r.generator,))
            labels[r] = names[c]
    return Tau1(C, labels, words)


def ho_functor(m: SimplicialMap, tau_dom: Tau1, tau_cod: Tau1, name: str = "ho") -> Functor:
    """The functor on fundamental categories induced by ``m``."""
    C, D = tau_dom.category, tau_cod.category
    if set(C.objects) != set(m.domain.gens(0)) or set(D.objects) != set(m.codomain.gens(0)):
        raise ValueError("fundamental categories do not match the map's endpoints")
    obj = {v: m.assignment[v].generator for v in C.objects}
    arr = {}
    for a in C.non_identity():
        x = C.src(a)
        out = identity_name(obj[x])
        for e in tau_dom.words[a]:
            img = m.apply(e)
            out = D.comp(tau_cod.labels[img], out)
        arr[a] = out
    F = Functor(C, D, obj, arr, name=name)
    bad = F.problems()
    if bad:
        raise ValueError("induced assignment is not a functor: " + "; ".join(bad))
    return F


def is_cat_iso(F: Functor) -> bool:
    """True when ``F`` has a two-sided inverse functor."""
    C, D = F.domain, F.codomain
    if len(C.objects) != len(D.objects) or len(C.all_arrows()) != len(D.all_arrows()):
        return False
    obj_inv = {y: x for x, y in F.obj_map.items()}
    table = F.table()
    arr_inv = {b: a for a, b in table.items()}
    if len(obj_inv) != len(D.objects) or len(arr_inv) != len(D.all_arrows()):
        return False
    G = Functor(D, C, obj_inv, {b: arr_inv[b] for b in D.non_identity()})
    if G.problems():
        return False
    return all(G(F(a)) == a for a in C.all_arrows()) and all(F(G(b)) == b for b in D.all_arrows())


def is_isofibration(F: Functor) -> bool:
    """Every isomorphism out of ``F(a)`` lifts to an isomorphism out of ``a``."""
    C, D = F.domain, F.codomain
    isos_D = D.isomorphisms()
    isos_C = C.isomorphisms()
    for a in C.objects:
        lifts = {F(psi) for psi in isos_C if C.src(psi) == a}
        for phi in isos_D:
            if D.src(phi) == F.fobj(a) and phi not in lifts:
                return False
    return True
