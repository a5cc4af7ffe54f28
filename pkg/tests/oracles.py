"""Independent brute-force models used as test oracles.

Simplices of Delta^n are weakly increasing value tuples; faces delete an
entry and degeneracies repeat one.  Sub-objects keep a subset of tuples and
quotients canonicalise them.  Nothing here touches the normal-form engine.
"""

from itertools import combinations_with_replacement, product

from ssetlab.simplicial import SimplexRef, SimplicialMap, SimplicialSet


class WordModel:
    def __init__(self, n, keep=None, canon=None):
        self.n = n
        self.keep = keep or (lambda t: True)
        self.canon = canon or (lambda t: t)

    def simplices(self, m):
        out = set()
        for t in combinations_with_replacement(range(self.n + 1), m + 1):
            if self.keep(t):
                out.add(self.canon(t))
        return out

    def face(self, t, i):
        return self.canon(t[:i] + t[i + 1:])

    def degeneracy(self, t, j):
        return self.canon(t[: j + 1] + t[j:])

    def is_degenerate(self, t):
        return any(self.degeneracy(self.face(t, j), j) == t for j in range(len(t) - 1))


def simplex_model(n):
    return WordModel(n)


def horn_model(n, k):
    full = set(range(n + 1)) - {k}
    return WordModel(n, keep=lambda t: not full <= set(t))


def boundary_model(n):
    return WordModel(n, keep=lambda t: set(t) != set(range(n + 1)))


def collapse_model():
    """Delta^2 with the edge 01 collapsed to the vertex 0."""
    return WordModel(2, canon=lambda t: (0,) * len(t) if set(t) <= {0, 1} else t)


S_GENERATORS = {"x": (0,), "y": (2,), "f": (0, 2), "g": (1, 2), "alpha": (0, 1, 2)}


def word_of(x: SimplexRef, table=None):
    """Translate an engine simplex into the word model."""
    if table is None:
        base = tuple(int(c) for c in x.generator)
    else:
        base = table[x.generator]
    return tuple(base[v] for v in x.surjection.values)


def brute_hom(A: SimplicialSet, B: SimplicialSet, cap=200_000):
    """Every simplicial map A -> B by exhaustive product over generators.

    Refuses (returns None) when the raw product exceeds ``cap``.
    """
    gens = A.all_generators()
    pools = [B.simplices(A.dims[g]) for g in gens]
    size = 1
    for p in pools:
        size *= len(p)
    if size > cap:
        return None
    out = []
    for choice in product(*pools):
        asg = dict(zip(gens, choice))
        ok = True
        for g, row in A.faces.items():
            img = asg[g]
            for i, r in enumerate(row):
                if B.act(asg[r.generator], r.surjection) != B.face(img, i):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(SimplicialMap(A, B, asg, check=False))
    return out


def yoneda_hom(n: int, X: SimplicialSet):
    """Maps Delta^n -> X, one per n-simplex, read off the top simplex."""
    from ssetlab.monotone import MonotoneMap
    from ssetlab.simplicial import standard_simplex

    D = standard_simplex(n)
    out = []
    for x in X.simplices(n):
        asg = {}
        for g in D.all_generators():
            vals = tuple(int(c) for c in g)
            asg[g] = X.act(x, MonotoneMap(vals, n))
        out.append(SimplicialMap(D, X, asg, check=False))
    return out


def horn_hom(n: int, k: int, X: SimplicialSet):
    """Maps Lambda^n_k -> X as compatible families of (n-1)-simplices."""
    from ssetlab.monotone import MonotoneMap
    from ssetlab.simplicial import horn

    H = horn(n, k)
    faces = [i for i in range(n + 1) if i != k]
    out = []
    for fam in product(X.simplices(n - 1), repeat=len(faces)):
        xs = dict(zip(faces, fam))
        if any(X.face(xs[j], i) != X.face(xs[i], j - 1) for i in faces for j in faces if i < j):
            continue
        asg = {}
        for g in H.all_generators():
            verts = [int(c) for c in g]
            i = min(v for v in faces if v not in verts)
            # position of each vertex inside the face opposite i
            pos = tuple(v if v < i else v - 1 for v in verts)
            asg[g] = X.act(xs[i], MonotoneMap(pos, n - 1))
        out.append(SimplicialMap(H, X, asg, check=False))
    return out


def oracle_hom(A: SimplicialSet, X: SimplicialSet, cap=200_000):
    """Hom(A, X) by whichever brute-force model applies to A."""
    import re

    from ssetlab.simplicial import horn, standard_simplex

    m = re.fullmatch(r"Delta(\d+)", A.name)
    if m and A == standard_simplex(int(m[1])):
        return yoneda_hom(int(m[1]), X)
    m = re.fullmatch(r"Horn(\d+)_(\d+)", A.name)
    if m and A == horn(int(m[1]), int(m[2])):
        return horn_hom(int(m[1]), int(m[2]), X)
    return brute_hom(A, X, cap)
