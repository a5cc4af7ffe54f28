"""A line-oriented text format for simplicial sets, maps, categories,
functors and certificates.

::

    # comments run to the end of the line
    sset S {
      dim 0: x, y;
      dim 1: f [d0=y, d1=x], g [d0=y, d1=x];
      dim 2: alpha [d0=g, d1=f, d2=x@[0,0]];
    }
    map f : Delta1 -> S { 0 -> x; 1 -> y; 01 -> f; }
    cat Span { objects: 0, 1, 2; arrows: 01: 0 -> 1, 02: 0 -> 2; }
    functor J : Span -> Ord2 { objects: 0 -> 0, 1 -> 1, 2 -> 2; arrows: 01 -> 01, 02 -> 02; }
    cert c {
      g_anodyne = R1 inner-anodyne g [n=2, k=1, along=h];
      g_wce = R2 weak-categorical-equivalence g <- g_anodyne;
      conclude g_wce;
    }

A reference ``GEN@[w0,...,wq]`` is ``GEN`` acted on by the surjection with
that value table; a bare ``GEN`` is the generator itself.  Compositions
``b.a = c`` read ``b o a = c``.

Names may use any character except whitespace and ``,;:[]{}=@.#<>``; a
``-`` is allowed unless it starts ``->``.  The standard objects need no
declaration: ``DeltaN``, ``BoundaryN``, ``HornN_K``, ``incl_HornN_K``,
``incl_BoundaryN``, ``id_X`` and ``term_X`` (the map from X to Delta0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .categories import CategoryError, FiniteCategory, Functor
from .certificates import CLAIMS, RULES, Certificate, Node
from .simplicial import (
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    boundary,
    degen,
    horn,
    identity_map,
    inclusion,
    standard_simplex,
    terminal_map,
)

__all__ = ["ParseError", "Document", "parse", "serialize", "load", "builtin", "FIXTURE"]

FIXTURE = Path(__file__).with_name("data") / "paper.sset"

# parameters of certificate rules that name objects and must resolve
MAX_DIM = 64

REF_PARAMS = ("along", "first", "second", "composite", "functor", "base")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<text>"):
        self.message, self.line, self.column, self.source = message, line, column, source
        super().__init__(f"{source}:{line}:{column}: {message}")


# -- tokens ----------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<nl>\n)|(?P<ws>[ \t\r\f\v]+)|(?P<comment>\#[^\n]*)"
    r"|(?P<punct>->|<-|[{}\[\],;:=@.])"
    r"|(?P<name>(?:[^\s,;:\[\]{}=@.\#<>\-]|-(?!>))+)"
)
_NAME = re.compile(r"(?:[^\s,;:\[\]{}=@.\#<>\-]|-(?!>))+\Z")


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str, source: str = "<text>") -> list[Tok]:
    out, line, start, pos = [], 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1, source)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind in ("punct", "name"):
            out.append(Tok(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Tok("eof", "", line, pos - start + 1))
    return out


def _check_name(name: str) -> str:
    if not _NAME.match(name):
        raise ValueError(f"{name!r} cannot be written as a name in the text format")
    return name


# -- raw syntax ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, source: str):
        self.source = source
        self.toks = tokenize(text, source)
        self.i = 0

    def peek(self) -> Tok:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok.line, tok.col, self.source)

    def at(self, text) -> bool:
        t = self.peek()
        return t.kind == "punct" and t.text == text

    def expect(self, text) -> Tok:
        t = self.peek()
        if t.kind != "punct" or t.text != text:
            shown = t.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        self.i += 1
        return t

    def name(self, what="a name") -> Tok:
        t = self.peek()
        if t.kind != "name":
            shown = t.text or "end of input"
            raise self.error(f"expected {what}, found {shown!r}")
        self.i += 1
        return t

    def keyword(self, word) -> Tok:
        t = self.name(repr(word))
        if t.text != word:
            raise self.error(f"expected {word!r}, found {t.text!r}", t)
        return t

    def integer(self, what="an integer") -> int:
        t = self.name(what)
        if not t.text.isdigit():
            raise self.error(f"expected {what}, found {t.text!r}", t)
        return int(t.text)

    def ref(self):
        g = self.name("a generator")
        values = None
        if self.at("@"):
            self.i += 1
            self.expect("[")
            values = [self.integer("a surjection value")]
            while self.at(","):
                self.i += 1
                values.append(self.integer("a surjection value"))
            self.expect("]")
        return g, values

    def sep_list(self, item, stop=";"):
        """``item, item, ...`` up to (not including) ``stop``; may be empty."""
        out = []
        if self.at(stop):
            return out
        out.append(item())
        while self.at(","):
            self.i += 1
            out.append(item())
        return out

    # blocks

    def document(self) -> list:
        blocks = []
        while self.peek().kind != "eof":
            t = self.name("a block keyword")
            fn = {
                "sset": self.sset,
                "map": self.map,
                "cat": self.cat,
                "functor": self.functor,
                "cert": self.cert,
            }.get(t.text)
            if fn is None:
                raise self.error(f"unknown block {t.text!r}; expected sset, map, cat, functor or cert", t)
            blocks.append(fn(t))
        return blocks

    def sset(self, head):
        name = self.name("the simplicial set's name")
        self.expect("{")
        rows = []
        while not self.at("}"):
            kw = self.keyword("dim")
            n = self.integer("a dimension")
            if n > MAX_DIM:
                raise self.error(f"dimension {n} exceeds the supported maximum {MAX_DIM}", kw)
            self.expect(":")

            def gen(n=n):
                g = self.name("a generator")
                faces = []
                if self.at("["):
                    self.i += 1

                    def face():
                        key = self.name("a face key d<i>")
                        if not re.fullmatch(r"d\d+", key.text):
                            raise self.error(f"expected a face key d<i>, found {key.text!r}", key)
                        self.expect("=")
                        return key, self.ref()

                    faces = self.sep_list(face, "]")
                    self.expect("]")
                return g, faces

            rows.append((kw, n, self.sep_list(gen)))
            self.expect(";")
        self.expect("}")
        return ("sset", head, name, rows)

    def map(self, head):
        name = self.name("the map's name")
        self.expect(":")
        dom = self.name("a domain")
        self.expect("->")
        cod = self.name("a codomain")
        self.expect("{")
        lines = []
        while not self.at("}"):
            g = self.name("a generator")
            self.expect("->")
            lines.append((g, self.ref()))
            self.expect(";")
        self.expect("}")
        return ("map", head, name, dom, cod, lines)

    def _section(self, allowed, done):
        kw = self.name("a section keyword")
        if kw.text not in allowed:
            raise self.error(f"unknown section {kw.text!r}; expected one of {', '.join(allowed)}", kw)
        if kw.text in done:
            raise self.error(f"section {kw.text!r} given twice", kw)
        done.add(kw.text)
        self.expect(":")
        return kw

    def cat(self, head):
        name = self.name("the category's name")
        self.expect("{")
        objects, arrows, compose, done = [], [], [], set()
        while not self.at("}"):
            kw = self._section(("objects", "arrows", "compose"), done)
            if kw.text == "objects":
                objects = self.sep_list(lambda: self.name("an object"))
            elif kw.text == "arrows":

                def arrow():
                    a = self.name("an arrow")
                    self.expect(":")
                    s = self.name("a source object")
                    self.expect("->")
                    return a, s, self.name("a target object")

                arrows = self.sep_list(arrow)
            else:

                def comp():
                    g = self.name("an arrow")
                    self.expect(".")
                    f = self.name("an arrow")
                    self.expect("=")
                    return g, f, self.name("an arrow")

                compose = self.sep_list(comp)
            self.expect(";")
        self.expect("}")
        return ("cat", head, name, objects, arrows, compose)

    def functor(self, head):
        name = self.name("the functor's name")
        self.expect(":")
        dom = self.name("a domain category")
        self.expect("->")
        cod = self.name("a codomain category")
        self.expect("{")
        objects, arrows, done = [], [], set()
        while not self.at("}"):
            kw = self._section(("objects", "arrows"), done)

            def pair():
                a = self.name()
                self.expect("->")
                return a, self.name()

            if kw.text == "objects":
                objects = self.sep_list(pair)
            else:
                arrows = self.sep_list(pair)
            self.expect(";")
        self.expect("}")
        return ("functor", head, name, dom, cod, objects, arrows)

    def cert(self, head):
        name = self.name("the certificate's name")
        self.expect("{")
        nodes, conclusion = [], None
        while not self.at("}"):
            t = self.name("a node id or 'conclude'")
            if t.text == "conclude" and not self.at("="):
                if conclusion is not None:
                    raise self.error("'conclude' given twice", t)
                conclusion = self.name("a node id")
                self.expect(";")
                continue
            self.expect("=")
            rule = self.name("a rule")
            claim = self.name("a claim")
            subject = self.name("a subject")
            params = []
            if self.at("["):
                self.i += 1

                def param():
                    k = self.name("a parameter")
                    self.expect("=")
                    return k, self.name("a value")

                params = self.sep_list(param, "]")
                self.expect("]")
            premises = []
            if self.at("<-"):
                self.i += 1
                premises = self.sep_list(lambda: self.name("a premise"))
            self.expect(";")
            nodes.append((t, rule, claim, subject, params, premises))
        self.expect("}")
        if conclusion is None:
            raise self.error(f"certificate {name.text!r} has no 'conclude' line", name)
        return ("cert", head, name, nodes, conclusion)


# -- built-in objects --------------------------------------------------------------


def builtin(name: str, lookup=None):
    """The standard object called ``name``, or ``None``.

    ``lookup`` resolves user-defined simplicial sets for ``id_X`` and
    ``term_X``.
    """
    m = re.fullmatch(r"Delta(\d+)", name)
    if m:
        return standard_simplex(int(m[1]))
    m = re.fullmatch(r"Boundary(\d+)", name)
    if m and int(m[1]) >= 1:
        return boundary(int(m[1]))
    m = re.fullmatch(r"Horn(\d+)_(\d+)", name)
    if m and int(m[1]) >= 1 and int(m[2]) <= int(m[1]):
        return horn(int(m[1]), int(m[2]))
    m = re.fullmatch(r"incl_(.+)", name)
    if m:
        sub = builtin(m[1])
        if isinstance(sub, SimplicialSet) and not m[1].startswith("Delta"):
            n = int(re.match(r"\D+(\d+)", m[1])[1])
            return inclusion(sub, n).named(name)
    m = re.fullmatch(r"(id|term)_(.+)", name)
    if m:
        X = lookup(m[2]) if lookup else None
        if X is None:
            X = builtin(m[2])
        if isinstance(X, SimplicialSet):
            out = identity_map(X) if m[1] == "id" else terminal_map(X)
            return out.named(name)
    return None


class Env(dict):
    """Declared objects by name, with the standard objects on demand."""

    def __missing__(self, key):
        obj = builtin(key, lambda n: self.get(n) if isinstance(self.get(n), SimplicialSet) else None)
        if obj is None:
            raise KeyError(key)
        self[key] = obj
        return obj

    def __contains__(self, key):
        try:
            self[key]
        except KeyError:
            return False
        return True


# -- documents ---------------------------------------------------------------------


@dataclass
class Document:
    """Named objects in declaration order; one namespace for all kinds."""

    items: dict = field(default_factory=dict)

    def env(self) -> Env:
        return Env(self.items)

    def get(self, name: str):
        return self.env()[name]

    def of_type(self, kind) -> dict:
        return {k: v for k, v in self.items.items() if isinstance(v, kind)}

    @property
    def ssets(self) -> dict:
        return self.of_type(SimplicialSet)

    @property
    def maps(self) -> dict:
        return self.of_type(SimplicialMap)

    @property
    def categories(self) -> dict:
        return self.of_type(FiniteCategory)

    @property
    def functors(self) -> dict:
        return self.of_type(Functor)

    @property
    def certificates(self) -> dict:
        return self.of_type(Certificate)

    def add(self, name: str, obj) -> None:
        if name in self.items:
            raise ValueError(f"{name!r} is defined twice")
        self.items[name] = obj

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return [(k, _shape(v)) for k, v in self.items.items()] == [(k, _shape(v)) for k, v in other.items.items()]


def _shape(obj):
    # structural identity of a document entry, names of endpoints included
    if isinstance(obj, SimplicialSet):
        return ("sset", obj.generators, tuple((g, obj.faces[g]) for g in obj.all_generators() if g in obj.faces))
    if isinstance(obj, SimplicialMap):
        return ("map", obj.domain.name, obj.codomain.name, obj.domain, obj.codomain, tuple(obj.assignment.items()))
    if isinstance(obj, FiniteCategory):
        return ("cat", obj.objects, obj.arrows, tuple(obj.table.items()))
    if isinstance(obj, Functor):
        return ("functor", obj.domain.name, obj.codomain.name, tuple(obj.obj_map.items()), tuple(obj.arr_map.items()))
    return ("cert", obj)


class _Builder:
    def __init__(self, validate: bool):
        self.doc = Document()
        self.env = self.doc.env()
        self.validate = validate
        self.sources: dict[str, str] = {}

    def fail(self, msg, tok, source):
        return ParseError(msg, tok.line, tok.col, source)

    def resolve(self, tok, kind, what, source):
        try:
            obj = self.env[tok.text]
        except KeyError:
            raise self.fail(f"unresolved reference {tok.text!r}", tok, source) from None
        if not isinstance(obj, kind):
            raise self.fail(f"{tok.text!r} is not {what}", tok, source)
        return obj

    def add(self, name_tok, obj, source):
        if name_tok.text in self.doc.items:
            raise self.fail(f"{name_tok.text!r} is defined twice", name_tok, source)
        self.doc.items[name_tok.text] = obj
        self.env[name_tok.text] = obj

    def block(self, b, source):
        kind, name = b[0], b[2]
        try:
            getattr(self, "build_" + kind)(b, source)
        except ParseError:
            raise
        except (ValueError, KeyError, IndexError, CategoryError) as exc:
            raise self.fail(f"{kind} {name.text}: {exc}", name, source) from None

    def _ref(self, X, g, values, source):
        if g.text not in X.dims:
            raise self.fail(f"unresolved reference {g.text!r} in {X.name}", g, source)
        if values is None:
            return g.text
        try:
            return degen(g.text, values)
        except ValueError as exc:
            raise self.fail(f"bad surjection on {g.text!r}: {exc}", g, source) from None

    def build_sset(self, b, source):
        _, head, name, rows = b
        top = max((n for _, n, _ in rows), default=-1)
        gens = [[] for _ in range(top + 1)]
        for _, n, row in rows:
            gens[n].extend(g.text for g, _ in row)
        dims = {}
        for n, row in enumerate(gens):
            for g in row:
                dims.setdefault(g, n)
        faces, where = {}, {}
        for _, n, row in rows:
            for g, flist in row:
                where[g.text] = g
                if n == 0:
                    if flist:
                        raise self.fail(f"vertex {g.text!r} cannot have faces", g, source)
                    continue
                keys = [int(k.text[1:]) for k, _ in flist]
                if sorted(keys) != list(range(n + 1)):
                    raise self.fail(
                        f"{g.text!r} needs exactly the faces d0..d{n}, got {', '.join(k.text for k, _ in flist) or 'none'}",
                        g, source,
                    )
                refs = [None] * (n + 1)
                for (k, (fg, vals)) in flist:
                    if fg.text not in dims:
                        raise self.fail(f"unresolved reference {fg.text!r}", fg, source)
                    refs[int(k.text[1:])] = fg.text if vals is None else self._ref_values(fg, vals, source)
                faces.setdefault(g.text, refs)
        X = SimplicialSet(gens, faces, name=name.text)
        if self.validate:
            rep = X.validate()
            if not rep.ok:
                v = rep.violations[0]
                tok = where.get(v.generator, name)
                raise self.fail(f"invariant violation in {name.text}: generator {v.generator}: {v.kind}: {v.detail}", tok, source)
        self.add(name, X, source)

    def _ref_values(self, g, vals, source):
        try:
            return degen(g.text, vals)
        except ValueError as exc:
            raise self.fail(f"bad surjection on {g.text!r}: {exc}", g, source) from None

    def build_map(self, b, source):
        _, head, name, dom, cod, lines = b
        A = self.resolve(dom, SimplicialSet, "a simplicial set", source)
        B = self.resolve(cod, SimplicialSet, "a simplicial set", source)
        asg = {}
        for g, (t, vals) in lines:
            if g.text not in A.dims:
                raise self.fail(f"{g.text!r} is not a generator of {dom.text}", g, source)
            if g.text in asg:
                raise self.fail(f"{g.text!r} is assigned twice", g, source)
            asg[g.text] = self._ref(B, t, vals, source)
        m = SimplicialMap(A, B, asg, name=name.text, check=self.validate)
        self.add(name, m, source)

    def build_cat(self, b, source):
        _, head, name, objects, arrows, compose = b
        C = FiniteCategory(
            [o.text for o in objects],
            [(a.text, s.text, t.text) for a, s, t in arrows],
            {(g.text, f.text): h.text for g, f, h in compose},
            name=name.text,
        )
        if self.validate:
            bad = C.problems()
            if bad:
                raise self.fail(f"invariant violation in {name.text}: {bad[0]}", name, source)
        self.add(name, C, source)

    def build_functor(self, b, source):
        _, head, name, dom, cod, objects, arrows = b
        C = self.resolve(dom, FiniteCategory, "a category", source)
        D = self.resolve(cod, FiniteCategory, "a category", source)
        F = Functor(C, D, {a.text: b.text for a, b in objects}, {a.text: b.text for a, b in arrows}, name=name.text)
        if self.validate:
            bad = F.problems()
            if bad:
                raise self.fail(f"invariant violation in {name.text}: {bad[0]}", name, source)
        self.add(name, F, source)

    def build_cert(self, b, source):
        _, _, name, nodes, conclusion = b
        seen = set()
        out = []
        for t, rule, claim, subject, params, premises in nodes:
            if t.text in seen:
                raise self.fail(f"node {t.text!r} defined twice", t, source)
            if rule.text not in RULES:
                raise self.fail(f"unknown rule {rule.text!r}; the ledger is closed", rule, source)
            if claim.text not in CLAIMS:
                raise self.fail(f"unknown claim {claim.text!r}", claim, source)
            if subject.text not in self.env:
                raise self.fail(f"unresolved reference {subject.text!r}", subject, source)
            for k, v in params:
                if k.text in REF_PARAMS and v.text not in self.env:
                    raise self.fail(f"unresolved reference {v.text!r}", v, source)
            for p in premises:
                if p.text not in seen:
                    raise self.fail(f"premise {p.text!r} is not an earlier node", p, source)
            seen.add(t.text)
            out.append(Node(
                t.text, rule.text, claim.text, subject.text,
                tuple((k.text, v.text) for k, v in params), tuple(p.text for p in premises),
            ))
        if conclusion.text not in seen:
            raise self.fail(f"conclusion {conclusion.text!r} is not a node", conclusion, source)
        self.add(name, Certificate(name.text, tuple(out), conclusion.text), source)


def _build(sources: Iterable[tuple[str, str]], validate: bool) -> Document:
    builder = _Builder(validate)
    for text, source in sources:
        for b in _Parser(text, source).document():
            builder.block(b, source)
    return builder.doc


def parse(text: str, validate: bool = True, source: str = "<text>") -> Document:
    """Parse a document.

    With ``validate=True`` every simplicial set must satisfy the simplicial
    identities, every map must commute with faces and every category and
    functor must satisfy its laws; the first violation is a
    :class:`ParseError` naming the generator.
    """
    if not isinstance(text, str):
        raise TypeError("parse expects text")
    return _build([(text, source)], validate)


def load(paths, validate: bool = True) -> Document:
    """Parse one or more files into a single document."""
    if isinstance(paths, (str, Path)):
        paths = [paths]
    sources = []
    for p in paths:
        try:
            sources.append((Path(p).read_text(encoding="utf-8"), str(p)))
        except (OSError, UnicodeDecodeError) as exc:
            raise ParseError(f"cannot read file: {exc}", 0, 0, str(p)) from None
    return _build(sources, validate)


# -- serialization -----------------------------------------------------------------


def _ref_text(r: SimplexRef) -> str:
    return str(r)


def _sset_text(name: str, X: SimplicialSet) -> str:
    lines = [f"sset {_check_name(name)} {{"]
    for n, row in enumerate(X.generators):
        if not row:
            continue
        items = []
        for g in row:
            _check_name(g)
            if n == 0:
                items.append(g)
            else:
                fs = ", ".join(f"d{i}={_ref_text(r)}" for i, r in enumerate(X.faces[g]))
                items.append(f"{g} [{fs}]")
        lines.append(f"  dim {n}: {', '.join(items)};")
    lines.append("}")
    return "\n".join(lines)


def _map_text(name: str, m: SimplicialMap) -> str:
    lines = [f"map {_check_name(name)} : {_check_name(m.domain.name)} -> {_check_name(m.codomain.name)} {{"]
    for g, r in m.assignment.items():
        lines.append(f"  {g} -> {_ref_text(r)};")
    lines.append("}")
    return "\n".join(lines)


def _cat_text(name: str, C: FiniteCategory) -> str:
    lines = [f"cat {_check_name(name)} {{", f"  objects: {', '.join(map(_check_name, C.objects))};"]
    if C.arrows:
        lines.append("  arrows: " + ", ".join(f"{_check_name(a)}: {s} -> {t}" for a, s, t in C.arrows) + ";")
    if C.table:
        lines.append("  compose: " + ", ".join(f"{g}.{f} = {h}" for (g, f), h in C.table.items()) + ";")
    lines.append("}")
    return "\n".join(lines)


def _functor_text(name: str, F: Functor) -> str:
    lines = [f"functor {_check_name(name)} : {F.domain.name} -> {F.codomain.name} {{"]
    lines.append("  objects: " + ", ".join(f"{a} -> {b}" for a, b in F.obj_map.items()) + ";")
    if F.arr_map:
        lines.append("  arrows: " + ", ".join(f"{a} -> {b}" for a, b in F.arr_map.items()) + ";")
    lines.append("}")
    return "\n".join(lines)


def _cert_text(name: str, c: Certificate) -> str:
    lines = [f"cert {_check_name(name)} {{"]
    for n in c.nodes:
        s = f"  {n.id} = {n.rule} {n.claim} {n.subject}"
        if n.params:
            s += " [" + ", ".join(f"{k}={v}" for k, v in n.params) + "]"
        if n.premises:
            s += " <- " + ", ".join(n.premises)
        lines.append(s + ";")
    lines.append(f"  conclude {c.conclusion};")
    lines.append("}")
    return "\n".join(lines)


def serialize(doc: Document) -> str:
    """Canonical text: declaration order, one generator row per dimension,
    two-space indentation, one blank line between blocks."""
    parts = []
    for name, obj in doc.items.items():
        if isinstance(obj, SimplicialSet):
            parts.append(_sset_text(name, obj))
        elif isinstance(obj, SimplicialMap):
            parts.append(_map_text(name, obj))
        elif isinstance(obj, FiniteCategory):
            parts.append(_cat_text(name, obj))
        elif isinstance(obj, Functor):
            parts.append(_functor_text(name, obj))
        elif isinstance(obj, Certificate):
            parts.append(_cert_text(name, obj))
        else:
            raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n\n".join(parts) + "\n" if parts else ""
