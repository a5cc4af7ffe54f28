"""Proof certificates over a closed ledger of trusted rules.

A certificate is a list of nodes.  Each node applies one rule to conclude a
claim about a named map; its premises are earlier nodes and its side
conditions are recomputed by the checker from the objects in the
environment.  Nothing is taken on trust except the rules below.

Trusted rules (ledger version ``LEDGER_VERSION``):

R1 SaturatedGeneration
    A pushout of an inner horn inclusion, or a recomputed horn-filling
    trace, is inner anodyne.
R2 InnerAnodyneImpliesWce
    Inner anodyne maps are weak categorical equivalences.
R3 TwoOutOfThree
    Weak categorical equivalences satisfy two-out-of-three.
R4 NerveMapInnerFibration
    The nerve of a functor is an inner fibration.  Nerves are 2-coskeletal;
    the side condition also demands that the truncation used is the whole
    nerve.
R5 EpiBaseChangeInnerFibration
    If the pullback of ``p`` along a levelwise epimorphism is an inner
    fibration then so is ``p``: every square from a horn inclusion into
    ``p`` has a representable lower corner, which lifts through the epi.
R6 AnodyneAndFibrationImpliesIso
    An inner anodyne inner fibration lifts against itself, hence is an
    isomorphism; so an inner fibration that is not an isomorphism is not
    inner anodyne.
R7 PartialConverse
    A monomorphism, bijective on vertices, which is a weak categorical
    equivalence into a quasi-category is inner anodyne.  The
    quasi-category condition can only be checked up to a dimension bound,
    so verdicts relying on R7 are flagged bounded.
R8 TrivialCofibrationNotFibration
    A monomorphism and weak categorical equivalence that is not an
    isomorphism is not a fibration for the Joyal model structure.
R9 IdentityIsWce
    Isomorphisms are weak categorical equivalences.

The ``HO`` node is not a rule but a computation: the induced functor on
fundamental categories is an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .categories import Functor
from .homotopy import ho_functor, is_cat_iso, tau1
from .limits import arrow_iso_search, iso_under, pullback, pushout_along_mono
from .lifting import fill_inner_horns, is_isomorphism, is_levelwise_epi, is_quasicategory
from .nerve import has_chains_above, nerve_functor
from .simplicial import (
    SimplicialMap,
    bijective_on_vertices,
    compose_maps,
    horn,
    horn_inclusion,
    is_monomorphism,
)

LEDGER_VERSION = "1"

INNER_ANODYNE = "inner-anodyne"
WCE = "weak-categorical-equivalence"
INNER_FIBRATION = "inner-fibration"
NOT_INNER_ANODYNE = "not-inner-anodyne"
NOT_FIBRATION = "not-fibration"
HO_ISO = "isomorphism-on-ho"
CLAIMS = (INNER_ANODYNE, WCE, INNER_FIBRATION, NOT_INNER_ANODYNE, NOT_FIBRATION, HO_ISO)


@dataclass(frozen=True)
class Rule:
    code: str
    name: str
    concludes: str
    premises: tuple[str, ...]
    params: tuple[str, ...] = ()


RULES = {
    "R1": Rule("R1", "SaturatedGeneration", INNER_ANODYNE, ()),
    "R2": Rule("R2", "InnerAnodyneImpliesWce", WCE, (INNER_ANODYNE,)),
    "R3": Rule("R3", "TwoOutOfThree", WCE, (WCE, WCE), ("first", "second", "composite")),
    "R4": Rule("R4", "NerveMapInnerFibration", INNER_FIBRATION, (), ("functor", "dim")),
    "R5": Rule("R5", "EpiBaseChangeInnerFibration", INNER_FIBRATION, (INNER_FIBRATION,), ("base",)),
    "R6": Rule("R6", "AnodyneAndFibrationImpliesIso", NOT_INNER_ANODYNE, (INNER_FIBRATION,)),
    "R7": Rule("R7", "PartialConverse", INNER_ANODYNE, (WCE,), ("dim",)),
    "R8": Rule("R8", "TrivialCofibrationNotFibration", NOT_FIBRATION, (WCE,)),
    "R9": Rule("R9", "IdentityIsWce", WCE, ()),
    "HO": Rule("HO", "HomotopyCategoryIso", HO_ISO, ()),
}


class CertificateError(ValueError):
    """A structurally malformed certificate."""


class SideConditionFailed(Exception):
    pass


@dataclass(frozen=True)
class Node:
    id: str
    rule: str
    claim: str
    subject: str
    params: tuple[tuple[str, str], ...] = ()
    premises: tuple[str, ...] = ()

    def param(self, key: str) -> str:
        for k, v in self.params:
            if k == key:
                return v
        raise SideConditionFailed(f"missing parameter {key!r}")

    def has(self, key: str) -> bool:
        return any(k == key for k, _ in self.params)


def node(id, rule, claim, subject, premises=(), **params) -> Node:
    return Node(id, rule, claim, subject, tuple((k, str(v)) for k, v in params.items()), tuple(premises))


@dataclass(frozen=True)
class Certificate:
    name: str
    nodes: tuple[Node, ...]
    conclusion: str

    def replace_node(self, new: Node) -> "Certificate":
        return Certificate(self.name, tuple(new if n.id == new.id else n for n in self.nodes), self.conclusion)

    def node(self, id: str) -> Node:
        for n in self.nodes:
            if n.id == id:
                return n
        raise KeyError(id)


@dataclass
class NodeResult:
    id: str
    rule: str
    claim: str
    subject: str
    ok: bool
    detail: str
    bounded: bool = False


@dataclass
class Verdict:
    certificate: str
    subject: str
    claim: str
    status: str
    failing_node: str | None = None
    reason: str = ""
    bounded: bool = False
    nodes: list[NodeResult] = field(default_factory=list)
    ledger_version: str = LEDGER_VERSION

    @property
    def accepted(self) -> bool:
        return self.status == "accepted"

    def __bool__(self):
        return self.accepted

    def as_dict(self) -> dict:
        return {
            "certificate": self.certificate,
            "subject": self.subject,
            "claim": self.claim,
            "status": self.status,
            "failing_node": self.failing_node,
            "reason": self.reason,
            "bounded": self.bounded,
            "ledger_version": self.ledger_version,
            "nodes": [
                {"id": r.id, "rule": r.rule, "claim": r.claim, "subject": r.subject, "ok": r.ok, "detail": r.detail, "bounded": r.bounded}
                for r in self.nodes
            ],
        }


def check_structure(cert: Certificate) -> None:
    """Raise :class:`CertificateError` on malformed trees."""
    seen = set()
    for n in cert.nodes:
        if n.id in seen:
            raise CertificateError(f"node id {n.id!r} used twice")
        if n.rule not in RULES:
            raise CertificateError(f"node {n.id!r}: unknown rule {n.rule!r}; the ledger is closed")
        if n.claim not in CLAIMS:
            raise CertificateError(f"node {n.id!r}: unknown claim {n.claim!r}")
        for p in n.premises:
            if p not in seen:
                raise CertificateError(f"node {n.id!r}: premise {p!r} is not an earlier node")
        seen.add(n.id)
    if cert.conclusion not in seen:
        raise CertificateError(f"conclusion {cert.conclusion!r} is not a node")


class _Checker:
    def __init__(self, env: Mapping[str, object]):
        self.env = env
        self.facts: dict[str, tuple[str, str]] = {}

    def obj(self, name, kind):
        try:
            x = self.env[name]
        except KeyError:
            raise SideConditionFailed(f"unknown object {name!r}") from None
        if not isinstance(x, kind):
            raise SideConditionFailed(f"{name!r} is not a {kind.__name__}")
        return x

    def map(self, name) -> SimplicialMap:
        return self.obj(name, SimplicialMap)

    def premises(self, n: Node, rule: Rule):
        if len(n.premises) != len(rule.premises):
            raise SideConditionFailed(f"{rule.code} needs {len(rule.premises)} premise(s), got {len(n.premises)}")
        got = [self.facts[p] for p in n.premises]
        for (claim, subject), want in zip(got, rule.premises):
            if claim != want:
                raise SideConditionFailed(f"premise about {subject} proves {claim}, expected {want}")
        return got

    def run(self, n: Node) -> tuple[str, bool]:
        rule = RULES[n.rule]
        if n.claim != rule.concludes:
            raise SideConditionFailed(f"{rule.code} concludes {rule.concludes}, not {n.claim}")
        return getattr(self, "rule_" + n.rule)(n, rule)

    def rule_R1(self, n, rule):
        self.premises(n, rule)
        m = self.map(n.subject)
        if n.has("fill_dim"):
            dim, steps = int(n.param("fill_dim")), int(n.param("fill_steps"))
            tr = fill_inner_horns(m.domain, dim, steps)
            if not tr.is_inner():
                raise SideConditionFailed("filling trace attaches a non-inner horn")
            if iso_under(tr.inclusion, m) is not None:
                return f"recomputed {steps}-step filling trace ({len(tr.attachments)} inner horns) matches", False
            raise SideConditionFailed("recomputed filling trace does not match the subject")
        hn, hk = int(n.param("n")), int(n.param("k"))
        if not 0 < hk < hn:
            raise SideConditionFailed(f"horn Lambda^{hn}_{hk} is not inner")
        along = self.map(n.param("along"))
        if along.domain != horn(hn, hk):
            raise SideConditionFailed(f"{n.param('along')} is not defined on Lambda^{hn}_{hk}")
        if along.codomain != m.domain:
            raise SideConditionFailed("the pushout's right leg does not start at the subject's domain")
        po = pushout_along_mono(horn_inclusion(hn, hk), along)
        if iso_under(po.from_right_leg, m) is not None:
            return f"recomputed pushout of Lambda^{hn}_{hk} is isomorphic to the subject's codomain, leg = subject", False
        raise SideConditionFailed("recomputed pushout is not isomorphic to the subject under its leg")

    def rule_R2(self, n, rule):
        ((_, subj),) = self.premises(n, rule)
        if subj != n.subject:
            raise SideConditionFailed(f"premise is about {subj}, not {n.subject}")
        return "inner anodyne premise", False

    def rule_R3(self, n, rule):
        got = self.premises(n, rule)
        first, second, comp = (n.param(k) for k in ("first", "second", "composite"))
        a, b, c = self.map(first), self.map(second), self.map(comp)
        if b.domain != a.codomain:
            raise SideConditionFailed(f"{second} o {first} is not composable")
        ba = compose_maps(b, a)
        if ba.domain != c.domain or ba.codomain != c.codomain or ba.assignment != c.assignment:
            raise SideConditionFailed(f"{second} o {first} != {comp}")
        trio = [first, second, comp]
        if n.subject not in trio:
            raise SideConditionFailed(f"{n.subject} is not part of the composite triangle")
        others = list(trio)
        others.remove(n.subject)
        if sorted(s for _, s in got) != sorted(others):
            raise SideConditionFailed(f"premises must cover {others}, got {[s for _, s in got]}")
        return f"{second} o {first} == {comp} recomputed", False

    def rule_R4(self, n, rule):
        self.premises(n, rule)
        m = self.map(n.subject)
        F = self.obj(n.param("functor"), Functor)
        dim = int(n.param("dim"))
        bad = F.problems() or F.domain.problems() or F.codomain.problems()
        if bad:
            raise SideConditionFailed("functor check failed: " + bad[0])
        for C in (F.domain, F.codomain):
            if has_chains_above(C, dim):
                raise SideConditionFailed(f"the nerve of {C.name} has simplices above dimension {dim}")
        if arrow_iso_search(nerve_functor(F, dim), m) is None:
            raise SideConditionFailed(f"nerve of {F.name} is not isomorphic to {n.subject} as an arrow")
        return f"subject is the nerve of {F.name} up to isomorphism", False

    def rule_R5(self, n, rule):
        ((_, q_name),) = self.premises(n, rule)
        p = self.map(n.subject)
        base = self.map(n.param("base"))
        q = self.map(q_name)
        if base.codomain != p.codomain:
            raise SideConditionFailed("base and subject have different codomains")
        if not is_levelwise_epi(base):
            raise SideConditionFailed(f"{n.param('base')} is not a levelwise epimorphism")
        pb = pullback(p, base)
        if arrow_iso_search(pb.proj_right, q) is None:
            raise SideConditionFailed(f"pullback of {n.subject} along {n.param('base')} is not isomorphic to {q_name}")
        return f"pullback along epi {n.param('base')} is {q_name} up to isomorphism", False

    def rule_R6(self, n, rule):
        ((_, subj),) = self.premises(n, rule)
        if subj != n.subject:
            raise SideConditionFailed(f"premise is about {subj}, not {n.subject}")
        if is_isomorphism(self.map(n.subject)):
            raise SideConditionFailed(f"{n.subject} is an isomorphism")
        return f"{n.subject} is an inner fibration and not an isomorphism", False

    def rule_R7(self, n, rule):
        ((_, subj),) = self.premises(n, rule)
        if subj != n.subject:
            raise SideConditionFailed(f"premise is about {subj}, not {n.subject}")
        m = self.map(n.subject)
        dim = int(n.param("dim"))
        if not is_monomorphism(m):
            raise SideConditionFailed(f"{n.subject} is not a monomorphism")
        if not bijective_on_vertices(m):
            raise SideConditionFailed(f"{n.subject} is not bijective on vertices")
        q = is_quasicategory(m.codomain, dim)
        if not q:
            raise SideConditionFailed(f"codomain fails the inner horn check at n={q.witness['n']}, k={q.witness['k']}")
        return f"codomain is a quasi-category up to dimension {dim} (bounded)", True

    def rule_R8(self, n, rule):
        ((_, subj),) = self.premises(n, rule)
        if subj != n.subject:
            raise SideConditionFailed(f"premise is about {subj}, not {n.subject}")
        m = self.map(n.subject)
        if not is_monomorphism(m):
            raise SideConditionFailed(f"{n.subject} is not a monomorphism")
        if is_isomorphism(m):
            raise SideConditionFailed(f"{n.subject} is an isomorphism")
        return "monomorphism and weak equivalence, not an isomorphism", False

    def rule_R9(self, n, rule):
        self.premises(n, rule)
        if not is_isomorphism(self.map(n.subject)):
            raise SideConditionFailed(f"{n.subject} is not an isomorphism")
        return f"{n.subject} is an isomorphism", False

    def rule_HO(self, n, rule):
        self.premises(n, rule)
        m = self.map(n.subject)
        F = ho_functor(m, tau1(m.domain), tau1(m.codomain))
        if not is_cat_iso(F):
            raise SideConditionFailed("the induced functor is not an isomorphism")
        return "induced functor on fundamental categories is an isomorphism", False


def check_certificate(cert: Certificate, env: Mapping[str, object]) -> Verdict:
    """Check every node; accept only if all side conditions hold."""
    check_structure(cert)
    checker = _Checker(env)
    results: list[NodeResult] = []
    bounded: dict[str, bool] = {}
    concl = cert.node(cert.conclusion)
    for n in cert.nodes:
        try:
            detail, b = checker.run(n)
        except SideConditionFailed as exc:
            results.append(NodeResult(n.id, n.rule, n.claim, n.subject, False, str(exc)))
            return Verdict(cert.name, concl.subject, concl.claim, "rejected", n.id, str(exc), False, results)
        b = b or any(bounded[p] for p in n.premises)
        bounded[n.id] = b
        checker.facts[n.id] = (n.claim, n.subject)
        results.append(NodeResult(n.id, n.rule, n.claim, n.subject, True, detail, b))
    return Verdict(cert.name, concl.subject, concl.claim, "accepted", None, "", bounded[concl.id], results)


def audit(cert: Certificate) -> list[str]:
    """Structural audit: every rule node carries its premises and parameters."""
    problems = []
    try:
        check_structure(cert)
    except CertificateError as exc:
        return [str(exc)]
    for n in cert.nodes:
        rule = RULES[n.rule]
        if len(n.premises) != len(rule.premises):
            problems.append(f"{n.id}: {rule.code} expects {len(rule.premises)} premise(s)")
        for p in rule.params:
            if not n.has(p):
                problems.append(f"{n.id}: {rule.code} is missing parameter {p!r}")
        if n.rule == "R1" and not (n.has("along") or n.has("fill_dim")):
            problems.append(f"{n.id}: R1 needs either a pushout square or a filling trace")
    return problems
