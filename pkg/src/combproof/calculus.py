"""Right-sided sequent proofs and their compilation to combinatorial proofs.

Rules (principal formula last; ``x k`` swaps positions ``k`` and ``k+1``,
counted from 1)::

    ax    |- ~a, a
    one   |- 1
    x     G, A, B, D   =>  G, B, A, D
    w     G            =>  G, A
    c     G, A, A'     =>  G, A          (A' alpha-equivalent to A)
    and   G1, A1 ; G2, A2  =>  G1, G2, A1 & A2
    or    G, A, B      =>  G, A \\/ B
    ex    G, A[x:=t]   =>  G, ex x. A
    all   G, A         =>  G, all x. A   (x not free in G)
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Hashable

from .bifib import CombProof
from .fograph import Binder, Kind, binder_kind, graph_of, graph_of_sequent
from .graphs import UGraph
from .report import CheckReport
from .syntax import (
    And, Atom, Exists, Forall, Formula, Or, Sequent, Term, ONE, _One, _Zero,
    alpha_equal, atoms_of, formula_of_sequent, free_vars, negate, rectify,
    rectify_sequent, sequent_path, subst, term_text,
)

__all__ = [
    "RProof", "IllFormedProof", "TooManyAtoms", "PropOracleResult",
    "ax", "one", "exch", "weaken", "contract", "and_", "or_", "ex", "all_",
    "check_rproof", "cp_of_rproof", "prop_tautology", "proof_size",
]


class IllFormedProof(ValueError):
    pass


class TooManyAtoms(ValueError):
    pass


@dataclass(frozen=True)
class RProof:
    rule: str
    premises: tuple
    conclusion: Sequent
    param: object = None

    def __str__(self) -> str:
        return f"{self.rule}: {self.conclusion}"


def _forms(p: RProof) -> tuple:
    return p.conclusion.formulas


def _need(p: RProof, n: int, rule: str) -> tuple:
    fs = _forms(p)
    if len(fs) < n:
        raise IllFormedProof(f"{rule} needs at least {n} formulas, premise has {len(fs)}")
    return fs


def ax(atom: Formula) -> RProof:
    if not isinstance(atom, Atom):
        raise IllFormedProof(f"axiom on a non-atom {atom}")
    return RProof("ax", (), Sequent((negate(atom), atom)), atom)


def one() -> RProof:
    return RProof("one", (), Sequent((ONE,)))


def exch(k: int, p: RProof) -> RProof:
    fs = _forms(p)
    if not 1 <= k < len(fs):
        raise IllFormedProof(f"exchange position {k} out of range for {len(fs)} formulas")
    fs = list(fs)
    fs[k - 1], fs[k] = fs[k], fs[k - 1]
    return RProof("x", (p,), Sequent(tuple(fs)), k)


def weaken(a: Formula, p: RProof) -> RProof:
    return RProof("w", (p,), Sequent(_forms(p) + (a,)), a)


def contract(p: RProof) -> RProof:
    fs = _need(p, 2, "contraction")
    return RProof("c", (p,), Sequent(fs[:-1]), fs[-1])


def and_(p1: RProof, p2: RProof) -> RProof:
    f1 = _need(p1, 1, "and")
    f2 = _need(p2, 1, "and")
    conc = f1[:-1] + f2[:-1] + (And(f1[-1], f2[-1]),)
    return RProof("and", (p1, p2), Sequent(conc))


def or_(p: RProof) -> RProof:
    fs = _need(p, 2, "or")
    return RProof("or", (p,), Sequent(fs[:-2] + (Or(fs[-2], fs[-1]),)))


def ex(principal: Formula, t: Term, p: RProof) -> RProof:
    if not isinstance(principal, Exists):
        raise IllFormedProof(f"ex rule principal {principal} is not existential")
    fs = _need(p, 1, "ex")
    return RProof("ex", (p,), Sequent(fs[:-1] + (principal,)), (principal, t))


def all_(x: str, p: RProof) -> RProof:
    fs = _need(p, 1, "all")
    return RProof("all", (p,), Sequent(fs[:-1] + (Forall(x, fs[-1]),)), x)


def proof_size(p: RProof) -> int:
    return 1 + sum(proof_size(q) for q in p.premises)


def check_rproof(p: RProof) -> CheckReport:
    """Every rule instance matches its schema and side condition."""
    rep = CheckReport()

    def go(q: RProof, path: tuple) -> None:
        for i, sub in enumerate(q.premises):
            go(sub, path + (i,))
        prem = [s.conclusion.formulas for s in q.premises]
        conc = q.conclusion.formulas
        if q.rule == "ax":
            a = q.param
            if not isinstance(a, Atom) or conc != (negate(a), a):
                rep.fail("ax", path)
        elif q.rule == "one":
            if conc != (ONE,) or q.premises:
                rep.fail("one", path)
        elif q.rule == "x":
            k = q.param
            fs = list(prem[0])
            if not (isinstance(k, int) and 1 <= k < len(fs)):
                rep.fail("x", path)
            else:
                fs[k - 1], fs[k] = fs[k], fs[k - 1]
                if tuple(fs) != conc:
                    rep.fail("x", path)
        elif q.rule == "w":
            if conc != prem[0] + (q.param,):
                rep.fail("w", path)
        elif q.rule == "c":
            fs = prem[0]
            if len(fs) < 2 or conc != fs[:-1]:
                rep.fail("c", path)
            elif not alpha_equal(fs[-1], fs[-2]):
                rep.fail("c-not-alpha-equivalent", path,
                         f"{fs[-2]} vs {fs[-1]}")
        elif q.rule == "and":
            f1, f2 = prem
            if not f1 or not f2 or conc != f1[:-1] + f2[:-1] + (And(f1[-1], f2[-1]),):
                rep.fail("and", path)
        elif q.rule == "or":
            fs = prem[0]
            if len(fs) < 2 or conc != fs[:-2] + (Or(fs[-2], fs[-1]),):
                rep.fail("or", path)
        elif q.rule == "ex":
            principal, t = q.param
            fs = prem[0]
            if not fs or conc != fs[:-1] + (principal,):
                rep.fail("ex", path)
            elif not alpha_equal(subst(principal.body, principal.var, t), fs[-1]):
                rep.fail("ex-witness", path,
                         f"{fs[-1]} is not {principal.body}[{principal.var}:={term_text(t)}]")
        elif q.rule == "all":
            x = q.param
            fs = prem[0]
            if not fs or conc != fs[:-1] + (Forall(x, fs[-1]),):
                rep.fail("all", path)
            elif any(x in free_vars(g) for g in fs[:-1]):
                rep.fail("all-eigenvariable", path, f"{x} is free in the context")
        else:
            rep.fail("unknown-rule", path, q.rule)

    go(p, ())
    return rep


# ---------------------------------------------------------------- compilation


@dataclass
class _Skel:
    """Unlabelled source with links and a map into sequent vertices ``(i, path)``."""

    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    links: list = field(default_factory=list)
    fmap: dict = field(default_factory=dict)

    def offset(self, k: int) -> "_Skel":
        return _Skel({v + k for v in self.vertices},
                     {frozenset(u + k for u in e) for e in self.edges},
                     [(a + k, b + k) for a, b in self.links],
                     {v + k: t for v, t in self.fmap.items()})

    def drop(self, vs: set) -> None:
        self.vertices -= vs
        self.edges = {e for e in self.edges if not e & vs}
        self.links = [l for l in self.links if not set(l) & vs]
        for v in vs:
            del self.fmap[v]


def _seq_graph(s: Sequent):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return graph_of_sequent(rectify_sequent(s))


def _compile(p: RProof) -> _Skel:
    conc = p.conclusion.formulas
    n = len(conc)
    if p.rule == "ax":
        return _Skel({0, 1}, set(), [(0, 1)], {0: (0, ()), 1: (1, ())})
    if p.rule == "one":
        return _Skel({0}, set(), [], {0: (0, ())})
    if p.rule in ("x", "w", "or", "ex", "all", "c"):
        s = _compile(p.premises[0])
        hn = len(p.premises[0].conclusion.formulas)
    if p.rule == "x":
        k = p.param - 1
        swap = {k: k + 1, k + 1: k}
        s.fmap = {v: (swap.get(i, i), path) for v, (i, path) in s.fmap.items()}
        return s
    if p.rule == "w":
        return s
    if p.rule == "or":
        def rekey(i, path):
            if i == hn - 2:
                return (n - 1, (0,) + path)
            if i == hn - 1:
                return (n - 1, (1,) + path)
            return (i, path)
        s.fmap = {v: rekey(*t) for v, t in s.fmap.items()}
        return s
    if p.rule in ("ex", "all"):
        pre = {v for v, (i, _) in s.fmap.items() if i == n - 1}
        s.fmap = {v: (i, (0,) + path) if i == n - 1 else (i, path)
                  for v, (i, path) in s.fmap.items()}
        if pre:
            v = max(s.vertices, default=-1) + 1
            s.vertices.add(v)
            s.fmap[v] = (n - 1, ())
            if p.rule == "ex":
                s.edges |= {frozenset((v, u)) for u in pre}
        return s
    if p.rule == "c":
        s.fmap = {v: (n - 1, path) if i == hn - 1 else (i, path)
                  for v, (i, path) in s.fmap.items()}
        g = _seq_graph(p.conclusion)
        pre: dict = {}
        for v, t in s.fmap.items():
            pre.setdefault(t, []).append(v)
        doomed = set()
        for b, vs in pre.items():
            if (len(vs) > 1 and isinstance(g.labels[b], Binder) and not g.adj[b]
                    and binder_kind(g, b) is Kind.UNIVERSAL):
                doomed |= set(sorted(vs)[1:])
        s.drop(doomed)
        return s
    if p.rule == "and":
        s1 = _compile(p.premises[0])
        n1 = len(p.premises[0].conclusion.formulas)
        s2 = _compile(p.premises[1])
        s2 = s2.offset(max(s1.vertices, default=-1) + 1)
        P1 = {v for v, (i, _) in s1.fmap.items() if i == n1 - 1}
        P2 = {v for v, (i, _) in s2.fmap.items() if i == len(p.premises[1].conclusion.formulas) - 1}

        def z1(i, path):
            return (n - 1, (0,) + path) if i == n1 - 1 else (i, path)

        def z2(i, path):
            n2 = len(p.premises[1].conclusion.formulas)
            return (n - 1, (1,) + path) if i == n2 - 1 else (n1 - 1 + i, path)

        s1.fmap = {v: z1(*t) for v, t in s1.fmap.items()}
        s2.fmap = {v: z2(*t) for v, t in s2.fmap.items()}
        if bool(P1) == bool(P2):
            return _Skel(s1.vertices | s2.vertices,
                         s1.edges | s2.edges | {frozenset((u, w)) for u in P1 for w in P2},
                         s1.links + s2.links, {**s1.fmap, **s2.fmap})
        return s1 if not P1 else s2
    raise IllFormedProof(f"unknown rule {p.rule!r}")


def cp_of_rproof(p: RProof) -> CombProof:
    """Combinatorial proof of the conclusion's formula, built rule by rule."""
    rep = check_rproof(p)
    if not rep.ok:
        raise IllFormedProof(str(rep))
    s = _compile(p)
    conc = p.conclusion
    n = len(conc.formulas)
    formula = rectify(formula_of_sequent(conc))
    target = graph_of(formula)
    order = sorted(s.vertices)
    ids = {v: k for k, v in enumerate(order)}
    fmap = {ids[v]: sequent_path(i, n) + path for v, (i, path) in s.fmap.items()}
    colour = {}
    for k, (a, b) in enumerate(s.links):
        colour[ids[a]] = k
        colour[ids[b]] = k
    source = UGraph({ids[v]: None for v in order},
                    [tuple(ids[u] for u in e) for e in s.edges], colour)
    return CombProof(source, target, fmap, formula)


# ---------------------------------------------------------------- propositional oracle


@dataclass(frozen=True)
class PropOracleResult:
    valid: bool
    countermodel: dict | None = None

    def __bool__(self) -> bool:
        return self.valid


def prop_tautology(f: Formula, max_atoms: int = 20) -> PropOracleResult:
    """Truth-table validity of a quantifier-free formula; atoms are distinct propositions."""
    keys = sorted({(a.pred.base, tuple(term_text(t) for t in a.args)) for a in atoms_of(f)})
    if len(keys) > max_atoms:
        raise TooManyAtoms(f"{len(keys)} atoms exceed {max_atoms}")

    def ev(g: Formula, val: dict) -> bool:
        if isinstance(g, Atom):
            v = val[(g.pred.base, tuple(term_text(t) for t in g.args))]
            return (not v) if g.pred.dualized else v
        if isinstance(g, _One):
            return True
        if isinstance(g, _Zero):
            return False
        if isinstance(g, And):
            return ev(g.left, val) and ev(g.right, val)
        if isinstance(g, Or):
            return ev(g.left, val) or ev(g.right, val)
        raise ValueError(f"quantified or modal subformula {g}")

    for bits in itertools.product((False, True), repeat=len(keys)):
        val = dict(zip(keys, bits))
        if not ev(f, val):
            return PropOracleResult(False, val)
    return PropOracleResult(True)
