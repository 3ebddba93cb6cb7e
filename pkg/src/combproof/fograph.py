"""First-order cographs: translation from formulas, scopes, binding, legality.

Vertices are labelled by a :class:`Binder` (a variable), a :class:`Literal`
(an atom) or a :class:`ConstLit` (``1`` or ``0``).  A binder's scope is the
set of leaves under its parent in the cotree; the binder is existential when
that parent is a join and universal when it is a union.

>>> from combproof.syntax import parse_formula
>>> g = graph_of(parse_formula("ex x. (~p(x) \\\\/ all y. p(y))"))
>>> sorted(str(l) for l in g.labels.values())
['p(y)', 'x', 'y', '~p(x)']
>>> len(g.edges)
3
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterable, Mapping

from .graphs import (
    CotreeIndex, DGraph, GraphError, Leaf, Node, Op, UGraph, cotree_of,
    is_cograph, find_p4, vkey,
)
from .report import CheckReport
from .syntax import (
    App, Atom, And, Exists, Forall, Formula, Or, PredSym, Sequent, Term, Var,
    ONE, ZERO, _One, _Zero, formula_of_sequent, fresh_name, is_clear,
    is_rectified, rectify, rectify_sequent, subst_term, term_text, term_vars,
)

__all__ = [
    "Binder", "Literal", "ConstLit", "Fograph", "Kind", "FographError",
    "PortionInvalid", "NotIndependent", "VariablePresent",
    "OccurrenceOutsidePortion", "TermContainsBoundVar", "NotClear",
    "NotABinder", "literal_of_atom", "atom_of_label", "label_vars",
    "graph_of", "graph_of_sequent", "xgraph_of", "fograph",
    "binders", "literals", "scope", "binder_kind", "binding_graph",
    "bindings", "check_fograph", "is_fograph_rectified", "rectify_fograph",
    "formula_of_fograph", "check_portion", "independent", "free_variables",
    "bound_variables", "fusion", "univ_quant", "exist_quant",
    "subterm_at", "replace_at", "is_fair",
]


# ---------------------------------------------------------------- labels


@dataclass(frozen=True)
class Binder:
    var: str

    def __str__(self) -> str:
        return self.var


@dataclass(frozen=True)
class Literal:
    pred: PredSym
    args: tuple = ()

    def __str__(self) -> str:
        text = str(self.pred)
        if self.args:
            text += "(" + ",".join(term_text(a) for a in self.args) + ")"
        return text


@dataclass(frozen=True)
class ConstLit:
    value: int

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise ValueError("logical constants are 0 and 1")

    def __str__(self) -> str:
        return str(self.value)


def literal_of_atom(a: Formula) -> Literal | ConstLit:
    if isinstance(a, Atom):
        return Literal(a.pred, a.args)
    if isinstance(a, _One):
        return ConstLit(1)
    if isinstance(a, _Zero):
        return ConstLit(0)
    raise TypeError(f"not an atom or constant: {a!r}")


def atom_of_label(l: Literal | ConstLit) -> Formula:
    if isinstance(l, Literal):
        return Atom(l.pred, l.args)
    if isinstance(l, ConstLit):
        return ONE if l.value == 1 else ZERO
    raise TypeError(f"not a literal: {l!r}")


def label_vars(l) -> frozenset[str]:
    if isinstance(l, Binder):
        return frozenset((l.var,))
    if isinstance(l, Literal):
        acc: set[str] = set()
        for t in l.args:
            acc |= term_vars(t)
        return frozenset(acc)
    return frozenset()


class Kind(Enum):
    EXISTENTIAL = "existential"
    UNIVERSAL = "universal"

    def __str__(self) -> str:
        return self.value


# ---------------------------------------------------------------- errors


class FographError(ValueError):
    pass


class PortionInvalid(FographError):
    def __init__(self, condition: str, witness=None):
        super().__init__(f"invalid portion: {condition} {witness!r}")
        self.condition = condition
        self.witness = witness


class NotIndependent(FographError):
    pass


class VariablePresent(FographError):
    pass


class OccurrenceOutsidePortion(FographError):
    pass


class TermContainsBoundVar(FographError):
    pass


class NotClear(FographError):
    pass


class NotABinder(FographError):
    pass


# ---------------------------------------------------------------- the graph type


class Fograph(UGraph):
    """A labelled cograph whose labels are binders, literals or constants."""

    @property
    def index(self) -> CotreeIndex:
        idx = self._cache.get("index")
        if idx is None:
            idx = CotreeIndex(cotree_of(self))
            self._cache["index"] = idx
        return idx


def fograph(labels: Mapping, edges: Iterable = (), colour: Mapping | None = None) -> Fograph:
    return Fograph(labels, edges, colour)


def binders(g: UGraph) -> list:
    return [v for v in g.vertices if isinstance(g.labels[v], Binder)]


def literals(g: UGraph) -> list:
    return [v for v in g.vertices if isinstance(g.labels[v], (Literal, ConstLit))]


def _index(g: UGraph) -> CotreeIndex:
    if isinstance(g, Fograph):
        return g.index
    idx = g._cache.get("index")
    if idx is None:
        idx = CotreeIndex(cotree_of(g))
        g._cache["index"] = idx
    return idx


def _require_binder(g: UGraph, b) -> Binder:
    lab = g.labels.get(b)
    if not isinstance(lab, Binder):
        raise NotABinder(f"{b!r} is not a binder")
    return lab


def scope(g: UGraph, b) -> frozenset:
    """Leaves under the cotree parent of binder ``b`` (all of ``g`` if ``b`` is alone)."""
    _require_binder(g, b)
    idx = _index(g)
    parent = idx.parent_of_vertex(b)
    return idx.leafset[id(parent)] if parent is not None else frozenset((b,))


def binder_kind(g: UGraph, b) -> Kind:
    _require_binder(g, b)
    parent = _index(g).parent_of_vertex(b)
    if parent is not None and parent.op is Op.JOIN:
        return Kind.EXISTENTIAL
    return Kind.UNIVERSAL


def bindings(g: UGraph) -> frozenset[tuple]:
    """Arcs from each binder to the literals in its scope containing its variable."""
    cached = g._cache.get("bindings")
    if cached is not None:
        return cached
    arcs = set()
    for b in binders(g):
        x = g.labels[b].var
        for v in scope(g, b):
            lab = g.labels[v]
            if isinstance(lab, Literal) and x in label_vars(lab):
                arcs.add((b, v))
    out = frozenset(arcs)
    g._cache["bindings"] = out
    return out


def binding_graph(g: UGraph) -> DGraph:
    return DGraph(frozenset(g.labels), bindings(g))


def free_variables(g: UGraph) -> set[str]:
    bound = bound_variables(g)
    acc: set[str] = set()
    for v in literals(g):
        acc |= label_vars(g.labels[v])
    return acc - bound


def bound_variables(g: UGraph) -> set[str]:
    return {g.labels[b].var for b in binders(g)}


def check_fograph(g: UGraph) -> CheckReport:
    """Legality: cograph, some literal, every binder scope has a literal and no rival binder."""
    rep = CheckReport()
    for v, lab in g.labels.items():
        if not isinstance(lab, (Binder, Literal, ConstLit)):
            rep.fail("label", v, f"unlabelled or unknown label {lab!r}")
    if not rep.ok:
        return rep
    if not literals(g):
        rep.fail("no-literal", None, "a fograph needs at least one literal")
        return rep
    if not is_cograph(g):
        rep.fail("not-cograph", find_p4(g), "induced path on four vertices")
        return rep
    for b in binders(g):
        sc = scope(g, b)
        x = g.labels[b].var
        if not any(isinstance(g.labels[v], (Literal, ConstLit)) for v in sc):
            rep.fail("scope-without-literal", b)
        rivals = [v for v in sc if v != b and g.labels[v] == Binder(x)]
        if rivals:
            rep.fail("scope-rival-binder", (b, min(rivals, key=vkey)),
                     f"another {x}-binder lies in the scope")
    return rep


def is_fair(g: UGraph) -> bool:
    """Binders sharing a variable are never adjacent."""
    for e in g.edges:
        u, w = tuple(e)
        lu, lw = g.labels[u], g.labels[w]
        if isinstance(lu, Binder) and lu == lw:
            return False
    return True


# ---------------------------------------------------------------- rectification


def is_fograph_rectified(g: UGraph) -> bool:
    """Each variable has at most one binder, whose scope holds every literal with it."""
    seen: dict[str, object] = {}
    for b in binders(g):
        x = g.labels[b].var
        if x in seen:
            return False
        seen[x] = b
    for x, b in seen.items():
        sc = scope(g, b)
        for v in literals(g):
            if x in label_vars(g.labels[v]) and v not in sc:
                return False
    return True


def rectify_fograph(g: UGraph) -> Fograph:
    """Give binders fresh variables until each variable has one binder covering its literals.

    Per variable, the lowest binder keeps its name when no literal with that
    variable is left unbound; every other binder gets a fresh name, which is
    also substituted into the literals it binds.
    """
    if not isinstance(g, Fograph):
        g = Fograph(g.labels, g.edges, g.colour)
    if is_fograph_rectified(g):
        return g
    arcs = bindings(g)
    bound_by: dict = {}
    for b, l in arcs:
        bound_by.setdefault(b, set()).add(l)
    lits_with: dict[str, set] = {}
    for v in literals(g):
        for x in label_vars(g.labels[v]):
            lits_with.setdefault(x, set()).add(v)
    used = set()
    for lab in g.labels.values():
        used |= label_vars(lab)
    by_var: dict[str, list] = {}
    for b in binders(g):
        by_var.setdefault(g.labels[b].var, []).append(b)
    labels = dict(g.labels)
    lit_ren: dict = {}
    for x, bs in sorted(by_var.items()):
        covered = set()
        for b in bs:
            covered |= bound_by.get(b, set())
        keep = bs[0] if lits_with.get(x, set()) <= covered else None
        for b in bs:
            if b == keep:
                continue
            new = fresh_name(x, used)
            used.add(new)
            labels[b] = Binder(new)
            for l in bound_by.get(b, ()):
                lit_ren.setdefault(l, {})[x] = Var(new)
    for l, ren in lit_ren.items():
        lab = labels[l]
        labels[l] = Literal(lab.pred, tuple(subst_term(t, ren) for t in lab.args))
    out = Fograph(labels, g.edges, g.colour)
    return out


# ---------------------------------------------------------------- formulas to graphs


def _build(f: Formula, path: tuple, labels: dict, edges: list, key) -> list:
    if isinstance(f, (Atom, _One, _Zero)):
        labels[key(path)] = literal_of_atom(f)
        return [key(path)]
    if isinstance(f, (Forall, Exists)):
        b = key(path)
        labels[b] = Binder(f.var)
        body = _build(f.body, path + (0,), labels, edges, key)
        if isinstance(f, Exists):
            edges.extend((b, v) for v in body)
        return [b] + body
    if isinstance(f, (And, Or)):
        left = _build(f.left, path + (0,), labels, edges, key)
        right = _build(f.right, path + (1,), labels, edges, key)
        if isinstance(f, And):
            edges.extend((u, w) for u in left for w in right)
        return left + right
    raise TypeError(f"not a first-order formula: {f!r}")


def xgraph_of(f: Formula) -> Fograph:
    """Graph of a clear formula, without renaming; vertex ids are preorder paths."""
    if not is_clear(f):
        raise NotClear("formula is not extruded and unambiguous")
    labels: dict = {}
    edges: list = []
    _build(f, (), labels, edges, lambda p: p)
    return Fograph(labels, edges)


def graph_of(f: Formula) -> Fograph:
    """Graph of a formula; unrectified input is rectified first, with a warning.

    Vertex ids are paths: a quantifier body is child ``0`` and the operands of
    a binary connective are children ``0`` and ``1``.
    """
    if not is_rectified(f):
        warnings.warn("formula is not rectified; rectifying before translation",
                      stacklevel=2)
        f = rectify(f)
    labels: dict = {}
    edges: list = []
    _build(f, (), labels, edges, lambda p: p)
    return Fograph(labels, edges)


def graph_of_sequent(s: Sequent) -> Fograph:
    """Graph of a sequent's formula with ids ``(i, path within member i)``."""
    if not is_rectified(formula_of_sequent(s)):
        warnings.warn("sequent is not rectified; rectifying before translation",
                      stacklevel=2)
        s = rectify_sequent(s)
    labels: dict = {}
    edges: list = []
    for i, f in enumerate(s.formulas):
        _build(f, (), labels, edges, lambda p, i=i: (i, p))
    return Fograph(labels, edges)


# ---------------------------------------------------------------- graphs to formulas


def formula_of_fograph(g: UGraph) -> Formula:
    """A clear formula whose graph is ``g``.

    Binder children of a union node become a universal prefix and binder
    children of a join node an existential prefix, in ascending variable order.
    """
    t = cotree_of(g)

    def lit(v) -> Formula:
        lab = g.labels[v]
        if isinstance(lab, Binder):
            raise FographError(f"binder {v!r} has no literal in its scope")
        return atom_of_label(lab)

    def go(s) -> Formula:
        if isinstance(s, Leaf):
            return lit(s.vertex)
        bs = [c.vertex for c in s.children
              if isinstance(c, Leaf) and isinstance(g.labels[c.vertex], Binder)]
        rest = [c for c in s.children
                if not (isinstance(c, Leaf) and isinstance(g.labels[c.vertex], Binder))]
        if not rest:
            raise FographError(f"binders {bs!r} have no literal in their scope")
        conn = And if s.op is Op.JOIN else Or
        parts = [go(c) for c in rest]
        body = parts[-1]
        for p in reversed(parts[:-1]):
            body = conn(p, body)
        quant = Exists if s.op is Op.JOIN else Forall
        for x in sorted((g.labels[b].var for b in bs), reverse=True):
            body = quant(x, body)
        return body

    return go(t)


# ---------------------------------------------------------------- portions and constructors


def check_portion(g: UGraph, P: Iterable) -> CheckReport:
    """Portion conditions: ``P`` and its complement well-founded, closed under edges and bindings."""
    P = frozenset(P)
    rep = CheckReport()
    unknown = P - set(g.labels)
    if unknown:
        rep.fail("unknown-vertex", sorted(unknown, key=vkey))
        return rep
    rest = frozenset(g.labels) - P
    for name, S in (("portion", P), ("complement", rest)):
        has_binder = any(isinstance(g.labels[v], Binder) for v in S)
        has_lit = any(not isinstance(g.labels[v], Binder) for v in S)
        if has_binder and not has_lit:
            rep.fail(f"{name}-not-well-founded", sorted(S, key=vkey))
    for e in g.edges:
        if len(e & P) == 1:
            rep.fail("not-closed-under-adjacency", tuple(sorted(e, key=vkey)))
            break
    for b, l in sorted(bindings(g), key=lambda a: (vkey(a[0]), vkey(a[1]))):
        if (b in P) != (l in P):
            rep.fail("not-closed-under-binding", (b, l))
            break
    return rep


def independent(g: UGraph, h: UGraph) -> bool:
    """Every variable in both graphs is free in both."""
    vg = bound_variables(g) | free_variables(g)
    vh = bound_variables(h) | free_variables(h)
    common = vg & vh
    return not (common & (bound_variables(g) | bound_variables(h)))


def _portion_or_raise(g: UGraph, P) -> None:
    rep = check_portion(g, P)
    if not rep.ok:
        f = rep.failures[0]
        raise PortionInvalid(f.condition, f.witness)


def fusion(g: UGraph, h: UGraph, P: Iterable, Q: Iterable,
           check_portions: bool = True) -> Fograph:
    """Union of ``g`` and ``h`` plus every edge between ``P`` and ``Q``.

    ``check_portions=False`` skips the portion conditions, for building
    graphs whose leftover binders are not yet well-founded.
    """
    P, Q = frozenset(P), frozenset(Q)
    if set(g.labels) & set(h.labels):
        raise GraphError("fusion needs disjoint vertex ids")
    if not independent(g, h):
        common = (bound_variables(g) | free_variables(g)) & (
            bound_variables(h) | free_variables(h))
        raise NotIndependent(f"shared variables not free in both: {sorted(common)}")
    if check_portions:
        _portion_or_raise(g, P)
        _portion_or_raise(h, Q)
    edges = list(g.edges) + list(h.edges) + [(u, w) for u in P for w in Q]
    colour = {**g.colour, **h.colour}
    return Fograph({**g.labels, **h.labels}, edges, colour)


def univ_quant(g: UGraph, x: str, vid: Hashable) -> Fograph:
    """Add an isolated uncoloured ``x``-binder."""
    if x in bound_variables(g):
        raise VariablePresent(f"{x} already has a binder")
    if vid in g.labels:
        raise GraphError(f"vertex id {vid!r} in use")
    return Fograph({**g.labels, vid: Binder(x)}, g.edges, g.colour)


def subterm_at(args: tuple, pos: tuple) -> Term:
    t: Term = args[pos[0]]
    for k in pos[1:]:
        if not isinstance(t, App):
            raise KeyError(pos)
        t = t.args[k]
    return t


def replace_at(args: tuple, pos: tuple, new: Term) -> tuple:
    def go(t: Term, rest: tuple) -> Term:
        if not rest:
            return new
        if not isinstance(t, App):
            raise KeyError(pos)
        k = rest[0]
        return App(t.symbol, t.args[:k] + (go(t.args[k], rest[1:]),) + t.args[k + 1:])

    i = pos[0]
    return args[:i] + (go(args[i], pos[1:]),) + args[i + 1:]


def exist_quant(g: UGraph, x: str, occs: Iterable[tuple], P: Iterable,
                vid: Hashable) -> Fograph:
    """Replace the term at each occurrence by ``x`` and add an ``x``-binder joined to ``P``.

    ``occs`` holds pairs ``(vertex, position)`` where a position indexes an
    argument and then nested subterms.
    """
    P = frozenset(P)
    occs = sorted(set(occs), key=lambda o: (vkey(o[0]), o[1]))
    if not P:
        raise PortionInvalid("empty-portion")
    _portion_or_raise(g, P)
    if x in bound_variables(g) or x in free_variables(g):
        raise VariablePresent(f"{x} occurs in the graph")
    if vid in g.labels:
        raise GraphError(f"vertex id {vid!r} in use")
    labels = dict(g.labels)
    term = None
    bound = bound_variables(g)
    for v, pos in occs:
        if v not in P:
            raise OccurrenceOutsidePortion(f"{v!r} is outside the portion")
        lab = labels[v]
        if not isinstance(lab, Literal):
            raise OccurrenceOutsidePortion(f"{v!r} is not a literal")
        t = subterm_at(g.labels[v].args, pos)
        if term is None:
            term = t
            if term_vars(t) & bound:
                raise TermContainsBoundVar(f"{term_text(t)} mentions a bound variable")
        elif t != term:
            raise FographError("occurrences of different terms")
        labels[v] = Literal(lab.pred, replace_at(lab.args, pos, Var(x)))
    labels[vid] = Binder(x)
    edges = list(g.edges) + [(vid, v) for v in P]
    return Fograph(labels, edges, g.colour)
