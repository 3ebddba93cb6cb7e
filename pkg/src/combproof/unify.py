"""Unification, most general dualizers, dependencies and leap graphs.

Only existential variables are solved for; universal and free variables
behave as constants.

>>> from combproof.syntax import parse_term
>>> m = mgu([(parse_term("x"), parse_term("z")), (parse_term("y"), parse_term("f(z)"))], {"x", "y"})
>>> sorted((x, str(t)) for x, t in m.pairs)
[('x', 'z'), ('y', 'f(z)')]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .fograph import (
    Binder, Kind, Literal, binder_kind, binders, label_vars, rectify_fograph,
)
from .graphs import UGraph, vkey
from .syntax import App, Term, Var, fresh_name, subst_term, term_text, term_vars

__all__ = [
    "UnifyError", "Clash", "OccursCheck", "NotLinked", "NoDualizer",
    "BudgetExceeded", "TriangularMgu", "mgu", "link_equations",
    "existential_vars", "universal_vars", "Analysis", "analyse",
    "dualizer_of", "dependencies", "dependencies_naive", "leap_graph",
    "composed_size",
]


class UnifyError(ValueError):
    pass


class Clash(UnifyError):
    def __init__(self, left: Term, right: Term):
        super().__init__(f"cannot unify {term_text(left)} with {term_text(right)}")
        self.left = left
        self.right = right


class OccursCheck(UnifyError):
    def __init__(self, var: str, term: Term):
        super().__init__(f"{var} occurs in {term_text(term)}")
        self.var = var
        self.term = term


class NotLinked(ValueError):
    pass


class NoDualizer(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TriangularMgu:
    """Bindings ``(x_i, u_i)`` where ``x_i`` occurs in no ``u_j`` with ``j >= i``."""

    pairs: tuple = ()

    def as_dict(self) -> dict[str, Term]:
        return dict(self.pairs)

    def resolve(self) -> dict[str, Term]:
        """Fully composed substitution, sharing subterms instead of copying them."""
        solved: dict[str, Term] = {}
        memo: dict = {}
        for x, u in reversed(self.pairs):
            solved[x] = subst_term(u, solved, memo) if solved else u
        return {x: solved[x] for x, _ in self.pairs}


def mgu(equations: Iterable[tuple[Term, Term]], solvable: Iterable[str]) -> TriangularMgu:
    """Most general unifier over ``solvable``, in triangular form."""
    solvable = set(solvable)
    binding: dict[str, Term] = {}

    def walk(t: Term) -> Term:
        while isinstance(t, Var) and t.name in binding:
            t = binding[t.name]
        return t

    def occurs(x: str, t: Term) -> bool:
        seen: set[int] = set()
        seen_vars: set[str] = set()
        stack = [t]
        while stack:
            s = walk(stack.pop())
            if isinstance(s, Var):
                if s.name == x:
                    return True
                continue
            if id(s) in seen:
                continue
            seen.add(id(s))
            for a in s.args:
                if isinstance(a, Var):
                    if a.name in seen_vars:
                        continue
                    seen_vars.add(a.name)
                stack.append(a)
        return False

    done: set[tuple[int, int]] = set()
    stack = [(l, r) for l, r in equations]
    stack.reverse()
    while stack:
        a, b = stack.pop()
        a, b = walk(a), walk(b)
        if a is b:
            continue
        if isinstance(a, Var) and isinstance(b, Var) and a.name == b.name:
            continue
        if isinstance(a, Var) and a.name in solvable:
            if occurs(a.name, b):
                raise OccursCheck(a.name, b)
            binding[a.name] = b
            continue
        if isinstance(b, Var) and b.name in solvable:
            if occurs(b.name, a):
                raise OccursCheck(b.name, a)
            binding[b.name] = a
            continue
        if isinstance(a, Var) or isinstance(b, Var):
            raise Clash(a, b)
        if a.symbol != b.symbol or len(a.args) != len(b.args):
            raise Clash(a, b)
        key = (id(a), id(b))
        if key in done:
            continue
        done.add(key)
        stack.extend(reversed(list(zip(a.args, b.args))))

    # order so that each variable precedes the variables its term mentions
    mentions = {x: sorted(term_vars(u) & set(binding)) for x, u in binding.items()}
    order: list[str] = []
    state: dict[str, int] = {}
    for root in sorted(binding):
        if root in state:
            continue
        state[root] = 1
        work = [(root, iter(mentions[root]))]
        while work:
            x, it = work[-1]
            nxt = next(it, None)
            if nxt is None:
                work.pop()
                state[x] = 2
                order.append(x)
            elif nxt not in state:
                state[nxt] = 1
                work.append((nxt, iter(mentions[nxt])))
    order.reverse()
    return TriangularMgu(tuple((x, binding[x]) for x in order))


# ---------------------------------------------------------------- dualizers


def link_equations(c: UGraph) -> list[tuple[Term, Term]]:
    """Argument equations of every link, in canonical vertex order."""
    eqs = []
    for link in c.links():
        if len(link) != 2:
            raise NotLinked(f"colour class {sorted(link, key=vkey)!r} is not a pair")
        u, w = sorted(link, key=vkey)
        lu, lw = c.labels[u], c.labels[w]
        if not (isinstance(lu, Literal) and isinstance(lw, Literal)
                and lu.pred.dual == lw.pred and len(lu.args) == len(lw.args)):
            raise NotLinked(f"link {u!r}-{w!r} is not a pre-dual pair")
        eqs.extend(zip(lu.args, lw.args))
    return eqs


def existential_vars(c: UGraph) -> dict[str, Hashable]:
    return {c.labels[b].var: b for b in binders(c)
            if binder_kind(c, b) is Kind.EXISTENTIAL}


def universal_vars(c: UGraph) -> dict[str, Hashable]:
    return {c.labels[b].var: b for b in binders(c)
            if binder_kind(c, b) is Kind.UNIVERSAL}


@dataclass
class Analysis:
    """Rectified net with its most general dualizer and dependencies."""

    graph: UGraph
    mgu: TriangularMgu | None
    dualizer: dict[str, Term] | None
    dependencies: set[frozenset] = field(default_factory=set)
    failure: UnifyError | None = None


def _stems(mgu_: TriangularMgu, evars: Iterable[str], used: set[str]) -> TriangularMgu:
    """Bind every unconstrained existential variable to a fresh stem ``_s1, _s2, ...``."""
    dom = {x for x, _ in mgu_.pairs}
    extra = []
    used = set(used)
    for x in sorted(set(evars) - dom):
        s = fresh_name("_s", used)
        used.add(s)
        extra.append((x, Var(s)))
    return TriangularMgu(mgu_.pairs + tuple(extra))


def _all_vars(c: UGraph) -> set[str]:
    acc: set[str] = set()
    for lab in c.labels.values():
        acc |= label_vars(lab)
    return acc


def analyse(c: UGraph, *, rectified: bool = False) -> Analysis:
    """Dualizer and dependencies of a linked fograph (rectified first unless told)."""
    g = c if rectified else rectify_fograph(c)
    eqs = link_equations(g)
    evars = existential_vars(g)
    try:
        m = mgu(eqs, set(evars))
    except UnifyError as exc:
        return Analysis(g, None, None, set(), exc)
    m = _stems(m, evars, _all_vars(g))
    sigma = m.resolve()
    dualizer = {x: sigma[x] for x in evars}
    deps = _dependencies_trick(g, m, evars)
    return Analysis(g, m, dualizer, deps)


def dualizer_of(c: UGraph) -> dict[str, Term] | None:
    """Most general dualizer over the existential variables, or None."""
    return analyse(c).dualizer


def _dependencies_trick(g: UGraph, m: TriangularMgu, evars: dict) -> set[frozenset]:
    uvars = universal_vars(g)
    # replace each u_i by a fresh symbol over its variables, then compose
    pairs = tuple((x, App(f"_f{i}", tuple(Var(v) for v in sorted(term_vars(u)))))
                  for i, (x, u) in enumerate(m.pairs))
    sigma = TriangularMgu(pairs).resolve()
    memo: dict = {}
    deps = set()
    for x, b in evars.items():
        for y in term_vars(sigma[x], memo):
            if y in uvars:
                deps.add(frozenset((b, uvars[y])))
    return deps


def dependencies(c: UGraph) -> set[frozenset]:
    """Pairs ``{existential binder, universal binder}`` where the dualizer's value mentions the latter."""
    a = analyse(c)
    if a.dualizer is None:
        raise NoDualizer(str(a.failure))
    return a.dependencies


def _tree_vars(t: Term, budget: list[int]) -> set[str]:
    out: set[str] = set()
    stack = [t]
    while stack:
        s = stack.pop()
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("term expansion exceeded the node budget")
        if isinstance(s, Var):
            out.add(s.name)
        else:
            stack.extend(s.args)
    return out


def dependencies_naive(c: UGraph, budget: int = 1_000_000) -> set[frozenset]:
    """Dependencies read off the fully composed dualizer, walked as trees."""
    g = rectify_fograph(c)
    evars = existential_vars(g)
    uvars = universal_vars(g)
    try:
        m = mgu(link_equations(g), set(evars))
    except UnifyError as exc:
        raise NoDualizer(str(exc)) from exc
    left = [budget]
    # compose by literal copying, one binding at a time from the back
    solved: dict[str, Term] = {}
    for x, u in reversed(m.pairs):
        solved[x] = _copy_subst(u, solved, left)
    deps = set()
    for x, b in evars.items():
        if x not in solved:
            continue
        for y in _tree_vars(solved[x], left):
            if y in uvars:
                deps.add(frozenset((b, uvars[y])))
    return deps


def _copy_subst(t: Term, sigma: dict[str, Term], left: list[int]) -> Term:
    """Substitution that rebuilds every node, charging the node budget."""

    def go(s: Term) -> Term:
        left[0] -= 1
        if left[0] < 0:
            raise BudgetExceeded("term expansion exceeded the node budget")
        if isinstance(s, Var):
            if s.name in sigma:
                return go(sigma[s.name])
            return Var(s.name)
        return App(s.symbol, tuple(go(a) for a in s.args))

    return go(t)


def composed_size(c: UGraph) -> int:
    """Total tree size of the fully composed dualizer values (computed without expansion)."""
    a = analyse(c)
    if a.dualizer is None:
        raise NoDualizer(str(a.failure))
    from .syntax import term_size

    memo: dict = {}
    return sum(term_size(t, memo) for t in a.dualizer.values())


def leap_graph(c: UGraph) -> UGraph:
    """Graph on the vertices of ``c`` whose edges are the links and the dependencies."""
    a = analyse(c)
    if a.dualizer is None:
        raise NoDualizer(str(a.failure))
    edges = [tuple(l) for l in c.links()] + [tuple(d) for d in a.dependencies]
    return UGraph({v: c.labels[v] for v in c.labels}, edges)
