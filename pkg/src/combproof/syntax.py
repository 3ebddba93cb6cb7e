"""First-order and modal syntax: terms, formulas, sequents, parsing and printing.

Formulas are kept in negation normal form: negation exists only as the
``dualized`` flag on a predicate symbol, and ``~A`` / ``A -> B`` are expanded
while parsing.

>>> f = parse_formula("ex x. (~p(x) \\\\/ all y. p(y))")
>>> print(f)
ex x. ~p(x) \\/ (all y. p(y))
>>> free_vars(f)
set()
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

__all__ = [
    "Var", "App", "Term", "PredSym", "Atom", "One", "Zero", "ONE", "ZERO",
    "And", "Or", "Forall", "Exists", "Box", "Diamond", "Formula", "Sequent",
    "ParseError", "ArityError", "EmptySequent",
    "parse_term", "parse_formula", "parse_sequent", "parse_modal",
    "to_text", "to_text_with_positions", "term_text",
    "term_vars", "subst_term", "term_size", "fresh_name",
    "negate", "free_vars", "bound_vars", "all_vars", "is_rectified",
    "rectify", "rectify_sequent", "subst", "alpha_key", "alpha_equal",
    "is_clear", "is_extruded", "is_unambiguous", "modal_to_fo",
    "formula_of_sequent", "sequent_path", "split_sequent_path",
    "subformula_at", "atoms_of", "FREE_MODAL_VAR",
]


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Var:
    """A variable."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class App:
    """A function symbol applied to arguments; ``App("c", ())`` is a constant.

    Terms built by substitution share subterms, so equality tries identity
    first and the hash is computed once.
    """

    symbol: str
    args: tuple = ()
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.symbol, self.args)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, App):
            return NotImplemented
        return (self._hash == other._hash and self.symbol == other.symbol
                and self.args == other.args)

    def __str__(self) -> str:
        return term_text(self)


Term = Union[Var, App]


def term_text(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    return f"{t.symbol}({','.join(term_text(a) for a in t.args)})"


def term_vars(t: Term, _memo: dict | None = None) -> frozenset[str]:
    """Variables of a term, memoized on shared subterms."""
    memo = {} if _memo is None else _memo
    stack = [t]
    while stack:
        s = stack[-1]
        if isinstance(s, Var):
            stack.pop()
            continue
        key = id(s)
        if key in memo:
            stack.pop()
            continue
        pending = [a for a in s.args if isinstance(a, App) and id(a) not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        acc: set[str] = set()
        for a in s.args:
            acc |= {a.name} if isinstance(a, Var) else memo[id(a)]
        memo[key] = frozenset(acc)
    if isinstance(t, Var):
        return frozenset((t.name,))
    return memo[id(t)]


def subst_term(t: Term, sigma: dict[str, Term], _memo: dict | None = None) -> Term:
    """Apply a simultaneous substitution, preserving sharing of subterms."""
    if not sigma:
        return t
    memo = {} if _memo is None else _memo

    def go(s: Term) -> Term:
        if isinstance(s, Var):
            return sigma.get(s.name, s)
        key = id(s)
        hit = memo.get(key)
        if hit is not None:
            return hit[1]
        args = tuple(go(a) for a in s.args)
        out = s if all(a is b for a, b in zip(args, s.args)) else App(s.symbol, args)
        memo[key] = (s, out)
        return out

    return go(t)


def term_size(t: Term, _memo: dict | None = None) -> int:
    """Number of nodes of the term written out as a tree."""
    memo = {} if _memo is None else _memo

    def go(s: Term) -> int:
        if isinstance(s, Var):
            return 1
        key = id(s)
        if key not in memo:
            memo[key] = (s, 1 + sum(go(a) for a in s.args))
        return memo[key][1]

    return go(t)


# ---------------------------------------------------------------- formulas


@dataclass(frozen=True, order=True)
class PredSym:
    """A predicate symbol; the dual of ``p`` is ``~p`` and vice versa."""

    base: str
    dualized: bool = False

    @property
    def dual(self) -> "PredSym":
        return PredSym(self.base, not self.dualized)

    def __str__(self) -> str:
        return ("~" if self.dualized else "") + self.base


@dataclass(frozen=True)
class Atom:
    pred: PredSym
    args: tuple = ()


@dataclass(frozen=True)
class _One:
    pass


@dataclass(frozen=True)
class _Zero:
    pass


One = _One
Zero = _Zero
ONE = _One()
ZERO = _Zero()


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Box:
    body: "Formula"


@dataclass(frozen=True)
class Diamond:
    body: "Formula"


Formula = Union[Atom, _One, _Zero, And, Or, Forall, Exists, Box, Diamond]

_BINARY = (And, Or)
_QUANT = (Forall, Exists)
_MODAL = (Box, Diamond)


def _str_formula(self) -> str:
    return to_text(self)


for _cls in (Atom, _One, _Zero, And, Or, Forall, Exists, Box, Diamond):
    _cls.__str__ = _str_formula


@dataclass(frozen=True)
class Sequent:
    formulas: tuple = ()

    def __str__(self) -> str:
        return ", ".join(to_text(f) for f in self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)


class EmptySequent(ValueError):
    pass


# ---------------------------------------------------------------- parsing


class ParseError(ValueError):
    """Syntax error; ``pos`` is the character offset."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.msg = msg
        self.pos = pos


class ArityError(ParseError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<sym>\\/|->|\[\]|<>|[()~&|,.])|(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_']*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "sym" and value == "|":
            value = "\\/"
        toks.append((kind, value, start))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, modal: bool = False,
                 arities: dict | None = None):
        self.toks = _tokenize(text)
        self.i = 0
        self.modal = modal
        self.arities = {} if arities is None else arities

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        kind, v, _ = self.peek()
        return kind == "sym" and v == value

    def expect(self, value: str) -> None:
        kind, v, pos = self.next()
        if kind != "sym" or v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def end(self) -> None:
        kind, v, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {v!r}", pos)

    def note_arity(self, kind: str, name: str, n: int, pos: int) -> None:
        key = (kind, name)
        seen = self.arities.setdefault(key, n)
        if seen != n:
            raise ArityError(f"{kind} symbol {name!r} used with arity {n} and {seen}", pos)

    def formula(self) -> Formula:
        left = self.disj()
        if self.at("->"):
            self.next()
            return Or(negate(left), self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.at("\\/"):
            self.next()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.at("&"):
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, v, pos = self.peek()
        if kind == "sym":
            if v == "~":
                self.next()
                return negate(self.unary())
            if v == "(":
                self.next()
                f = self.formula()
                self.expect(")")
                return f
            if v in ("[]", "<>"):
                if not self.modal:
                    raise ParseError(f"modal operator {v!r} in a first-order formula", pos)
                self.next()
                body = self.unary()
                return Box(body) if v == "[]" else Diamond(body)
            raise ParseError(f"unexpected {v!r}", pos)
        if kind == "num":
            self.next()
            if v == "1":
                return ONE
            if v == "0":
                return ZERO
            raise ParseError(f"unknown constant {v!r}", pos)
        if kind == "id":
            if v in ("all", "ex"):
                if self.modal:
                    raise ParseError("quantifier in a modal formula", pos)
                self.next()
                vk, var, vpos = self.next()
                if vk != "id" or var in ("all", "ex"):
                    raise ParseError("expected a variable after quantifier", vpos)
                self.expect(".")
                body = self.formula()
                return Forall(var, body) if v == "all" else Exists(var, body)
            return self.atom()
        raise ParseError("unexpected end of input", pos)

    def atom(self) -> Atom:
        _, name, pos = self.next()
        args: tuple = ()
        if self.at("("):
            if self.modal:
                raise ParseError("modal atoms take no arguments", pos)
            args = self.term_args()
        self.note_arity("predicate", name, len(args), pos)
        return Atom(PredSym(name), args)

    def term_args(self) -> tuple:
        self.expect("(")
        args = []
        if not self.at(")"):
            args.append(self.term())
            while self.at(","):
                self.next()
                args.append(self.term())
        self.expect(")")
        return tuple(args)

    def term(self) -> Term:
        kind, name, pos = self.next()
        if kind != "id" or name in ("all", "ex"):
            raise ParseError(f"expected a term, found {name or 'end of input'!r}", pos)
        if self.at("("):
            args = self.term_args()
            self.note_arity("function", name, len(args), pos)
            return App(name, args)
        return Var(name)


def parse_term(text: str) -> Term:
    """Parse a term; bare identifiers are variables and ``c()`` is a constant."""
    p = _Parser(text)
    t = p.term()
    p.end()
    return t


def parse_formula(text: str, arities: dict | None = None) -> Formula:
    """Parse a first-order formula into negation normal form.

    >>> print(parse_formula("~(p & q)"))
    ~p \\/ ~q
    """
    p = _Parser(text, arities=arities)
    f = p.formula()
    p.end()
    return f


def parse_sequent(text: str) -> Sequent:
    """Parse comma-separated formulas sharing one arity table."""
    p = _Parser(text)
    forms = []
    if p.peek()[0] != "eof":
        forms.append(p.formula())
        while p.at(","):
            p.next()
            forms.append(p.formula())
    p.end()
    return Sequent(tuple(forms))


def parse_modal(text: str) -> Formula:
    """Parse a modal formula: nullary atoms, ``[]`` (box) and ``<>`` (diamond)."""
    p = _Parser(text, modal=True)
    f = p.formula()
    p.end()
    return f


# ---------------------------------------------------------------- printing


def to_text(f: Formula) -> str:
    return to_text_with_positions(f)[0]


def to_text_with_positions(f: Formula) -> tuple[str, dict[tuple, int]]:
    """Render ``f`` and report the column of each atom, constant and quantifier.

    Positions are keyed by path: quantifier bodies are child ``0``, binary
    connectives have children ``0`` and ``1``.
    """
    out: list[str] = []
    pos: dict[tuple, int] = {}
    length = [0]

    def emit(s: str) -> None:
        out.append(s)
        length[0] += len(s)

    def go(g: Formula, path: tuple) -> None:
        if isinstance(g, Atom):
            pos[path] = length[0]
            emit(str(g.pred))
            if g.args:
                emit("(" + ",".join(term_text(a) for a in g.args) + ")")
        elif isinstance(g, _One):
            pos[path] = length[0]
            emit("1")
        elif isinstance(g, _Zero):
            pos[path] = length[0]
            emit("0")
        elif isinstance(g, _QUANT):
            pos[path] = length[0]
            emit(("all " if isinstance(g, Forall) else "ex ") + g.var + ". ")
            go(g.body, path + (0,))
        elif isinstance(g, _MODAL):
            pos[path] = length[0]
            emit("[]" if isinstance(g, Box) else "<>")
            child(g.body, path + (0,), tight=True)
        else:
            op = " & " if isinstance(g, And) else " \\/ "
            child(g.left, path + (0,), parent=g, right=False)
            emit(op)
            child(g.right, path + (1,), parent=g, right=True)

    def child(g: Formula, path: tuple, parent=None, right=False, tight=False) -> None:
        if tight:
            need = isinstance(g, _BINARY + _QUANT)
        elif isinstance(g, _QUANT):
            need = True
        elif isinstance(g, _BINARY):
            # And binds tighter than Or; same-operator chains associate left
            need = (isinstance(parent, And) and isinstance(g, Or)) or (
                right and type(g) is type(parent))
        else:
            need = False
        if need:
            emit("(")
            go(g, path)
            emit(")")
        else:
            go(g, path)

    go(f, ())
    return "".join(out), pos


# ---------------------------------------------------------------- core operations


def negate(f: Formula) -> Formula:
    """Structural dual: swap connectives, quantifiers, constants and predicate flags."""
    if isinstance(f, Atom):
        return Atom(f.pred.dual, f.args)
    if isinstance(f, _One):
        return ZERO
    if isinstance(f, _Zero):
        return ONE
    if isinstance(f, And):
        return Or(negate(f.left), negate(f.right))
    if isinstance(f, Or):
        return And(negate(f.left), negate(f.right))
    if isinstance(f, Forall):
        return Exists(f.var, negate(f.body))
    if isinstance(f, Exists):
        return Forall(f.var, negate(f.body))
    if isinstance(f, Box):
        return Diamond(negate(f.body))
    if isinstance(f, Diamond):
        return Box(negate(f.body))
    raise TypeError(f"not a formula: {f!r}")


def _atom_vars(a: Atom) -> set[str]:
    acc: set[str] = set()
    for t in a.args:
        acc |= term_vars(t)
    return acc


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return _atom_vars(f)
    if isinstance(f, _BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, _QUANT):
        return free_vars(f.body) - {f.var}
    if isinstance(f, _MODAL):
        return free_vars(f.body)
    return set()


def bound_vars(f: Formula) -> list[str]:
    """Quantified variables in preorder, with repetitions."""
    out: list[str] = []

    def go(g: Formula) -> None:
        if isinstance(g, _BINARY):
            go(g.left)
            go(g.right)
        elif isinstance(g, _QUANT):
            out.append(g.var)
            go(g.body)
        elif isinstance(g, _MODAL):
            go(g.body)

    go(f)
    return out


def all_vars(f: Formula) -> set[str]:
    acc: set[str] = set(bound_vars(f))
    for a in atoms_of(f):
        acc |= _atom_vars(a)
    return acc


def atoms_of(f: Formula) -> Iterator[Atom]:
    if isinstance(f, Atom):
        yield f
    elif isinstance(f, _BINARY):
        yield from atoms_of(f.left)
        yield from atoms_of(f.right)
    elif isinstance(f, _QUANT + _MODAL):
        yield from atoms_of(f.body)


def is_rectified(f: Formula) -> bool:
    bound = bound_vars(f)
    return len(set(bound)) == len(bound) and not (set(bound) & free_vars(f))


def fresh_name(base: str, used: Iterable[str]) -> str:
    """``base`` followed by the smallest positive suffix not in ``used``."""
    used = set(used)
    stem = base.rstrip("0123456789") or base
    k = 1
    while f"{stem}{k}" in used:
        k += 1
    return f"{stem}{k}"


def _rename_atom(a: Atom, ren: dict[str, str]) -> Atom:
    if not ren:
        return a
    sigma = {k: Var(v) for k, v in ren.items()}
    return Atom(a.pred, tuple(subst_term(t, sigma) for t in a.args))


def rectify(f: Formula) -> Formula:
    """Rename bound variables so they are pairwise distinct and not free.

    The first quantifier of each name keeps it unless the name is free.

    >>> print(rectify(parse_formula("all x. all x. p(x)")))
    all x. all x1. p(x1)
    """
    used = all_vars(f)
    free = free_vars(f)
    claimed: set[str] = set()

    def go(g: Formula, ren: dict[str, str]) -> Formula:
        if isinstance(g, Atom):
            scoped = {k: v for k, v in ren.items() if k != v}
            return _rename_atom(g, scoped)
        if isinstance(g, _BINARY):
            return type(g)(go(g.left, ren), go(g.right, ren))
        if isinstance(g, _QUANT):
            v = g.var
            if v in free or v in claimed:
                new = fresh_name(v, used)
                used.add(new)
            else:
                new = v
            claimed.add(new)
            return type(g)(new, go(g.body, {**ren, v: new}))
        if isinstance(g, _MODAL):
            return type(g)(go(g.body, ren))
        return g

    return go(f, {})


def formula_of_sequent(s: Sequent | Iterable[Formula]) -> Formula:
    """Right-nested disjunction of the formulas of a non-empty sequent."""
    forms = s.formulas if isinstance(s, Sequent) else tuple(s)
    if not forms:
        raise EmptySequent("the empty sequent has no formula")
    out = forms[-1]
    for g in reversed(forms[:-1]):
        out = Or(g, out)
    return out


def sequent_path(i: int, n: int) -> tuple:
    """Path of formula ``i`` of an ``n``-formula sequent inside its formula."""
    if not 0 <= i < n:
        raise IndexError(i)
    return (1,) * i + ((0,) if i < n - 1 else ())


def split_sequent_path(path: tuple, n: int) -> tuple[int, tuple]:
    """Inverse of :func:`sequent_path` extended by a path inside the member."""
    i = 0
    rest = path
    while i < n - 1:
        if rest[:1] == (0,):
            return i, rest[1:]
        if rest[:1] != (1,):
            raise ValueError(f"path {path} is not inside a sequent member")
        rest = rest[1:]
        i += 1
    return n - 1, rest


def rectify_sequent(s: Sequent) -> Sequent:
    """Rectify the members of a sequent jointly, as for its formula."""
    n = len(s.formulas)
    if n == 0:
        return s
    f = rectify(formula_of_sequent(s))
    forms = []
    for _ in range(n - 1):
        forms.append(f.left)
        f = f.right
    forms.append(f)
    return Sequent(tuple(forms))


def subformula_at(f: Formula, path: tuple) -> Formula:
    for k in path:
        if isinstance(f, _BINARY):
            f = f.left if k == 0 else f.right
        elif isinstance(f, _QUANT + _MODAL) and k == 0:
            f = f.body
        else:
            raise KeyError(path)
    return f


def subst(f: Formula, x: str, t: Term) -> Formula:
    """Replace free ``x`` by ``t``, renaming bound variables that occur in ``t``.

    >>> print(subst(parse_formula("p(x) \\\\/ ex y. q(y)"), "x", parse_term("f(y)")))
    p(f(y)) \\/ (ex y1. q(y1))
    """
    tv = term_vars(t)
    if isinstance(t, Var) and t.name == x:
        return f
    used = all_vars(f) | set(tv) | {x}

    def go(g: Formula) -> Formula:
        if isinstance(g, Atom):
            if x not in _atom_vars(g):
                return g
            return Atom(g.pred, tuple(subst_term(a, {x: t}) for a in g.args))
        if isinstance(g, _BINARY):
            return type(g)(go(g.left), go(g.right))
        if isinstance(g, _QUANT):
            if g.var == x:
                return g
            if g.var in tv:
                new = fresh_name(g.var, used)
                used.add(new)
                body = _rename_free(g.body, g.var, new)
                return type(g)(new, go(body))
            return type(g)(g.var, go(g.body))
        if isinstance(g, _MODAL):
            return type(g)(go(g.body))
        return g

    return go(f)


def _rename_free(f: Formula, old: str, new: str) -> Formula:
    """Rename free ``old`` to a name ``new`` that occurs nowhere in ``f``."""
    if isinstance(f, Atom):
        return _rename_atom(f, {old: new})
    if isinstance(f, _BINARY):
        return type(f)(_rename_free(f.left, old, new), _rename_free(f.right, old, new))
    if isinstance(f, _QUANT):
        if f.var == old:
            return f
        return type(f)(f.var, _rename_free(f.body, old, new))
    if isinstance(f, _MODAL):
        return type(f)(_rename_free(f.body, old, new))
    return f


def alpha_key(f: Formula):
    """Hashable form identifying alpha-equivalent formulas (de Bruijn indices)."""

    def term_key(t: Term, env: dict[str, int], depth: int):
        if isinstance(t, Var):
            if t.name in env:
                return ("b", depth - env[t.name])
            return ("f", t.name)
        return ("a", t.symbol, tuple(term_key(a, env, depth) for a in t.args))

    def go(g: Formula, env: dict[str, int], depth: int):
        if isinstance(g, Atom):
            return ("atom", g.pred, tuple(term_key(a, env, depth) for a in g.args))
        if isinstance(g, _BINARY):
            return (type(g).__name__, go(g.left, env, depth), go(g.right, env, depth))
        if isinstance(g, _QUANT):
            return (type(g).__name__, go(g.body, {**env, g.var: depth + 1}, depth + 1))
        if isinstance(g, _MODAL):
            return (type(g).__name__, go(g.body, env, depth))
        return (type(g).__name__,)

    return go(f, {}, 0)


def alpha_equal(f: Formula, g: Formula) -> bool:
    return alpha_key(f) == alpha_key(g)


def is_extruded(f: Formula) -> bool:
    """No subformula is ``A or all x.B``, ``(all x.B) or A``, or the dual with ``&``/``ex``."""
    if isinstance(f, Or):
        if isinstance(f.left, Forall) or isinstance(f.right, Forall):
            return False
    if isinstance(f, And):
        if isinstance(f.left, Exists) or isinstance(f.right, Exists):
            return False
    if isinstance(f, _BINARY):
        return is_extruded(f.left) and is_extruded(f.right)
    if isinstance(f, _QUANT + _MODAL):
        return is_extruded(f.body)
    return True


def is_unambiguous(f: Formula) -> bool:
    """No quantifier on ``x`` lies in the scope of another quantifier on ``x``."""

    def go(g: Formula, above: frozenset) -> bool:
        if isinstance(g, _BINARY):
            return go(g.left, above) and go(g.right, above)
        if isinstance(g, _QUANT):
            return g.var not in above and go(g.body, above | {g.var})
        if isinstance(g, _MODAL):
            return go(g.body, above)
        return True

    return go(f, frozenset())


def is_clear(f: Formula) -> bool:
    return is_extruded(f) and is_unambiguous(f)


FREE_MODAL_VAR = "x_free"


def _modal_pool() -> Iterator[str]:
    base = ["x", "y", "z", "w", "u", "v"]
    yield from base
    k = 1
    while True:
        for b in base:
            yield f"{b}{k}"
        k += 1


def modal_to_fo(m: Formula) -> Formula:
    """Translate a modal formula: box to ``all``, diamond to ``ex``.

    Each operator gets its own variable; a nullary atom takes the variable of
    its innermost enclosing operator.

    >>> print(modal_to_fo(parse_modal("<>(~p \\\\/ []p)")))
    ex x. ~p(x) \\/ (all y. p(y))
    """
    pool = _modal_pool()

    def go(g: Formula, var: str | None) -> Formula:
        if isinstance(g, Atom):
            if g.args:
                raise ValueError(f"modal atom with arguments: {g}")
            return Atom(g.pred, (Var(var or FREE_MODAL_VAR),))
        if isinstance(g, _BINARY):
            return type(g)(go(g.left, var), go(g.right, var))
        if isinstance(g, _MODAL):
            v = next(pool)
            body = go(g.body, v)
            return Forall(v, body) if isinstance(g, Box) else Exists(v, body)
        if isinstance(g, _QUANT):
            raise ValueError("quantifier in a modal formula")
        return g

    return go(m, None)
