"""Command-line front end and the text formats it reads and writes.

Combinatorial proof documents are line-oriented, with ``#`` comments::

    TARGET
    ex x. (~p(x) \\/ all y. p(y))
    VERTICES
    0 var x
    1 atom ~p(x)
    2
    EDGES
    0 1
    LINKS
    1 4
    MAP
    0 @
    1 @0.0

A target vertex is written ``@`` followed by its dotted path.  A TARGET line
of the form ``modal <formula>`` names a modal formula; the proof is then
about the first-order formula it abbreviates.  Homogeneous documents replace
LINKS by DUALITIES and add a BINDINGS section and a MODE line.

Exit codes: 0 verified, 1 refuted, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import re
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bifib import CombProof, cut_formula, verify_cp, verify_cut_cp
from .calculus import (
    IllFormedProof, RProof, TooManyAtoms, all_, and_, ax, check_rproof, contract,
    cp_of_rproof, ex, exch, one, or_, prop_tautology, weaken,
)
from .fograph import (
    Binder, ConstLit, Fograph, bindings, graph_of, literal_of_atom,
)
from .graphs import UGraph, vkey
from .homogeneous import (
    DualizingGraph, HomogeneousCp, Mograph, NotVerified, dgraph_of_prop,
    from_homogeneous_monadic, from_homogeneous_prop, modal_mograph,
    mograph_of_formula, to_homogeneous_monadic, to_homogeneous_prop,
    verify_homogeneous_cp,
)
from .syntax import (
    Formula, ParseError, Var, is_rectified, modal_to_fo, parse_formula,
    parse_modal, parse_term, rectify, term_text, to_text, to_text_with_positions,
)

__all__ = [
    "DocumentError", "CpDocument", "HomogDocument", "parse_cp_document",
    "format_cp_document", "parse_homog_document", "format_homog_document",
    "parse_rproof", "format_rproof", "render_dot", "render_text", "main",
]

OK, REFUTED, USAGE = 0, 1, 2


class DocumentError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


# ---------------------------------------------------------------- vertex references


def ref(path: tuple) -> str:
    return "@" + ".".join(str(k) for k in path)


def unref(text: str, line: int | None = None) -> tuple:
    if not text.startswith("@"):
        raise DocumentError(f"target vertex {text!r} must start with @", line)
    body = text[1:]
    if not body:
        return ()
    try:
        return tuple(int(k) for k in body.split("."))
    except ValueError:
        raise DocumentError(f"bad target vertex {text!r}", line) from None


def _label_text(lab) -> str:
    if lab is None:
        return ""
    if isinstance(lab, Binder):
        return f"var {lab.var}"
    return f"atom {lab}"


def _parse_label(words: list[str], line: int):
    if not words:
        return None
    kind, rest = words[0], " ".join(words[1:])
    try:
        if kind == "var" and len(words) == 2:
            return Binder(words[1])
        if kind == "atom" and rest:
            return literal_of_atom(parse_formula(rest))
    except (ParseError, TypeError) as exc:
        raise DocumentError(f"bad label: {exc}", line) from None
    raise DocumentError(f"label must be 'var NAME' or 'atom ATOM', got {' '.join(words)!r}", line)


# ---------------------------------------------------------------- documents


@dataclass
class _Target:
    formula: Formula
    modal: Formula | None = None

    @classmethod
    def parse(cls, text: str, line: int) -> "_Target":
        try:
            if text.startswith("modal "):
                m = parse_modal(text[len("modal "):])
                return cls(modal_to_fo(m), m)
            return cls(parse_formula(text))
        except (ParseError, ValueError) as exc:
            raise DocumentError(f"bad target formula: {exc}", line) from None

    def text(self) -> str:
        return f"modal {to_text(self.modal)}" if self.modal is not None else to_text(self.formula)


def _sections(text: str, allowed: set[str]) -> dict[str, list[tuple[int, str]]]:
    out: dict[str, list[tuple[int, str]]] = {}
    current = None
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("MODE ") and "MODE" in allowed:
            out["MODE"] = [(n, line.split(None, 1)[1])]
            current = None
        elif line in allowed:
            if line in out:
                raise DocumentError(f"repeated section {line}", n)
            current = line
            out[current] = []
        elif current is None:
            raise DocumentError(f"text outside a section: {line!r}", n)
        else:
            out[current].append((n, line))
    return out


def _pairs(rows: list[tuple[int, str]], ids: set, what: str) -> list[tuple[str, str]]:
    out = []
    for n, line in rows:
        words = line.split()
        if len(words) != 2:
            raise DocumentError(f"{what} needs two vertex ids", n)
        for w in words:
            if w not in ids:
                raise DocumentError(f"unknown vertex {w!r}", n)
        out.append((words[0], words[1]))
    return out


def _vertices(rows) -> dict:
    labels: dict = {}
    for n, line in rows:
        words = line.split()
        vid = words[0]
        if vid in labels:
            raise DocumentError(f"duplicate vertex {vid!r}", n)
        labels[vid] = _parse_label(words[1:], n)
    return labels


def _map(rows, ids: set) -> dict:
    fmap = {}
    for n, line in rows:
        words = line.split()
        if len(words) != 2 or words[0] not in ids:
            raise DocumentError("map lines are 'SOURCE @PATH' with a known source id", n)
        fmap[words[0]] = unref(words[1], n)
    missing = sorted(ids - set(fmap))
    if missing:
        raise DocumentError(f"map is not total: missing {missing}")
    return fmap


def _target_of(rows) -> _Target:
    if len(rows) != 1:
        raise DocumentError("TARGET holds exactly one formula line",
                            rows[1][0] if len(rows) > 1 else None)
    n, text = rows[0]
    return _Target.parse(text, n)


@dataclass
class CpDocument:
    target: _Target
    labels: dict
    edges: list
    links: list
    map: dict

    @property
    def formula(self) -> Formula:
        return self.target.formula

    def combproof(self, cuts: list[Formula] = ()) -> CombProof:
        f = rectify(self.formula)
        if cuts:
            f = cut_formula(f, list(cuts))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            tgt = graph_of(f)
        colour = {}
        for k, (u, w) in enumerate(self.links):
            colour[u] = k
            colour[w] = k
        src = UGraph(self.labels, self.edges, colour)
        return CombProof(src, tgt, dict(self.map), f)


def parse_cp_document(text: str) -> CpDocument:
    s = _sections(text, {"TARGET", "VERTICES", "EDGES", "LINKS", "MAP"})
    for need in ("TARGET", "VERTICES", "MAP"):
        if need not in s:
            raise DocumentError(f"missing section {need}")
    labels = _vertices(s["VERTICES"])
    ids = set(labels)
    links = _pairs(s.get("LINKS", []), ids, "a link")
    seen: set = set()
    for u, w in links:
        if u in seen or w in seen or u == w:
            raise DocumentError(f"vertex in two links: {u} {w}")
        seen |= {u, w}
    return CpDocument(_target_of(s["TARGET"]), labels, _pairs(s.get("EDGES", []), ids, "an edge"),
                      links, _map(s["MAP"], ids))


def format_cp_document(cp: CombProof, target: _Target | None = None,
                       keep_labels: bool = False) -> str:
    target = target or _Target(cp.formula)
    src = cp.source
    vs = src.vertices
    out = ["TARGET", target.text(), "VERTICES"]
    for v in vs:
        lab = _label_text(src.labels[v]) if keep_labels else ""
        out.append(f"{v} {lab}".rstrip())
    out.append("EDGES")
    for e in sorted(src.edges, key=lambda e: sorted(map(vkey, e))):
        u, w = sorted(e, key=vkey)
        out.append(f"{u} {w}")
    out.append("LINKS")
    for link in src.links():
        u, w = sorted(link, key=vkey)
        out.append(f"{u} {w}")
    out.append("MAP")
    for v in vs:
        out.append(f"{v} {ref(cp.map[v])}")
    return "\n".join(out) + "\n"


@dataclass
class HomogDocument:
    mode: str
    target: _Target
    hcp: HomogeneousCp


def _homog_target(mode: str, target: _Target) -> DualizingGraph:
    if mode == "prop":
        return dgraph_of_prop(target.formula)
    if mode == "modal":
        if target.modal is None:
            raise DocumentError("modal mode needs a 'modal' TARGET line")
        return modal_mograph(target.modal)
    return mograph_of_formula(target.formula)


def parse_homog_document(text: str) -> HomogDocument:
    s = _sections(text, {"MODE", "TARGET", "VERTICES", "EDGES", "DUALITIES", "BINDINGS", "MAP"})
    for need in ("MODE", "TARGET", "VERTICES", "MAP"):
        if need not in s:
            raise DocumentError(f"missing section {need}")
    mode = s["MODE"][0][1].strip()
    if mode not in ("prop", "monadic", "modal"):
        raise DocumentError(f"unknown mode {mode!r}", s["MODE"][0][0])
    target = _target_of(s["TARGET"])
    ids = set(_vertices(s["VERTICES"]))
    edges = _pairs(s.get("EDGES", []), ids, "an edge")
    duals = _pairs(s.get("DUALITIES", []), ids, "a duality")
    fmap = _map(s["MAP"], ids)
    if mode == "prop":
        source: DualizingGraph = DualizingGraph(ids, edges, duals)
    else:
        source = Mograph(ids, edges, duals, _pairs(s.get("BINDINGS", []), ids, "a binding"))
    try:
        tgt = _homog_target(mode, target)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return HomogDocument(mode, target, HomogeneousCp(source, tgt, fmap))


def format_homog_document(doc: HomogDocument) -> str:
    h = doc.hcp
    src = h.source
    out = [f"MODE {doc.mode}", "TARGET", doc.target.text(), "VERTICES"]
    out += [str(v) for v in src.vertices]

    def pairs(name: str, es) -> None:
        out.append(name)
        for e in sorted(es, key=lambda e: sorted(map(vkey, e))):
            u, w = sorted(e, key=vkey)
            out.append(f"{u} {w}")

    pairs("EDGES", src.edges)
    pairs("DUALITIES", src.dualities)
    if isinstance(src, Mograph):
        out.append("BINDINGS")
        for b, l in sorted(src.bindings, key=lambda a: (vkey(a[0]), vkey(a[1]))):
            out.append(f"{b} {l}")
    out.append("MAP")
    out += [f"{v} {ref(h.map[v])}" for v in src.vertices]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- sequent proofs

_SEXP = re.compile(r'\s*(?:(;[^\n]*)|(\()|(\))|"([^"]*)"|([^\s()";]+))')


def _sexp(text: str):
    stack: list[list] = [[]]
    pos = 0
    while pos < len(text):
        m = _SEXP.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise DocumentError(f"unexpected character at offset {pos}")
            break
        pos = m.end()
        comment, open_, close, string, word = m.groups()
        if comment:
            continue
        if open_:
            stack.append([])
        elif close:
            if len(stack) == 1:
                raise DocumentError(f"unbalanced ')' at offset {m.start()}")
            done = stack.pop()
            stack[-1].append(done)
        elif string is not None:
            stack[-1].append(("str", string))
        elif word is not None:
            stack[-1].append(word)
    if len(stack) != 1:
        raise DocumentError("unbalanced '('")
    if len(stack[0]) != 1:
        raise DocumentError("a proof file holds exactly one proof")
    return stack[0][0]


def parse_rproof(text: str) -> RProof:
    """Proof from an s-expression, e.g. ``(or (ax "p"))``.

    Rules: ``(ax "ATOM")``, ``(one)``, ``(x K P)``, ``(w "FORMULA" P)``,
    ``(c P)``, ``(and P Q)``, ``(or P)``, ``(ex "ex x. A" "TERM" P)``,
    ``(all VAR P)``.  Errors name the node path, a list of premise indices.
    """
    return _build_rproof(_sexp(text), ())


def _build_rproof(node, path: tuple) -> RProof:
    def fail(msg: str):
        raise IllFormedProof(f"at node {list(path)}: {msg}")

    if not isinstance(node, list) or not node or not isinstance(node[0], str):
        fail("expected '(RULE ...)'")
    rule, args = node[0], node[1:]

    def text(a) -> str:
        if not (isinstance(a, tuple) and a[0] == "str"):
            fail(f"rule {rule} expects a quoted formula or term")
        return a[1]

    def formula(a) -> Formula:
        try:
            return parse_formula(text(a))
        except ParseError as exc:
            fail(str(exc))

    def sub(i: int, a) -> RProof:
        return _build_rproof(a, path + (i,))

    shapes = {"ax": 1, "one": 0, "x": 2, "w": 2, "c": 1, "and": 2, "or": 1, "ex": 3, "all": 2}
    if rule not in shapes:
        fail(f"unknown rule {rule!r}")
    if len(args) != shapes[rule]:
        fail(f"rule {rule} takes {shapes[rule]} arguments, got {len(args)}")
    try:
        if rule == "ax":
            return ax(formula(args[0]))
        if rule == "one":
            return one()
        if rule == "x":
            if not (isinstance(args[0], str) and args[0].isdigit()):
                fail("exchange position must be a number")
            return exch(int(args[0]), sub(0, args[1]))
        if rule == "w":
            return weaken(formula(args[0]), sub(0, args[1]))
        if rule == "c":
            return contract(sub(0, args[0]))
        if rule == "and":
            return and_(sub(0, args[0]), sub(1, args[1]))
        if rule == "or":
            return or_(sub(0, args[0]))
        if rule == "ex":
            try:
                t = parse_term(text(args[1]))
            except ParseError as exc:
                fail(str(exc))
            return ex(formula(args[0]), t, sub(0, args[2]))
        if not isinstance(args[0], str):
            fail("eigenvariable must be a bare name")
        return all_(args[0], sub(0, args[1]))
    except IllFormedProof as exc:
        if str(exc).startswith("at node"):
            raise
        fail(str(exc))


def format_rproof(p: RProof) -> str:
    def go(q: RProof) -> str:
        subs = " ".join(go(s) for s in q.premises)
        if q.rule == "ax":
            return f'(ax "{to_text(q.param)}")'
        if q.rule == "one":
            return "(one)"
        if q.rule == "x":
            return f"(x {q.param} {subs})"
        if q.rule == "w":
            return f'(w "{to_text(q.param)}" {subs})'
        if q.rule == "ex":
            principal, t = q.param
            return f'(ex "{to_text(principal)}" "{term_text(t)}" {subs})'
        if q.rule == "all":
            return f"(all {q.param} {subs})"
        return f"({q.rule} {subs})"

    return go(p)


# ---------------------------------------------------------------- rendering

_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]


def _q(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(cp: CombProof, show_labels: bool = True) -> str:
    """Source and target as two clusters, with the map as dotted edges."""
    src = cp.lifted() if show_labels else cp.source
    tgt = cp.target
    colour_of = {}
    for k, link in enumerate(src.links()):
        for v in link:
            colour_of[v] = _PALETTE[k % len(_PALETTE)]
    out = ["graph combproof {", "  compound=true;"]
    out.append("  subgraph cluster_source {")
    out.append('    label="source";')
    for v in src.vertices:
        attrs = [f"label={_q(src.labels[v] if show_labels and src.labels[v] is not None else v)}"]
        if v in colour_of:
            attrs.append(f"color={colour_of[v]}")
            attrs.append("penwidth=2")
        out.append(f"    {_q('s' + str(v))} [{', '.join(attrs)}];")
    for e in sorted(src.edges, key=lambda e: sorted(map(vkey, e))):
        u, w = sorted(e, key=vkey)
        out.append(f"    {_q('s' + str(u))} -- {_q('s' + str(w))};")
    out.append("  }")
    out.append("  subgraph cluster_target {")
    out.append('    label="target";')
    for v in tgt.vertices:
        lab = tgt.labels[v] if show_labels else ref(v)
        out.append(f"    {_q('t' + ref(v))} [label={_q(lab)}];")
    for e in sorted(tgt.edges, key=lambda e: sorted(map(vkey, e))):
        u, w = sorted(e, key=vkey)
        out.append(f"    {_q('t' + ref(u))} -- {_q('t' + ref(w))};")
    out.append("  }")
    for v in src.vertices:
        out.append(f"  {_q('s' + str(v))} -- {_q('t' + ref(cp.map[v]))} [style=dotted];")
    out.append("}")
    return "\n".join(out) + "\n"


def render_text(cp: CombProof) -> str:
    """Source vertex ids stacked over the positions of their images in the formula."""
    text, pos = to_text_with_positions(cp.formula)
    rows: list[dict[int, str]] = []
    for v in cp.source.vertices:
        col = pos[cp.map[v]]
        name = str(v)
        for row in rows:
            if all(c not in row for c in range(col, col + len(name) + 1)):
                break
        else:
            row = {}
            rows.append(row)
        for i, ch in enumerate(name):
            row[col + i] = ch
    lines = []
    for row in reversed(rows):
        width = max(row) + 1
        lines.append("".join(row.get(c, " ") for c in range(width)).rstrip())
    lines.append(text)
    src = cp.source

    def pairs(es) -> str:
        return " ".join("-".join(str(x) for x in sorted(e, key=vkey))
                        for e in sorted(es, key=lambda e: sorted(map(vkey, e))))

    lines.append("edges: " + pairs(src.edges))
    lines.append("links: " + pairs(src.links()))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_graph(args) -> int:
    f = parse_formula(args.formula)
    if not is_rectified(f):
        print("warning: formula is not rectified; rectifying before translation",
              file=sys.stderr)
        f = rectify(f)
    g = graph_of(f)
    print(f"formula {to_text(f)}")
    print(f"vertices {len(g.vertices)}")
    for v in g.vertices:
        print(f"  {ref(v)} {g.labels[v]}")
    print(f"edges {len(g.edges)}")
    for e in sorted(g.edges, key=lambda e: sorted(map(vkey, e))):
        u, w = sorted(e, key=vkey)
        print(f"  {ref(u)} -- {ref(w)}")
    arcs = sorted(bindings(g), key=lambda a: (vkey(a[0]), vkey(a[1])))
    print(f"bindings {len(arcs)}")
    for b, l in arcs:
        print(f"  {ref(b)} -> {ref(l)}")
    return OK


def _check_one(path: str, cuts: tuple[str, ...]) -> tuple[str, int, list[str]]:
    try:
        doc = parse_cp_document(_read(path))
        cut_fs = [parse_formula(c) for c in cuts]
    except (OSError, DocumentError, ParseError) as exc:
        return path, USAGE, [str(exc)]
    cp = doc.combproof(cut_fs)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if cut_fs:
            rep = verify_cut_cp(rectify(doc.formula), cut_fs, cp)
        else:
            rep = verify_cp(cp)
    return path, OK if rep.ok else REFUTED, [str(f) for f in rep.failures]


def cmd_check(args) -> int:
    cuts = tuple(args.cut or ())
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_one, args.files, [cuts] * len(args.files)))
    else:
        results = [_check_one(p, cuts) for p in args.files]
    status = OK
    for path, code, lines in results:
        word = {OK: "ok", REFUTED: "refuted", USAGE: "error"}[code]
        print(f"{word} {path}")
        for line in lines:
            print(f"  {line}")
        status = max(status, code)
    return status


def cmd_compile(args) -> int:
    try:
        proof = parse_rproof(_read(args.proof))
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except IllFormedProof as exc:
        print(f"ill-formed proof {exc}", file=sys.stderr)
        return REFUTED
    rep = check_rproof(proof)
    if not rep.ok:
        for f in rep.failures:
            print(f"ill-formed proof at node {list(f.witness)}: {f.condition} {f.detail}".rstrip(),
                  file=sys.stderr)
        return REFUTED
    cp = cp_of_rproof(proof)
    check = verify_cp(cp)
    if not check.ok:
        print(f"compiled proof does not verify:\n{check}", file=sys.stderr)
        return REFUTED
    _write(args.output, format_cp_document(cp))
    return OK


def cmd_homog(args) -> int:
    text = _read(args.file)
    try:
        if args.inverse:
            doc = parse_homog_document(text)
            if doc.mode != args.mode:
                raise DocumentError(f"document mode {doc.mode} differs from --mode {args.mode}")
            if doc.mode == "prop":
                cp = from_homogeneous_prop(doc.hcp, doc.target.formula)
            else:
                cp = from_homogeneous_monadic(doc.hcp, doc.target.formula)
            _write(args.output, format_cp_document(cp, doc.target))
            return OK
        doc_cp = parse_cp_document(text)
        cp = doc_cp.combproof()
        if args.mode == "prop":
            h = to_homogeneous_prop(cp)
        else:
            if args.mode == "modal" and doc_cp.target.modal is None:
                raise DocumentError("modal mode needs a 'modal' TARGET line")
            h = to_homogeneous_monadic(cp)
        out = HomogDocument(args.mode, doc_cp.target, h)
        rep = verify_homogeneous_cp(parse_homog_document(format_homog_document(out)).hcp)
        if not rep.ok:
            print(f"converted proof does not verify:\n{rep}", file=sys.stderr)
            return REFUTED
        _write(args.output, format_homog_document(out))
        return OK
    except NotVerified as exc:
        print(f"refuted:\n{exc.report}", file=sys.stderr)
        return REFUTED
    except (DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def cmd_render(args) -> int:
    doc = parse_cp_document(_read(args.file))
    cp = doc.combproof()
    if args.format == "dot":
        _write(None, render_dot(cp, not args.no_labels))
    else:
        _write(None, render_text(cp))
    return OK


def cmd_oracle(args) -> int:
    f = parse_formula(args.formula)
    try:
        res = prop_tautology(f, args.max_atoms)
    except (TooManyAtoms, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if res.valid:
        print("valid")
        return OK
    print("invalid")
    for (pred, targs), val in sorted(res.countermodel.items()):
        name = pred + (f"({','.join(targs)})" if targs else "")
        print(f"  {name} = {int(val)}")
    return REFUTED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="combproof",
                                 description="Check and convert combinatorial proofs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="print the graph of a formula")
    p.add_argument("formula")
    p.set_defaults(run=cmd_graph)

    p = sub.add_parser("check", help="verify combinatorial proof documents")
    p.add_argument("files", nargs="+")
    p.add_argument("--cut", action="append", metavar="FORMULA",
                   help="append a cut formula B as (B and not B); repeatable")
    p.add_argument("--jobs", type=int, default=1, help="files checked in parallel")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("compile", help="compile a sequent proof to a combinatorial proof")
    p.add_argument("proof")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_compile)

    p = sub.add_parser("homog", help="convert to (or with --inverse from) homogeneous form")
    p.add_argument("file")
    p.add_argument("--mode", choices=["prop", "monadic", "modal"], required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_homog)

    p = sub.add_parser("render", help="draw a combinatorial proof")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "text"], default="dot")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(run=cmd_render)

    p = sub.add_parser("oracle", help="truth-table check of a quantifier-free formula")
    p.add_argument("formula")
    p.add_argument("--max-atoms", type=int, default=20)
    p.set_defaults(run=cmd_oracle)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.run(args)
    except (ParseError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
