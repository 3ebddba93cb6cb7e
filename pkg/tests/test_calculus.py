import random

import pytest
from hypothesis import given, settings

from combproof.bifib import verify_cp
from combproof.calculus import (
    IllFormedProof, RProof, TooManyAtoms, all_, and_, ax, check_rproof, contract,
    cp_of_rproof, ex, exch, one, or_, prop_tautology, weaken,
)
from combproof.examples import (
    DRINKER, PEIRCE, drinker_cp, drinker_rproof, excluded_middle_rproof, forall_distribution,
    forall_distribution_rproof, peirce_rproof,
)
from combproof.fograph import Binder
from combproof.syntax import (
    And, Atom, Or, Sequent, Var, formula_of_sequent, parse_formula,
)
import oracles
from generators import random_prop, random_rproof, proof_height, seeds

P = parse_formula


def atom_occurrences(p: RProof) -> int:
    """Atoms and units across every conclusion in the proof."""

    def count(f):
        if isinstance(f, (And, Or)):
            return count(f.left) + count(f.right)
        if hasattr(f, "body"):
            return count(f.body)
        return 1

    own = sum(count(f) for f in p.conclusion.formulas)
    return own + sum(atom_occurrences(q) for q in p.premises)


def nodes(p: RProof):
    yield p
    for q in p.premises:
        yield from nodes(q)


# ---------------------------------------------------------------- checking


def test_excluded_middle():
    p = excluded_middle_rproof()
    assert check_rproof(p).ok
    assert formula_of_sequent(p.conclusion) == P("~p \\/ p")


def test_drinker_proof_checks():
    p = drinker_rproof()
    assert check_rproof(p).ok
    assert p.conclusion == Sequent((P(DRINKER),))


def test_eigenvariable_violation():
    p = all_("x", weaken(P("q(x)"), ax(P("p(x)"))))
    rep = check_rproof(p)
    assert rep.conditions() == {"all-eigenvariable"}
    assert rep.failures[0].witness == ()


def test_bad_witness_located():
    inner = or_(ax(P("p(a)")))
    bad = ex(P("ex x. ~p(x) \\/ p(b)"), Var("a"), inner)
    rep = check_rproof(or_(weaken(P("q"), bad)))
    assert rep.conditions() == {"ex-witness"}
    assert rep.failures[0].witness == (0, 0)


def test_contraction_needs_alpha_variants():
    base = all_("x", or_(ax(P("p(x)"))))
    copy = weaken(P("all y. ~p(y) \\/ p(y)"), base)
    assert check_rproof(contract(copy)).ok
    forged = RProof("c", (weaken(P("q"), ax(P("p"))),), Sequent((P("~p"), P("p"))), P("q"))
    assert "c-not-alpha-equivalent" in check_rproof(forged).conditions()


def test_axiom_on_constant_rejected():
    with pytest.raises(IllFormedProof):
        ax(P("1"))


def test_forged_axiom_rejected():
    forged = RProof("ax", (), Sequent((P("p"), P("p"))), P("p"))
    assert check_rproof(forged).conditions() == {"ax"}


def test_compile_rejects_ill_formed():
    with pytest.raises(IllFormedProof):
        cp_of_rproof(all_("x", weaken(P("q(x)"), ax(P("p(x)")))))


# ---------------------------------------------------------------- compilation


def test_axiom_compiles_to_identity():
    cp = cp_of_rproof(excluded_middle_rproof())
    assert len(cp.source) == 2 and not cp.source.edges
    assert len(cp.source.links()) == 1
    assert sorted(cp.map.values()) == sorted(cp.target.labels)
    assert verify_cp(cp).ok


def test_duplicate_universal_binder_is_collapsed():
    # two vacuous universal copies over ~p are contracted into one
    p = and_(ax(P("p")), ax(P("p")))
    p = all_("x", exch(2, p))
    p = exch(2, exch(1, exch(2, p)))
    p = contract(exch(1, all_("y", p)))
    assert p.conclusion == Sequent((P("p & p"), P("all x. ~p")))
    cp = cp_of_rproof(or_(p))
    lifted = cp.lifted()
    assert sum(isinstance(l, Binder) for l in lifted.labels.values()) == 1
    assert len(cp.source) == 5
    assert verify_cp(cp).ok


def test_drinker_proof_compiles_to_the_drinker_cp():
    cp = cp_of_rproof(drinker_rproof())
    assert verify_cp(cp).ok
    assert oracles.cp_isomorphic(cp, drinker_cp())


@pytest.mark.parametrize("proof", [excluded_middle_rproof, peirce_rproof, drinker_rproof])
def test_fixture_proofs_compile(proof):
    assert verify_cp(cp_of_rproof(proof())).ok


def test_peirce_conclusion():
    assert formula_of_sequent(peirce_rproof().conclusion) == P(PEIRCE)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_forall_distribution(n):
    p = forall_distribution_rproof(n)
    assert formula_of_sequent(p.conclusion) == forall_distribution(n)
    assert verify_cp(cp_of_rproof(p)).ok


def test_unit_proof():
    cp = cp_of_rproof(one())
    assert verify_cp(cp).ok and len(cp.source) == 1


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_random_proofs_compile_soundly(seed):
    rng = random.Random(seed)
    p = random_rproof(rng, 12, propositional=rng.random() < 0.3)
    assert proof_height(p) <= 12
    assert check_rproof(p).ok
    cp = cp_of_rproof(p)
    assert verify_cp(cp).ok
    assert len(cp.source) <= atom_occurrences(p)


@given(seeds)
@settings(max_examples=100, deadline=None)
def test_or_and_exchange_keep_the_source(seed):
    rng = random.Random(seed)
    p = random_rproof(rng, 10)
    for q in nodes(p):
        if q.rule in ("or", "x"):
            a, b = cp_of_rproof(q), cp_of_rproof(q.premises[0])
            assert a.source == b.source


# ---------------------------------------------------------------- truth tables


def test_tautology_examples():
    assert prop_tautology(P("~p \\/ p")).valid
    assert prop_tautology(P(PEIRCE)).valid
    r = prop_tautology(P("p & ~p"))
    assert not r.valid and r.countermodel is not None


def test_tautology_atom_limit():
    f = P(" \\/ ".join(f"p{i}" for i in range(5)))
    with pytest.raises(TooManyAtoms):
        prop_tautology(f, max_atoms=4)


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_tautology_matches_truth_table(seed):
    f = random_prop(random.Random(seed), 4, constants=True)
    r = prop_tautology(f)
    assert r.valid == oracles.tautology(f)
    if not r.valid:
        assert not _eval(f, r.countermodel)


def _eval(f, val):
    if isinstance(f, Atom):
        return val[(f.pred.base, tuple(map(str, f.args)))] != f.pred.dualized
    if isinstance(f, And):
        return _eval(f.left, val) and _eval(f.right, val)
    if isinstance(f, Or):
        return _eval(f.left, val) or _eval(f.right, val)
    return str(f) == "1"
