import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivus.engine import DerivationBudget, Step, derive
from derivus.formats import fixture_path, load_fixture
from derivus.kernel import (
    AllLists, Atom, AtomCapExceeded, AtomsOnly, BasisAxiom, MathSystem, Numerals, PropAxiom, QuantAxiom,
    StringsOnly, SymbolExtension, VariablesOnly, abstract, check_proof, chi_lint, chi_sign, fill,
    from_rderivation, identically_true, is_prop_axiom, load_math_system, load_proof, pa_system,
    parse_math_system, parse_proof, quantifier_axiom_kind, render_math_system, render_proof,
    sign_support,
)
from derivus.syntax import And, Const, Iff, Impl, Neg, Op, Or, Var, parse_formula, sbl, var_of

from strategies import formulas, random_list

WORKED = [("k_ex1.rs", "k_ex1.proof", 16), ("k_ex1.rs", "k_ex2.proof", 3), ("k_ex3.rs", "k_ex3.proof", 28)]
RECURSIVE_PROOFS = [("k_ex1.rs", p) for p in ("k_ex1.proof", "k_ex2.proof")] + [("k_ex3.rs", "k_ex3.proof")] + [
    ("z_rel.rs", f"z_{n}.proof") for n in ("opterm", "concat", "induction", "equality", "conj")]


def system(name):
    return load_math_system(fixture_path(name))


def proof(M, name):
    return load_proof(fixture_path(name), M.table)


def proof_lines(name):
    text = fixture_path(name).read_text(encoding="utf-8")
    return [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


# ---------------------------------------------------------------- worked proofs

@pytest.mark.parametrize("sysname,name,length", WORKED)
def test_worked_proofs_verify(sysname, name, length):
    M = system(sysname)
    steps = proof(M, name)
    assert len(steps) == length
    v = check_proof(steps, M)
    assert v, str(v)


def test_first_proof_ends_in_equivalence():
    M = system("k_ex1.rs")
    assert proof(M, "k_ex1.proof")[-1].formula == parse_formula("forall x3 <-> C x3 D x3", M.table)


def mutations():
    rows = []
    for line in fixture_path("k_mutations.tsv").read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            name, step, repl, code = line.split("\t")
            rows.append((name, int(step), repl, code))
    return rows


def test_twenty_mutations():
    assert len(mutations()) == 20


@pytest.mark.parametrize("name,step,repl,code", mutations())
def test_mutation_rejected_at_mutated_step(name, step, repl, code):
    sysname = "k_ex3.rs" if name.startswith("k_ex3") else "k_ex1.rs"
    M = system(sysname)
    lines = proof_lines(name)
    assert lines[step - 1] != repl
    lines[step - 1] = repl
    v = check_proof(parse_proof("\n".join(lines), M.table), M)
    assert not v
    assert (v.step + 1, v.code) == (step, code), str(v)


def test_proof_round_trip():
    M = system("k_ex3.rs")
    steps = proof(M, "k_ex3.proof")
    assert parse_proof(render_proof(steps), M.table) == steps


def test_forward_citation_rejected():
    M = system("k_ex1.rs")
    v = check_proof(parse_proof("B 0 ; mp 1 2\n", M.table), M)
    assert not v and v.code == "index"


def test_unknown_symbol_rejected():
    M = system("k_ex1.rs")
    steps = [Step(parse_formula("B q", M.table.extend(("q",), ())), BasisAxiom())]
    v = check_proof(steps, M)
    assert not v and v.code == "symbols"


def test_gen_must_match():
    M = system("k_ex1.rs")
    v = check_proof(parse_proof("B 0 ; basis 1\nforall x2 B 0 ; gen 1 x1\n", M.table), M)
    assert not v and v.code == "gen"


# ---------------------------------------------------------------- axioms

@pytest.mark.parametrize("text,kind", [
    ("-> forall x1 B x1 B x1", "a"),
    ("-> forall x1 B x1 B 0", None),
    ("-> forall x1 -> B 0 C x1 -> B 0 forall x1 C x1", "b"),
    ("-> forall x1 -> B x1 C x1 -> B x1 forall x1 C x1", None),
    ("<-> ! forall x2 ! C x2 exists x2 C x2", "c"),
    ("<-> ! forall x2 C x2 exists x2 C x2", None),
])
def test_quantifier_axiom_kinds(text, kind):
    M = system("k_ex1.rs")
    assert quantifier_axiom_kind(parse_formula(text, M.table)) == kind


def test_quantifier_kind_must_agree_with_citation():
    M = system("k_ex1.rs")
    f = parse_formula("-> forall x1 B x1 B x1", M.table)
    assert check_proof([Step(f, QuantAxiom("a"))], M)
    v = check_proof([Step(f, QuantAxiom("b"))], M)
    assert not v and v.code == "bad-axiom"


def test_peano_system():
    M, policy = pa_system()
    assert check_proof(load_proof(fixture_path("pa_zero.proof"), M.table), M, policy)
    assert load_math_system(fixture_path("pa.ms")) == M


def test_peano_scheme_needs_exact_instance():
    M, policy = pa_system()
    bad = parse_formula("-> forall x1 & ~ + ( 0 0 ) , 0 -> ~ + ( 0 x1 ) , x1 ~ + ( 0 s ( x1 ) ) , x1 "
                        "forall x1 ~ + ( 0 x1 ) , x1", M.table)
    v = check_proof([Step(bad, BasisAxiom())], M, policy)
    assert not v and v.code == "bad-axiom"


def test_math_system_file_round_trip():
    M = system("k_ex1_f.ms")
    again = parse_math_system(render_math_system(M, "k_ex1.rs"), fixture_path("k_ex1.rs").parent)
    assert again == M


# ---------------------------------------------------------------- tautologies

def truth_table(alpha, j):
    """Direct enumeration over all 2^j assignments."""
    def ev(g, row):
        if isinstance(g, Atom):
            return row[g.index - 1]
        if isinstance(g, Neg):
            return not ev(g.body, row)
        a, b = ev(g.left, row), ev(g.right, row)
        return {Impl: (not a) or b, Iff: a == b, And: a and b, Or: a or b}[type(g)]

    return all(ev(alpha, row) for row in itertools.product((False, True), repeat=j))


def skeleton_family():
    leaves = [Atom(i) for i in range(1, 5)]
    level1 = leaves + [Neg(a) for a in leaves] + [c(a, b) for c in (Impl, Iff, And, Or) for a in leaves for b in leaves]
    out = list(level1)
    for c in (Impl, Iff, Or):
        out += [c(a, b) for a in level1 for b in level1[:50]]
    out += [Neg(a) for a in level1]
    return out


def test_tautology_recognizer_against_enumeration():
    family = skeleton_family()
    assert len(family) >= 10_000
    hits = 0
    for alpha in family:
        j = max(a.index for a in _atoms(alpha))
        expected = truth_table(alpha, j)
        assert identically_true(alpha, j) == expected, alpha
        hits += expected
    assert 0 < hits < len(family)


def _atoms(g):
    if isinstance(g, Atom):
        return [g]
    if isinstance(g, Neg):
        return _atoms(g.body)
    return _atoms(g.left) + _atoms(g.right)


@pytest.mark.parametrize("sysname,name,step", [("k_ex1.rs", "k_ex1.proof", 9), ("k_ex3.rs", "k_ex3.proof", 7)])
def test_worked_propositional_steps(sysname, name, step):
    M = system(sysname)
    st_ = proof(M, name)[step - 1]
    assert isinstance(st_.just, PropAxiom)
    skel, atoms = abstract(st_.formula)
    assert fill(skel, atoms) == st_.formula
    assert truth_table(skel, len(atoms))
    assert is_prop_axiom(st_.formula)


def test_shared_subformulas_share_atoms():
    M = system("k_ex1.rs")
    skel, atoms = abstract(parse_formula("-> forall x1 B x1 -> C 0 forall x1 B x1", M.table))
    assert len(atoms) == 2 and identically_true(skel)


def test_atom_cap_from_environment(monkeypatch):
    M = system("k_ex1.rs")
    f = parse_formula("-> B 0 -> C 0 -> D 0 B 0", M.table)
    assert is_prop_axiom(f)
    monkeypatch.setenv("DERIVUS_MAX_ATOMS", "2")
    with pytest.raises(AtomCapExceeded):
        is_prop_axiom(f)
    v = check_proof([Step(f, PropAxiom())], M)
    assert not v and v.code == "atoms"


@given(formulas())
def test_skeleton_fill_round_trip(f):
    skel, atoms = abstract(f)
    assert fill(skel, atoms) == f


# ---------------------------------------------------------------- list policies

def _in_policy(rng, policy, consts):
    while True:
        lam = random_list(rng, max_var=3, size=3, depth=2, consts=consts, ops=("f",))
        if policy.contains(lam):
            return lam


def _numeral(rng, depth=2):
    k = rng.random()
    if depth == 0 or k < 0.4:
        return Const("0") if rng.random() < 0.5 else Var(rng.randint(1, 3))
    if k < 0.7:
        return Op("s", (_numeral(rng, depth - 1),))
    return Op(rng.choice("+*"), (_numeral(rng, depth - 1), _numeral(rng, depth - 1)))


@pytest.mark.parametrize("policy", [AllLists(), StringsOnly(), AtomsOnly(), VariablesOnly(), Numerals(),
                                    SymbolExtension(StringsOnly(), frozenset({"c"}))], ids=str)
def test_policies_closed_under_substitution(policy):
    rng = random.Random(7)
    consts = ("a", "b", "c")
    for _ in range(1000):
        if isinstance(policy, Numerals):
            lam, mu = (_numeral(rng),), (_numeral(rng),)
        else:
            lam, mu = _in_policy(rng, policy, consts), _in_policy(rng, policy, consts)
        assert policy.contains(lam) and policy.contains(mu)
        for x in var_of(lam):
            assert policy.contains(sbl(lam, mu, x)), (lam, mu, x)


def test_policies_contain_variables():
    for policy in (AllLists(), StringsOnly(), AtomsOnly(), VariablesOnly(), Numerals()):
        assert policy.contains((Var(1),))
    assert not VariablesOnly().contains((Const("a"),))
    assert not Numerals().contains((Const("1"),))


def test_policy_rejection_code():
    M = system("k_ex1_f.ms")
    steps = proof(M, "k_ex1_f.proof")
    assert check_proof(steps, M)
    v = check_proof(steps, M, AtomsOnly())
    assert not v and v.code == "policy"


# ---------------------------------------------------------------- R-derivations as proofs

@pytest.mark.parametrize("fixture,text", [("ex2_reverse.rs", "W f ( a a b ) b a"), ("ex3_concat.rs", "C a , b a , a b a")])
def test_rderivation_is_a_proof(fixture, text):
    S = load_fixture(fixture)
    r = derive(S, parse_formula(text, S.table), DerivationBudget(max_rounds=8, max_pool=10_000))
    assert check_proof(from_rderivation(r.derivation), MathSystem(S, S.table))


# ---------------------------------------------------------------- sign function

@pytest.mark.parametrize("sysname,name", RECURSIVE_PROOFS)
def test_sign_is_positive_on_fixture_proofs(sysname, name):
    M = system(sysname)
    assert M.basis_is_recursive
    steps = proof(M, name)
    assert check_proof(steps, M)
    support = sign_support(M.sys)
    assert all(chi_sign(s.formula, M, support) == 1 for s in steps)
    assert chi_lint(steps, M) == []


def test_sign_positive_with_operation_symbols():
    M = system("k_ex1_f.ms")
    assert all(chi_sign(s.formula, M) == 1 for s in proof(M, "k_ex1_f.proof"))


def test_lint_flags_corrupted_script():
    M = system("k_ex1.rs")
    steps = proof(M, "k_ex1_corrupt.proof")
    v = check_proof(steps, M)
    assert not v and v.step == 2 and v.code == "bad-axiom"
    found = {(f.step, f.code) for f in chi_lint(steps, M)}
    assert (2, "contradiction") in found and (2, "chi-negative") in found


def test_sign_of_connectives():
    M = system("k_ex1.rs")
    f = lambda t: chi_sign(parse_formula(t, M.table), M)
    assert f("B 0") == 1 and f("! B 0") == -1
    assert f("-> ! B 0 C 0") == 1 and f("& B 0 ! C 0") == -1
    assert f("~ 0 , ' ") == 1


@settings(max_examples=100)
@given(st.sampled_from(["B 0", "C x1", "D x1 x2", "~ x1 , 0"]), st.sampled_from(["B x1", "! C 0", "D 0"]))
def test_sign_respects_tautologies(a, b):
    # an identically true form of signed atoms always has sign +1
    M = system("k_ex1.rs")
    A, B = parse_formula(a, M.table), parse_formula(b, M.table)
    for taut in (Impl(A, Impl(B, A)), Or(A, Neg(A)), Iff(Neg(Neg(B)), B)):
        assert chi_sign(taut, M) == 1
