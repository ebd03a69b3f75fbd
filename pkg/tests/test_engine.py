import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivus.engine import (
    STAR_EQ, AxiomBasis, DerivationBudget, ModusPonens, RecursiveSystem, Step,
    check_rderivation, derive, eliminate_equations, is_equality_raxiom, project_symbols,
    strip_equation_steps,
)
from derivus.formats import (
    FileFormatError, load_fixture, parse_rderivation, parse_system, render_rderivation, render_system,
)
from derivus.syntax import Eq, SymbolTable, is_rformula, parse_formula, primes

BUDGET = DerivationBudget(max_rounds=8, max_pool=10_000)
FIXTURES = ["ex1_empty.rs", "ex2_reverse.rs", "ex3_concat.rs", "ex4_arith.rs", "ex5_numbers.rs",
            "ex6_automaton.rs", "ex7_cfg.rs", "ex7_chomsky.rs"]


def goal(sysm, text):
    return parse_formula(text, sysm.table)


@pytest.mark.parametrize("text,expected", [
    ("~ x1 , x1", True),
    ("-> ~ x1 , x2 -> ~ x2 , x3 ~ x1 , x3", True),
    ("-> W x1 W x1", False),
    ("-> ~ x1 , x2 -> W x1 W x2", True),
    ("~ a , a", False),
])
def test_equality_axiom_recognition(text, expected):
    t = SymbolTable(("a",), ("W",))
    assert is_equality_raxiom(parse_formula(text, t), {"W"}) is expected


def test_empty_derivation_accepted():
    assert check_rderivation([], load_fixture("ex2_reverse.rs"))


def test_hand_derivation_accepted():
    S = load_fixture("ex2_reverse.rs")
    d = parse_rderivation(
        "W a ; basis 1\n"
        "-> W x1 -> W x2 W x1 x2 ; basis 3\n"
        "-> W a -> W x2 W a x2 ; subst 2 x1 := a\n", S.table)
    assert check_rderivation(d, S)


def test_forward_reference_rejected():
    S = load_fixture("ex2_reverse.rs")
    d = [Step(goal(S, "W a"), ModusPonens(1, 2)), Step(goal(S, "W b"), AxiomBasis(1))]
    v = check_rderivation(d, S)
    assert not v and v.step == 0


@pytest.mark.parametrize("fixture,text", [
    ("ex2_reverse.rs", "~ f ( a b a a b ) , b a a b a"),
    ("ex2_reverse.rs", "W f ( a a b ) b a"),
    ("ex4_arith.rs", "* a a , a a a , a a a a a a"),
    ("ex5_numbers.rs", "~ * ( + ( □ ) s ( s ( 0 ) □ ) 1 ) , 0"),
    ("ex3_concat.rs", "C a , b a , a b a"),
    ("ex7_chomsky.rs", "L [ a + a ] * a"),
])
def test_derive_found_and_verified(fixture, text):
    S = load_fixture(fixture)
    g = goal(S, text)
    r = derive(S, g, BUDGET)
    assert r, str(r)
    assert r.derivation[-1].formula == g
    assert check_rderivation(r.derivation, S)


def test_not_derivable_reports_unknown():
    S = load_fixture("ex2_reverse.rs")
    r = derive(S, goal(S, "-> W x1 ~ f ( f ( x1 ) ) , x1"), DerivationBudget(max_rounds=6))
    assert not r
    assert r.budget.max_rounds == 6


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        DerivationBudget(max_rounds=0)


def test_derive_is_deterministic():
    S = load_fixture("ex2_reverse.rs")
    g = goal(S, "W f ( a a b ) b a")
    assert render_rderivation(derive(S, g, BUDGET).derivation) == render_rderivation(derive(S, g, BUDGET).derivation)


@pytest.mark.parametrize("rounds", [4, 5, 8])
def test_derive_is_monotone_in_budget(rounds):
    S = load_fixture("ex4_arith.rs")
    g = goal(S, "< a , a a a")
    if derive(S, g, DerivationBudget(max_rounds=rounds)):
        assert derive(S, g, DerivationBudget(max_rounds=rounds + 3))


def test_equality_is_a_congruence():
    S = load_fixture("ex5_numbers.rs")
    # N0 1 needs the equation 1 = s(0) and congruence on N0
    r = derive(S, goal(S, "N0 1"), BUDGET)
    assert r and check_rderivation(r.derivation, S)


# ---------------------------------------------------------------- symbol projection

def test_projection_identity_without_new_symbols():
    S = load_fixture("ex2_reverse.rs")
    d = derive(S, goal(S, "W a b"), BUDGET).derivation
    assert project_symbols(d, {}, S) == d


def test_projection_of_extended_derivation():
    S = load_fixture("ex2_reverse.rs")
    ext = RecursiveSystem(S.table.extend(("c",), ()), S.basis)
    d = parse_rderivation(
        "-> W x1 -> W x2 W x1 x2 ; basis 3\n"
        "-> W c -> W x2 W c x2 ; subst 1 x1 := c\n", ext.table)
    assert check_rderivation(d, ext)
    image = project_symbols(d, {"c": "a"}, S)
    assert check_rderivation(image, S)
    assert image[1].formula == goal(S, "-> W a -> W x2 W a x2")


def test_projection_needs_total_map():
    S = load_fixture("ex2_reverse.rs")
    ext = S.table.extend(("c",), ())
    d = parse_rderivation("-> W x1 -> W x2 W x1 x2 ; basis 3\n-> W c -> W x2 W c x2 ; subst 1 x1 := c\n", ext)
    with pytest.raises(ValueError):
        project_symbols(d, {}, S)


# ---------------------------------------------------------------- equation elimination

def test_elimination_on_empty_basis():
    S = RecursiveSystem(SymbolTable(("a",), ()), ())
    star = eliminate_equations(S)
    # reflexivity, symmetry, transitivity, one operation scheme, two concatenation schemes
    assert len(star.basis) == 6
    assert all(not isinstance(p, Eq) for f in star.basis for p in primes(f))


@pytest.mark.parametrize("fixture", FIXTURES)
def test_elimination_removes_every_equation(fixture):
    star = eliminate_equations(load_fixture(fixture))
    assert all(is_rformula(f) for f in star.basis)
    assert all(not isinstance(p, Eq) for f in star.basis for p in primes(f))


@pytest.mark.parametrize("text,star_text", [
    ("N0 s ( 0 )", "N0 s ( 0 )"),
    ("~ 1 , s ( 0 )", f"{STAR_EQ} 1 , s ( 0 )"),
    ("NL 0 s ( 0 )", "NL 0 s ( 0 )"),
])
def test_elimination_preserves_derivability(text, star_text):
    S = load_fixture("ex5_numbers.rs")
    star = eliminate_equations(S)
    assert derive(S, goal(S, text), BUDGET)
    r = derive(star, goal(star, star_text), BUDGET)
    assert r and check_rderivation(r.derivation, star)


def test_strip_removes_equation_steps():
    S = load_fixture("ex3_concat.rs")
    d = parse_rderivation(
        "~ x1 , x1 ; axiom-eq\n"
        "W a ; basis 1\n"
        "-> ~ x1 , x2 -> W x1 W x2 ; axiom-eq\n"
        "-> ~ a , x2 -> W a W x2 ; subst 3 x1 := a\n"
        "-> ~ a , a -> W a W a ; subst 4 x2 := a\n"
        "~ a , a ; subst 1 x1 := a\n"
        "-> W a W a ; mp 6 5\n"
        "W a ; mp 2 7\n"
        "-> W x1 -> W x2 W x1 x2 ; basis 3\n"
        "-> W a -> W x2 W a x2 ; subst 9 x1 := a\n"
        "-> W x2 W a x2 ; mp 8 10\n", S.table)
    assert check_rderivation(d, S)
    out = strip_equation_steps(d, S)
    assert check_rderivation(out, S)
    forms = [s.formula for s in out]
    assert goal(S, "-> W a W a") not in forms
    assert not any(isinstance(p, Eq) for f in forms for p in primes(f))
    assert forms[-1] == goal(S, "-> W x2 W a x2")


def test_strip_requires_equation_free_basis():
    S = load_fixture("ex2_reverse.rs")
    with pytest.raises(ValueError):
        strip_equation_steps([], S)


# ---------------------------------------------------------------- files

@pytest.mark.parametrize("fixture", FIXTURES)
def test_system_file_round_trip(fixture):
    S = load_fixture(fixture)
    assert parse_system(render_system(S)) == S


def test_system_file_error_position():
    with pytest.raises(FileFormatError) as e:
        parse_system("constants: a\npredicates: W\nW a\n-> W x1 W ( \n")
    assert e.value.line == 4


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from("ab"), min_size=1, max_size=4), st.lists(st.sampled_from("ab"), min_size=1, max_size=4))
def test_soundness_on_concatenations(u, v):
    S = load_fixture("ex3_concat.rs")
    g = goal(S, f"C {' '.join(u)} , {' '.join(v)} , {' '.join(u + v)}")
    r = derive(S, g, BUDGET)
    assert r and check_rderivation(r.derivation, S)
