import itertools
from functools import lru_cache
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from derivus.engine import DerivationBudget, check_rderivation, derive
from derivus.formats import load_fixture
from derivus.special import (
    BoundOverflow, ComplexityProfile, NotSpecial, decide, derivation_length_bound, gamma, goal_size, inst,
    is_special, profile,
)
from derivus.syntax import Const, Var, list_vars, parse_formula, sbl

AUTOMATON = load_fixture("ex6_automaton.rs")
CHOMSKY = load_fixture("ex7_chomsky.rs")


def test_special_recognition():
    assert is_special(AUTOMATON)
    assert is_special(CHOMSKY)
    rep = is_special(load_fixture("ex2_reverse.rs"))
    assert not rep and any("equation" in p for p in rep.problems)


def test_gamma_values():
    assert gamma(5, 3) == 6
    assert gamma(7, 0) == 0
    assert gamma(3, 7) == gamma(3, 3) == 2


def test_bound_on_automaton_profile():
    prof = profile(AUTOMATON)
    assert prof == ComplexityProfile(k=1, alpha=1, rho=2, basis_size=10)
    assert derivation_length_bound(prof, 4) == 220


def test_bound_with_no_variables():
    assert derivation_length_bound(ComplexityProfile(0, 2, 3, 5), 9) == 15


def test_bound_is_monotone():
    prof = profile(CHOMSKY)
    values = [derivation_length_bound(prof, n) for n in range(1, 21)]
    assert values == sorted(values)


def test_bound_overflow_detected():
    prof = ComplexityProfile(k=3, alpha=4, rho=3, basis_size=12)
    with pytest.raises(BoundOverflow):
        derivation_length_bound(prof, 40, cap=10 ** 12)
    assert derivation_length_bound(prof, 40) > 10 ** 12


def g(sysm, text):
    return parse_formula(text, sysm.table)


def test_decide_examples():
    d = decide(AUTOMATON, g(AUTOMATON, "A 1 0 0 1"))
    assert d and check_rderivation(d.derivation, AUTOMATON)
    assert not decide(AUTOMATON, g(AUTOMATON, "A 1 0"))
    d = decide(CHOMSKY, g(CHOMSKY, "L a + a"))
    assert d and check_rderivation(d.derivation, CHOMSKY)


def test_decide_rejects_non_special():
    S = load_fixture("ex2_reverse.rs")
    with pytest.raises(NotSpecial):
        decide(S, g(S, "W a"))


def test_decide_rejects_variable_goal():
    with pytest.raises(ValueError):
        decide(AUTOMATON, g(AUTOMATON, "A x1"))


@lru_cache(maxsize=None)
def in_language(s: str) -> bool:
    # L -> a | [ L ] | L + L | L * L
    if s == "a":
        return True
    if len(s) >= 3 and s[0] == "[" and s[-1] == "]" and in_language(s[1:-1]):
        return True
    return any(s[i] in "+*" and in_language(s[:i]) and in_language(s[i + 1:]) for i in range(1, len(s) - 1))


def test_chomsky_system_matches_grammar():
    for n in range(1, 6):
        for s in itertools.product("a[]+*", repeat=n):
            text = "".join(s)
            assert bool(decide(CHOMSKY, g(CHOMSKY, "L " + " ".join(s)))) == in_language(text), text


def test_chomsky_decide_agrees_with_bounded_derive():
    prof = profile(CHOMSKY)
    for n in range(1, 5):
        for s in itertools.product("a[]+*", repeat=n):
            goal = g(CHOMSKY, "L " + " ".join(s))
            bound = derivation_length_bound(prof, n)
            r = derive(CHOMSKY, goal, DerivationBudget(max_rounds=bound, max_pool=10 ** 6, max_len=n))
            assert bool(r) == bool(decide(CHOMSKY, goal))


def brute_inst(mu, lam):
    """Every assignment of contiguous nonempty slices of lam to the variables of mu that yields lam."""
    vs = sorted(list_vars(mu))
    slices = {lam[i:j] for i in range(len(lam)) for j in range(i + 1, len(lam) + 1)}
    out = []
    for vals in itertools.product(sorted(slices, key=repr), repeat=len(vs)):
        r = mu
        for v, val in zip(vs, vals):
            r = sbl(r, val, v)
        if r == lam:
            out.append(dict(zip(vs, vals)))
    return out


def test_instance_count_bound_exhaustive():
    letters = (Const("a"), Const("b"))
    items = (Const("a"), Var(1), Var(2), Var(3))
    mus = [m for n in range(1, 4) for m in itertools.product(items, repeat=n) if list_vars(m)]
    for n in range(1, 7):
        for lam in itertools.product(letters, repeat=n):
            for mu in mus:
                found = inst(mu, lam)
                assert len(found) <= comb(n - 1, len(list_vars(mu)) - 1)
                if n <= 4:
                    canon = lambda sigmas: {frozenset(s.items()) for s in sigmas}
                    assert canon(found) == canon(brute_inst(mu, lam))


@given(st.lists(st.sampled_from("01"), min_size=1, max_size=10))
def test_decided_derivations_respect_bound(bits):
    goal = g(AUTOMATON, "A " + " ".join(bits))
    d = decide(AUTOMATON, goal)
    assert bool(d) == (bits.count("0") % 2 == 0 and bits.count("1") % 2 == 0)
    if d:
        assert check_rderivation(d.derivation, AUTOMATON)
        assert len(d.derivation) <= derivation_length_bound(profile(AUTOMATON), goal_size(goal))


def test_decide_is_pure():
    goal = g(AUTOMATON, "A 0 1 1 0")
    first = decide(AUTOMATON, goal)
    decide(AUTOMATON, g(AUTOMATON, "A 1 1"))
    assert decide(AUTOMATON, goal).derivation == first.derivation
