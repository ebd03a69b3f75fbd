"""Acceptance run: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they happen;
they are also repeated in the terminal summary.  `python3 tests/test_acceptance.py`
runs the same checks without pytest.
"""
from __future__ import annotations

import itertools
import random
import sys
import time
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from derivus.codec import (  # noqa: E402
    decode_formula_a17, decode_rsystem, diag, encode_formula_a17, encode_rsystem, is_s11_theorem,
    parse_code,
)
from derivus.engine import FRESH_BASE, DerivationBudget, check_rderivation, derive  # noqa: E402
from derivus.formats import fixture_path, load_fixture  # noqa: E402
from derivus.kernel import (  # noqa: E402
    AllLists, Atom, PropAxiom, abstract, check_proof, chi_lint, chi_sign, identically_true, load_math_system,
    load_proof, parse_proof, sign_support,
)
from derivus.models import equivalent  # noqa: E402
from derivus.special import decide, derivation_length_bound, goal_size, inst, profile  # noqa: E402
from derivus.syntax import (  # noqa: E402
    And, Const, Iff, Impl, Neg, Or, Var, cf, free_vars, list_vars, parse_formula, sbf, sbl, sublists, subformulas,
)
from derivus.transformers import (  # noqa: E402
    CollapseToAtoms, CollapseToVariables, ConstantsToVars, EraseOpTerms, deduction_map, is_prenex, prenex,
    relativize_body, zhom_apply,
)

from strategies import random_fo_formula, random_list, random_numeral, random_pa_formula  # noqa: E402

RESULTS: dict = {}

SYSTEMS = ["ex1_empty.rs", "ex2_reverse.rs", "ex3_concat.rs", "ex4_arith.rs", "ex5_numbers.rs",
           "ex6_automaton.rs", "ex7_cfg.rs"]
PROOF_FIXTURES = {
    "k_ex1.rs": ["k_ex1.proof", "k_ex2.proof", "k_ex1_corrupt.proof", "d_phi_only.proof", "d_mp.proof",
                 "d_gen.proof", "d_induction.proof", "d_exists.proof", "d_eq.proof"],
    "k_ex3.rs": ["k_ex3.proof", "d_n_induction.proof"],
    "z_rel.rs": ["z_opterm.proof", "z_concat.proof", "z_induction.proof", "z_equality.proof", "z_conj.proof"],
    "k_ex1_f.ms": ["k_ex1_f.proof"],
    "pa.ms": ["pa_zero.proof"],
}


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def rows(name):
    out = []
    for line in fixture_path(name).read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            out.append(line.split("\t"))
    return out


def system(name):
    return load_math_system(fixture_path(name))


# ---------------------------------------------------------------- 1

def test_criterion_01_derivability_fixtures():
    budget = DerivationBudget(max_rounds=8, max_pool=10_000)
    failures, slowest = [], 0.0
    for fixture, text in [("ex2_reverse.rs", "~ f ( a b a a b ) , b a a b a"),
                          ("ex2_reverse.rs", "W f ( a a b ) b a"),
                          ("ex5_numbers.rs", "~ * ( + ( □ ) s ( s ( 0 ) □ ) 1 ) , 0")]:
        S = load_fixture(fixture)
        goal = parse_formula(text, S.table)
        t = time.perf_counter()
        r = derive(S, goal, budget)
        dt = time.perf_counter() - t
        slowest = max(slowest, dt)
        if not (r and r.derivation[-1].formula == goal and check_rderivation(r.derivation, S) and dt < 10):
            failures.append(text)
    P = parse_code(fixture_path("s2_ex2.p11").read_text(encoding="utf-8"))
    for code in (P + parse_code("a'a''"), parse_code(fixture_path("s2_ex2_binary.s11").read_text(encoding="utf-8"))):
        t = time.perf_counter()
        v = is_s11_theorem(code, budget)
        slowest = max(slowest, time.perf_counter() - t)
        if not (v and v.engine == "decode"):
            failures.append(str(code))
    report(1, not failures, f"5 goals, slowest {slowest:.2f}s, failures {failures}")


# ---------------------------------------------------------------- 2 and 3

AUTOMATON = "ex6_automaton.rs"


def automaton_queries():
    S = load_fixture(AUTOMATON)
    for n in range(1, 9):
        for bits in itertools.product("01", repeat=n):
            yield S, bits, parse_formula("A " + " ".join(bits), S.table)


def test_criterion_02_decider_matches_characterization():
    t = time.perf_counter()
    S = load_fixture(AUTOMATON)
    prof = profile(S)
    count, wrong, disagree = 0, [], []
    for S, bits, goal in automaton_queries():
        count += 1
        d = bool(decide(S, goal))
        if d != (bits.count("0") % 2 == 0 and bits.count("1") % 2 == 0):
            wrong.append("".join(bits))
        n = goal_size(goal)
        r = derive(S, goal, DerivationBudget(max_rounds=derivation_length_bound(prof, n), max_pool=10 ** 6, max_len=n))
        if bool(r) != d:
            disagree.append("".join(bits))
    dt = time.perf_counter() - t
    report(2, count == 510 and not wrong and not disagree and dt < 60,
           f"{count} strings, {len(wrong)} wrong, {len(disagree)} decide/derive disagreements, {dt:.1f}s")


def test_criterion_03_length_bound_and_counting_lemmas():
    S = load_fixture(AUTOMATON)
    prof = profile(S)
    over, worst = [], 0.0
    for S, bits, goal in automaton_queries():
        d = decide(S, goal)
        if d:
            b = derivation_length_bound(prof, goal_size(goal))
            worst = max(worst, len(d.derivation) / b)
            if len(d.derivation) > b or not check_rderivation(d.derivation, S):
                over.append("".join(bits))
    letters = (Const("a"), Const("b"))
    items = (Const("a"), Var(1), Var(2), Var(3))
    mus = [m for k in range(1, 4) for m in itertools.product(items, repeat=k) if list_vars(m)]
    bad_sub, bad_inst, lists = 0, 0, 0
    for n in range(1, 7):
        for lam in itertools.product(letters, repeat=n):
            lists += 1
            subs = sublists(lam)
            if subs != {lam[i:j] for i in range(n) for j in range(i + 1, n + 1)} or len(subs) > n * (n + 1) // 2:
                bad_sub += 1
            for mu in mus:
                if len(inst(mu, lam)) > comb(n - 1, len(list_vars(mu)) - 1):
                    bad_inst += 1
    report(3, not over and not bad_sub and not bad_inst,
           f"{len(over)} derivations over the bound (worst ratio {worst:.3f}); {lists} lists, "
           f"{bad_sub} sublist-count and {bad_inst} instance-count violations")


# ---------------------------------------------------------------- 4

def fixture_formulas():
    for sysname, proofs in PROOF_FIXTURES.items():
        M = system(sysname)
        for f in M.sys.basis + M.extra:
            yield f, M.table
        for p in proofs:
            for st in load_proof(fixture_path(p), M.table):
                yield st.formula, M.table
    for name in SYSTEMS + ["ex7_chomsky.rs", "s2_ex1.rs"]:
        S = load_fixture(name)
        for f in S.basis:
            yield f, S.table


def test_criterion_04_codec_golden_files():
    read = lambda n: parse_code(fixture_path(n).read_text(encoding="utf-8"))
    enc_ok = encode_rsystem(load_fixture("s2_ex1.rs")) == read("s2_ex1.rbasis")
    diag_ok = diag(read("s2_ex3.p11")) == read("s2_ex3.diag")
    rt_sys = [n for n in SYSTEMS if decode_rsystem(encode_rsystem(load_fixture(n)), load_fixture(n).table) != load_fixture(n)]
    total, rt_f = 0, 0
    for f, table in fixture_formulas():
        total += 1
        if decode_formula_a17(encode_formula_a17(f, table), table) != f:
            rt_f += 1
    report(4, enc_ok and diag_ok and not rt_sys and not rt_f,
           f"R-basis golden {enc_ok}, diag golden {diag_ok}, {7 - len(rt_sys)}/7 systems and "
           f"{total - rt_f}/{total} formulas round-trip")


# ---------------------------------------------------------------- 5

def test_criterion_05_worked_proofs_and_mutations():
    lengths = {}
    for sysname, name, n in [("k_ex1.rs", "k_ex1.proof", 16), ("k_ex1.rs", "k_ex2.proof", 3), ("k_ex3.rs", "k_ex3.proof", 28)]:
        M = system(sysname)
        steps = load_proof(fixture_path(name), M.table)
        lengths[name] = (len(steps) == n) and bool(check_proof(steps, M))
    caught = 0
    muts = rows("k_mutations.tsv")
    for name, step, repl, code in muts:
        M = system("k_ex3.rs" if name.startswith("k_ex3") else "k_ex1.rs")
        text = fixture_path(name).read_text(encoding="utf-8")
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        lines[int(step) - 1] = repl
        v = check_proof(parse_proof("\n".join(lines), M.table), M)
        caught += (not v) and v.step + 1 == int(step) and v.code == code
    report(5, all(lengths.values()) and caught == len(muts) == 20,
           f"worked proofs {lengths}; {caught}/{len(muts)} mutations rejected at the mutated step")


# ---------------------------------------------------------------- 6

def test_criterion_06_deduction_theorem():
    ok, cases, induction = 0, rows("deduction_cases.tsv"), False
    for sysname, name, phi in cases:
        M = system(sysname)
        phi = parse_formula(phi, M.table)
        script = load_proof(fixture_path(name), M.table)
        induction |= any(type(s.just).__name__ == "Induction" for s in script)
        steps, where = deduction_map(phi, script, M, AllLists())
        forms = [s.formula for s in steps]
        ok += bool(check_proof(steps, M)) and all(Impl(phi, s.formula) in forms for s in script)
    report(6, ok == len(cases) == 10 and induction, f"{ok}/{len(cases)} scripts, induction script included: {induction}")


# ---------------------------------------------------------------- 7

Z_SPECS = [EraseOpTerms(), CollapseToAtoms(), CollapseToVariables(),
           ConstantsToVars((("a", FRESH_BASE), ("b", FRESH_BASE + 1)))]


def test_criterion_07_z_homomorphisms():
    M = system("z_rel.rs")
    proofs = PROOF_FIXTURES["z_rel.rs"]
    images = 0
    for spec in Z_SPECS:
        for name in proofs:
            script = load_proof(fixture_path(name), M.table)
            images += bool(check_proof(zhom_apply(spec, script, M), M, spec.target(AllLists())))
    broken = {}
    for spec in Z_SPECS:
        rng = random.Random(FRESH_BASE)
        bad = 0
        for _ in range(1000):
            lam = random_list(rng, max_var=4, size=4)
            mu = random_list(rng, max_var=4, size=3)
            x = rng.randint(1, 4)
            zh1 = spec.image((Var(x),)) == (Var(x),)
            zh2 = x in spec.Z or spec.image(sbl(lam, mu, x)) == sbl(spec.image(lam), spec.image(mu), x)
            zh3 = list_vars(spec.image(mu)) <= list_vars(mu) | spec.Z
            bad += not (zh1 and zh2 and zh3)
        broken[spec.kind] = bad
    want = len(Z_SPECS) * len(proofs)
    report(7, images == want and not any(broken.values()),
           f"{images}/{want} proof images verify; law violations per map {broken}")


# ---------------------------------------------------------------- 8

def test_criterion_08_sign_consistency():
    checked, negative = 0, 0
    for sysname, proofs in PROOF_FIXTURES.items():
        M = system(sysname)
        if not M.basis_is_recursive:
            continue
        support = sign_support(M.sys)
        for name in proofs:
            steps = load_proof(fixture_path(name), M.table)
            if not check_proof(steps, M):
                continue
            checked += 1
            negative += sum(chi_sign(s.formula, M, support) != 1 for s in steps)
    M = system("k_ex1.rs")
    corrupt = load_proof(fixture_path("k_ex1_corrupt.proof"), M.table)
    flagged = any(f.code == "contradiction" for f in chi_lint(corrupt, M))
    report(8, checked >= 8 and negative == 0 and flagged,
           f"{checked} verified proofs, {negative} steps with sign -1; seeded pair flagged: {flagged}")


# ---------------------------------------------------------------- 9

def _truth_table(alpha, j):
    def ev(g, row):
        if isinstance(g, Atom):
            return row[g.index - 1]
        if isinstance(g, Neg):
            return not ev(g.body, row)
        a, b = ev(g.left, row), ev(g.right, row)
        return {Impl: (not a) or b, Iff: a == b, And: a and b, Or: a or b}[type(g)]
    return all(ev(alpha, row) for row in itertools.product((False, True), repeat=j))


def _skeletons():
    leaves = [Atom(i) for i in range(1, 5)]
    level1 = leaves + [Neg(a) for a in leaves] + [c(a, b) for c in (Impl, Iff, And, Or) for a in leaves for b in leaves]
    out = list(level1) + [Neg(a) for a in level1]
    for c in (Impl, Iff, Or):
        out += [c(a, b) for a in level1 for b in level1[:50]]
    return out


def test_criterion_09_tautology_recognizer():
    family = _skeletons()
    disagree = sum(identically_true(a, 4) != _truth_table(a, 4) for a in family)
    worked = []
    for sysname, name, step in [("k_ex1.rs", "k_ex1.proof", 9), ("k_ex3.rs", "k_ex3.proof", 7)]:
        M = system(sysname)
        st = load_proof(fixture_path(name), M.table)[step - 1]
        skel, atoms = abstract(st.formula)
        worked.append(isinstance(st.just, PropAxiom) and identically_true(skel, len(atoms))
                      and _truth_table(skel, len(atoms)))
    report(9, len(family) >= 10_000 and disagree == 0 and all(worked),
           f"{len(family)} skeletons over 4 atoms, {disagree} disagreements; worked steps {worked}")


# ---------------------------------------------------------------- 10

def test_criterion_10_prenex():
    rng = random.Random(2024)
    bad_shape, mismatch = 0, 0
    for _ in range(200):
        F = random_fo_formula(rng, quants=3, npreds=3)
        G = prenex(F)
        if not is_prenex(G) or any(isinstance(g, (Iff, And, Or)) for g in subformulas(G)):
            bad_shape += 1
        if free_vars(G) != free_vars(F) or not equivalent(F, G, max_domain=3):
            mismatch += 1
    report(10, bad_shape == 0 and mismatch == 0,
           f"200 formulas, {bad_shape} not in prefix form, {mismatch} model mismatches (domains 1-3)")


# ---------------------------------------------------------------- 11

def test_criterion_11_relativization():
    rng = random.Random(52)
    bad = 0
    for _ in range(1000):
        F = random_pa_formula(rng)
        lam = (random_numeral(rng, max_var=3, depth=3),)
        x = rng.randint(1, 3)
        same_cf = cf(F, lam, x) == cf(relativize_body(F), lam, x)
        commutes = relativize_body(sbf(F, lam, x)) == sbf(relativize_body(F), lam, x)
        bad += not (same_cf and commutes)
    report(11, bad == 0, f"1000 triples, {bad} violations")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
