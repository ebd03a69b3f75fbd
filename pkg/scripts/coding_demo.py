"""Walk through the coding alphabet: encode a system, classify statements, diagonalize,
and search a few facts inside the universal system.

    python3 scripts/coding_demo.py
"""
from __future__ import annotations

import time

from derivus.codec import (
    build_s11, classify, code_to_list, decode_rsystem, diag, encode_list, encode_rsystem, is_s11_theorem,
    parse_code, positional_table, render_ascii, render_unicode,
)
from derivus.engine import DerivationBudget, derive
from derivus.formats import fixture_path, load_fixture, render_system
from derivus.syntax import Pred, Var, parse_formula, parse_list, sbl


def code(name):
    return parse_code(fixture_path(name).read_text(encoding="utf-8"))


def main() -> None:
    S = load_fixture("s2_ex1.rs")
    rb = encode_rsystem(S)
    print("system:\n" + render_system(S))
    print("R-basis  ", render_ascii(rb))
    print("unicode  ", render_unicode(rb))
    print("decoded with positional names:\n" + render_system(decode_rsystem(rb)))

    P = code("s2_ex2.p11")
    for suffix in ["a'a''", "a'a''a'a''", "a'a''a''", "a'''"]:
        c = P + parse_code(suffix)
        st = classify(c)
        v = is_s11_theorem(c)
        print(f"P {suffix:<12} arity {st.arity}  {v.status}")

    Q = code("s2_ex3.p11")
    d = diag(Q)
    st = classify(d)
    print(f"diag of {render_ascii(Q)}: {len(d)} symbols, statement of arity {st.arity}")

    # the substitution predicate of the universal system against direct substitution
    U = build_s11()
    table = positional_table(2, 0)
    enc = lambda lam: code_to_list(encode_list(lam, table))
    two = code_to_list(parse_code("''"))
    budget = DerivationBudget(max_rounds=10, max_pool=20_000)
    for lam_t, mu_t in [("x1 a1", "a2"), ("x1 a1 x1", "a1 a2"), ("a2 x2", "x1")]:
        lam, mu = parse_list(lam_t, table), parse_list(mu_t, table)
        x = sorted(v.index for v in lam if isinstance(v, Var))[-1]
        res = sbl(lam, mu, x)
        goal = Pred("SbL", (enc(lam), enc(mu), enc((Var(x),)), enc(res), two))
        t = time.perf_counter()
        r = derive(U, goal, budget)
        print(f"SbL {lam_t} [{mu_t}/x{x}] = {' '.join(map(str, res))}: "
              f"{'derived in ' + str(len(r.derivation)) + ' steps' if r else 'unknown'} ({time.perf_counter() - t:.2f}s)")
    for text in ["Acc ' ' '", "L v ' , □"]:
        r = derive(U, parse_formula(text, U.table), budget)
        print(f"{text}: {'derived' if r else 'unknown'}")


if __name__ == "__main__":
    main()
