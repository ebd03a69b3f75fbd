"""Sweep the decision procedure over every input string up to a length.

For the four-state automaton the reference answer is the parity rule (even
count of 0s and of 1s); for the bracket grammar it is a direct recursive
recognizer.  Every query is also run through bounded saturation with the
length bound as its round budget.

    python3 scripts/automaton_sweep.py --max-len 8
    python3 scripts/automaton_sweep.py --system chomsky --max-len 4
"""
from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

from derivus.engine import DerivationBudget, derive
from derivus.formats import load_fixture
from derivus.special import decide, derivation_length_bound, goal_size, profile
from derivus.syntax import parse_formula


@dataclass
class SweepConfig:
    system: str = "automaton"
    max_len: int = 8
    check_derive: bool = True
    pool: int = 10 ** 6


@lru_cache(maxsize=None)
def in_language(s: str) -> bool:
    if s == "a":
        return True
    if len(s) >= 3 and s[0] == "[" and s[-1] == "]" and in_language(s[1:-1]):
        return True
    return any(s[i] in "+*" and in_language(s[:i]) and in_language(s[i + 1:]) for i in range(1, len(s) - 1))


SETUPS = {
    "automaton": ("ex6_automaton.rs", "A", "01", lambda s: s.count("0") % 2 == 0 and s.count("1") % 2 == 0),
    "chomsky": ("ex7_chomsky.rs", "L", "a[]+*", in_language),
}


def sweep(cfg: SweepConfig) -> None:
    fixture, pred, alphabet, oracle = SETUPS[cfg.system]
    S = load_fixture(fixture)
    prof = profile(S)
    print(f"{fixture}: k={prof.k} alpha={prof.alpha} rho={prof.rho} basis={prof.basis_size}")
    print(f"{'n':>3} {'queries':>8} {'yes':>6} {'oracle':>7} {'derive':>7} {'bound':>8} {'longest':>8} {'sec':>7}")
    for n in range(1, cfg.max_len + 1):
        t = time.perf_counter()
        yes = oracle_bad = derive_bad = longest = 0
        bound = derivation_length_bound(prof, n)
        words = list(itertools.product(alphabet, repeat=n))
        for w in words:
            goal = parse_formula(f"{pred} " + " ".join(w), S.table)
            d = decide(S, goal)
            yes += bool(d)
            oracle_bad += bool(d) != oracle("".join(w))
            if d:
                longest = max(longest, len(d.derivation))
            if cfg.check_derive:
                r = derive(S, goal, DerivationBudget(max_rounds=bound, max_pool=cfg.pool, max_len=goal_size(goal)))
                derive_bad += bool(r) != bool(d)
        dt = time.perf_counter() - t
        print(f"{n:>3} {len(words):>8} {yes:>6} {oracle_bad:>7} {derive_bad if cfg.check_derive else '-':>7} "
              f"{bound:>8} {longest:>8} {dt:>7.2f}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--system", choices=sorted(SETUPS), default="automaton")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--no-derive", action="store_true", help="skip the bounded saturation comparison")
    a = p.parse_args()
    sweep(SweepConfig(a.system, a.max_len, not a.no_derive))


if __name__ == "__main__":
    main()
