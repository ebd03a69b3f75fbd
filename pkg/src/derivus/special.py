"""Special recursive systems: recognition, complexity bounds and a terminating decision procedure."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .engine import AxiomBasis, Emitter, RecursiveSystem, apply_sigma, match_args, match_list
from .syntax import (
    Eq, is_elementary, is_prime, list_vars, prime_args, primes, r_split, render_formula, render_list,
    sublists, symbol_count,
)


class NotSpecial(ValueError):
    pass


class BoundOverflow(ArithmeticError):
    pass


@dataclass(frozen=True)
class SpecialReport:
    special: bool
    problems: tuple = ()

    def __bool__(self) -> bool:
        return self.special


def is_special(sys: RecursiveSystem) -> SpecialReport:
    problems = []
    for i, f in enumerate(sys.basis):
        prem, concl = r_split(f)
        if any(isinstance(p, Eq) for p in prem + [concl]):
            problems.append(f"axiom {i + 1} contains an equation")
            continue
        subs = set()
        for a in prime_args(concl):
            subs |= sublists(a)
        for p in prem:
            for a in prime_args(p):
                if a not in subs:
                    problems.append(f"axiom {i + 1}: premise list {render_list(a)} is not a sublist of the conclusion")
    return SpecialReport(not problems, tuple(problems))


@dataclass(frozen=True)
class ComplexityProfile:
    k: int
    alpha: int
    rho: int
    basis_size: int


def profile(sys: RecursiveSystem) -> ComplexityProfile:
    k = alpha = rho = 0
    for f in sys.basis:
        ps = list(primes(f))
        rho = max(rho, len(ps))
        for p in ps:
            args = prime_args(p)
            alpha = max(alpha, len(args))
            for a in args:
                k = max(k, len(list_vars(a)))
    return ComplexityProfile(k, alpha, rho, len(sys.basis))


def gamma(n: int, k: int) -> int:
    if k <= 0 or n <= 0:
        return 0
    return max(comb(n - 1, j - 1) for j in range(1, min(k, n) + 1))


def derivation_length_bound(prof: ComplexityProfile, n: int, cap: Optional[int] = None) -> int:
    """Exact value of the length bound; raises BoundOverflow above cap."""
    inner = prof.alpha * (n * (n + 1) // 2) * gamma(n, prof.k)
    if cap is not None and inner > 1 and prof.alpha * inner.bit_length() > cap.bit_length() + 64:
        raise BoundOverflow("length bound exceeds the cap")
    value = prof.basis_size * prof.rho * (1 + prof.alpha * prof.k * inner ** prof.alpha)
    if cap is not None and value > cap:
        raise BoundOverflow(f"length bound {value} exceeds the cap {cap}")
    return value


def inst(mu, lam) -> list:
    """All assignments of nonempty lists to the variables of mu turning it into lam."""
    return list(match_list(mu, lam, {}))


@dataclass
class Decision:
    derivable: bool
    derivation: Optional[list] = None
    facts: int = 0

    def __bool__(self) -> bool:
        return self.derivable


def goal_size(goal) -> int:
    return max((symbol_count(a) for a in prime_args(goal)), default=0)


def decide(sys: RecursiveSystem, goal) -> Decision:
    """Decide derivability of an elementary prime formula in a special system.

    Starting from the goal, every basis axiom whose conclusion matches a
    pending formula is instantiated; in a special system that grounds all
    premises, and their argument lists are sublists of the goal's lists, so
    the exploration is finite.  The collected ground implications are then
    closed under modus ponens until nothing new appears.
    """
    rep = is_special(sys)
    if not rep:
        raise NotSpecial("; ".join(rep.problems))
    if not is_prime(goal) or isinstance(goal, Eq) or not is_elementary(goal):
        raise ValueError("goal must be an elementary prime formula without equations")
    by_head: dict = {}
    for idx, f in enumerate(sys.basis):
        prem, concl = r_split(f)
        by_head.setdefault((concl.name, len(concl.args)), []).append((idx, prem, concl))

    instances = []
    seen = {goal}
    queue = [goal]
    while queue:
        g = queue.pop()
        for idx, prem, concl in by_head.get((g.name, len(g.args)), ()):
            for sigma in match_args(concl.args, g.args, {}):
                ps = tuple(apply_sigma(p, sigma) for p in prem)
                instances.append((idx, tuple(sorted(sigma.items())), ps, g))
                for p in ps:
                    if p not in seen:
                        seen.add(p)
                        queue.append(p)
    instances.sort(key=lambda t: (t[0], render_formula(t[3]), repr(t[1])))

    facts: dict = {}
    changed = True
    while changed:
        changed = False
        for idx, sigma, ps, c in instances:
            if c not in facts and all(p in facts for p in ps):
                facts[c] = (idx, sigma, ps)
                changed = True
    if goal not in facts:
        return Decision(False, None, len(facts))
    em = Emitter()
    _emit(goal, facts, sys, em, {})
    return Decision(True, em.steps, len(facts))


def _emit(f, facts, sys, em: Emitter, done: dict) -> int:
    stack = [(f, False)]
    while stack:
        g, ready = stack.pop()
        if g in done:
            continue
        idx, sigma, ps = facts[g]
        if not ready:
            stack.append((g, True))
            for p in reversed(ps):
                if p not in done:
                    stack.append((p, False))
            continue
        i = em.add(sys.basis[idx], AxiomBasis(idx))
        i = em.instantiate(i, dict(sigma))
        for p in ps:
            i = em.mp(done[p], i)
        done[g] = i
    return done[f]
