"""Recursive systems: equality axioms, derivation checking, saturation search and
the symbol-projection and equation-elimination constructions."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from .syntax import (
    Eq, Impl, Op, Pred, SymbolTable, Var, check_symbols, is_prime, is_rformula, map_lists, occurrences, prime_args, primes, r_split, rchain, render_list, replace_at,
    sbf, sublists, symbol_count, var_of,
)

FRESH_BASE = 10000
STAR_EQ = "~*"


@dataclass(frozen=True)
class RecursiveSystem:
    table: SymbolTable
    basis: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        for i, f in enumerate(self.basis):
            if not is_rformula(f):
                raise ValueError(f"basis axiom {i + 1} is not an R-formula: {f}")
            check_symbols(f, self.table)


# ---------------------------------------------------------------- derivations

@dataclass(frozen=True)
class AxiomEq:
    def __str__(self) -> str:
        return "axiom-eq"


@dataclass(frozen=True)
class AxiomBasis:
    index: int  # 0-based into the basis

    def __str__(self) -> str:
        return f"basis {self.index + 1}"


@dataclass(frozen=True)
class ModusPonens:
    minor: int  # step holding F
    major: int  # step holding -> F G

    def __str__(self) -> str:
        return f"mp {self.minor + 1} {self.major + 1}"


@dataclass(frozen=True)
class Subst:
    source: int
    var: int
    value: tuple

    def __str__(self) -> str:
        return f"subst {self.source + 1} x{self.var} := {render_list(self.value)}"


@dataclass(frozen=True)
class Step:
    formula: object
    just: object


@dataclass(frozen=True)
class Verdict:
    ok: bool
    step: Optional[int] = None  # 0-based failing step
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "accept"
        return f"reject at step {self.step + 1}: {self.reason}"


def _single_var(lam) -> Optional[int]:
    if len(lam) == 1 and isinstance(lam[0], Var):
        return lam[0].index
    return None


def is_equality_raxiom(f, predicates=None) -> bool:
    """Recognize the three equality schemes; predicates restricts the congruence scheme."""
    if isinstance(f, Eq):
        x = _single_var(f.lhs)
        return x is not None and f.lhs == f.rhs
    if not isinstance(f, Impl):
        return False
    # reflexivity-free replacement scheme
    if isinstance(f.right, Impl) and isinstance(f.right.left, Eq) and isinstance(f.right.right, Eq):
        mid = f.right.left
        x, y = _single_var(mid.lhs), _single_var(mid.rhs)
        if x is not None and y is not None and f.left == sbf(f.right.right, (Var(x),), y):
            return True
    # congruence scheme
    prem, concl = r_split(f)
    if not isinstance(concl, Pred) or len(prem) < 2:
        return False
    n = len(prem) - 1
    last = prem[-1]
    if not isinstance(last, Pred) or last.name != concl.name or len(last.args) != n or len(concl.args) != n:
        return False
    if predicates is not None and concl.name not in predicates:
        return False
    for e, a, b in zip(prem[:-1], last.args, concl.args):
        if not isinstance(e, Eq) or e.lhs != a or e.rhs != b:
            return False
        if _single_var(a) is None or _single_var(b) is None:
            return False
    return True


def check_rderivation(steps, sys: RecursiveSystem) -> Verdict:
    seen: list = []
    preds = set(sys.table.predicates)
    basis = sys.basis
    for i, st in enumerate(steps):
        f, j = st.formula, st.just
        if not is_rformula(f):
            return Verdict(False, i, "not an R-formula")
        try:
            check_symbols(f, sys.table)
        except ValueError as e:
            return Verdict(False, i, str(e))
        if isinstance(j, AxiomEq):
            if not is_equality_raxiom(f, preds):
                return Verdict(False, i, "not an equality axiom")
        elif isinstance(j, AxiomBasis):
            if not 0 <= j.index < len(basis) or basis[j.index] != f:
                return Verdict(False, i, "not the cited basis axiom")
        elif isinstance(j, ModusPonens):
            if not (0 <= j.minor < i and 0 <= j.major < i):
                return Verdict(False, i, "modus ponens cites a later or missing step")
            major = seen[j.major]
            if not isinstance(major, Impl) or major.left != seen[j.minor] or major.right != f:
                return Verdict(False, i, "modus ponens premises do not match")
        elif isinstance(j, Subst):
            if not 0 <= j.source < i:
                return Verdict(False, i, "substitution cites a later or missing step")
            if sbf(seen[j.source], j.value, j.var) != f:
                return Verdict(False, i, "substitution result differs")
        else:
            return Verdict(False, i, f"unknown justification {j!r}")
        seen.append(f)
    return Verdict(True)


# ---------------------------------------------------------------- matching

def match_list(pat, target, sigma: dict) -> Iterator[dict]:
    """Associative matching of a list pattern against a list; variables bind nonempty lists."""
    if not pat:
        if not target:
            yield sigma
        return
    head = pat[0]
    rest = pat[1:]
    if isinstance(head, Var):
        val = sigma.get(head.index)
        if val is not None:
            k = len(val)
            if target[:k] == val:
                yield from match_list(rest, target[k:], sigma)
            return
        for k in range(1, len(target) - len(rest) + 1):
            s2 = dict(sigma)
            s2[head.index] = target[:k]
            yield from match_list(rest, target[k:], s2)
    elif not target:
        return
    elif isinstance(head, Op):
        t0 = target[0]
        if isinstance(t0, Op) and t0.name == head.name:
            for s2 in match_list(head.args, t0.args, sigma):
                yield from match_list(rest, target[1:], s2)
    elif target[0] == head:
        yield from match_list(rest, target[1:], sigma)


def match_args(pats, targets, sigma: dict) -> Iterator[dict]:
    if not pats:
        yield sigma
        return
    for s2 in match_list(pats[0], targets[0], sigma):
        yield from match_args(pats[1:], targets[1:], s2)


def match_prime(pat, fact, sigma: dict) -> Iterator[dict]:
    if isinstance(pat, Eq):
        if isinstance(fact, Eq):
            yield from match_args((pat.lhs, pat.rhs), (fact.lhs, fact.rhs), sigma)
    elif isinstance(fact, Pred) and fact.name == pat.name and len(fact.args) == len(pat.args):
        yield from match_args(pat.args, fact.args, sigma)


def match_formula(pat, f, sigma: dict) -> Iterator[dict]:
    if is_prime(pat):
        yield from match_prime(pat, f, sigma)
    elif isinstance(pat, Impl) and isinstance(f, Impl):
        for s2 in match_formula(pat.left, f.left, sigma):
            yield from match_formula(pat.right, f.right, s2)


def apply_sigma(f, sigma: dict):
    """Simultaneous substitution of lists for variables."""
    def on_list(lam):
        out = []
        for it in lam:
            if isinstance(it, Var) and it.index in sigma:
                out.extend(sigma[it.index])
            elif isinstance(it, Op):
                out.append(Op(it.name, on_list(it.args)))
            else:
                out.append(it)
        return tuple(out)
    if isinstance(f, tuple):
        return on_list(f)
    return map_lists(f, on_list)


def _key(f) -> str:
    return str(f)


def _pred_key(f):
    return ("~", 2) if isinstance(f, Eq) else (f.name, len(f.args))


# ---------------------------------------------------------------- derivation emission

class Emitter:
    """Builds a derivation step list, reusing steps for formulas already present."""

    def __init__(self):
        self.steps: list = []
        self.index: dict = {}

    def add(self, f, just) -> int:
        k = self.index.get(f)
        if k is not None:
            return k
        self.steps.append(Step(f, just))
        self.index[f] = len(self.steps) - 1
        return len(self.steps) - 1

    def formula(self, i: int):
        return self.steps[i].formula

    def subst(self, i: int, var: int, value) -> int:
        f = self.formula(i)
        g = sbf(f, value, var)
        if g == f:
            return i
        return self.add(g, Subst(i, var, tuple(value)))

    def mp(self, minor: int, major: int) -> int:
        g = self.formula(major)
        assert isinstance(g, Impl) and g.left == self.formula(minor)
        return self.add(g.right, ModusPonens(minor, major))

    def instantiate(self, i: int, sigma: dict) -> int:
        """Emit Subst steps turning step i into its simultaneous instance under sigma."""
        f = self.formula(i)
        fv = var_of(f)
        todo = {v: val for v, val in sigma.items() if v in fv and val != (Var(v),)}
        if not todo:
            return i
        used = set(fv)
        for val in todo.values():
            used |= var_of(val)
        clash = any(var_of(val) & set(todo) for val in todo.values())
        order = sorted(todo)
        if clash:
            nxt = max(max(used, default=0) + 1, FRESH_BASE)
            ren = {}
            for v in order:
                ren[v] = nxt
                i = self.subst(i, v, (Var(nxt),))
                nxt += 1
            for v in order:
                i = self.subst(i, ren[v], todo[v])
        else:
            for v in order:
                i = self.subst(i, v, todo[v])
        return i


def fresh_above(*objs) -> int:
    m = 0
    for o in objs:
        vs = var_of(o)
        if vs:
            m = max(m, max(vs))
    return max(m + 1, FRESH_BASE)


# ---------------------------------------------------------------- saturation search

@dataclass(frozen=True)
class DerivationBudget:
    max_rounds: int = 8
    max_pool: int = 10_000
    max_len: Optional[int] = None  # default: derived from the goal

    def __post_init__(self):
        if self.max_rounds <= 0 or self.max_pool <= 0 or (self.max_len is not None and self.max_len <= 0):
            raise ValueError("budget must be positive")


@dataclass
class Found:
    derivation: list

    def __bool__(self) -> bool:
        return True


@dataclass
class Unknown:
    budget: DerivationBudget
    reason: str
    rounds: int = 0
    facts: int = 0

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        b = self.budget
        return (f"unknown ({self.reason}) after {self.rounds} rounds, {self.facts} facts; "
                f"budget rounds={b.max_rounds} pool={b.max_pool} len={b.max_len}")


def default_max_len(goal) -> int:
    n = max((symbol_count(a) for p in primes(goal) for a in prime_args(p)), default=1)
    return 2 * n + 2


class _PoolFull(Exception):
    pass


class _GoalReached(Exception):
    pass


class Saturator:
    """Forward saturation over prime facts.

    Basis axioms are instantiated by matching their premises against known
    facts; every variable must be bound to a list of the current pool.
    Variables occurring only in the conclusion range over the whole pool.
    The pool starts with the sublists of the seed lists and is widened by
    the sublists of all derived facts whenever a round adds nothing.
    Equality is handled by symmetry, single-occurrence replacement and
    congruence, each recorded so that the equality axiom instances can be
    emitted afterwards. A replacement may grow a list only when the result
    is already in the pool.
    """

    def __init__(self, sys: RecursiveSystem, budget: DerivationBudget, seed_lists=(), max_len: int = 40,
                 fixed_pool: bool = False, use_equality: bool = True):
        self.sys = sys
        self.budget = budget
        self.max_len = max_len
        self.fixed_pool = fixed_pool
        self.use_equality = use_equality
        self.facts: dict = {}
        self.by_pred: dict = defaultdict(list)
        self.eqs_by_lhs: dict = defaultdict(list)
        self.facts_by_sub: dict = defaultdict(list)
        self.reversed: set = set()
        self.relevant: set = set()
        self.parked: dict = defaultdict(list)
        self.pool: dict = {}
        self.new_pool: list = []
        self.rounds = 0
        self.goal = None
        self._limits: dict = {}
        self._expanded = 0
        for lam in seed_lists:
            self._add_pool_sublists(lam)
        self.axioms = [r_split(a) for a in sys.basis]
        self.free_only = []
        for prem, concl in self.axioms:
            pv = set()
            for p in prem:
                pv |= var_of(p)
            self.free_only.append(sorted(var_of(concl) - pv))

    # -- pool and facts

    def _add_pool_sublists(self, lam) -> None:
        fresh = [s for s in sublists(lam) if s not in self.pool and symbol_count(s) <= self.max_len]
        for s in sorted(fresh, key=render_list):
            self.pool[s] = None
            self.new_pool.append(s)
            self.relevant.add(s)

    def expand_pool(self) -> bool:
        """Widen the pool by the sublists of every fact; True if it grew."""
        if self.fixed_pool:
            return False
        before = len(self.pool)
        facts = list(self.facts)
        # facts below the watermark already contributed their sublists
        for f in facts[self._expanded:]:
            for a in prime_args(f):
                self._add_pool_sublists(a)
        self._expanded = len(facts)
        for lam in [k for k in self.parked if k in self.relevant]:
            for g in self.parked.pop(lam):
                self._activate(g, [])
        return len(self.pool) > before

    def _ok_len(self, f) -> bool:
        return all(symbol_count(a) <= self.max_len for a in prime_args(f))

    def _index(self, f) -> None:
        self.by_pred[_pred_key(f)].append(f)
        if isinstance(f, Eq) and f.lhs != f.rhs:
            self.eqs_by_lhs[f.lhs].append(f)

    def add_fact(self, f, origin, delta: list, forward: bool = False) -> bool:
        if f in self.facts:
            return False
        if not self._ok_len(f):
            return False
        if len(self.facts) >= self.budget.max_pool:
            raise _PoolFull()
        self.facts[f] = origin
        if forward and isinstance(f, Eq) and f.lhs != f.rhs:
            if f.lhs in self.relevant:
                self._make_relevant(f.rhs, delta)
            elif f.rhs not in self.relevant:
                self.parked[f.lhs].append(f)
                return True
        self._activate(f, delta)
        return True

    def _make_relevant(self, lam, delta: list) -> None:
        for s in sublists(lam):
            if s not in self.relevant:
                self.relevant.add(s)
                for g in self.parked.pop(s, ()):
                    self._make_relevant(g.rhs, delta)
                    self._activate(g, delta)

    def _activate(self, f, delta: list) -> None:
        self._index(f)
        if self.use_equality:
            subs = set()
            for a in prime_args(f):
                subs |= sublists(a)
            for s in subs:
                self.facts_by_sub[s].append(f)
        delta.append(f)
        if f == self.goal:
            raise _GoalReached()

    def refl(self, lam):
        f = Eq(lam, lam)
        if f not in self.facts:
            self.facts[f] = ("refl", lam)
            self._index(f)
        return f

    # -- one round

    def _in_pool(self, sigma: dict) -> bool:
        pool = self.pool
        return all(v in pool for v in sigma.values())

    def _matches(self, prem, sigma, k, delta_set, j):
        """Match prem[k:]; premise j comes from delta, earlier ones from older facts.

        With j < 0 every premise comes from older facts."""
        if k == len(prem):
            yield sigma, ()
            return
        pat = prem[k]
        key = _pred_key(pat)
        for fact in self.by_pred.get(key, ())[:self._limits.get(key, 0)]:
            in_delta = fact in delta_set
            if (k < j or j < 0) and in_delta:
                continue
            if k == j and not in_delta:
                continue
            for s2 in match_prime(pat, fact, sigma):
                if not self._in_pool(s2):
                    continue
                for s3, used in self._matches(prem, s2, k + 1, delta_set, j):
                    yield s3, (fact,) + used

    def step(self, prev_delta: list, first: bool) -> list:
        delta: list = []
        delta_set = set(prev_delta)
        new_pool_set = set(self.new_pool)
        self.new_pool = []
        pool_sorted = sorted(self.pool, key=render_list)
        self._limits = {k: len(v) for k, v in self.by_pred.items()}
        for idx, (prem, concl) in enumerate(self.axioms):
            free = self.free_only[idx]
            combos = []
            if not prem:
                combos.append(({}, (), first))
            else:
                for j in range(len(prem)):
                    for sigma, used in self._matches(prem, {}, 0, delta_set, j):
                        combos.append((sigma, used, True))
                if free and new_pool_set:
                    for sigma, used in self._matches(prem, {}, 0, delta_set, -1):
                        combos.append((sigma, used, False))
            for sigma, used, fresh in combos:
                for full in self._bind_free(sigma, free, pool_sorted, new_pool_set, fresh):
                    g = apply_sigma(concl, full)
                    self.add_fact(g, ("basis", idx, tuple(sorted(full.items())), used), delta, forward=True)
        if self.use_equality:
            # close under the equality rules before the next basis round
            frontier = prev_delta + delta
            while frontier:
                grown: list = []
                self._equality_round(frontier, grown)
                delta.extend(grown)
                frontier = grown
        self.rounds += 1
        return delta

    def _bind_free(self, sigma, free, pool_sorted, new_pool_set, fresh) -> Iterator[dict]:
        if not free:
            if fresh:
                yield sigma
            return
        def rec(i, s, any_new):
            if i == len(free):
                if fresh or any_new:
                    yield s
                return
            for lam in pool_sorted:
                s2 = dict(s)
                s2[free[i]] = lam
                yield from rec(i + 1, s2, any_new or lam in new_pool_set)
        yield from rec(0, sigma, False)

    def _equality_round(self, prev_delta: list, delta: list) -> None:
        prev_set = set(prev_delta)
        for e in prev_delta:
            if isinstance(e, Eq) and e.lhs != e.rhs:
                # symmetry: replace the whole left side of ~ a , a by b
                r = self.refl(e.lhs)
                g = Eq(e.rhs, e.lhs)
                if self.add_fact(g, ("repl", r, e, 0, ((), (0, len(e.lhs)))), delta):
                    self.reversed.add(g)
        pairs = []
        for e in prev_delta:
            if isinstance(e, Eq) and e.lhs != e.rhs:
                for t in self.facts_by_sub.get(e.lhs, ()):
                    pairs.append((t, e))
        for t in prev_delta:
            subs = set()
            for a in prime_args(t):
                subs |= sublists(a)
            for s in sorted(subs, key=render_list):
                for e in self.eqs_by_lhs.get(s, ()):
                    if e not in prev_set:
                        pairs.append((t, e))
        for t, e in pairs:
            if t != e and self.facts[t][0] != "refl":
                self._replace_all(t, e, delta)

    def _replace_all(self, t, e, delta: list) -> None:
        """Rewrite one occurrence of the left side of e inside t.

        Equations are used left to right inside the right side of equation
        facts; every other rewrite must land on a pool list."""
        alpha, beta = e.lhs, e.rhs
        forward = e not in self.reversed
        args = prime_args(t)
        for ai, a in enumerate(args):
            free_rewrite = forward and isinstance(t, Eq) and ai == 1 and t not in self.reversed
            for path in occurrences(a, alpha):
                new_a = replace_at(a, path, beta)
                if not free_rewrite and new_a not in self.pool:
                    continue
                if symbol_count(new_a) > self.max_len:
                    continue
                if isinstance(t, Eq):
                    g = Eq(new_a, t.rhs) if ai == 0 else Eq(t.lhs, new_a)
                    fwd = forward and t not in self.reversed
                    if self.add_fact(g, ("repl", t, e, ai, path), delta, forward=fwd) and not fwd:
                        self.reversed.add(g)
                else:
                    g = Pred(t.name, args[:ai] + (new_a,) + args[ai + 1:])
                    if g in self.facts:
                        continue
                    link = Eq(a, new_a)
                    if self.add_fact(link, ("repl", self.refl(a), e, 1, path), delta):
                        self.reversed.add(link)
                    eqs = tuple(link if k == ai else self.refl(b) for k, b in enumerate(args))
                    self.add_fact(g, ("cong", t, eqs), delta)

    # -- extraction

    def emit(self, f, em: Emitter) -> int:
        stack = [(f, False)]
        done: dict = {}
        while stack:
            g, ready = stack.pop()
            if g in done:
                continue
            origin = self.facts[g]
            deps = self._deps(origin)
            if not ready:
                stack.append((g, True))
                for d in reversed(deps):
                    if d not in done:
                        stack.append((d, False))
                continue
            done[g] = self._emit_one(g, origin, em, done)
        return done[f]

    @staticmethod
    def _deps(origin) -> tuple:
        kind = origin[0]
        if kind == "basis":
            return origin[3]
        if kind == "repl":
            return (origin[1], origin[2])
        if kind == "cong":
            return (origin[1],) + origin[2]
        return ()

    def _emit_one(self, g, origin, em: Emitter, done: dict) -> int:
        kind = origin[0]
        if kind == "refl":
            lam = origin[1]
            i = em.add(Eq((Var(1),), (Var(1),)), AxiomEq())
            return em.subst(i, 1, lam)
        if kind == "basis":
            _, idx, sigma, used = origin
            i = em.add(self.sys.basis[idx], AxiomBasis(idx))
            i = em.instantiate(i, dict(sigma))
            for u in used:
                i = em.mp(done[u], i)
            assert em.formula(i) == g
            return i
        if kind == "repl":
            _, t, e, ai, path = origin
            x = fresh_above(t, e)
            y = x + 1
            hole_x = replace_at(prime_args(t)[ai], path, (Var(x),))
            hole_y = replace_at(prime_args(t)[ai], path, (Var(y),))
            if ai == 0:
                prem, concl = Eq(hole_x, t.rhs), Eq(hole_y, t.rhs)
            else:
                prem, concl = Eq(t.lhs, hole_x), Eq(t.lhs, hole_y)
            ax = Impl(prem, Impl(Eq((Var(x),), (Var(y),)), concl))
            i = em.add(ax, AxiomEq())
            i = em.subst(i, x, e.lhs)
            i = em.subst(i, y, e.rhs)
            i = em.mp(done[t], i)
            i = em.mp(done[e], i)
            assert em.formula(i) == g
            return i
        if kind == "cong":
            _, t, eqs = origin
            n = len(eqs)
            base = fresh_above(t, *eqs)
            xs = [base + k for k in range(n)]
            ys = [base + n + k for k in range(n)]
            ax = rchain([Eq((Var(a),), (Var(b),)) for a, b in zip(xs, ys)] +
                        [Pred(t.name, tuple((Var(a),) for a in xs))],
                        Pred(t.name, tuple((Var(b),) for b in ys)))
            i = em.add(ax, AxiomEq())
            for k in range(n):
                i = em.subst(i, xs[k], eqs[k].lhs)
            for k in range(n):
                i = em.subst(i, ys[k], eqs[k].rhs)
            for e in eqs:
                i = em.mp(done[e], i)
            i = em.mp(done[t], i)
            assert em.formula(i) == g
            return i
        raise AssertionError(kind)


def _direct_instance(sys: RecursiveSystem, sat: Saturator, goal, em_factory) -> Optional[list]:
    """Derive a non-prime goal as an axiom instance with some leading premises discharged."""
    gprem, gconcl = r_split(goal)
    j = len(gprem)
    if is_equality_raxiom(goal, set(sys.table.predicates)):
        return [Step(goal, AxiomEq())]
    for idx, (prem, concl) in enumerate(sat.axioms):
        k = len(prem)
        if k < j:
            continue
        tail = rchain(prem[k - j:], concl)
        for sigma in match_formula(tail, goal, {}):
            head = [apply_sigma(p, sigma) for p in prem[:k - j]]
            for full, used in _match_heads(sat, prem[:k - j], sigma):
                em = em_factory()
                deps = [sat.emit(u, em) for u in used]
                i = em.add(sys.basis[idx], AxiomBasis(idx))
                i = em.instantiate(i, full)
                for d in deps:
                    i = em.mp(d, i)
                if em.formula(i) == goal:
                    return em.steps
            del head
    return None


def _match_heads(sat: Saturator, prem, sigma):
    if not prem:
        yield sigma, ()
        return
    for fact in list(sat.by_pred.get(_pred_key(prem[0]), ())):
        for s2 in match_prime(prem[0], fact, sigma):
            for s3, used in _match_heads(sat, prem[1:], s2):
                yield s3, (fact,) + used


def derive(sys: RecursiveSystem, goal, budget: DerivationBudget = DerivationBudget()):
    """Search for an R-derivation of goal; returns Found or Unknown."""
    if not is_rformula(goal):
        raise ValueError("goal is not an R-formula")
    check_symbols(goal, sys.table)
    max_len = budget.max_len or default_max_len(goal)
    seeds = [a for p in primes(goal) for a in prime_args(p)]
    # without equations in the basis the only equality facts are trivial
    sat = Saturator(sys, budget, seeds, max_len=max_len, use_equality=any(_has_eq(a) for a in sys.basis))
    prime_goal = is_prime(goal)
    if prime_goal and isinstance(goal, Eq) and goal.lhs == goal.rhs:
        em = Emitter()
        sat.facts[goal] = ("refl", goal.lhs)
        sat.emit(goal, em)
        return Found(em.steps)
    delta: list = []
    first = True
    if prime_goal:
        sat.goal = goal
    try:
        for _ in range(budget.max_rounds):
            try:
                delta = sat.step(delta, first)
            except _GoalReached:
                pass
            first = False
            if prime_goal and goal in sat.facts:
                em = Emitter()
                sat.emit(goal, em)
                return Found(em.steps)
            if not prime_goal:
                steps = _direct_instance(sys, sat, goal, Emitter)
                if steps is not None:
                    return Found(steps)
            if not delta:
                if not sat.expand_pool():
                    return Unknown(budget, "saturated", sat.rounds, len(sat.facts))
                delta = list(sat.facts)
    except _PoolFull:
        return Unknown(budget, "pool limit reached", sat.rounds, len(sat.facts))
    return Unknown(budget, "round limit reached", sat.rounds, len(sat.facts))


# ---------------------------------------------------------------- symbol projection

def project_symbols(steps, gamma: dict, sys: RecursiveSystem) -> list:
    """Replace extended symbols by symbols of the base alphabet, step by step."""
    if not sys.table.constants:
        raise ValueError("the base alphabet must be nonempty")
    base = set(sys.table.constants)

    def sym(c):
        if c in base:
            return c
        if c not in gamma:
            raise ValueError(f"symbol map undefined on {c!r}")
        if gamma[c] not in base:
            raise ValueError(f"symbol map sends {c!r} outside the base alphabet")
        return gamma[c]

    def on_list(lam):
        out = []
        for it in lam:
            if isinstance(it, Op):
                out.append(Op(sym(it.name), on_list(it.args)))
            elif isinstance(it, Var):
                out.append(it)
            else:
                out.append(type(it)(sym(it.name)))
        return tuple(out)

    out = []
    for st in steps:
        j = st.just
        if isinstance(j, Subst):
            j = Subst(j.source, j.var, on_list(j.value))
        out.append(Step(map_lists(st.formula, on_list), j))
    return out


# ---------------------------------------------------------------- equation elimination

def _star(f):
    if isinstance(f, Eq):
        return Pred(STAR_EQ, (f.lhs, f.rhs))
    if isinstance(f, Impl):
        return Impl(_star(f.left), _star(f.right))
    return f


def eliminate_equations(sys: RecursiveSystem) -> RecursiveSystem:
    """Equation-free system with a fresh equality predicate and its closure axioms."""
    if sys.table.is_predicate(STAR_EQ):
        raise ValueError(f"{STAR_EQ} already used")
    x, y, s, t = (Var(1),), (Var(2),), (Var(3),), (Var(4),)

    def e(a, b):
        return Pred(STAR_EQ, (a, b))

    basis = [_star(f) for f in sys.basis]
    basis.append(e(x, x))
    basis.append(rchain([e(x, x), e(x, y)], e(y, x)))
    basis.append(rchain([e(x, y), e(y, s)], e(x, s)))
    for fsym in sys.table.constants:
        fx, fy = (Op(fsym, x),), (Op(fsym, y),)
        basis.append(rchain([e(fx, fx), e(x, y)], e(fx, fy)))
    basis.append(rchain([e(x + s, x + s), e(s, t)], e(x + s, x + t)))
    basis.append(rchain([e(x + s, x + t), e(x, y)], e(x + s, y + t)))
    arities = []
    for f in sys.basis:
        for p in primes(f):
            if isinstance(p, Pred) and p.args and (p.name, len(p.args)) not in arities:
                arities.append((p.name, len(p.args)))
    for name, n in arities:
        xs = [(Var(k + 1),) for k in range(n)]
        ys = [(Var(n + k + 1),) for k in range(n)]
        basis.append(rchain([e(a, b) for a, b in zip(xs, ys)] + [Pred(name, tuple(xs))], Pred(name, tuple(ys))))
    table = SymbolTable(sys.table.constants, sys.table.predicates + (STAR_EQ,))
    return RecursiveSystem(table, tuple(basis))


def _has_eq(f) -> bool:
    return any(isinstance(p, Eq) for p in primes(f))


def strip_equation_steps(steps, sys: RecursiveSystem) -> list:
    """Drop steps containing equations and trivial steps -> F F; re-index the rest."""
    if any(_has_eq(f) for f in sys.basis):
        raise ValueError("basis contains an equation")
    keep: dict = {}
    out: list = []
    first_at: dict = {}
    for i, st in enumerate(steps):
        f = st.formula
        if _has_eq(f) or (isinstance(f, Impl) and is_prime(f.left) and f.left == f.right):
            continue
        j = st.just
        if isinstance(j, ModusPonens):
            if j.minor in keep and j.major in keep:
                j = ModusPonens(keep[j.minor], keep[j.major])
            elif f in first_at:
                keep[i] = first_at[f]
                continue
            else:
                raise ValueError(f"step {i + 1} depends on a removed step")
        elif isinstance(j, Subst):
            if j.source not in keep:
                raise ValueError(f"step {i + 1} depends on a removed step")
            j = Subst(keep[j.source], j.var, j.value)
        if f in first_at:
            keep[i] = first_at[f]
            continue
        out.append(Step(f, j))
        keep[i] = len(out) - 1
        first_at[f] = len(out) - 1
    return out
