"""Mathematical systems over a recursive system, argument-list policies and the proof checker."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .engine import AxiomBasis, AxiomEq, ModusPonens, RecursiveSystem, Step, Subst, is_equality_raxiom
from .formats import FileFormatError, _content_lines, _header, _index, _var, load_system, split_step
from .syntax import (
    PRIME, QUANT, And, Const, Eq, Exists, Forall, Iff, Impl, Neg, Op, ParseError, Pred,
    SymbolTable, Var, arg_lists, cf, check_symbols, free_vars, map_primes, parse_formula, parse_list,
    r_split, sbf, var_of,
)

DEFAULT_MAX_ATOMS = 20


# ---------------------------------------------------------------- propositional skeletons

class AtomCapExceeded(ValueError):
    pass


def atom_cap() -> int:
    return int(os.environ.get("DERIVUS_MAX_ATOMS", DEFAULT_MAX_ATOMS))


@dataclass(frozen=True)
class Atom:
    index: int

    def __str__(self) -> str:
        return f"ξ{self.index}"


def abstract(f) -> tuple:
    """Most general propositional skeleton of f and its atoms (1-based order of first occurrence).

    Prime and quantified subformulas become atoms; equal subformulas share one."""
    atoms: dict = {}

    def walk(g):
        if isinstance(g, PRIME) or isinstance(g, QUANT):
            if g not in atoms:
                atoms[g] = Atom(len(atoms) + 1)
            return atoms[g]
        if isinstance(g, Neg):
            return Neg(walk(g.body))
        return type(g)(walk(g.left), walk(g.right))

    skel = walk(f)
    return skel, tuple(atoms)


def fill(skel, atoms):
    """Replace atom i by atoms[i-1]."""
    if isinstance(skel, Atom):
        return atoms[skel.index - 1]
    if isinstance(skel, Neg):
        return Neg(fill(skel.body, atoms))
    return type(skel)(fill(skel.left, atoms), fill(skel.right, atoms))


def eval_prop(alpha, psi) -> bool:
    """Truth value of a skeleton; psi maps atom indices to booleans (dict or callable)."""
    look = psi if callable(psi) else psi.__getitem__
    if isinstance(alpha, Atom):
        return bool(look(alpha.index))
    if isinstance(alpha, Neg):
        return not eval_prop(alpha.body, psi)
    a, b = eval_prop(alpha.left, psi), eval_prop(alpha.right, psi)
    if isinstance(alpha, Impl):
        return (not a) or b
    if isinstance(alpha, Iff):
        return a == b
    if isinstance(alpha, And):
        return a and b
    return a or b


def _columns(alpha, j: int):
    # each atom is a 2^j-bit column; row r gives atom i the value of bit (i-1) of r
    rows = 1 << j
    full = (1 << rows) - 1
    cols = []
    for i in range(j):
        block = (1 << (1 << i)) - 1
        pattern = 0
        period = 1 << (i + 1)
        for start in range(1 << i, rows, period):
            pattern |= block << start
        cols.append(pattern)

    def ev(g):
        if isinstance(g, Atom):
            return cols[g.index - 1]
        if isinstance(g, Neg):
            return full & ~ev(g.body)
        a, b = ev(g.left), ev(g.right)
        if isinstance(g, Impl):
            return full & (~a | b)
        if isinstance(g, Iff):
            return full & ~(a ^ b)
        if isinstance(g, And):
            return a & b
        return a | b

    return ev(alpha), full


def skeleton_atoms(alpha) -> int:
    if isinstance(alpha, Atom):
        return alpha.index
    if isinstance(alpha, Neg):
        return skeleton_atoms(alpha.body)
    return max(skeleton_atoms(alpha.left), skeleton_atoms(alpha.right))


def identically_true(alpha, j: Optional[int] = None) -> bool:
    j = skeleton_atoms(alpha) if j is None else j
    value, full = _columns(alpha, j)
    return value == full


def is_prop_axiom(f, cap: Optional[int] = None) -> bool:
    skel, atoms = abstract(f)
    cap = atom_cap() if cap is None else cap
    if len(atoms) > cap:
        raise AtomCapExceeded(f"{len(atoms)} propositional atoms exceed the cap of {cap}")
    return identically_true(skel, len(atoms))


# ---------------------------------------------------------------- equality and quantifier axioms

def is_equality_axiom(f, predicates=None) -> bool:
    return is_equality_raxiom(f, predicates)


def quantifier_axiom_kind(f) -> Optional[str]:
    if isinstance(f, Impl) and isinstance(f.left, Forall) and f.left.body == f.right:
        return "a"
    if (isinstance(f, Impl) and isinstance(f.left, Forall) and isinstance(f.left.body, Impl)
            and isinstance(f.right, Impl) and isinstance(f.right.right, Forall)):
        x, inner = f.left.var, f.left.body
        if (f.right.right.var == x and f.right.left == inner.left and f.right.right.body == inner.right
                and x not in free_vars(inner.left)):
            return "b"
    if isinstance(f, Iff) and isinstance(f.right, Exists):
        x, body = f.right.var, f.right.body
        if f.left == Neg(Forall(x, Neg(body))):
            return "c"
    return None


def is_quantifier_axiom(f) -> bool:
    return quantifier_axiom_kind(f) is not None


# ---------------------------------------------------------------- argument-list policies

class ListPolicy:
    name = "policy"

    def contains(self, lam) -> bool:
        raise NotImplementedError

    def formula_ok(self, f) -> bool:
        return all(self.contains(a) for a in arg_lists(f))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class AllLists(ListPolicy):
    name = "all"

    def contains(self, lam) -> bool:
        return bool(lam)


@dataclass(frozen=True)
class StringsOnly(ListPolicy):
    name = "strings"

    def contains(self, lam) -> bool:
        return bool(lam) and not any(isinstance(it, Op) for it in lam)


@dataclass(frozen=True)
class AtomsOnly(ListPolicy):
    name = "atoms"

    def contains(self, lam) -> bool:
        return len(lam) == 1 and isinstance(lam[0], (Const, Var))


@dataclass(frozen=True)
class VariablesOnly(ListPolicy):
    name = "vars"

    def contains(self, lam) -> bool:
        return len(lam) == 1 and isinstance(lam[0], Var)


@dataclass(frozen=True)
class Numerals(ListPolicy):
    """Single numeral terms: zero, variables, successor, sum and product."""
    zero: str = "0"
    succ: str = "s"
    plus: str = "+"
    times: str = "*"
    name = "numerals"

    def term(self, it) -> bool:
        if isinstance(it, Var):
            return True
        if isinstance(it, Const):
            return it.name == self.zero
        if it.name == self.succ:
            return len(it.args) == 1 and self.term(it.args[0])
        if it.name in (self.plus, self.times):
            return len(it.args) == 2 and self.term(it.args[0]) and self.term(it.args[1])
        return False

    def contains(self, lam) -> bool:
        return len(lam) == 1 and self.term(lam[0])


@dataclass(frozen=True)
class SymbolExtension(ListPolicy):
    """Lists of the base policy with some variables replaced by new constants."""
    base: ListPolicy
    constants: frozenset
    name = "extension"

    def contains(self, lam) -> bool:
        used = sorted(var_of(lam))
        top = (used[-1] if used else 0) + 1
        fresh = {c: Var(top + k) for k, c in enumerate(sorted(self.constants))}

        def swap(items):
            out = []
            for it in items:
                if isinstance(it, Const) and it.name in fresh:
                    out.append(fresh[it.name])
                elif isinstance(it, Op):
                    if it.name in fresh:
                        return None
                    inner = swap(it.args)
                    if inner is None:
                        return None
                    out.append(Op(it.name, inner))
                else:
                    out.append(it)
            return tuple(out)

        base = swap(lam)
        return base is not None and self.base.contains(base)


POLICIES: dict = {
    "all": AllLists(),
    "strings": StringsOnly(),
    "atoms": AtomsOnly(),
    "vars": VariablesOnly(),
    "numerals": Numerals(),
}


# ---------------------------------------------------------------- mathematical systems

def peano_induction_instance(f, M: "MathSystem") -> bool:
    """→ ∀x & F(0) → F F(s(x)) ∀x F for F with numeral argument lists only."""
    if not (isinstance(f, Impl) and isinstance(f.left, Forall) and isinstance(f.right, Forall)):
        return False
    x, F = f.right.var, f.right.body
    if f.left.var != x or not Numerals().formula_ok(F):
        return False
    zero = (Const("0"),)
    succ = (Op("s", (Var(x),)),)
    return f.left.body == And(sbf(F, zero, x), Impl(F, sbf(F, succ, x)))


SCHEMES: dict = {"peano-induction": peano_induction_instance}


@dataclass(frozen=True)
class MathSystem:
    sys: RecursiveSystem
    table: SymbolTable
    extra: tuple = ()
    schemes: tuple = ()
    _basis: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "extra", tuple(self.extra))
        object.__setattr__(self, "schemes", tuple(self.schemes))
        st = self.sys.table
        if not set(st.constants) <= set(self.table.constants) or not set(st.predicates) <= set(self.table.predicates):
            raise ValueError("the alphabets must extend those of the recursive system")
        for f in self.extra:
            check_symbols(f, self.table)
        for s in self.schemes:
            if s not in SCHEMES:
                raise ValueError(f"unknown axiom scheme {s!r}")
        object.__setattr__(self, "_basis", frozenset(self.sys.basis) | frozenset(self.extra))

    @classmethod
    def over(cls, sys: RecursiveSystem, constants=(), predicates=(), extra=(), schemes=()) -> "MathSystem":
        return cls(sys, sys.table.extend(constants, predicates), tuple(extra), tuple(schemes))

    @property
    def basis_is_recursive(self) -> bool:
        """True when the basis axioms are exactly those of the recursive system."""
        return not self.schemes and all(f in self.sys.basis for f in self.extra)

    def is_basis(self, f) -> bool:
        return f in self._basis or any(SCHEMES[s](f, self) for s in self.schemes)

    def with_axioms(self, *fs) -> "MathSystem":
        return MathSystem(self.sys, self.table, self.extra + tuple(g for g in fs if g not in self._basis),
                          self.schemes)

    def with_constants(self, constants) -> "MathSystem":
        return MathSystem(self.sys, self.table.extend(constants, ()), self.extra, self.schemes)

    def basis_vars(self) -> frozenset:
        out: set = set()
        for f in self.sys.basis:
            out |= var_of(f)
        return frozenset(out)


def pa_system() -> tuple:
    table = SymbolTable(("0", "s", "+", "*"), ())
    empty = RecursiveSystem(SymbolTable((), ()), ())
    axioms = [parse_formula(t, table) for t in PA_AXIOMS]
    return MathSystem(empty, table, tuple(axioms), ("peano-induction",)), Numerals()


PA_AXIOMS = (
    "forall x1 ~ + ( 0 x1 ) , x1",
    "forall x1 forall x2 ~ + ( s ( x1 ) x2 ) , s ( + ( x1 x2 ) )",
    "forall x1 ~ * ( 0 x1 ) , 0",
    "forall x1 forall x2 ~ * ( s ( x1 ) x2 ) , + ( * ( x1 x2 ) x2 )",
    "forall x1 forall x2 -> ~ s ( x1 ) , s ( x2 ) ~ x1 , x2",
    "forall x1 ! ~ s ( x1 ) , 0",
)


# ---------------------------------------------------------------- justifications

@dataclass(frozen=True)
class PropAxiom:
    def __str__(self) -> str:
        return "prop"


@dataclass(frozen=True)
class EqAxiom:
    def __str__(self) -> str:
        return "eq"


@dataclass(frozen=True)
class QuantAxiom:
    kind: Optional[str] = None

    def __str__(self) -> str:
        return f"quant {self.kind}" if self.kind else "quant"


@dataclass(frozen=True)
class BasisAxiom:
    def __str__(self) -> str:
        return "basis"


@dataclass(frozen=True)
class Gen:
    source: int
    var: int

    def __str__(self) -> str:
        return f"gen {self.source + 1} x{self.var}"


@dataclass(frozen=True)
class Induction:
    pred: str
    vars: tuple
    G: object
    premises: tuple = ()  # (basis axiom index, step index), both 0-based

    def __str__(self) -> str:
        head = " ".join([self.pred] + [f"x{v}" for v in self.vars])
        prem = " ".join(f"{a + 1}:{s + 1}" for a, s in self.premises)
        return f"induction {head} / {self.G} / {prem}".rstrip()


def induction_goal(pred: str, vars_, G):
    return Impl(Pred(pred, tuple((Var(v),) for v in vars_)), G)


def induction_image(F, pred: str, vars_, G):
    """F with each len(vars)-ary p λ1..λi replaced by G λ1/x1 ... λi/xi (applied left to right)."""
    i = len(vars_)

    def swap(p):
        if isinstance(p, Pred) and p.name == pred and len(p.args) == i:
            g = G
            for lam, x in zip(p.args, vars_):
                g = sbf(g, lam, x)
            return g
        return p

    return map_primes(F, swap)


def induction_axioms(sys: RecursiveSystem, pred: str, arity: int) -> list:
    """Indices of basis axioms whose R-conclusion is arity-ary in pred."""
    out = []
    for k, F in enumerate(sys.basis):
        _, concl = r_split(F)
        if isinstance(concl, Pred) and concl.name == pred and len(concl.args) == arity:
            out.append(k)
    return out


# ---------------------------------------------------------------- checking

@dataclass(frozen=True)
class ProofVerdict:
    ok: bool
    step: Optional[int] = None
    code: str = ""
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "accept"
        return f"reject at step {self.step + 1} [{self.code}]: {self.reason}"


class _Reject(Exception):
    def __init__(self, code: str, reason: str):
        super().__init__(reason)
        self.code = code
        self.reason = reason


def _cited(i: int, k: int) -> None:
    if not 0 <= k < i:
        raise _Reject("index", f"step {k + 1} is not an earlier step")


def check_step(i: int, f, just, seen: list, M: MathSystem, policy: ListPolicy, bvars: frozenset) -> None:
    try:
        check_symbols(f, M.table)
    except ValueError as e:
        raise _Reject("symbols", str(e)) from None
    if not policy.formula_ok(f):
        raise _Reject("policy", f"an argument list is not allowed by the {policy} policy")
    if isinstance(just, PropAxiom):
        try:
            ok = is_prop_axiom(f)
        except AtomCapExceeded as e:
            raise _Reject("atoms", str(e)) from None
        if not ok:
            raise _Reject("bad-axiom", "not an identically true propositional form")
    elif isinstance(just, (EqAxiom, AxiomEq)):
        if not is_equality_axiom(f, set(M.table.predicates)):
            raise _Reject("bad-axiom", "not an equality axiom")
    elif isinstance(just, QuantAxiom):
        kind = quantifier_axiom_kind(f)
        if kind is None or (just.kind and just.kind != kind):
            raise _Reject("bad-axiom", f"not a quantifier axiom{' (' + just.kind + ')' if just.kind else ''}")
    elif isinstance(just, BasisAxiom):
        if not M.is_basis(f):
            raise _Reject("bad-axiom", "not a basis axiom")
    elif isinstance(just, AxiomBasis):
        if not 0 <= just.index < len(M.sys.basis) or M.sys.basis[just.index] != f:
            raise _Reject("bad-axiom", "not the cited basis axiom")
    elif isinstance(just, ModusPonens):
        _cited(i, just.minor)
        _cited(i, just.major)
        major = seen[just.major]
        if not isinstance(major, Impl) or major.left != seen[just.minor] or major.right != f:
            raise _Reject("mp", "modus ponens premises do not match")
    elif isinstance(just, Subst):
        _cited(i, just.source)
        src = seen[just.source]
        if not policy.contains(just.value):
            raise _Reject("policy", f"substituted list is not allowed by the {policy} policy")
        try:
            check_symbols(just.value, M.table)
        except ValueError as e:
            raise _Reject("symbols", str(e)) from None
        if not cf(src, just.value, just.var):
            raise _Reject("cf-violation", f"substitution for x{just.var} is not collision-free")
        if sbf(src, just.value, just.var) != f:
            raise _Reject("subst", "substitution result differs")
    elif isinstance(just, Gen):
        _cited(i, just.source)
        if f != Forall(just.var, seen[just.source]):
            raise _Reject("gen", "not the generalization of the cited step")
    elif isinstance(just, Induction):
        _check_induction(i, f, just, seen, M, policy, bvars)
    else:
        raise _Reject("rule", f"unknown justification {just!r}")


def _check_induction(i, f, ind: Induction, seen, M: MathSystem, policy, bvars) -> None:
    if not M.sys.table.is_predicate(ind.pred):
        raise _Reject("induction", f"{ind.pred!r} is not a predicate of the recursive system")
    if len(set(ind.vars)) != len(ind.vars):
        raise _Reject("induction-vars", "induction variables are not distinct")
    try:
        check_symbols(ind.G, M.table)
    except ValueError as e:
        raise _Reject("symbols", str(e)) from None
    if not policy.formula_ok(ind.G):
        raise _Reject("policy", f"induction formula has a list not allowed by the {policy} policy")
    clash = (set(ind.vars) | var_of(ind.G)) & bvars
    if clash:
        raise _Reject("induction-vars", f"variables {sorted(clash)} occur in the recursive basis")
    if f != induction_goal(ind.pred, ind.vars, ind.G):
        raise _Reject("induction", "step is not → p x1..xi G for the given parameters")
    need = induction_axioms(M.sys, ind.pred, len(ind.vars))
    given = dict(ind.premises)
    if len(given) != len(ind.premises):
        raise _Reject("induction-premise", "duplicate premise entry")
    extra = sorted(set(given) - set(need))
    if extra:
        raise _Reject("induction-premise", f"basis axiom {extra[0] + 1} does not conclude in the induction predicate")
    for k in need:
        if k not in given:
            raise _Reject("induction-premise", f"premise for basis axiom {k + 1} is missing")
        _cited(i, given[k])
        want = induction_image(M.sys.basis[k], ind.pred, ind.vars, ind.G)
        if seen[given[k]] != want:
            raise _Reject("induction-premise", f"step {given[k] + 1} is not the transformed basis axiom {k + 1}")


def check_proof(steps, M: MathSystem, policy: ListPolicy = AllLists()) -> ProofVerdict:
    seen: list = []
    bvars = M.basis_vars()
    for i, st in enumerate(steps):
        try:
            check_step(i, st.formula, st.just, seen, M, policy, bvars)
        except _Reject as r:
            return ProofVerdict(False, i, r.code, r.reason)
        seen.append(st.formula)
    return ProofVerdict(True)


def from_rderivation(steps) -> list:
    """Re-justify an R-derivation as a proof script."""
    out = []
    for st in steps:
        j = st.just
        if isinstance(j, AxiomEq):
            j = EqAxiom()
        elif isinstance(j, AxiomBasis):
            j = BasisAxiom()
        out.append(Step(st.formula, j))
    return out


# ---------------------------------------------------------------- the sign function

def _prime_keys(F):
    prem, concl = r_split(F)
    return [(p.name, len(p.args)) for p in prem + [concl] if isinstance(p, Pred)], concl


def sign_support(sys: RecursiveSystem) -> frozenset:
    """(predicate, arity) pairs occurring in the stable subset of the recursive basis."""
    preds = set(sys.table.predicates)
    gamma = []
    for F in sys.basis:
        prem, concl = r_split(F)
        if isinstance(concl, Pred):
            key = (concl.name, len(concl.args))
            if any(isinstance(p, Pred) and (p.name, len(p.args)) == key for p in prem):
                continue
        gamma.append(F)
    while True:
        concluded = set()
        for F in gamma:
            _, concl = r_split(F)
            if isinstance(concl, Pred):
                concluded.add((concl.name, len(concl.args)))
        kept = [F for F in gamma
                if all(k in concluded or k[0] not in preds for k in _prime_keys(F)[0])]
        if len(kept) == len(gamma):
            break
        gamma = kept
    out = set()
    for F in gamma:
        out.update(k for k in _prime_keys(F)[0] if k[0] in preds)
    return frozenset(out)


def chi_sign(f, M: MathSystem, support: Optional[frozenset] = None) -> int:
    if support is None:
        support = sign_support(M.sys)
    if isinstance(f, Eq):
        return 1
    if isinstance(f, Pred):
        if not M.sys.table.is_predicate(f.name):
            return -1
        return 1 if (f.name, len(f.args)) in support else -1
    if isinstance(f, Neg):
        return -chi_sign(f.body, M, support)
    if isinstance(f, QUANT):
        return chi_sign(f.body, M, support)
    a, b = chi_sign(f.left, M, support), chi_sign(f.right, M, support)
    if isinstance(f, Impl):
        return 1 if a == -1 or b == 1 else -1
    if isinstance(f, Iff):
        return 1 if a == b else -1
    if isinstance(f, And):
        return 1 if a == b == 1 else -1
    return 1 if a == 1 or b == 1 else -1


@dataclass(frozen=True)
class Finding:
    step: int
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.step + 1} {self.code} {self.message}"


def chi_lint(steps, M: MathSystem) -> list:
    """Flag F/¬F pairs, and negative signs when the basis is the recursive one."""
    support = sign_support(M.sys)
    findings = []
    where: dict = {}
    for i, st in enumerate(steps):
        where.setdefault(st.formula, i)
    for i, st in enumerate(steps):
        f = st.formula
        if M.basis_is_recursive and chi_sign(f, M, support) == -1:
            findings.append(Finding(i, "chi-negative", f"sign -1 for {f}"))
        if isinstance(f, Neg) and f.body in where:
            j = where[f.body]
            findings.append(Finding(i, "contradiction", f"negates step {j + 1}"))
    return findings


# ---------------------------------------------------------------- files

def parse_justification(rule: list, table: SymbolTable, no: int, col: int):
    name, args = rule[0], rule[1:]
    if name == "prop" and not args:
        return PropAxiom()
    if name == "eq" and not args:
        return EqAxiom()
    if name == "axiom-eq" and not args:
        return AxiomEq()
    if name == "quant" and len(args) <= 1 and (not args or args[0] in ("a", "b", "c")):
        return QuantAxiom(args[0] if args else None)
    if name == "basis" and not args:
        return BasisAxiom()
    if name == "basis" and len(args) == 1:
        return AxiomBasis(_index(args[0], no, col))
    if name == "mp" and len(args) == 2:
        return ModusPonens(_index(args[0], no, col), _index(args[1], no, col))
    if name == "gen" and len(args) == 2:
        return Gen(_index(args[0], no, col), _var(args[1], no, col))
    if name == "subst" and len(args) >= 4 and args[2] == ":=":
        try:
            value = parse_list(" ".join(args[3:]), table)
        except ParseError as e:
            raise FileFormatError(str(e), no, col) from None
        return Subst(_index(args[0], no, col), _var(args[1], no, col), value)
    if name == "induction":
        parts = " ".join(args).split("/")
        if len(parts) != 3:
            raise FileFormatError("induction needs 'p vars / G / axiom:step ...'", no, col)
        head = parts[0].split()
        if not head:
            raise FileFormatError("induction needs a predicate", no, col)
        vars_ = tuple(_var(t, no, col) for t in head[1:])
        try:
            G = parse_formula(parts[1], table)
        except ParseError as e:
            raise FileFormatError(str(e), no, col) from None
        prem = []
        for tok in parts[2].split():
            a, _, s = tok.partition(":")
            prem.append((_index(a, no, col), _index(s, no, col)))
        return Induction(head[0], vars_, G, tuple(prem))
    raise FileFormatError(f"unknown rule {' '.join(rule)!r}", no, col)


def parse_proof(text: str, table: SymbolTable) -> list:
    steps = []
    for no, line in _content_lines(text):
        ftext, rule, col = split_step(line, no)
        try:
            f = parse_formula(ftext, table)
        except ParseError as e:
            raise FileFormatError(str(e), no, e.pos + 1) from None
        if not rule:
            raise FileFormatError("missing rule", no, col)
        steps.append(Step(f, parse_justification(rule, table, no, col)))
    return steps


def render_proof(steps) -> str:
    return "".join(f"{st.formula} ; {st.just}\n" for st in steps)


def load_proof(path, table: SymbolTable) -> list:
    return parse_proof(Path(path).read_text(encoding="utf-8"), table)


def parse_math_system(text: str, base: Optional[Path] = None) -> MathSystem:
    """Headers `recursive:`, `constants:`, `predicates:`, `scheme:` then extra basis axioms."""
    sys = None
    constants: list = []
    predicates: list = []
    schemes: list = []
    body = []
    for no, line in _content_lines(text):
        if body:
            body.append((no, line))
            continue
        rec = _header(line, "recursive")
        if rec is not None:
            if len(rec) != 1:
                raise FileFormatError("expected one recursive system path or 'none'", no, 1)
            if rec[0] == "none":
                sys = RecursiveSystem(SymbolTable((), ()), ())
            else:
                p = Path(rec[0])
                sys = load_system(p if p.is_absolute() or base is None else base / p)
            continue
        for key, acc in (("constants", constants), ("predicates", predicates), ("scheme", schemes)):
            got = _header(line, key)
            if got is not None:
                acc.extend(got)
                break
        else:
            body.append((no, line))
    if sys is None:
        raise FileFormatError("missing 'recursive:' header")
    try:
        table = sys.table.extend(constants, predicates)
    except ValueError as e:
        raise FileFormatError(str(e)) from None
    extra = []
    for no, line in body:
        try:
            extra.append(parse_formula(line, table))
        except ParseError as e:
            raise FileFormatError(str(e), no, e.pos + 1) from None
    try:
        return MathSystem(sys, table, tuple(extra), tuple(schemes))
    except ValueError as e:
        raise FileFormatError(str(e)) from None


def load_math_system(path) -> MathSystem:
    path = Path(path)
    if path.suffix == ".rs":
        sys = load_system(path)
        return MathSystem(sys, sys.table)
    return parse_math_system(path.read_text(encoding="utf-8"), path.parent)


def render_math_system(M: MathSystem, recursive_path: str = "none") -> str:
    extra_c = [c for c in M.table.constants if c not in M.sys.table.constants]
    extra_p = [p for p in M.table.predicates if p not in M.sys.table.predicates]
    lines = [f"recursive: {recursive_path}"]
    if extra_c:
        lines.append("constants: " + " ".join(extra_c))
    if extra_p:
        lines.append("predicates: " + " ".join(extra_p))
    for s in M.schemes:
        lines.append(f"scheme: {s}")
    lines += [str(f) for f in M.extra]
    return "\n".join(lines) + "\n"
