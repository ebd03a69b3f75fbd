"""Symbols, lists, formulas and the substitution machinery shared by all modules."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Union

RESERVED = frozenset({"~", "->", "!", "<->", "&", "|", "forall", "exists", "(", ")", ","})
_VAR_RE = re.compile(r"x([1-9][0-9]*)$")
_TOKEN_RE = re.compile(r"\(_|\)_|,_|[(),]|[^\s(),]+")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int = 0):
        super().__init__(message)
        self.pos = pos


# ---------------------------------------------------------------- lists

@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True)
class Op:
    name: str
    args: tuple

    def __post_init__(self):
        if not self.args:
            raise ValueError(f"operation term {self.name}( ) needs a nonempty list")

    def __str__(self) -> str:
        return f"{self.name} ( {render_list(self.args)} )"


Item = Union[Const, Var, Op]
ListExpr = tuple  # tuple[Item, ...], always nonempty


def lst(*items) -> ListExpr:
    """Build a flat list; strings become constants, ints variables, tuples are spliced."""
    out: list = []
    for it in items:
        if isinstance(it, str):
            out.append(Const(it))
        elif isinstance(it, int):
            out.append(Var(it))
        elif isinstance(it, tuple):
            out.extend(it)
        else:
            out.append(it)
    return tuple(out)


def render_list(lam: ListExpr) -> str:
    return " ".join(str(it) for it in lam)


def symbol_count(lam: ListExpr) -> int:
    """Number of symbols of the list written out, brackets included."""
    n = 0
    for it in lam:
        n += 1
        if isinstance(it, Op):
            n += 2 + symbol_count(it.args)
    return n


def list_vars(lam: ListExpr) -> frozenset:
    out = set()
    _collect_vars(lam, out)
    return frozenset(out)


def _collect_vars(lam, out: set) -> None:
    for it in lam:
        if isinstance(it, Var):
            out.add(it.index)
        elif isinstance(it, Op):
            _collect_vars(it.args, out)


def list_var_order(lam: ListExpr) -> list:
    """Distinct variables in order of first appearance."""
    seen: list = []
    def walk(l):
        for it in l:
            if isinstance(it, Var):
                if it.index not in seen:
                    seen.append(it.index)
            elif isinstance(it, Op):
                walk(it.args)
    walk(lam)
    return seen


def list_constants(lam: ListExpr) -> frozenset:
    out = set()
    def walk(l):
        for it in l:
            if isinstance(it, Const):
                out.add(it.name)
            elif isinstance(it, Op):
                out.add(it.name)
                walk(it.args)
    walk(lam)
    return frozenset(out)


def is_elementary(obj) -> bool:
    if isinstance(obj, tuple):
        return not list_vars(obj)
    return not var_of(obj)


def sbl(lam: ListExpr, mu: ListExpr, x: int) -> ListExpr:
    out: list = []
    for it in lam:
        if isinstance(it, Var):
            if it.index == x:
                out.extend(mu)
            else:
                out.append(it)
        elif isinstance(it, Op):
            out.append(Op(it.name, sbl(it.args, mu, x)))
        else:
            out.append(it)
    return tuple(out)


def sublists(lam: ListExpr) -> frozenset:
    out: set = set()
    _sublists(lam, out)
    return frozenset(out)


def _sublists(lam, out: set) -> None:
    n = len(lam)
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.add(lam[i:j])
        it = lam[i]
        if isinstance(it, Op):
            _sublists(it.args, out)


def occurrences(lam: ListExpr, alpha: ListExpr) -> Iterator[tuple]:
    """Yield paths to every contiguous occurrence of alpha inside lam.

    A path is a tuple of (item index) steps into op terms followed by a
    (start, stop) slice at the innermost level.
    """
    k = len(alpha)
    for i in range(len(lam) - k + 1):
        if lam[i:i + k] == alpha:
            yield ((), (i, i + k))
    for i, it in enumerate(lam):
        if isinstance(it, Op):
            for inner, sl in occurrences(it.args, alpha):
                yield ((i,) + inner, sl)


def replace_at(lam: ListExpr, path: tuple, beta: ListExpr) -> ListExpr:
    steps, (a, b) = path
    if not steps:
        return lam[:a] + tuple(beta) + lam[b:]
    i = steps[0]
    it = lam[i]
    return lam[:i] + (Op(it.name, replace_at(it.args, (steps[1:], (a, b)), beta)),) + lam[i + 1:]


# ---------------------------------------------------------------- formulas

@dataclass(frozen=True)
class Eq:
    lhs: ListExpr
    rhs: ListExpr

    def __str__(self) -> str:
        return f"~ {render_list(self.lhs)} , {render_list(self.rhs)}"


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return self.name + " " + " , ".join(render_list(a) for a in self.args)


@dataclass(frozen=True)
class Neg:
    body: "Formula"

    def __str__(self) -> str:
        return f"! {self.body}"


@dataclass(frozen=True)
class _Binary:
    left: "Formula"
    right: "Formula"
    symbol = ""

    def __str__(self) -> str:
        return f"{self.symbol} {self.left} {self.right}"


@dataclass(frozen=True)
class Impl(_Binary):
    symbol = "->"


@dataclass(frozen=True)
class Iff(_Binary):
    symbol = "<->"


@dataclass(frozen=True)
class And(_Binary):
    symbol = "&"


@dataclass(frozen=True)
class Or(_Binary):
    symbol = "|"


@dataclass(frozen=True)
class _Quant:
    var: int
    body: "Formula"
    symbol = ""

    def __str__(self) -> str:
        return f"{self.symbol} x{self.var} {self.body}"


@dataclass(frozen=True)
class Forall(_Quant):
    symbol = "forall"


@dataclass(frozen=True)
class Exists(_Quant):
    symbol = "exists"


Formula = Union[Eq, Pred, Neg, Impl, Iff, And, Or, Forall, Exists]
PRIME = (Eq, Pred)
BINARY = (Impl, Iff, And, Or)
QUANT = (Forall, Exists)


def render_formula(f: Formula) -> str:
    return str(f)


def is_prime(f) -> bool:
    return isinstance(f, PRIME)


def is_rformula(f) -> bool:
    while isinstance(f, Impl):
        if not is_prime(f.left):
            return False
        f = f.right
    return is_prime(f)


def rchain(premises: Iterable, conclusion: Formula) -> Formula:
    out = conclusion
    for p in reversed(list(premises)):
        out = Impl(p, out)
    return out


def r_split(f: Formula) -> tuple:
    """(premises, conclusion) of an R-formula."""
    prem = []
    while isinstance(f, Impl):
        prem.append(f.left)
        f = f.right
    return prem, f


def prime_args(f) -> tuple:
    return (f.lhs, f.rhs) if isinstance(f, Eq) else f.args


def arg_lists(f: Formula) -> list:
    """All argument lists of the formula, left to right."""
    out: list = []
    for p in primes(f):
        out.extend(prime_args(p))
    return out


def primes(f: Formula) -> Iterator:
    if isinstance(f, PRIME):
        yield f
    elif isinstance(f, Neg):
        yield from primes(f.body)
    elif isinstance(f, BINARY):
        yield from primes(f.left)
        yield from primes(f.right)
    else:
        yield from primes(f.body)


def subformulas(f: Formula) -> Iterator:
    yield f
    if isinstance(f, Neg):
        yield from subformulas(f.body)
    elif isinstance(f, BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, QUANT):
        yield from subformulas(f.body)


def var_of(obj) -> frozenset:
    if isinstance(obj, tuple):
        return list_vars(obj)
    out = set()
    for g in subformulas(obj):
        if isinstance(g, QUANT):
            out.add(g.var)
        elif isinstance(g, PRIME):
            for a in prime_args(g):
                _collect_vars(a, out)
    return frozenset(out)


def free_vars(f: Formula) -> frozenset:
    if isinstance(f, PRIME):
        out = set()
        for a in prime_args(f):
            _collect_vars(a, out)
        return frozenset(out)
    if isinstance(f, Neg):
        return free_vars(f.body)
    if isinstance(f, BINARY):
        return free_vars(f.left) | free_vars(f.right)
    return free_vars(f.body) - {f.var}


def free_var_order(f: Formula) -> list:
    """Free variables in order of first occurrence."""
    out: list = []
    def walk(g, bound):
        if isinstance(g, PRIME):
            for a in prime_args(g):
                for v in list_var_order(a):
                    if v not in bound and v not in out:
                        out.append(v)
        elif isinstance(g, Neg):
            walk(g.body, bound)
        elif isinstance(g, BINARY):
            walk(g.left, bound)
            walk(g.right, bound)
        else:
            walk(g.body, bound | {g.var})
    walk(f, frozenset())
    return out


def constants_of(f: Formula) -> frozenset:
    out = set()
    for a in arg_lists(f):
        out |= list_constants(a)
    return frozenset(out)


def predicates_of(f: Formula) -> frozenset:
    """Set of (predicate, arity) pairs."""
    return frozenset((p.name, len(p.args)) for p in primes(f) if isinstance(p, Pred))


def map_lists(f: Formula, fn: Callable) -> Formula:
    """Apply fn to every argument list (quantified variables are untouched)."""
    if isinstance(f, Eq):
        return Eq(fn(f.lhs), fn(f.rhs))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(fn(a) for a in f.args))
    if isinstance(f, Neg):
        return Neg(map_lists(f.body, fn))
    if isinstance(f, BINARY):
        return type(f)(map_lists(f.left, fn), map_lists(f.right, fn))
    return type(f)(f.var, map_lists(f.body, fn))


def map_primes(f: Formula, fn: Callable) -> Formula:
    if isinstance(f, PRIME):
        return fn(f)
    if isinstance(f, Neg):
        return Neg(map_primes(f.body, fn))
    if isinstance(f, BINARY):
        return type(f)(map_primes(f.left, fn), map_primes(f.right, fn))
    return type(f)(f.var, map_primes(f.body, fn))


def sbf(f: Formula, mu: ListExpr, x: int) -> Formula:
    if isinstance(f, Eq):
        return Eq(sbl(f.lhs, mu, x), sbl(f.rhs, mu, x))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(sbl(a, mu, x) for a in f.args))
    if isinstance(f, Neg):
        return Neg(sbf(f.body, mu, x))
    if isinstance(f, BINARY):
        return type(f)(sbf(f.left, mu, x), sbf(f.right, mu, x))
    if f.var == x:
        return f
    return type(f)(f.var, sbf(f.body, mu, x))


def cf(f: Formula, mu: ListExpr, x: int) -> bool:
    if isinstance(f, PRIME):
        return True
    if isinstance(f, Neg):
        return cf(f.body, mu, x)
    if isinstance(f, BINARY):
        return cf(f.left, mu, x) and cf(f.right, mu, x)
    if x not in free_vars(f):
        return True
    return f.var not in list_vars(mu) and cf(f.body, mu, x)


# ---------------------------------------------------------------- symbol tables and parsing

@dataclass(frozen=True)
class SymbolTable:
    constants: tuple = ()
    predicates: tuple = ()
    _const_set: frozenset = field(init=False, repr=False, compare=False)
    _pred_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cs, ps = tuple(self.constants), tuple(self.predicates)
        object.__setattr__(self, "constants", cs)
        object.__setattr__(self, "predicates", ps)
        for name in cs + ps:
            if name in RESERVED or _VAR_RE.match(name) or not _TOKEN_RE.fullmatch(name):
                raise ValueError(f"illegal symbol name {name!r}")
        if len(set(cs)) != len(cs) or len(set(ps)) != len(ps):
            raise ValueError("duplicate symbol")
        if set(cs) & set(ps):
            raise ValueError(f"constants and predicates overlap: {sorted(set(cs) & set(ps))}")
        object.__setattr__(self, "_const_set", frozenset(cs))
        object.__setattr__(self, "_pred_set", frozenset(ps))

    def is_constant(self, name: str) -> bool:
        return name in self._const_set

    def is_predicate(self, name: str) -> bool:
        return name in self._pred_set

    def extend(self, constants=(), predicates=()) -> "SymbolTable":
        cs = self.constants + tuple(c for c in constants if c not in self._const_set)
        ps = self.predicates + tuple(p for p in predicates if p not in self._pred_set)
        return SymbolTable(cs, ps)


def tokenize(text: str) -> list:
    return [(m.group(), m.start()) for m in _TOKEN_RE.finditer(text)]


class _Stream:
    def __init__(self, text: str, table: SymbolTable):
        self.toks = tokenize(text)
        self.i = 0
        self.table = table
        self.end = len(text)

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j][0] if j < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else self.end

    def take(self) -> str:
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input", self.end)
        t = self.toks[self.i][0]
        self.i += 1
        return t

    def expect(self, tok: str) -> None:
        pos = self.pos()
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}", pos)

    def starts_item(self) -> bool:
        t = self.peek()
        return t is not None and (self.table.is_constant(t) or _VAR_RE.match(t) is not None)

    def parse_list(self) -> ListExpr:
        items = []
        while self.starts_item():
            t = self.take()
            m = _VAR_RE.match(t)
            if m:
                items.append(Var(int(m.group(1))))
            elif self.peek() == "(":
                self.take()
                inner = self.parse_list()
                self.expect(")")
                items.append(Op(t, inner))
            else:
                items.append(Const(t))
        if not items:
            t = self.peek()
            raise ParseError("empty list" if t is None else f"unknown symbol or misplaced token {t!r}", self.pos())
        return tuple(items)

    def parse_formula(self) -> Formula:
        pos = self.pos()
        t = self.take()
        if t == "!":
            return Neg(self.parse_formula())
        if t in ("->", "<->", "&", "|"):
            cls = {"->": Impl, "<->": Iff, "&": And, "|": Or}[t]
            left = self.parse_formula()
            return cls(left, self.parse_formula())
        if t in ("forall", "exists"):
            vpos = self.pos()
            v = self.take()
            m = _VAR_RE.match(v)
            if not m:
                raise ParseError(f"quantifier needs a variable, got {v!r}", vpos)
            cls = Forall if t == "forall" else Exists
            return cls(int(m.group(1)), self.parse_formula())
        if t == "~":
            lhs = self.parse_list()
            self.expect(",")
            return Eq(lhs, self.parse_list())
        if self.table.is_predicate(t):
            args = []
            if self.starts_item():
                args.append(self.parse_list())
                while self.peek() == ",":
                    self.take()
                    args.append(self.parse_list())
            return Pred(t, tuple(args))
        raise ParseError(f"unknown symbol {t!r} where a formula was expected", pos)

    def done(self) -> None:
        if self.i != len(self.toks):
            raise ParseError(f"trailing input {self.peek()!r}", self.pos())


def parse_list(text: str, table: SymbolTable) -> ListExpr:
    s = _Stream(text, table)
    lam = s.parse_list()
    s.done()
    return lam


def parse_formula(text: str, table: SymbolTable) -> Formula:
    s = _Stream(text, table)
    f = s.parse_formula()
    s.done()
    return f


def check_symbols(f, table: SymbolTable) -> None:
    """Raise ValueError if f uses a symbol outside the table."""
    for a in arg_lists(f) if not isinstance(f, tuple) else [f]:
        bad = [c for c in list_constants(a) if not table.is_constant(c)]
        if bad:
            raise ValueError(f"unknown constant {sorted(bad)[0]!r}")
    if not isinstance(f, tuple):
        for name, _ in predicates_of(f):
            if not table.is_predicate(name):
                raise ValueError(f"unknown predicate {name!r}")
