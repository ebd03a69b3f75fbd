"""String encodings of systems and formulas over the 11- and 17-symbol coding alphabets.

Coded strings are tuples of symbol indices.  Index i names ``A17[i]``; the
first eleven symbols form the smaller alphabet.  Files use the compact ASCII
spelling (``''*'*p'a'``); the unicode renderer reproduces typeset strings
with primes and combining underlines.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional, Union

from .engine import DerivationBudget, RecursiveSystem, derive
from .formats import parse_system
from .special import decide, is_special
from .syntax import (
    And, Const, Eq, Exists, Forall, Iff, Impl, Neg, Op, Or, Pred, SymbolTable, Var,
    is_elementary, is_prime, is_rformula,
)

A11 = ("a", "v", "p", "□", "'", "*", "~_", "(_", ")_", ",_", "->_")
A17 = A11 + ("!_", "<->_", "&_", "|_", "forall_", "exists_")
SYM = {name: i for i, name in enumerate(A17)}
A, V, P, BOX, ACC, STAR, EQ, LP, RP, COMMA, IMPL, NEG, IFF, AND, OR, ALL, EX = range(17)

_UNDERLINE = "̲"
_UNICODE = {"~_": "∼", "(_": "(", ")_": ")", ",_": ",", "->_": "→",
            "!_": "¬", "<->_": "↔", "&_": "&", "|_": "∨", "forall_": "∀", "exists_": "∃"}
_PRIMES = {1: "′", 2: "″", 3: "‴", 4: "⁗"}
_ASCII_RE = re.compile(r"<->_|->_|forall_|exists_|~_|\(_|\)_|,_|!_|&_|\|_|[avp□'*]|\s+")
_UNI_UNDER = {c: SYM[k] for k, c in _UNICODE.items()}
_BINARY_CODE = {Impl: IMPL, Iff: IFF, And: AND, Or: OR}
_CODE_BINARY = {v: k for k, v in _BINARY_CODE.items()}

Code = tuple


class CodecError(ValueError):
    def __init__(self, message: str, pos: int = 0):
        super().__init__(f"position {pos}: {message}")
        self.pos = pos


# ---------------------------------------------------------------- text forms

def parse_code(text: str) -> Code:
    """Read a coded string in ASCII or unicode spelling; whitespace is ignored."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PRIMES.values():
            out.extend([ACC] * next(k for k, v in _PRIMES.items() if v == ch))
            i += 1
            continue
        if ch in _UNI_UNDER and text[i + 1:i + 2] == _UNDERLINE:
            out.append(_UNI_UNDER[ch])
            i += 2
            continue
        m = _ASCII_RE.match(text, i)
        if not m:
            raise CodecError(f"unexpected character {ch!r}", i)
        out.append(SYM[m.group()])
        i = m.end()
    return tuple(out)


def render_ascii(code: Code) -> str:
    return "".join(A17[c] for c in code)


def render_unicode(code: Code) -> str:
    """Typeset form: accent runs become prime characters, coded punctuation is underlined."""
    parts = []
    i = 0
    while i < len(code):
        c = code[i]
        if c == ACC:
            j = i
            while j < len(code) and code[j] == ACC:
                j += 1
            run = j - i
            parts.append(_PRIMES[4] * (run // 4) + (_PRIMES[run % 4] if run % 4 else ""))
            i = j
            continue
        name = A17[c]
        parts.append(_UNICODE[name] + _UNDERLINE if name in _UNICODE else name)
        i += 1
    return "".join(parts)


def code_to_list(code: Code) -> tuple:
    """The coded string as an elementary list over the coding alphabet."""
    return tuple(Const(A17[c]) for c in code)


def list_to_code(lam) -> Code:
    try:
        return tuple(SYM[it.name] for it in lam)
    except (AttributeError, KeyError):
        raise CodecError("list is not a string over the coding alphabet") from None


# ---------------------------------------------------------------- encoding

def _accents(n: int) -> Code:
    return (ACC,) * n


def _number(n: int) -> Code:
    return (BOX,) if n == 0 else _accents(n)


def encode_list(lam, table: SymbolTable) -> Code:
    out: list = []
    for it in lam:
        if isinstance(it, Var):
            out += [V, *_accents(it.index)]
        elif isinstance(it, Const):
            out += [A, *_accents(_position(table.constants, it.name))]
        else:
            out += [A, *_accents(_position(table.constants, it.name)), LP, *encode_list(it.args, table), RP]
    return tuple(out)


def _position(names, name) -> int:
    try:
        return names.index(name) + 1
    except ValueError:
        raise CodecError(f"symbol {name!r} is not in the table") from None


def encode_formula(f, table: SymbolTable) -> Code:
    out: list = []
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Eq):
            out += [EQ, *encode_list(g.lhs, table), COMMA, *encode_list(g.rhs, table)]
        elif isinstance(g, Pred):
            out += [P, *_accents(_position(table.predicates, g.name))]
            for k, a in enumerate(g.args):
                if k:
                    out.append(COMMA)
                out += encode_list(a, table)
        elif isinstance(g, Neg):
            out.append(NEG)
            stack.append(g.body)
        elif isinstance(g, (Forall, Exists)):
            out += [ALL if isinstance(g, Forall) else EX, V, *_accents(g.var)]
            stack.append(g.body)
        else:
            out.append(_BINARY_CODE[type(g)])
            stack += [g.right, g.left]
    return tuple(out)


def encode_formula_a17(f, table: SymbolTable) -> Code:
    return encode_formula(f, table)


def encode_rformula(f, table: SymbolTable) -> Code:
    if not is_rformula(f):
        raise CodecError("only R-formulas have an 11-symbol encoding")
    return encode_formula(f, table)


def encode_rsystem(sys: RecursiveSystem) -> Code:
    t = sys.table
    out = [*_number(len(t.constants)), STAR, *_number(len(t.predicates)), STAR]
    if not sys.basis:
        out += [BOX, STAR]
    for f in sys.basis:
        out += [*encode_rformula(f, t), STAR]
    return tuple(out)


# ---------------------------------------------------------------- decoding

def positional_table(k: int, l: int) -> SymbolTable:
    return SymbolTable(tuple(f"a{i}" for i in range(1, k + 1)), tuple(f"p{i}" for i in range(1, l + 1)))


class _Reader:
    """Recursive-descent reader over a coded string.

    With lenient=True symbol indices beyond the table get positional names
    a<i>/p<i>; the largest indices seen are recorded."""

    def __init__(self, code: Code, table: SymbolTable, start: int = 0, stop: Optional[int] = None,
                 lenient: bool = False):
        self.code = code
        self.i = start
        self.stop = len(code) if stop is None else stop
        self.table = table
        self.lenient = lenient
        self.max_const = 0
        self.max_pred = 0

    def peek(self):
        return self.code[self.i] if self.i < self.stop else None

    def take(self, sym: int) -> None:
        if self.peek() != sym:
            raise CodecError(f"expected {A17[sym]!r}", self.i)
        self.i += 1

    def accents(self) -> int:
        n = 0
        while self.peek() == ACC:
            n += 1
            self.i += 1
        if not n:
            raise CodecError("expected an accent", self.i)
        return n

    def _name(self, names, n: int, kind: str) -> str:
        if n <= len(names):
            return names[n - 1]
        if self.lenient:
            return f"{kind}{n}"
        raise CodecError(f"{kind}{n} exceeds the alphabet of size {len(names)}", self.i)

    def item(self):
        c = self.peek()
        if c == V:
            self.i += 1
            return Var(self.accents())
        if c == A:
            self.i += 1
            n = self.accents()
            self.max_const = max(self.max_const, n)
            name = self._name(self.table.constants, n, "a")
            if self.peek() == LP:
                self.i += 1
                inner = self.list()
                self.take(RP)
                return Op(name, inner)
            return Const(name)
        raise CodecError("expected a list item", self.i)

    def list(self) -> tuple:
        items = [self.item()]
        while self.peek() in (A, V):
            items.append(self.item())
        return tuple(items)

    def formula(self):
        c = self.peek()
        if c == EQ:
            self.i += 1
            lhs = self.list()
            self.take(COMMA)
            return Eq(lhs, self.list())
        if c == P:
            self.i += 1
            n = self.accents()
            self.max_pred = max(self.max_pred, n)
            name = self._name(self.table.predicates, n, "p")
            args = []
            if self.peek() in (A, V):
                args.append(self.list())
                while self.peek() == COMMA:
                    self.i += 1
                    args.append(self.list())
            return Pred(name, tuple(args))
        if c in _CODE_BINARY:
            self.i += 1
            left = self.formula()
            return _CODE_BINARY[c](left, self.formula())
        if c == NEG:
            self.i += 1
            return Neg(self.formula())
        if c in (ALL, EX):
            self.i += 1
            self.take(V)
            var = self.accents()
            body = self.formula()
            return Forall(var, body) if c == ALL else Exists(var, body)
        raise CodecError("expected a formula", self.i)

    def done(self) -> None:
        if self.i != self.stop:
            raise CodecError("trailing symbols", self.i)


def decode_formula_a17(code: Code, table: SymbolTable):
    r = _Reader(tuple(code), table)
    f = r.formula()
    r.done()
    return f


def decode_rformula(code: Code, table: SymbolTable):
    f = decode_formula_a17(code, table)
    if not is_rformula(f) or any(c >= NEG for c in code):
        raise CodecError("not an R-formula")
    return f


def _count(code: Code, start: int, stop: int) -> int:
    seg = code[start:stop]
    if seg == (BOX,):
        return 0
    if seg and all(c == ACC for c in seg):
        return len(seg)
    raise CodecError("alphabet size must be □ or a run of accents", start)


def _stars(code: Code) -> list:
    return [i for i, c in enumerate(code) if c == STAR]


def decode_rsystem(code: Code, table: Optional[SymbolTable] = None) -> RecursiveSystem:
    """Rebuild a system from its R-basis string.

    Symbol names come from table when its sizes fit, else they are positional."""
    code = tuple(code)
    if any(c >= NEG for c in code):
        raise CodecError("symbol outside the 11-symbol alphabet")
    stars = _stars(code)
    if len(stars) < 3 or stars[-1] != len(code) - 1:
        raise CodecError("an R-basis string has at least three '*' and ends with '*'", len(code))
    k = _count(code, 0, stars[0])
    l = _count(code, stars[0] + 1, stars[1])
    if table is None or (len(table.constants), len(table.predicates)) != (k, l):
        table = positional_table(k, l)
    bounds = list(zip(stars[1:], stars[2:]))
    if len(bounds) == 1 and code[bounds[0][0] + 1:bounds[0][1]] == (BOX,):
        return RecursiveSystem(table, ())
    basis = []
    for s, e in bounds:
        if e == s + 1:
            raise CodecError("empty axiom", e)
        r = _Reader(code, table, s + 1, e)
        f = r.formula()
        r.done()
        if not is_rformula(f):
            raise CodecError("basis entry is not an R-formula", s + 1)
        basis.append(f)
    return RecursiveSystem(table, tuple(basis))


def is_rbasis_string(code: Code) -> bool:
    try:
        decode_rsystem(code)
    except (CodecError, ValueError):
        return False
    return True


# ---------------------------------------------------------------- statements and theorems

@dataclass(frozen=True)
class S11Statement:
    arity: int
    system: RecursiveSystem
    formula: object
    split: int
    in_alphabet: bool

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotStatement:
    reason: str

    def __bool__(self) -> bool:
        return False


def classify(code: Code) -> Union[S11Statement, NotStatement]:
    """Split a coded string into an R-basis prefix and an elementary prime formula."""
    code = tuple(code)
    stars = _stars(code)
    if not stars:
        return NotStatement("no R-basis prefix")
    cut = stars[-1] + 1
    try:
        sys = decode_rsystem(code[:cut])
    except (CodecError, ValueError) as e:
        return NotStatement(f"prefix is not an R-basis string ({e})")
    if cut == len(code):
        return NotStatement("no formula after the R-basis prefix")
    r = _Reader(code, sys.table, cut, lenient=True)
    try:
        f = r.formula()
        r.done()
    except CodecError as e:
        return NotStatement(f"suffix is not a formula ({e})")
    if not is_prime(f) or not is_elementary(f):
        return NotStatement("suffix is not an elementary prime formula")
    arity = 2 if isinstance(f, Eq) else len(f.args)
    inside = r.max_const <= len(sys.table.constants) and r.max_pred <= len(sys.table.predicates)
    return S11Statement(arity, sys, f, cut, inside)


@dataclass(frozen=True)
class TheoremVerdict:
    status: str  # "theorem", "not-theorem" or "unknown"
    engine: str
    derivation: Optional[list] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == "theorem"


def is_s11_theorem(code: Code, budget: DerivationBudget = DerivationBudget(), engine: str = "decode") -> TheoremVerdict:
    """Check an S11-statement.

    engine="decode" runs the decoded system directly: the decider when it is
    special, otherwise saturation.  engine="s11" searches for the universal
    predicate inside the universal system itself."""
    st = classify(code)
    if not st:
        raise CodecError(f"not an S11-statement: {st.reason}")
    if engine == "s11":
        goal = Pred("Omega", (code_to_list(tuple(code)),))
        r = derive(build_s11(), goal, budget)
        if r:
            return TheoremVerdict("theorem", engine, r.derivation)
        return TheoremVerdict("unknown", engine, detail=str(r))
    if engine != "decode":
        raise ValueError(f"unknown engine {engine!r}")
    if not st.in_alphabet:
        # every formula of a derivation coded in S11 stays inside the system's alphabet
        return TheoremVerdict("not-theorem", engine, detail="formula uses symbols outside the system")
    f, sys = st.formula, st.system
    if is_special(sys):
        if isinstance(f, Eq):
            ok = f.lhs == f.rhs
            return TheoremVerdict("theorem" if ok else "not-theorem", engine)
        d = decide(sys, f)
        return TheoremVerdict("theorem" if d else "not-theorem", engine, d.derivation)
    r = derive(sys, f, budget)
    if r:
        return TheoremVerdict("theorem", engine, r.derivation)
    return TheoremVerdict("unknown", engine, detail=str(r))


# ---------------------------------------------------------------- the universal system

@lru_cache(maxsize=1)
def _s11_source() -> str:
    return (resources.files("derivus") / "data" / "s11.rs").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def build_s11() -> RecursiveSystem:
    return parse_system(_s11_source())


def s11_labels() -> tuple:
    labels = []
    for line in _s11_source().splitlines():
        if line.strip() and not line.lstrip().startswith("#") and "#" in line:
            labels.append(line.rsplit("#", 1)[1].strip())
    return tuple(labels)


def s11_special_part() -> RecursiveSystem:
    """The universal system without its final axiom; every remaining axiom is special."""
    s = build_s11()
    return RecursiveSystem(s.table, s.basis[:-1])


# ---------------------------------------------------------------- diagonalization

def g11(code: Code) -> Code:
    out: list = []
    for c in code:
        if c > IMPL:
            raise CodecError("g11 is defined on the 11-symbol alphabet only")
        out += [A, *_accents(c + 1)]
    return tuple(out)


def diag(code: Code) -> Code:
    code = tuple(code)
    return code + g11(code)


def is_s11_predicate(code: Code) -> bool:
    """An R-basis string followed by a single coded predicate symbol."""
    code = tuple(code)
    stars = _stars(code)
    if not stars:
        return False
    cut = stars[-1] + 1
    tail = code[cut:]
    return (is_rbasis_string(code[:cut]) and len(tail) >= 2 and tail[0] == P
            and all(c == ACC for c in tail[1:]))
