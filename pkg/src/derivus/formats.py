"""Plain-text file formats for systems and derivations."""
from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .engine import AxiomBasis, AxiomEq, ModusPonens, RecursiveSystem, Step, Subst
from .syntax import ParseError, SymbolTable, parse_formula, parse_list


class FileFormatError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {message}" if line else message)
        self.line = line
        self.col = col


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip() if not raw.lstrip().startswith("#") else ""
        if line.strip():
            yield no, line


def _header(line: str, key: str):
    m = re.match(rf"\s*{key}\s*:(.*)$", line)
    return m.group(1).split() if m else None


def parse_system(text: str) -> RecursiveSystem:
    constants = predicates = None
    basis = []
    table = None
    for no, line in _content_lines(text):
        if constants is None:
            constants = _header(line, "constants")
            if constants is None:
                raise FileFormatError("expected 'constants:' header", no, 1)
            continue
        if predicates is None:
            predicates = _header(line, "predicates")
            if predicates is None:
                raise FileFormatError("expected 'predicates:' header", no, 1)
            try:
                table = SymbolTable(tuple(constants), tuple(predicates))
            except ValueError as e:
                raise FileFormatError(str(e), no, 1) from None
            continue
        try:
            basis.append(parse_formula(line, table))
        except ParseError as e:
            raise FileFormatError(str(e), no, e.pos + 1) from None
    if table is None:
        raise FileFormatError("missing 'constants:'/'predicates:' headers")
    try:
        return RecursiveSystem(table, tuple(basis))
    except ValueError as e:
        raise FileFormatError(str(e)) from None


def render_system(sys: RecursiveSystem) -> str:
    lines = ["constants: " + " ".join(sys.table.constants),
             "predicates: " + " ".join(sys.table.predicates)]
    lines += [str(f) for f in sys.basis]
    return "\n".join(lines) + "\n"


def load_system(path) -> RecursiveSystem:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("derivus") / "fixtures" / name))


def load_fixture(name: str) -> RecursiveSystem:
    return load_system(fixture_path(name))


def _index(tok: str, no: int, col: int) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise FileFormatError(f"bad step number {tok!r}", no, col)
    return int(tok) - 1


def _var(tok: str, no: int, col: int) -> int:
    m = re.fullmatch(r"x([1-9][0-9]*)", tok)
    if not m:
        raise FileFormatError(f"bad variable {tok!r}", no, col)
    return int(m.group(1))


def split_step(line: str, no: int):
    if ";" not in line:
        raise FileFormatError("expected '<formula> ; <rule>'", no, len(line) + 1)
    k = line.rindex(";")
    return line[:k], line[k + 1:].split(), k + 2


def parse_rderivation(text: str, table: SymbolTable) -> list:
    steps = []
    for no, line in _content_lines(text):
        ftext, rule, col = split_step(line, no)
        try:
            f = parse_formula(ftext, table)
        except ParseError as e:
            raise FileFormatError(str(e), no, e.pos + 1) from None
        if not rule:
            raise FileFormatError("missing rule", no, col)
        name, args = rule[0], rule[1:]
        if name == "axiom-eq" and not args:
            just = AxiomEq()
        elif name == "basis" and len(args) == 1:
            just = AxiomBasis(_index(args[0], no, col))
        elif name == "mp" and len(args) == 2:
            just = ModusPonens(_index(args[0], no, col), _index(args[1], no, col))
        elif name == "subst" and len(args) >= 4 and args[2] == ":=":
            try:
                value = parse_list(" ".join(args[3:]), table)
            except ParseError as e:
                raise FileFormatError(str(e), no, col) from None
            just = Subst(_index(args[0], no, col), _var(args[1], no, col), value)
        else:
            raise FileFormatError(f"unknown rule {' '.join(rule)!r}", no, col)
        steps.append(Step(f, just))
    return steps


def render_rderivation(steps) -> str:
    return "".join(f"{st.formula} ; {st.just}\n" for st in steps)
