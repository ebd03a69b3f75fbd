"""Recursive systems, their universal encoding and Hilbert-style mathematical systems."""
from .syntax import (
    And, Const, Eq, Exists, Forall, Iff, Impl, Neg, Op, Or, ParseError, Pred, SymbolTable, Var,
    cf, free_vars, lst, parse_formula, parse_list, render_formula, render_list, sbf, sbl, sublists, var_of,
)
