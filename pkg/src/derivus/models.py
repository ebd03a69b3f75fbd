"""Finite-model semantics for formulas whose argument lists are single variables or constants.

Every interpretation over a domain {0..d-1} is enumerated at once: truth values
are boolean arrays indexed by (interpretation, value of each variable).
Equations are identity.  Used as an oracle for transformations that claim
semantic equivalence without emitting a proof.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .syntax import And, Const, Eq, Exists, Forall, Iff, Impl, Neg, Or, Pred, Var, subformulas, var_of

MAX_BITS = 16


@dataclass(frozen=True)
class Signature:
    preds: tuple  # (name, arity) pairs
    consts: tuple
    vars: tuple


def _term(lam):
    if len(lam) != 1 or not isinstance(lam[0], (Var, Const)):
        raise ValueError(f"argument list {lam!r} is not a single variable or constant")
    return lam[0]


def signature(*fs) -> Signature:
    preds, consts, vs = set(), set(), set()
    for f in fs:
        vs |= var_of(f)
        for g in subformulas(f):
            if isinstance(g, Pred):
                preds.add((g.name, len(g.args)))
                lists = g.args
            elif isinstance(g, Eq):
                lists = (g.lhs, g.rhs)
            else:
                continue
            for lam in lists:
                t = _term(lam)
                if isinstance(t, Const):
                    consts.add(t.name)
    return Signature(tuple(sorted(preds)), tuple(sorted(consts)), tuple(sorted(vs)))


@dataclass
class Structures:
    """All interpretations of a signature over one domain size, stacked on axis 0."""

    sig: Signature
    d: int
    tables: dict
    consts: dict
    count: int


def structures(sig: Signature, d: int) -> Structures:
    bits = sum(d ** k for _, k in sig.preds)
    if bits > MAX_BITS:
        raise ValueError(f"{bits} relation bits over domain {d} exceed the cap {MAX_BITS}")
    n_rel = 1 << bits
    n_const = d ** len(sig.consts)
    code = np.repeat(np.arange(n_rel, dtype=np.int64), n_const)
    tables, shift = {}, 0
    for name, k in sig.preds:
        cells = d ** k
        col = (code[:, None] >> (shift + np.arange(cells))) & 1
        tables[(name, k)] = col.astype(bool).reshape((len(code),) + (d,) * k)
        shift += cells
    cidx = np.tile(np.arange(n_const), n_rel)
    consts = {c: (cidx // d ** j) % d for j, c in enumerate(sig.consts)}
    return Structures(sig, d, tables, consts, len(code))


# A truth value is a pair (array, axes): the array has shape (count, d, ..., d)
# with one domain axis per variable listed in axes, in that order.

def _align(val, axes: tuple) -> np.ndarray:
    arr, own = val
    kept = [v for v in axes if v in own]
    arr = arr.transpose([0] + [1 + own.index(v) for v in kept])
    return arr.reshape([arr.shape[0]] + [arr.shape[1 + kept.index(v)] if v in own else 1 for v in axes])


def _join(a, b, op):
    axes = tuple(sorted(set(a[1]) | set(b[1])))
    return op(_align(a, axes), _align(b, axes)), axes


def _prime(f, S: Structures):
    terms = [_term(a) for a in f.args] if isinstance(f, Pred) else [_term(f.lhs), _term(f.rhs)]
    axes = tuple(sorted({t.index for t in terms if isinstance(t, Var)}))
    rank = 1 + len(axes)
    idx = []
    for t in terms:
        shape = [1] * rank
        if isinstance(t, Var):
            shape[1 + axes.index(t.index)] = S.d
            idx.append(np.arange(S.d).reshape(shape))
        else:
            shape[0] = S.count
            idx.append(S.consts[t.name].reshape(shape))
    if isinstance(f, Eq):
        out = idx[0] == idx[1]
    else:
        table = S.tables[(f.name, len(f.args))]
        lead = np.arange(S.count).reshape([S.count] + [1] * (rank - 1))
        out = table[(lead,) + tuple(idx)]
    full = (S.count,) + (S.d,) * len(axes)
    return np.broadcast_to(out, full), axes


def evaluate(f, S: Structures):
    """Truth values of f as (array, free-variable axes)."""
    if isinstance(f, (Pred, Eq)):
        return _prime(f, S)
    if isinstance(f, Neg):
        arr, axes = evaluate(f.body, S)
        return ~arr, axes
    if isinstance(f, (Impl, Iff, And, Or)):
        a, b = evaluate(f.left, S), evaluate(f.right, S)
        if isinstance(f, Impl):
            return _join(a, b, lambda x, y: ~x | y)
        if isinstance(f, Iff):
            return _join(a, b, lambda x, y: x == y)
        return _join(a, b, np.logical_and if isinstance(f, And) else np.logical_or)
    if isinstance(f, (Forall, Exists)):
        arr, axes = evaluate(f.body, S)
        if f.var not in axes:
            return arr, axes
        ax = 1 + axes.index(f.var)
        red = arr.all(axis=ax) if isinstance(f, Forall) else arr.any(axis=ax)
        return red, tuple(v for v in axes if v != f.var)
    raise TypeError(f"not a formula: {f!r}")


def _full(val, S: Structures, axes: tuple) -> np.ndarray:
    return np.broadcast_to(_align(val, axes), (S.count,) + (S.d,) * len(axes))


def counterexample(f, g, max_domain: int = 3):
    """First (domain size, interpretation index, assignment...) where f and g differ, else None."""
    sig = signature(f, g)
    for d in range(1, max_domain + 1):
        S = structures(sig, d)
        a, b = evaluate(f, S), evaluate(g, S)
        axes = tuple(sorted(set(a[1]) | set(b[1])))
        diff = _full(a, S, axes) != _full(b, S, axes)
        if diff.any():
            return (d,) + tuple(int(i) for i in np.argwhere(diff)[0])
    return None


def equivalent(f, g, max_domain: int = 3) -> bool:
    return counterexample(f, g, max_domain) is None


def valid(f, max_domain: int = 3) -> bool:
    sig = signature(f)
    return all(evaluate(f, structures(sig, d))[0].all() for d in range(1, max_domain + 1))
