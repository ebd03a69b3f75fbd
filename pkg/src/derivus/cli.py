"""Command-line front end: derive, decide, check, encode, transform and lint."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codec import (
    CodecError, classify, decode_rsystem, diag, encode_rsystem, is_s11_predicate, is_s11_theorem,
    parse_code, render_ascii, render_unicode,
)
from .engine import DerivationBudget, RecursiveSystem, check_rderivation, derive
from .formats import FileFormatError, load_system, render_rderivation, render_system
from .kernel import (
    POLICIES, AtomCapExceeded, chi_lint, chi_sign, check_proof, load_math_system, load_proof, render_proof,
    sign_support,
)
from .special import BoundOverflow, NotSpecial, decide, derivation_length_bound, goal_size, profile
from .syntax import ParseError, SymbolTable, parse_formula
from .transformers import (
    ZHOM_KINDS, TransformError, by_contradiction, deduction, generalize_constants, prenex, relativize,
    zhom_apply,
)

OK, REJECT, UNKNOWN, PARSE, POLICY, NOT_SPECIAL, OVERFLOW = range(7)


class Report:
    """Collects output lines; text mode prints prose, report mode prints `key value` lines."""

    def __init__(self, fmt: str):
        self.fmt = fmt

    def say(self, text: str, key: str = "", value: str = "") -> None:
        if self.fmt == "report":
            if key:
                print(f"{key} {value}".rstrip())
        elif text:
            print(text)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _goal(text: str, table: SymbolTable):
    try:
        return parse_formula(text, table)
    except ParseError as e:
        raise FileFormatError(f"goal: {e}", 1, e.pos + 1) from None


def _emit(path, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _system(path: str) -> RecursiveSystem:
    return load_system(path)


def cmd_derive(a, rep: Report) -> int:
    sysm = _system(a.system)
    goal = _goal(a.goal, sysm.table)
    budget = DerivationBudget(max_rounds=a.budget, max_pool=a.pool, max_len=a.max_len)
    r = derive(sysm, goal, budget)
    if not r:
        rep.say(str(r), "result", "unknown")
        rep.say("", "reason", r.reason)
        return UNKNOWN
    v = check_rderivation(r.derivation, sysm)
    if not v:
        rep.say(f"internal error: emitted derivation rejected: {v}", "result", "error")
        return REJECT
    text = render_rderivation(r.derivation)
    rep.say(f"found, {len(r.derivation)} steps", "result", "found")
    rep.say("", "steps", str(len(r.derivation)))
    if a.format == "text" and not a.emit_derivation:
        print(text, end="")
    _emit(a.emit_derivation, text)
    return OK


def cmd_decide(a, rep: Report) -> int:
    sysm = _system(a.system)
    goal = _goal(a.goal, sysm.table)
    try:
        d = decide(sysm, goal)
    except NotSpecial as e:
        rep.say(f"not special: {e}", "error", "not-special")
        return NOT_SPECIAL
    except ValueError as e:
        rep.say(f"error: {e}", "error", str(e))
        return PARSE
    if a.bound:
        try:
            b = derivation_length_bound(profile(sysm), goal_size(goal), a.bound_cap)
        except BoundOverflow as e:
            rep.say(f"bound overflow: {e}", "error", "overflow")
            return OVERFLOW
        rep.say(f"length bound {b}", "bound", str(b))
    rep.say("yes" if d else "no", "result", "yes" if d else "no")
    if d:
        rep.say("", "steps", str(len(d.derivation)))
        _emit(a.emit_derivation, render_rderivation(d.derivation))
    return OK if d else REJECT


def _policy(name: str):
    return POLICIES[name]


def cmd_check(a, rep: Report) -> int:
    M = load_math_system(a.system)
    steps = load_proof(a.proof, M.table)
    v = check_proof(steps, M, _policy(a.policy))
    if v:
        rep.say(f"accept ({len(steps)} steps)", "result", "accept")
        rep.say("", "steps", str(len(steps)))
        return OK
    rep.say(str(v), f"{v.step + 1} {v.code}", v.reason)
    return POLICY if v.code == "policy" else REJECT


def cmd_lint(a, rep: Report) -> int:
    M = load_math_system(a.system)
    steps = load_proof(a.proof, M.table)
    support = sign_support(M.sys)
    findings = chi_lint(steps, M)
    if M.basis_is_recursive:
        signs = [chi_sign(st.formula, M, support) for st in steps]
        pos = sum(1 for s in signs if s == 1)
        rep.say(f"signs: {pos} of {len(steps)} steps positive")
        for i, s in enumerate(signs):
            rep.say("", f"{i + 1} sign", f"{s:+d}")
    else:
        rep.say("basis extends the recursive one; signs not computed", "0 signs", "skipped")
    for f in findings:
        rep.say(f"step {f.step + 1}: {f.code}: {f.message}", f"{f.step + 1} {f.code}", f.message)
    if not findings:
        rep.say("clean", "result", "clean")
        return OK
    rep.say(f"{len(findings)} findings", "result", "flagged")
    return REJECT


def _code_arg(text: str):
    p = Path(text)
    if p.is_file():
        text = p.read_text(encoding="utf-8")
    return parse_code(text)


def _render_code(code, unicode: bool) -> str:
    return render_unicode(code) if unicode else render_ascii(code)


def cmd_encode(a, rep: Report) -> int:
    print(_render_code(encode_rsystem(_system(a.system)), a.unicode))
    return OK


def cmd_decode(a, rep: Report) -> int:
    table = _system(a.table).table if a.table else None
    print(render_system(decode_rsystem(_code_arg(a.code), table)), end="")
    return OK


def cmd_diag(a, rep: Report) -> int:
    code = _code_arg(a.predicate)
    if not is_s11_predicate(code):
        rep.say("not an S11-predicate", "error", "not-predicate")
        return REJECT
    print(_render_code(diag(code), a.unicode))
    return OK


def cmd_classify(a, rep: Report) -> int:
    st = classify(_code_arg(a.code))
    if not st:
        rep.say(f"not a statement: {st.reason}", "result", "not-statement")
        return REJECT
    rep.say(f"{st.arity}-ary statement: {st.formula}", "result", "statement")
    rep.say("", "arity", str(st.arity))
    rep.say("", "formula", str(st.formula))
    rep.say("", "in-alphabet", "yes" if st.in_alphabet else "no")
    return OK


def cmd_s11(a, rep: Report) -> int:
    budget = DerivationBudget(max_rounds=a.budget, max_pool=a.pool)
    v = is_s11_theorem(_code_arg(a.code), budget, engine=a.engine)
    rep.say(v.status + (f" ({v.detail})" if v.detail else ""), "result", v.status)
    return {"theorem": OK, "not-theorem": REJECT}.get(v.status, UNKNOWN)


def _formula_arg(text: str, table: SymbolTable):
    p = Path(text)
    if p.is_file():
        lines = [ln.split("#", 1)[0].strip() for ln in _read(text).splitlines()]
        text = " ".join(ln for ln in lines if ln)
    return _goal(text, table)


def _write_proof(a, steps) -> None:
    text = render_proof(steps)
    if a.output:
        Path(a.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")


def cmd_transform(a, rep: Report) -> int:
    if a.action == "relativize":
        table = load_math_system(a.system).table if a.system else SymbolTable(("0", "s", "+", "*"), ())
        F = _formula_arg(a.formula, table)
        print(relativize(F, a.pred))
        return OK
    M = load_math_system(a.system)
    if a.action == "prenex":
        print(prenex(_formula_arg(a.formula, M.table)))
        return OK
    policy = _policy(a.policy)
    try:
        if a.action in ("deduce", "contradiction"):
            phi = _formula_arg(a.phi, M.table)
            steps = load_proof(a.proof, M.table)
            out = (deduction if a.action == "deduce" else by_contradiction)(phi, steps, M, policy)
        elif a.action == "zhom":
            spec = ZHOM_KINDS[a.kind](z=a.z) if a.z else ZHOM_KINDS[a.kind]()
            steps = load_proof(a.proof, M.table)
            out = zhom_apply(spec, steps, M)
            policy = spec.target(policy)
        else:
            cs = a.constants.split()
            table = M.table.extend(cs, ())
            F = _formula_arg(a.formula, M.table)
            steps = load_proof(a.proof, _extend_for_proof(a.proof, table))
            xs = [int(x.lstrip("x")) for x in a.vars.split()]
            out = generalize_constants(cs, xs, F, steps, M, policy)
    except TransformError as e:
        rep.say(f"error: {e}", "error", str(e))
        return REJECT
    v = check_proof(out, M, policy)
    if not v:
        rep.say(f"internal error: output rejected: {v}", "error", "output-rejected")
        return REJECT
    _write_proof(a, out)
    return OK


def _extend_for_proof(path: str, table: SymbolTable) -> SymbolTable:
    # proofs in a symbol extension may declare extra constants in a `constants:` comment header
    for line in _read(path).splitlines():
        s = line.strip()
        if s.startswith("# constants:"):
            table = table.extend(s.split(":", 1)[1].split(), ())
    return table


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="derivus", description=__doc__)
    p.add_argument("--format", choices=("text", "report"), default="text")
    sub = p.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("derive", help="search for an R-derivation")
    d.add_argument("--system", required=True)
    d.add_argument("--goal", required=True)
    d.add_argument("--budget", type=int, default=8, help="maximum saturation rounds")
    d.add_argument("--pool", type=int, default=10_000, help="maximum list pool size")
    d.add_argument("--max-len", type=int, default=None)
    d.add_argument("--emit-derivation")
    d.set_defaults(fn=cmd_derive)

    d = sub.add_parser("decide", help="decide an elementary prime goal in a special system")
    d.add_argument("--system", required=True)
    d.add_argument("--goal", required=True)
    d.add_argument("--bound", action="store_true", help="also print the derivation length bound")
    d.add_argument("--bound-cap", type=int, default=10 ** 100)
    d.add_argument("--emit-derivation")
    d.set_defaults(fn=cmd_decide)

    for name, fn, doc in (("check", cmd_check, "verify a proof script"), ("lint", cmd_lint, "sign and contradiction lint")):
        c = sub.add_parser(name, help=doc)
        c.add_argument("--system", required=True, help=".rs recursive system or .ms mathematical system")
        c.add_argument("--proof", required=True)
        c.add_argument("--policy", choices=sorted(POLICIES), default="all")
        c.set_defaults(fn=fn)

    e = sub.add_parser("encode-system", help="R-basis string of a recursive system")
    e.add_argument("--system", required=True)
    e.add_argument("--unicode", action="store_true")
    e.set_defaults(fn=cmd_encode)

    e = sub.add_parser("decode-system", help="recursive system from an R-basis string")
    e.add_argument("code", help="coded string or file containing it")
    e.add_argument("--table", help="system file whose symbol names to use")
    e.set_defaults(fn=cmd_decode)

    e = sub.add_parser("diag", help="diagonalization of an S11-predicate")
    e.add_argument("--predicate", required=True, help="coded predicate or file containing it")
    e.add_argument("--unicode", action="store_true")
    e.set_defaults(fn=cmd_diag)

    e = sub.add_parser("classify", help="split a coded string into system and statement")
    e.add_argument("code")
    e.set_defaults(fn=cmd_classify)

    e = sub.add_parser("s11-theorem", help="decide or search an S11-statement")
    e.add_argument("code")
    e.add_argument("--engine", choices=("decode", "s11"), default="decode")
    e.add_argument("--budget", type=int, default=8)
    e.add_argument("--pool", type=int, default=10_000)
    e.set_defaults(fn=cmd_s11)

    t = sub.add_parser("transform", help="proof transformations")
    t.add_argument("action", choices=("deduce", "contradiction", "zhom", "generalize", "prenex", "relativize"))
    t.add_argument("--system")
    t.add_argument("--proof")
    t.add_argument("--phi", help="statement (text or file)")
    t.add_argument("--formula", help="formula (text or file)")
    t.add_argument("--policy", choices=sorted(POLICIES), default="all")
    t.add_argument("--kind", choices=sorted(ZHOM_KINDS), default="erase-opterms")
    t.add_argument("--z", type=int, default=None, help="index of the variable introduced by the map")
    t.add_argument("--constants", default="", help="space-separated new constants")
    t.add_argument("--vars", default="", help="space-separated variables matching --constants")
    t.add_argument("--pred", default="N0", help="guard predicate for relativize")
    t.add_argument("-o", "--output")
    t.set_defaults(fn=cmd_transform)
    return p


def main(argv=None) -> int:
    p = build_parser()
    a = p.parse_args(argv)
    rep = Report(a.format)
    try:
        return a.fn(a, rep)
    except (FileFormatError, ParseError, CodecError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE
    except AtomCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return REJECT
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE


if __name__ == "__main__":
    sys.exit(main())
