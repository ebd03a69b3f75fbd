"""Proof-to-proof transformations: deduction, contradiction, list homomorphisms, renaming, prenex form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .engine import FRESH_BASE, AxiomBasis, AxiomEq, ModusPonens, Step, Subst
from .kernel import (
    BasisAxiom, EqAxiom, Gen, Induction, ListPolicy, MathSystem, PropAxiom, QuantAxiom, SymbolExtension,
    AtomsOnly, StringsOnly, VariablesOnly, check_proof, induction_image, quantifier_axiom_kind,
)
from .syntax import (
    BINARY, PRIME, QUANT, And, Const, Exists, Forall, Iff, Impl, Neg, Op, Or, Pred, Var, arg_lists,
    free_var_order, free_vars, list_constants, list_vars, map_lists, sbf, subformulas, var_of,
)

AXIOM_RULES = (PropAxiom, EqAxiom, AxiomEq, QuantAxiom, BasisAxiom, AxiomBasis)


class TransformError(ValueError):
    pass


def imp(*fs):
    """Right-nested implication chain → f1 → f2 … fn."""
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = Impl(f, out)
    return out


def fresh_vars(used, count: int) -> list:
    """The `count` lowest unused variable indices of the reserved pool."""
    out = []
    k = FRESH_BASE
    while len(out) < count:
        if k not in used:
            out.append(k)
        k += 1
    return out


def script_vars(steps) -> set:
    out: set = set()
    for st in steps:
        out |= var_of(st.formula)
        j = st.just
        if isinstance(j, Subst):
            out |= {j.var} | list_vars(j.value)
        elif isinstance(j, Gen):
            out.add(j.var)
        elif isinstance(j, Induction):
            out |= set(j.vars) | var_of(j.G)
    return out


class ProofBuilder:
    """Append-only proof with formula de-duplication; every method returns a step index."""

    def __init__(self, steps=()):
        self.steps: list = list(steps)
        self.where: dict = {}
        for i, st in enumerate(self.steps):
            self.where.setdefault(st.formula, i)

    def add(self, f, just) -> int:
        if f in self.where:
            return self.where[f]
        self.steps.append(Step(f, just))
        self.where[f] = len(self.steps) - 1
        return self.where[f]

    def formula(self, i: int):
        return self.steps[i].formula

    def prop(self, f) -> int:
        return self.add(f, PropAxiom())

    def quant(self, f) -> int:
        kind = quantifier_axiom_kind(f)
        if kind is None:
            raise TransformError(f"not a quantifier axiom: {f}")
        return self.add(f, QuantAxiom(kind))

    def mp(self, minor: int, major: int) -> int:
        g = self.formula(major)
        if not isinstance(g, Impl) or g.left != self.formula(minor):
            raise TransformError("modus ponens premises do not match")
        return self.add(g.right, ModusPonens(minor, major))

    def subst(self, i: int, x: int, lam) -> int:
        return self.add(sbf(self.formula(i), lam, x), Subst(i, x, lam))

    def gen(self, i: int, x: int) -> int:
        return self.add(Forall(x, self.formula(i)), Gen(i, x))

    def chain(self, taut, *premises) -> int:
        """Tautology → p1 … → pn C as a propositional axiom, then modus ponens on each premise."""
        i = self.prop(taut)
        for p in premises:
            i = self.mp(p, i)
        return i

    def end_with(self, i: int) -> int:
        """Make step i the last one, repeating it through → F F if needed."""
        if i == len(self.steps) - 1:
            return i
        f = self.formula(i)
        t = self.prop(Impl(f, f))
        self.steps.append(Step(f, ModusPonens(i, t)))
        return len(self.steps) - 1


@dataclass(frozen=True)
class TacticProof:
    steps: tuple
    conclusion: int


# ---------------------------------------------------------------- equivalences and renaming

def _forall_mono(b: ProofBuilder, x: int, A, B, i_ab: int) -> int:
    """From → A B derive → ∀x A ∀x B."""
    fa = Forall(x, A)
    q = b.quant(Impl(fa, A))
    t = b.chain(imp(Impl(fa, A), Impl(A, B), Impl(fa, B)), q, i_ab)
    g = b.gen(t, x)
    return b.mp(g, b.quant(Impl(Forall(x, Impl(fa, B)), Impl(fa, Forall(x, B)))))


def _exists_from_forall(b: ProofBuilder, x: int, A, y: int, B, i_neg: int) -> int:
    """From ↔ ∀x ¬A ∀y ¬B derive ↔ ∃x A ∃y B."""
    P, P2 = Forall(x, Neg(A)), Forall(y, Neg(B))
    E, E2 = Exists(x, A), Exists(y, B)
    c1 = b.quant(Iff(Neg(P), E))
    c2 = b.quant(Iff(Neg(P2), E2))
    return b.chain(imp(Iff(P, P2), Iff(Neg(P), E), Iff(Neg(P2), E2), Iff(E, E2)), i_neg, c1, c2)


def quant_congruence(b: ProofBuilder, Q, x: int, A, A2, i_iff: int) -> int:
    """From ↔ A A2 derive ↔ Q x A Q x A2."""
    if Q is Exists:
        i_neg = b.chain(imp(Iff(A, A2), Iff(Neg(A), Neg(A2))), i_iff)
        i_all = quant_congruence(b, Forall, x, Neg(A), Neg(A2), i_neg)
        return _exists_from_forall(b, x, A, x, A2, i_all)
    fa, fa2 = Forall(x, A), Forall(x, A2)
    fwd = _forall_mono(b, x, A, A2, b.chain(imp(Iff(A, A2), Impl(A, A2)), i_iff))
    bwd = _forall_mono(b, x, A2, A, b.chain(imp(Iff(A, A2), Impl(A2, A)), i_iff))
    return b.chain(imp(Impl(fa, fa2), Impl(fa2, fa), Iff(fa, fa2)), fwd, bwd)


def rename_leaf(b: ProofBuilder, Q, x: int, A, y: int) -> int:
    """↔ Q x A  Q y A[y/x] for y not in var(A), y ≠ x."""
    if Q is Exists:
        i_neg = rename_leaf(b, Forall, x, Neg(A), y)
        return _exists_from_forall(b, x, A, y, sbf(A, (Var(y),), x), i_neg)
    A2 = sbf(A, (Var(y),), x)
    fa, fy = Forall(x, A), Forall(y, A2)
    s = b.subst(b.quant(Impl(fa, A)), x, (Var(y),))
    fwd = b.mp(b.gen(s, y), b.quant(Impl(Forall(y, Impl(fa, A2)), Impl(fa, fy))))
    s2 = b.subst(b.quant(Impl(fy, A2)), y, (Var(x),))
    bwd = b.mp(b.gen(s2, x), b.quant(Impl(Forall(x, Impl(fy, A)), Impl(fy, fa))))
    return b.chain(imp(Impl(fa, fy), Impl(fy, fa), Iff(fa, fy)), fwd, bwd)


def congruence(b: ProofBuilder, F, site: Callable, path=()):
    """Rewrite F bottom-up; site(path, G) may return (G2, index of ↔ G G2) for a quantified G
    whose body was already rewritten. Returns (F2, index of ↔ F F2 or None when F2 == F)."""
    if isinstance(F, PRIME):
        return F, None
    if isinstance(F, Neg):
        A2, i = congruence(b, F.body, site, path + (0,))
        if i is None:
            return F, None
        return Neg(A2), b.chain(imp(Iff(F.body, A2), Iff(F, Neg(A2))), i)
    if isinstance(F, BINARY):
        L2, i = congruence(b, F.left, site, path + (0,))
        R2, j = congruence(b, F.right, site, path + (1,))
        if i is None and j is None:
            return F, None
        i = b.prop(Iff(F.left, F.left)) if i is None else i
        j = b.prop(Iff(F.right, F.right)) if j is None else j
        G = type(F)(L2, R2)
        return G, b.chain(imp(Iff(F.left, L2), Iff(F.right, R2), Iff(F, G)), i, j)
    Q = type(F)
    A2, i = congruence(b, F.body, site, path + (0,))
    cur, idx = F, None
    if i is not None:
        cur = Q(F.var, A2)
        idx = quant_congruence(b, Q, F.var, F.body, A2, i)
    hit = site(path, cur)
    if hit is None:
        return cur, idx
    G2, j = hit
    if idx is None:
        return G2, j
    return G2, b.chain(imp(Iff(F, cur), Iff(cur, G2), Iff(F, G2)), idx, j)


Selector = Union[int, Callable, None]


def _selector(select: Selector) -> Callable:
    if select is None:
        return lambda path, g: True
    if isinstance(select, int):
        return lambda path, g: g.var == select
    if isinstance(select, tuple):
        return lambda path, g: path == select
    return select


def rename_in(b: ProofBuilder, G, y: int, select: Selector = None):
    """Rename the bound variable of the selected quantified subformulas of G to y.

    select is a variable index (sites binding it), a path tuple, a predicate
    (path, subformula) -> bool, or None for every site. Returns (G', index of ↔ G G')."""
    pick = _selector(select)

    def site(path, g):
        if not pick(path, g) or g.var == y:
            return None
        if y in var_of(g.body):
            raise TransformError(f"x{y} occurs in the body of {g}")
        return type(g)(y, sbf(g.body, (Var(y),), g.var)), rename_leaf(b, type(g), g.var, g.body, y)

    G2, i = congruence(b, G, site)
    if i is None:
        i = b.prop(Iff(G, G))
    return G2, i


def rename_bound(G, y: int, select: Selector = None):
    """(G', TacticProof of ↔ G G') with the selected bound occurrences renamed to y."""
    b = ProofBuilder()
    G2, i = rename_in(b, G, y, select)
    return G2, TacticProof(tuple(b.steps), i)


def quant_sites(F, path=()):
    """Quantified subformulas with their paths, in preorder."""
    if isinstance(F, QUANT):
        yield path, F
        yield from quant_sites(F.body, path + (0,))
    elif isinstance(F, Neg):
        yield from quant_sites(F.body, path + (0,))
    elif isinstance(F, BINARY):
        yield from quant_sites(F.left, path + (0,))
        yield from quant_sites(F.right, path + (1,))


def rename_apart(b: ProofBuilder, G, avoid, used):
    """Rename every bound variable of G lying in `avoid` to fresh pool variables.

    Returns (G', index of ↔ G G' or None if nothing changed)."""
    used = set(used) | var_of(G)
    cur, idx = G, None
    while True:
        hit = next(((p, q) for p, q in quant_sites(cur) if q.var in avoid), None)
        if hit is None:
            return cur, idx
        y = fresh_vars(used, 1)[0]
        used.add(y)
        nxt, j = rename_in(b, cur, y, hit[0])
        idx = j if idx is None else b.chain(imp(Iff(G, cur), Iff(cur, nxt), Iff(G, nxt)), idx, j)
        cur = nxt


# ---------------------------------------------------------------- the deduction theorem

def _verify(script, M: MathSystem, policy: ListPolicy, what: str) -> None:
    v = check_proof(script, M, policy)
    if not v:
        raise TransformError(f"{what} does not verify: {v}")


class _Deducer:
    def __init__(self, phi, M: MathSystem, policy: ListPolicy, used: set):
        self.phi = phi
        self.M = M
        self.policy = policy
        self.b = ProofBuilder()
        self.out: list = []
        self.used = used
        self._psi = None

    def psi(self):
        """Renamed copy of phi avoiding var(B_S), with the index of ↔ phi psi (None if equal)."""
        if self._psi is None:
            self._psi = rename_apart(self.b, self.phi, self.M.basis_vars(), self.used)
        return self._psi

    def step(self, f, just) -> int:
        b, phi = self.b, self.phi
        if isinstance(just, AXIOM_RULES):
            if f == phi and isinstance(just, BasisAxiom):
                return b.prop(Impl(phi, phi))
            i = b.add(f, just)
            return b.chain(imp(f, phi, f), i)
        if isinstance(just, ModusPonens):
            F = self.formula_of(just.minor)
            G = f
            i_f, i_fg = self.out[just.minor], self.out[just.major]
            return b.chain(imp(Impl(phi, F), Impl(phi, Impl(F, G)), Impl(phi, G)), i_f, i_fg)
        if isinstance(just, Subst):
            return b.subst(self.out[just.source], just.var, just.value)
        if isinstance(just, Gen):
            x = just.var
            g = b.gen(self.out[just.source], x)
            body = b.formula(self.out[just.source])
            return b.mp(g, b.quant(Impl(Forall(x, body), Impl(phi, Forall(x, body.right)))))
        if isinstance(just, Induction):
            return self.induction(f, just)
        raise TransformError(f"cannot transform justification {just!r}")

    def formula_of(self, i: int):
        return self.b.formula(self.out[i]).right

    def induction(self, f, ind: Induction) -> int:
        b, phi = self.b, self.phi
        psi, i_iff = self.psi()
        Gs = Impl(psi, ind.G)
        prem = []
        for k, s in ind.premises:
            Fk = self.M.sys.basis[k]
            Fp = induction_image(Fk, ind.pred, ind.vars, ind.G)
            Fpsi = induction_image(Fk, ind.pred, ind.vars, Gs)
            i = self.out[s]
            if i_iff is not None:
                i = b.chain(imp(Iff(phi, psi), Impl(phi, Fp), Impl(psi, Fp)), i_iff, i)
            prem.append((k, b.chain(imp(Impl(psi, Fp), Fpsi), i)))
        head = f.left
        i_ind = b.add(Impl(head, Gs), Induction(ind.pred, ind.vars, Gs, tuple(prem)))
        target = Impl(phi, f)
        if i_iff is None:
            return b.chain(imp(Impl(head, Gs), target), i_ind)
        return b.chain(imp(Impl(head, Gs), Iff(phi, psi), target), i_ind, i_iff)


def deduction_map(phi, script, M: MathSystem, policy: ListPolicy) -> tuple:
    """(steps of a proof in M, index of → phi F for each input step)."""
    if free_vars(phi):
        raise TransformError(f"{phi} has free variables")
    _verify(script, M.with_axioms(phi), policy, "input script")
    d = _Deducer(phi, M, policy, script_vars(script) | M.basis_vars())
    for st in script:
        d.out.append(d.step(st.formula, st.just))
    return d.b.steps, d.out


def deduction(phi, script, M: MathSystem, policy: ListPolicy) -> list:
    return deduction_map(phi, script, M, policy)[0]


def deduction_multi(Phi, F, script, M: MathSystem, policy: ListPolicy) -> list:
    """Proof in M ending with → phi1 … → phim F for the statements of Phi that the script uses."""
    Phi = list(Phi)
    used: list = []
    for st in script:
        if isinstance(st.just, BasisAxiom) and st.formula in Phi and not M.is_basis(st.formula):
            if st.formula not in used:
                used.append(st.formula)
    if not any(st.formula == F for st in script):
        raise TransformError(f"{F} is not a step of the script")
    _verify(script, M.with_axioms(*used), policy, "input script")
    cur = list(script)
    target = F
    for k in range(len(used) - 1, -1, -1):
        cur = deduction(used[k], cur, M.with_axioms(*used[:k]), policy)
        target = Impl(used[k], target)
    b = ProofBuilder(cur)
    b.end_with(b.where[target])
    return b.steps


def contradictory_pair(steps):
    """Indices (i, j) with step j = ¬ step i, or None."""
    where: dict = {}
    for j, st in enumerate(steps):
        f = st.formula
        if isinstance(f, Neg) and f.body in where:
            return where[f.body], j
        if Neg(f) in where:
            return j, where[Neg(f)]
        where.setdefault(f, j)
    return None


def by_contradiction(phi, script, M: MathSystem, policy: ListPolicy) -> list:
    """From a script in M(¬phi) containing some F and ¬F, a proof of phi in M."""
    pair = contradictory_pair(script)
    if pair is None:
        raise TransformError("the script contains no formula together with its negation")
    i, j = pair
    F = script[i].formula
    ext = list(script)
    ext.append(Step(imp(F, Neg(F), phi), PropAxiom()))
    ext.append(Step(imp(Neg(F), phi), ModusPonens(i, len(ext) - 1)))
    ext.append(Step(phi, ModusPonens(j, len(ext) - 1)))
    steps, out = deduction_map(Neg(phi), ext, M, policy)
    b = ProofBuilder(steps)
    k = b.chain(imp(Impl(Neg(phi), phi), phi), out[-1])
    b.end_with(k)
    return b.steps


# ---------------------------------------------------------------- Z-homomorphisms

class ZHomSpec:
    """A list map fixing variables; Z is the set of variables it may introduce."""
    Z: frozenset = frozenset()
    kind = "zhom"

    def item(self, it):
        raise NotImplementedError

    def image(self, lam):
        raise NotImplementedError

    def formula(self, f):
        return map_lists(f, self.image)

    def target(self, policy: ListPolicy) -> ListPolicy:
        return policy


@dataclass(frozen=True)
class EraseOpTerms(ZHomSpec):
    """Maximal operation terms a( … ) become the variable delta(a), default z."""
    z: int = FRESH_BASE
    delta: tuple = ()
    kind = "erase-opterms"

    @property
    def Z(self):
        return frozenset({self.z} | {v for _, v in self.delta})

    def image(self, lam):
        d = dict(self.delta)
        return tuple(Var(d.get(it.name, self.z)) if isinstance(it, Op) else it for it in lam)

    def target(self, policy):
        return StringsOnly()


@dataclass(frozen=True)
class CollapseToAtoms(ZHomSpec):
    z: int = FRESH_BASE
    kind = "collapse-atoms"

    @property
    def Z(self):
        return frozenset({self.z})

    def image(self, lam):
        if len(lam) == 1 and not isinstance(lam[0], Op):
            return lam
        return (Var(self.z),)

    def target(self, policy):
        return AtomsOnly()


@dataclass(frozen=True)
class CollapseToVariables(ZHomSpec):
    z: int = FRESH_BASE
    kind = "collapse-vars"

    @property
    def Z(self):
        return frozenset({self.z})

    def image(self, lam):
        if len(lam) == 1 and isinstance(lam[0], Var):
            return lam
        return (Var(self.z),)

    def target(self, policy):
        return VariablesOnly()


@dataclass(frozen=True)
class ConstantsToVars(ZHomSpec):
    """Each occurrence of constant c_k (at any depth) becomes the variable z_k."""
    mapping: tuple = ()
    kind = "constants-to-vars"

    @property
    def Z(self):
        return frozenset(v for _, v in self.mapping)

    def image(self, lam):
        d = dict(self.mapping)
        out = []
        for it in lam:
            if isinstance(it, Const) and it.name in d:
                out.append(Var(d[it.name]))
            elif isinstance(it, Op):
                if it.name in d:
                    raise TransformError(f"constant {it.name!r} is used as an operation")
                out.append(Op(it.name, self.image(it.args)))
            else:
                out.append(it)
        return tuple(out)

    def target(self, policy):
        return policy.base if isinstance(policy, SymbolExtension) else policy


ZHOM_KINDS = {
    "erase-opterms": EraseOpTerms,
    "collapse-atoms": CollapseToAtoms,
    "collapse-vars": CollapseToVariables,
}


def zhom_apply(spec: ZHomSpec, script, M: MathSystem) -> list:
    """Step-for-step image of a proof under the list map of spec."""
    Z = spec.Z
    clash = Z & script_vars(script)
    if clash:
        raise TransformError(f"variables {sorted(clash)} of Z occur in the script")
    if Z & M.basis_vars():
        raise TransformError("Z meets the variables of the recursive basis")
    out = []
    for i, st in enumerate(script):
        f, j = spec.formula(st.formula), st.just
        if isinstance(j, (BasisAxiom, AxiomBasis)) and f != st.formula:
            raise TransformError(f"step {i + 1}: the map moves the basis axiom {st.formula}")
        if isinstance(j, Subst):
            j = Subst(j.source, j.var, spec.image(j.value))
        elif isinstance(j, Induction):
            j = Induction(j.pred, j.vars, spec.formula(j.G), j.premises)
        out.append(Step(f, j))
    return out


def generalize_constants(cs, xs, F, script, M: MathSystem, policy: ListPolicy) -> list:
    """From a proof of F c1/x1 … cm/xm in a symbol-extension, a proof of ∀x1 … ∀xm F in M."""
    cs, xs = list(cs), list(xs)
    if len(cs) != len(xs) or len(set(cs)) != len(cs) or len(set(xs)) != len(xs):
        raise TransformError("constants and variables must be distinct and equally many")
    old = [c for c in cs if M.table.is_constant(c)]
    if old:
        raise TransformError(f"{old[0]!r} already belongs to the alphabet")
    new = set(cs)
    for st in script:
        for lam in _lists_of(st):
            new |= {c for c in list_constants(lam) if not M.table.is_constant(c)}
    new = sorted(new)
    ext = SymbolExtension(policy, frozenset(new))
    _verify(script, M.with_constants(new), ext, "input script")
    Fc = F
    for c, x in zip(cs, xs):
        Fc = sbf(Fc, (Const(c),), x)
    if not any(st.formula == Fc for st in script):
        raise TransformError(f"{Fc} is not a step of the script")
    zs = fresh_vars(script_vars(script) | M.basis_vars() | var_of(F) | set(xs), len(new))
    spec = ConstantsToVars(tuple(zip(new, zs)))
    b = ProofBuilder(zhom_apply(spec, script, M))
    z_of = dict(zip(new, zs))
    i = b.where[spec.formula(Fc)]
    for c, x in zip(cs, xs):
        i = b.subst(i, z_of[c], (Var(x),))
    for x in reversed(xs):
        i = b.gen(i, x)
    if cs:
        b.end_with(i)
    return b.steps


def _lists_of(st):
    out = list(arg_lists(st.formula))
    if isinstance(st.just, Subst):
        out.append(st.just.value)
    elif isinstance(st.just, Induction):
        out += arg_lists(st.just.G)
    return out


# ---------------------------------------------------------------- prenex form

def eliminate_connectives(F):
    """Equivalent formula using only ¬, → and quantifiers."""
    if isinstance(F, PRIME):
        return F
    if isinstance(F, Neg):
        return Neg(eliminate_connectives(F.body))
    if isinstance(F, QUANT):
        return type(F)(F.var, eliminate_connectives(F.body))
    A, B = eliminate_connectives(F.left), eliminate_connectives(F.right)
    if isinstance(F, Impl):
        return Impl(A, B)
    if isinstance(F, And):
        return Neg(Impl(A, Neg(B)))
    if isinstance(F, Or):
        return Impl(Neg(A), B)
    return Neg(Impl(Impl(A, B), Neg(Impl(B, A))))


def rename_bound_apart(F):
    """Give every quantifier its own variable, distinct from the free ones; first uses keep their name."""
    taken = set(free_vars(F))
    pool = set(var_of(F))

    def fresh():
        k = 1
        while k in pool:
            k += 1
        pool.add(k)
        return k

    def walk(g):
        if isinstance(g, PRIME):
            return g
        if isinstance(g, Neg):
            return Neg(walk(g.body))
        if isinstance(g, BINARY):
            return type(g)(walk(g.left), walk(g.right))
        x = g.var
        y = x if x not in taken else fresh()
        taken.add(y)
        body = g.body if y == x else sbf(g.body, (Var(y),), x)
        return type(g)(y, walk(body))

    return walk(F)


def _dual(Q):
    return Exists if Q is Forall else Forall


def _pull(F):
    """(prefix [(Q, x)], matrix) for an →/¬ formula with distinct bound variables."""
    if isinstance(F, PRIME):
        return [], F
    if isinstance(F, QUANT):
        pre, m = _pull(F.body)
        return [(type(F), F.var)] + pre, m
    if isinstance(F, Neg):
        pre, m = _pull(F.body)
        return [(_dual(Q), x) for Q, x in pre], Neg(m)
    lp, lm = _pull(F.left)
    rp, rm = _pull(F.right)
    return [(_dual(Q), x) for Q, x in lp] + rp, Impl(lm, rm)


def prenex(F):
    """Prefix form Q1 x1 … Qn xn G with G quantifier-free over ¬ and →."""
    pre, m = _pull(rename_bound_apart(eliminate_connectives(F)))
    for Q, x in reversed(pre):
        m = Q(x, m)
    return m


def is_prenex(F) -> bool:
    while isinstance(F, QUANT):
        F = F.body
    return not any(isinstance(g, (QUANT, Iff, And, Or)) for g in subformulas(F))


# ---------------------------------------------------------------- relative quantification

def relativize_body(F, pred: str = "N0"):
    """Bound every quantifier by the unary predicate pred."""
    if isinstance(F, PRIME):
        return F
    if isinstance(F, Neg):
        return Neg(relativize_body(F.body, pred))
    if isinstance(F, BINARY):
        return type(F)(relativize_body(F.left, pred), relativize_body(F.right, pred))
    guard = Pred(pred, ((Var(F.var),),))
    body = relativize_body(F.body, pred)
    if isinstance(F, Forall):
        return Forall(F.var, Impl(guard, body))
    return Exists(F.var, And(guard, body))


def premise_block(F, pred: str = "N0") -> list:
    """pred x for each free variable of F in order of first occurrence."""
    return [Pred(pred, ((Var(x),),)) for x in free_var_order(F)]


def relativize(F, pred: str = "N0"):
    return imp(*premise_block(F, pred), relativize_body(F, pred))
