"""Exact checkers for the identities and characterizations of the m-weak group inverse.

Each checker returns a :class:`CheckResult`.  A result is one of three
verdicts: ``pass``, ``fail`` (an identity did not hold; the witness names
the first failing equation with both sides) or ``hypothesis-violated``
(the inputs did not meet the statement's preconditions, so nothing was
tested).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterable, Iterator, Union

from .engine import (
    MwgDecomposition,
    NotGroupInvertible,
    Path,
    corner_inverse,
    drazin_from_parts,
    m_weak_group,
    mat_index,
    moore_penrose,
    mwg_decompose,
    mwg_from_blocks,
    pierce_blocks,
    polar_idempotent,
    recover_from_relaxed,
    satisfies_relaxed_system,
    weak_group,
    group_inverse,
    drazin_data,
    core_nilpotent,
)
from .fileio import matrix_to_json
from .matrix import Matrix

__all__ = [
    "Verdict",
    "CheckResult",
    "Instance",
    "REGISTRY",
    "check_definition",
    "check_decomposition",
    "check_relaxed_systems",
    "check_polar",
    "check_laws",
    "check_blocks_and_commutation",
    "check_normal_blocks",
    "check_paths",
    "check_drazin_sum",
    "check_identities",
    "check_double_inverse",
    "check_triple_inverse",
    "check_weak_group_of_inverse",
    "check_core_ep_equivalence",
    "check_power_reduction",
    "check_gg",
    "check_m1_reduction",
    "check_degenerate",
    "check_base_gates",
]


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_VIOLATED = "hypothesis-violated"


@dataclass
class CheckResult:
    check_name: str
    paper_ref: str
    verdict: Verdict
    witness: dict | None = None
    context: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "checkName": self.check_name,
            "paperRef": self.paper_ref,
            "pass": self.passed,
            "verdict": self.verdict.value,
        }
        out.update(self.context)
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class Instance:
    """A square matrix with its derived inverses computed on demand, once."""

    def __init__(self, A: Matrix):
        if not A.is_square:
            raise ValueError(f"instances must be square, got {A.shape}")
        self.A = A
        self.n = A.rows
        self._mwg: dict[int, Matrix] = {}
        self._pow: dict[int, Matrix] = {0: Matrix.identity(A.rows), 1: A}

    @cached_property
    def _dd(self):
        return drazin_data(self.A)

    @property
    def index(self) -> int:
        return self._dd.index

    @property
    def drazin(self) -> Matrix:
        return self._dd.drazin

    @property
    def core_ep(self) -> Matrix:
        return self._dd.core_ep

    @cached_property
    def weak_group(self) -> Matrix:
        C = self.core_ep
        return C @ C @ self.A

    @cached_property
    def identity(self) -> Matrix:
        return Matrix.identity(self.n)

    def power(self, e: int) -> Matrix:
        if e not in self._pow:
            self._pow[e] = self.power(e - 1) @ self.A
        return self._pow[e]

    def mwg(self, m: int) -> Matrix:
        if m not in self._mwg:
            C = self.core_ep
            self._mwg[m] = C ** (m + 1) @ self.power(m)
        return self._mwg[m]


AnyMatrix = Union[Matrix, Instance]


def _inst(A: AnyMatrix) -> Instance:
    return A if isinstance(A, Instance) else Instance(A)


def _jsonable(value):
    if isinstance(value, Matrix):
        return matrix_to_json(value)
    return value


# A condition is (label, lhs, rhs); lhs/rhs are matrices, bools or ints.
Condition = tuple


def _evaluate(
    name: str,
    ref: str,
    conditions: Iterable[Condition],
    inputs: dict[str, Matrix],
    context: dict | None = None,
) -> CheckResult:
    """Consume conditions lazily and stop at the first one that fails."""
    for label, lhs, rhs in conditions:
        if lhs != rhs:
            witness = {
                "equation": label,
                "lhs": _jsonable(lhs),
                "rhs": _jsonable(rhs),
                "inputs": {k: matrix_to_json(v) for k, v in inputs.items()},
            }
            return CheckResult(name, ref, Verdict.FAIL, witness, dict(context or {}))
    return CheckResult(name, ref, Verdict.PASS, None, dict(context or {}))


def _violated(name: str, ref: str, condition: str, inputs: dict[str, Matrix],
              context: dict | None = None) -> CheckResult:
    witness = {
        "hypothesis": condition,
        "inputs": {k: matrix_to_json(v) for k, v in inputs.items()},
    }
    return CheckResult(name, ref, Verdict.HYPOTHESIS_VIOLATED, witness, dict(context or {}))


REF_DEFINITION = "m-weak group inverse: a x^2 = x, x a^(k+1) = a^k, (a^k)* a^(m+1) x = (a^k)* a^m"
REF_DECOMPOSITION = "m-weak group decomposition: a = x + y, x* a^(m-1) y = y x = 0, x group invertible, y nilpotent"
REF_RELAXED = ("relaxed systems: a x^2 = x, (a^m)* a^(m+1) x Hermitian, a^n = a x a^n, x = a a^D x; "
               "R(x) = R(a^D) = R(a^k); a x = (a^cep)^m a^m; x a x = x with (a^k)* and (a^D)* forms")
REF_POLAR = "polar-like idempotent p: p^2 = p, a + p invertible, (a^D)* a^m p = 0, R(a^D) = R(1 - p), a^Wm = a^D (1 - p)"
REF_ADDITIVE = "additive law: ab = ba = 0, a* b = 0 imply (a + b)^Wm = a^Wm + b^Wm"
REF_PRODUCT = "product law: ab = ba, a* b = b a* imply (ab)^Wm = a^Wm b^Wm = b^Wm a^Wm"
REF_BLOCKS = ("corner form relative to p = a a^cep: a^Wm = t^-1 + t^-(m+1) c_m, c_1 = s, c_(i+1) = t c_i + s n^i; "
              "a^Wm = a^cep iff c_m = 0; a a^Wm = a^Wm a iff t^-m c_m = t^-1 s + t^-(m+1) c_m n; "
              "then (a^Wm)^n = (a^n)^W for n > m")
REF_NORMAL_BLOCKS = "normal a: s = 0, hence c_m = 0 and a^Wm = a^cep"
REF_PATHS = "a^Wm = (a^cep)^(m+1) a^m = a^(m-1) (a^m)^W = (a^W)^m a^(m-1) = corner form"
REF_DRAZIN_SUM = "a^D = a1^# + sum_j (a1^#)^(j+1) a2^j when a2 a1 = 0, a2 nilpotent"
REF_IDENTITIES = "x = x a x, a x = x a^2 x, a x = a^m x^m for x = a^Wm"
REF_DOUBLE = "(a^Wm)^Wm = a^2 a^Wm"
REF_TRIPLE = "((a^Wm)^Wm)^Wm = a^Wm"
REF_WG_OF_INVERSE = "(a^Wm)^W = a^2 a^Wm"
REF_CORE_EP_EQUIV = "a^Wm = a^cep  <=>  a a^cep = (a^cep)^m a^m  <=>  a a^Wm = a a^cep"
REF_POWER_REDUCTION = "a^Wm = a^(m-1) (a^m)^W"
REF_GG = "GG inverse: X = (a^cep)^3 a^2 = (a^W)^2 a = a^W2, a X = (a^cep)^2 a^2, R(X) in R(a^k)"
REF_M1 = "a^W1 = a^W; weak group system a x^2 = x, (a* a^2 x)* = a* a^2 x, a^k = x a^(k+1)"
REF_DEGENERATE = "ind(a) <= 1: a^Wm = a^W = a^# = a^D; invertible a: all equal a^-1"
REF_BASE = ("Penrose equations A X A = A, X A X = X, (A X)* = A X, (X A)* = X A; "
            "Drazin a x^2 = x, a x = x a, a^k = x a^(k+1); core-EP a x^2 = x, (a x)* = a x, a^k = x a^(k+1)")


def _ctx(m: int | None = None, **extra) -> dict:
    ctx = dict(extra)
    if m is not None:
        ctx["m"] = m
    return ctx


# --- checkers on a single matrix --------------------------------------------


def check_definition(A: AnyMatrix, X: Matrix, m: int, context: dict | None = None) -> CheckResult:
    """The three defining equations at k = ind(A)."""
    inst = _inst(A)
    a = inst.A
    if X.shape != a.shape:
        return _violated("definition", REF_DEFINITION, "x conformable with a", {"a": a, "x": X}, context)
    k = inst.index

    def conditions():
        yield "a x^2 = x", a @ X @ X, X
        yield "x a^(k+1) = a^k", X @ inst.power(k + 1), inst.power(k)
        Akh = inst.power(k).H
        yield "(a^k)* a^(m+1) x = (a^k)* a^m", Akh @ inst.power(m + 1) @ X, Akh @ inst.power(m)

    return _evaluate("definition", REF_DEFINITION, conditions(), {"a": a, "x": X}, _ctx(m, **(context or {})))


def check_decomposition(A: AnyMatrix, d: MwgDecomposition, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a, x, y, m = inst.A, d.x, d.y, d.m

    def conditions():
        yield "a = x + y", x + y, a
        yield "y x = 0", (y @ x).is_zero(), True
        yield "x* a^(m-1) y = 0", (x.H @ inst.power(m - 1) @ y).is_zero(), True
        yield "x group invertible (ind(x) <= 1)", mat_index(x) <= 1, True
        yield "y nilpotent", y.is_nilpotent(), True

    return _evaluate("decomposition", REF_DECOMPOSITION, conditions(), {"a": a, "x": x, "y": y},
                     _ctx(m, **(context or {})))


def check_relaxed_systems(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a, k = inst.A, inst.index
    x = inst.mwg(m)
    aD = inst.drazin

    def conditions():
        yield "x satisfies the relaxed system", satisfies_relaxed_system(a, x, m), True
        yield "a a^D x = x", recover_from_relaxed(a, x, m), x
        yield "R(x) = R(a^D)", x.range_equals(aD), True
        yield "R(x) = R(a^k)", x.range_equals(inst.power(k)), True
        yield "a x = (a^cep)^m a^m", a @ x, inst.core_ep ** m @ inst.power(m)
        yield "a x^2 = x", a @ x @ x, x
        yield "x a x = x", x @ a @ x, x
        Akh = inst.power(k).H
        yield "(a^k)* a^(m+1) x = (a^k)* a^m", Akh @ inst.power(m + 1) @ x, Akh @ inst.power(m)
        aDh = aD.H
        yield "(a^D)* a^(m+1) x = (a^D)* a^m", aDh @ inst.power(m + 1) @ x, aDh @ inst.power(m)
        yield "a^k = x a^(k+1)", x @ inst.power(k + 1), inst.power(k)

    return _evaluate("relaxed", REF_RELAXED, conditions(), {"a": a}, _ctx(m, **(context or {})))


def check_polar(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a = inst.A
    p = inst.identity - a @ inst.mwg(m)
    aD = inst.drazin
    q = inst.identity - p

    def conditions():
        yield "p = polar_idempotent(a, m)", p, polar_idempotent(a, m)
        yield "p^2 = p", p @ p, p
        yield "a + p invertible", (a + p).is_invertible(), True
        yield "(a^D)* a^m p = 0", (aD.H @ inst.power(m) @ p).is_zero(), True
        if m == 1:
            yield "(a^D)* a E = 0", (aD.H @ a @ p).is_zero(), True
        yield "R(a^D) = R(1 - p)", aD.range_equals(q), True
        yield "a^D (1 - p) = a^Wm", aD @ q, inst.mwg(m)

    return _evaluate("polar", REF_POLAR, conditions(), {"a": a}, _ctx(m, **(context or {})))


def check_laws(kind: str, a: Matrix, b: Matrix, m: int, context: dict | None = None) -> CheckResult:
    """Additive or product law; hypotheses are re-verified first."""
    inputs = {"a": a, "b": b}
    kind = kind.lower()
    ctx = _ctx(m, **(context or {}))
    if kind not in ("additive", "product"):
        raise ValueError(f"unknown law kind {kind!r}")
    if a.shape != b.shape or not a.is_square:
        ref = REF_ADDITIVE if kind == "additive" else REF_PRODUCT
        return _violated(f"{kind}-law", ref, "a, b square and conformable", inputs, ctx)
    if kind == "additive":
        name, ref = "additive-law", REF_ADDITIVE
        for label, ok in (("a b = 0", (a @ b).is_zero()),
                          ("b a = 0", (b @ a).is_zero()),
                          ("a* b = 0", (a.H @ b).is_zero())):
            if not ok:
                return _violated(name, ref, label, inputs, ctx)
        xa, xb = m_weak_group(a, m), m_weak_group(b, m)

        def conditions():
            yield "(a + b)^Wm = a^Wm + b^Wm", m_weak_group(a + b, m), xa + xb

    else:
        name, ref = "product-law", REF_PRODUCT
        ah = a.H
        for label, ok in (("a b = b a", a @ b == b @ a),
                          ("a* b = b a*", ah @ b == b @ ah)):
            if not ok:
                return _violated(name, ref, label, inputs, ctx)
        xa, xb = m_weak_group(a, m), m_weak_group(b, m)

        def conditions():
            lhs = m_weak_group(a @ b, m)
            yield "(ab)^Wm = a^Wm b^Wm", lhs, xa @ xb
            yield "(ab)^Wm = b^Wm a^Wm", lhs, xb @ xa

    return _evaluate(name, ref, conditions(), inputs, ctx)


def check_blocks_and_commutation(A: AnyMatrix, m: int, n: int | None = None,
                                 context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a = inst.A
    n = m + 1 if n is None else n
    ctx = _ctx(m, n=n, **(context or {}))
    if n <= m:
        return _violated("blocks", REF_BLOCKS, "m < n", {"a": a}, ctx)
    B = pierce_blocks(a, m)
    x = inst.mwg(m)
    q = inst.identity - B.p

    def conditions():
        yield "p^2 = p", B.p @ B.p, B.p
        yield "p* = p", B.p.H, B.p
        yield "(1 - p) a p = 0", (q @ a @ B.p).is_zero(), True
        yield "a = t + s + n", B.t + B.s + B.n, a
        yield "n nilpotent", B.n.is_nilpotent(), True
        # c_m is the upper-right corner of a^m; an independent check of the recursion.
        yield "c_m = p a^m (1 - p)", B.c[m - 1], B.p @ inst.power(m) @ q
        yield "corner form = a^Wm", mwg_from_blocks(B, m), x
        yield "(a^Wm = a^cep) <=> (c_m = 0)", x == inst.core_ep, B.c[m - 1].is_zero()
        t_inv = corner_inverse(B)
        commute = a @ x == x @ a
        block_eq = (t_inv ** m @ B.c[m - 1]
                    == t_inv @ B.s + t_inv ** (m + 1) @ B.c[m - 1] @ B.n)
        yield "(a x = x a) <=> (t^-m c_m = t^-1 s + t^-(m+1) c_m n)", commute, block_eq
        if commute:
            yield "(a^Wm)^n = (a^n)^W", x ** n, weak_group(inst.power(n))

    return _evaluate("blocks", REF_BLOCKS, conditions(), {"a": a}, ctx)


def check_normal_blocks(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a = inst.A
    ctx = _ctx(m, **(context or {}))
    if a @ a.H != a.H @ a:
        return _violated("normal-blocks", REF_NORMAL_BLOCKS, "a a* = a* a", {"a": a}, ctx)
    B = pierce_blocks(a, m)

    def conditions():
        yield "s = 0", B.s.is_zero(), True
        yield "c_m = 0", B.c[m - 1].is_zero(), True
        yield "a^Wm = a^cep", inst.mwg(m), inst.core_ep

    return _evaluate("normal-blocks", REF_NORMAL_BLOCKS, conditions(), {"a": a}, ctx)


# --- engine invariants ------------------------------------------------------


def check_paths(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a = inst.A

    def conditions():
        ref = inst.mwg(m)
        for p in (Path.POWER_REDUCE, Path.WEAK_POWER, Path.BLOCKS):
            yield f"{p.value} path = {Path.CORE_EP.value} path", m_weak_group(a, m, p), ref

    return _evaluate("paths", REF_PATHS, conditions(), {"a": a}, _ctx(m, **(context or {})))


def check_drazin_sum(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    """Drazin-of-sum formula on the m-weak group decomposition and on the core-nilpotent split."""
    inst = _inst(A)
    a = inst.A

    def conditions():
        d = mwg_decompose(a, m)
        yield "x = a^2 a^Wm", d.x, a @ a @ inst.mwg(m)
        yield "x^# = a^Wm", group_inverse(d.x), inst.mwg(m)
        k = max(1, mat_index(d.y))
        yield "sum formula on (x, y) = a^D", drazin_from_parts(d.x, d.y, k), inst.drazin
        a1, a2 = core_nilpotent(a)
        yield "a1 a2 = 0", (a1 @ a2).is_zero(), True
        yield "a2 a1 = 0", (a2 @ a1).is_zero(), True
        k2 = max(1, mat_index(a2))
        yield "sum formula on core-nilpotent split = a^D", drazin_from_parts(a1, a2, k2), inst.drazin

    return _evaluate("drazin-sum", REF_DRAZIN_SUM, conditions(), {"a": a}, _ctx(m, **(context or {})))


def check_identities(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a = inst.A
    x = inst.mwg(m)

    def conditions():
        yield "x = x a x", x @ a @ x, x
        yield "a x = x a^2 x", a @ x, x @ inst.power(2) @ x
        yield "a x = a^m x^m", a @ x, inst.power(m) @ x ** m

    return _evaluate("identities", REF_IDENTITIES, conditions(), {"a": a}, _ctx(m, **(context or {})))


def check_double_inverse(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    x = inst.mwg(m)

    def conditions():
        yield "(a^Wm)^Wm = a^2 a^Wm", m_weak_group(x, m), inst.power(2) @ x

    return _evaluate("double-inverse", REF_DOUBLE, conditions(), {"a": inst.A}, _ctx(m, **(context or {})))


def check_triple_inverse(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    x = inst.mwg(m)

    def conditions():
        yield "((a^Wm)^Wm)^Wm = a^Wm", m_weak_group(m_weak_group(x, m), m), x

    return _evaluate("triple-inverse", REF_TRIPLE, conditions(), {"a": inst.A}, _ctx(m, **(context or {})))


def _weak_group_system(a: Matrix, x: Matrix) -> Iterator[Condition]:
    k = mat_index(a)
    ah = a.H
    w = ah @ a @ a @ x
    yield "a x^2 = x", a @ x @ x, x
    yield "(a* a^2 x)* = a* a^2 x", w.H, w
    Ak = a ** k
    yield "a^k = x a^(k+1)", x @ Ak @ a, Ak


def check_weak_group_of_inverse(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    x = inst.mwg(m)

    def conditions():
        wx = weak_group(x)
        yield "(a^Wm)^W = a^2 a^Wm", wx, inst.power(2) @ x
        for label, lhs, rhs in _weak_group_system(x, wx):
            yield f"weak group system for a^Wm: {label}", lhs, rhs

    return _evaluate("weak-group-of-inverse", REF_WG_OF_INVERSE, conditions(), {"a": inst.A},
                     _ctx(m, **(context or {})))


def check_core_ep_equivalence(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a, C, x = inst.A, inst.core_ep, inst.mwg(m)
    s1 = x == C
    s2 = a @ C == C ** m @ inst.power(m)
    s3 = a @ x == a @ C

    def conditions():
        yield "(a^Wm = a^cep) <=> (a a^cep = (a^cep)^m a^m)", s1, s2
        yield "(a^Wm = a^cep) <=> (a a^Wm = a a^cep)", s1, s3

    return _evaluate("core-ep-equivalence", REF_CORE_EP_EQUIV, conditions(), {"a": a},
                     _ctx(m, **(context or {}), coincides=s1))


def check_power_reduction(A: AnyMatrix, m: int, context: dict | None = None) -> CheckResult:
    inst = _inst(A)

    def conditions():
        yield "a^Wm = a^(m-1) (a^m)^W", inst.power(m - 1) @ weak_group(inst.power(m)), inst.mwg(m)

    return _evaluate("power-reduction", REF_POWER_REDUCTION, conditions(), {"a": inst.A},
                     _ctx(m, **(context or {})))


def check_gg(A: AnyMatrix, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a, C = inst.A, inst.core_ep
    X = C @ C @ C @ inst.power(2)

    def conditions():
        W = inst.weak_group
        yield "(a^cep)^3 a^2 = (a^W)^2 a", X, W @ W @ a
        yield "(a^cep)^3 a^2 = a^W2", X, inst.mwg(2)
        yield "a X = (a^cep)^2 a^2", a @ X, C @ C @ inst.power(2)
        yield "R(X) in R(a^k)", X.range_contained_in(inst.power(inst.index)), True

    return _evaluate("gg-inverse", REF_GG, conditions(), {"a": a}, dict(context or {}))


def check_m1_reduction(A: AnyMatrix, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a = inst.A

    def conditions():
        yield "a^W1 = a^W", inst.mwg(1), inst.weak_group
        yield from _weak_group_system(a, inst.weak_group)

    return _evaluate("m1-reduction", REF_M1, conditions(), {"a": a}, dict(context or {}))


def check_degenerate(A: AnyMatrix, ms: Iterable[int] = (1, 2, 3), context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a, k = inst.A, inst.index
    ms = list(ms)

    def conditions():
        if k > 1:
            try:
                group_inverse(a)
            except NotGroupInvertible as exc:
                yield "group inverse refused with the index", exc.index, k
            else:
                yield "group inverse refused for index > 1", False, True
            return
        g = group_inverse(a)
        yield "a^# = a^D", g, inst.drazin
        yield "a^W = a^#", inst.weak_group, g
        for m in ms:
            yield f"a^W{m} = a^#", inst.mwg(m), g
        if k == 0:
            yield "a^D = a^-1", inst.drazin, a.inverse()
            yield "a^cep = a^-1", inst.core_ep, a.inverse()

    return _evaluate("degenerate-coherence", REF_DEGENERATE, conditions(), {"a": a},
                     dict(context or {}, index=k))


def check_base_gates(A: AnyMatrix, context: dict | None = None) -> CheckResult:
    inst = _inst(A)
    a, k = inst.A, inst.index
    X = moore_penrose(a)
    D = inst.drazin
    C = inst.core_ep
    Ak, Ak1 = inst.power(k), inst.power(k + 1)

    def conditions():
        yield "A X A = A", a @ X @ a, a
        yield "X A X = X", X @ a @ X, X
        yield "(A X)* = A X", (a @ X).is_hermitian(), True
        yield "(X A)* = X A", (X @ a).is_hermitian(), True
        yield "drazin: a x^2 = x", a @ D @ D, D
        yield "drazin: a x = x a", a @ D, D @ a
        yield "drazin: a^k = x a^(k+1)", D @ Ak1, Ak
        yield "index: rank(a^k) = rank(a^(k+1))", Ak.rank(), Ak1.rank()
        if k > 0:
            yield "index is least", inst.power(k - 1).rank() != Ak.rank(), True
        yield "core-EP: a x^2 = x", a @ C @ C, C
        yield "core-EP: (a x)* = a x", (a @ C).is_hermitian(), True
        yield "core-EP: a^k = x a^(k+1)", C @ Ak1, Ak

    return _evaluate("base-gates", REF_BASE, conditions(), {"a": a}, dict(context or {}, index=k))


# Checkers reachable by name from the command line.  Each entry takes
# (a, x, y, m) where x/y are optional extra matrices.
def _cli_definition(a, x, y, m):
    return check_definition(a, x if x is not None else m_weak_group(a, m), m)


def _cli_decomposition(a, x, y, m):
    d = mwg_decompose(a, m)
    return check_decomposition(a, MwgDecomposition(m, x if x is not None else d.x, y if y is not None else d.y))


def _cli_law(kind):
    def run(a, x, y, m):
        if x is None:
            raise ValueError(f"{kind}-law needs the second matrix via --x")
        return check_laws(kind, a, x, m)
    return run


REGISTRY: dict[str, tuple[str, Callable[..., CheckResult]]] = {
    "definition": (REF_DEFINITION, _cli_definition),
    "decomposition": (REF_DECOMPOSITION, _cli_decomposition),
    "relaxed": (REF_RELAXED, lambda a, x, y, m: check_relaxed_systems(a, m)),
    "polar": (REF_POLAR, lambda a, x, y, m: check_polar(a, m)),
    "additive-law": (REF_ADDITIVE, _cli_law("additive")),
    "product-law": (REF_PRODUCT, _cli_law("product")),
    "blocks": (REF_BLOCKS, lambda a, x, y, m: check_blocks_and_commutation(a, m)),
    "normal-blocks": (REF_NORMAL_BLOCKS, lambda a, x, y, m: check_normal_blocks(a, m)),
    "paths": (REF_PATHS, lambda a, x, y, m: check_paths(a, m)),
    "drazin-sum": (REF_DRAZIN_SUM, lambda a, x, y, m: check_drazin_sum(a, m)),
    "identities": (REF_IDENTITIES, lambda a, x, y, m: check_identities(a, m)),
    "double-inverse": (REF_DOUBLE, lambda a, x, y, m: check_double_inverse(a, m)),
    "triple-inverse": (REF_TRIPLE, lambda a, x, y, m: check_triple_inverse(a, m)),
    "weak-group-of-inverse": (REF_WG_OF_INVERSE, lambda a, x, y, m: check_weak_group_of_inverse(a, m)),
    "core-ep-equivalence": (REF_CORE_EP_EQUIV, lambda a, x, y, m: check_core_ep_equivalence(a, m)),
    "power-reduction": (REF_POWER_REDUCTION, lambda a, x, y, m: check_power_reduction(a, m)),
    "gg-inverse": (REF_GG, lambda a, x, y, m: check_gg(a)),
    "m1-reduction": (REF_M1, lambda a, x, y, m: check_m1_reduction(a)),
    "degenerate-coherence": (REF_DEGENERATE, lambda a, x, y, m: check_degenerate(a, (m,))),
    "base-gates": (REF_BASE, lambda a, x, y, m: check_base_gates(a)),
}
