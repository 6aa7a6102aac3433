"""Low-degree cochains of the reduced complex with coefficients in ``A^{⊗p}``.

A 0-cochain is a class in ``M / H_+ M``; a 1-cochain is an H-linear map
``A -> M`` given on generators; a 2-cochain takes a pair of generators to
``(H⊗H) ⊗_H M``.
"""
from __future__ import annotations

import itertools
from typing import Dict, Mapping, Tuple

from .hopf import add_term
from .modules import Key, Tensor, act_diag_key
from .bialgebra import Bialgebra, compat_defect
from .pseudoalgebra import PseudoAlgebra, act_left, act_right, pstar
from .pseudotensor import PseudoTensor, apply_to_target
from .report import Report, defect_check

Cochain1 = Dict[str, Tensor]
Cochain2 = Dict[Tuple[str, str], PseudoTensor]


def cochain0_rep(m: Tensor) -> Tensor:
    """Representative of ``m`` modulo ``H_+ M`` whose last factor has unit coefficient.

    Uses ``y ⊗ x·z ≡ S(x)·y ⊗ z`` (diagonal action on ``y``); for a module
    element this is the counit applied to the coefficient.
    """
    hopf = m.hopf
    unit = hopf.unit()
    out: dict = {}
    for key, c in m.coeffs.items():
        x, lab = key[-1]
        if len(key) == 1:
            add_term(out, ((unit, lab),), c * hopf.counit_basis(x))
            continue
        for s, cs in hopf.antipode_basis(x).items():
            for k, ck in act_diag_key(hopf, s, key[:-1]).items():
                add_term(out, k + ((unit, lab),), c * cs * ck)
    return Tensor(hopf, m.arity, out)


def _collapse_second(x: PseudoTensor) -> Tensor:
    """``(1⊗ε)`` on a normal form: ``(h⊗1)⊗_H n  ->  h·n``."""
    out: dict = {}
    for ((h,), mk), c in x.store.items():
        for k, ck in act_diag_key(x.hopf, h, mk).items():
            add_term(out, k, c * ck)
    return Tensor(x.hopf, x.p, out)


def _collapse_first(x: PseudoTensor) -> Tensor:
    """``(ε⊗1)`` on a normal form: ``(h⊗1)⊗_H n  ->  ε(h) n``."""
    out: dict = {}
    for ((h,), mk), c in x.store.items():
        add_term(out, mk, c * x.hopf.counit_basis(h))
    return Tensor(x.hopf, x.p, out)


def d0(alg: PseudoAlgebra, m: Tensor) -> Cochain1:
    """``d(1⊗_H m)(a) = (1⊗ε)(a*m) - (ε⊗1)(m*a)`` on every generator ``a``."""
    out = {}
    for g in alg.labels:
        a = alg.gen(g)
        out[g] = _collapse_second(act_left(alg, a, m)) - _collapse_first(act_right(alg, m, a))
    return out


def cochain1_apply(gamma: Mapping[str, Tensor], hopf, arity: int):
    """Basis-level evaluator of an H-linear 1-cochain."""
    def on_key(mk: Key) -> Tensor:
        (h, g), = mk
        base = gamma.get(g)
        if base is None or not base:
            return Tensor.zero(hopf, arity)
        out: dict = {}
        for k, c in base.coeffs.items():
            for kk, ck in act_diag_key(hopf, h, k).items():
                add_term(out, kk, c * ck)
        return Tensor(hopf, arity, out)
    return on_key


def evaluate1(gamma: Mapping[str, Tensor], a: Tensor, arity: int) -> Tensor:
    on_key = cochain1_apply(gamma, a.hopf, arity)
    out = Tensor.zero(a.hopf, arity)
    for key, c in a.coeffs.items():
        out = out + on_key(key) * c
    return out


def d1(alg: PseudoAlgebra, gamma: Mapping[str, Tensor], arity: int) -> Cochain2:
    """``dγ(a, b) = a*γ(b) - γ(a*b) + γ(a)*b`` on generator pairs."""
    hopf = alg.hopf
    on_key = cochain1_apply(gamma, hopf, arity)
    out = {}
    for i, j in itertools.product(alg.labels, repeat=2):
        a, b = alg.gen(i), alg.gen(j)
        middle = apply_to_target(pstar(alg, a, b), on_key)
        if not middle:
            middle = PseudoTensor.zero(hopf, 2, arity)
        out[(i, j)] = (act_left(alg, a, evaluate1(gamma, b, arity)) - middle
                       + act_right(alg, evaluate1(gamma, a, arity), b))
    return out


def is_cocycle1(alg: PseudoAlgebra, gamma: Mapping[str, Tensor], arity: int = 2,
                suite: str = "cocycle") -> Report:
    report = Report(suite)
    for (i, j), value in d1(alg, gamma, arity).items():
        report.add(defect_check("cocycle", (i, j), value))
    return report


def check_cocycle_bundle(bundle: Bialgebra, suite: str = "cocycle") -> Report:
    """The 1-cocycle test for Δ, cross-checked against the compatibility defect."""
    report = Report(suite)
    alg = bundle.alg
    values = d1(alg, bundle.delta.table, 2)
    for (i, j), value in values.items():
        report.add(defect_check("cocycle", (i, j), value))
    for (i, j), value in values.items():
        report.add(defect_check("agrees-with-compat", (i, j),
                                value + compat_defect(bundle, alg.gen(i), alg.gen(j))))
    return report
