"""Lie H-coalgebras, the cocycle condition, and the balanceator.

The Lie pseudoaction of ``a`` on a tensor ``w1 ⊗ w2`` is the derivation

    [a*(w1⊗w2)] = [a*w1] ⊗ w2 + w1 ⊗ [a*w2]

with each bracket in ``(h⊗1)`` normal form; the untouched factor is carried
along without any H-action.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hopf import add_term
from .modules import Tensor, apply_at, sigma12 as tensor_sigma12, tau_swap
from .pseudoalgebra import PseudoAlgebra, check_jacobi, check_skew, lieify, pstar, star_bracket
from .bialgebra import Bialgebra, CoalgebraMap, delta_apply, opposite
from .pseudotensor import (Decorated, PseudoTensor, apply_to_target, bracket_of, permute_target,
                           sigma_swap)
from .report import Report, defect_check


@dataclass
class LieStructure:
    bracket: PseudoAlgebra
    cobracket: CoalgebraMap

    @property
    def labels(self):
        return self.bracket.labels


def delta_lie(delta: CoalgebraMap) -> CoalgebraMap:
    """``(id - τ)Δ`` on generators."""
    return CoalgebraMap(delta.module, {g: v - tau_swap(v) for g, v in delta.table.items()})


def lie_of(bundle: Bialgebra) -> LieStructure:
    return LieStructure(lieify(bundle.alg), delta_lie(bundle.delta))


def check_lie_coalgebra(delta: CoalgebraMap, suite: str = "lie") -> Report:
    report = Report(suite)
    for g in delta.labels:
        d = delta_apply(delta, delta.module.gen(g))
        report.add(defect_check("anti-symmetry", (g,), d + tau_swap(d)))
    for g in delta.labels:
        d = delta_apply(delta, delta.module.gen(g))
        if not d:
            report.add(defect_check("co-jacobi", (g,), Tensor.zero(delta.hopf, 3)))
            continue
        right = apply_at(d, 1, delta.on_factor)
        left = apply_at(d, 0, delta.on_factor)
        report.add(defect_check("co-jacobi", (g,), right - tensor_sigma12(right) - left))
    return report


def lie_act(bracket: PseudoAlgebra, a: Tensor, w: Tensor) -> PseudoTensor:
    """Derivation action of ``a`` on every factor of ``w``."""
    out: dict = {}
    for key, cw in w.coeffs.items():
        for pos in range(len(key)):
            for (x,), ca in a.coeffs.items():
                for ((h,), (c,)), cc in bracket.basis_product(x, key[pos]).items():
                    add_term(out, ((h,), key[:pos] + (c,) + key[pos + 1:]), ca * cw * cc)
    return PseudoTensor(bracket.hopf, 2, w.arity, out)


def lie_cocycle_defect(lie: LieStructure, a: Tensor, b: Tensor) -> PseudoTensor:
    """``δ([a*b]) - [a*δ(b)] + σ[b*δ(a)]``."""
    br, d = lie.bracket, lie.cobracket
    lhs = apply_to_target(pstar(br, a, b), d.on_key)
    if not lhs:
        lhs = PseudoTensor.zero(br.hopf, 2, 2)
    return (lhs - lie_act(br, a, delta_apply(d, b))
            + sigma_swap(lie_act(br, b, delta_apply(d, a))))


def check_cocycle(lie: LieStructure, suite: str = "lie") -> Report:
    report = Report(suite)
    for i, j in itertools.product(lie.labels, repeat=2):
        report.add(defect_check("cocycle", (i, j),
                                lie_cocycle_defect(lie, lie.bracket.gen(i), lie.bracket.gen(j))))
    return report


def check_lie_bialgebra(lie: LieStructure, suite: str = "lie") -> Report:
    report = Report(suite)
    report.extend(check_skew(lie.bracket, suite))
    report.extend(check_jacobi(lie.bracket, suite))
    report.extend(check_lie_coalgebra(lie.cobracket, suite))
    report.extend(check_cocycle(lie, suite))
    return report


def sigma_tau(x: PseudoTensor) -> PseudoTensor:
    """σ on the two H slots together with τ on the two tensor factors."""
    return sigma_swap(permute_target(x, (1, 0)))


def balanceator(bundle: Bialgebra, a: Tensor, b: Tensor) -> PseudoTensor:
    """``[a, Δ^op(b)]_⋆ + (σ⊗τ)[b, Δ^op(a)]_⋆``."""
    alg = bundle.alg
    op = opposite(bundle.delta)
    first = star_bracket(alg, a, delta_apply(op, b))
    second = sigma_tau(star_bracket(alg, b, delta_apply(op, a)))
    if not first:
        first = PseudoTensor.zero(alg.hopf, 2, 2)
    if not second:
        second = PseudoTensor.zero(alg.hopf, 2, 2)
    return first + second


def balanceator_asymmetry(bundle: Bialgebra, a: Tensor, b: Tensor) -> PseudoTensor:
    return balanceator(bundle, a, b) - sigma_swap(balanceator(bundle, b, a))


def check_balanceator_zero(bundle: Bialgebra, suite: str = "balanceator") -> Report:
    report = Report(suite)
    for i, j in itertools.product(bundle.labels, repeat=2):
        report.add(defect_check("balanceator-zero", (i, j),
                                balanceator(bundle, bundle.alg.gen(i), bundle.alg.gen(j))))
    return report


def check_balanceator_symmetric(bundle: Bialgebra, suite: str = "balanceator") -> Report:
    report = Report(suite)
    for i, j in itertools.product(bundle.labels, repeat=2):
        report.add(defect_check("balanceator-symmetric", (i, j),
                                balanceator_asymmetry(bundle, bundle.alg.gen(i), bundle.alg.gen(j))))
    return report


def thm56_residual(bundle: Bialgebra, a: Tensor, b: Tensor) -> PseudoTensor:
    """Lie-ified cocycle defect minus the antisymmetrized balanceator."""
    return lie_cocycle_defect(lie_of(bundle), a, b) - balanceator_asymmetry(bundle, a, b)


def check_thm56(bundle: Bialgebra, suite: str = "thm56") -> Report:
    report = Report(suite)
    lie = lie_of(bundle)
    for i, j in itertools.product(bundle.labels, repeat=2):
        a, b = bundle.alg.gen(i), bundle.alg.gen(j)
        residual = lie_cocycle_defect(lie, a, b) - balanceator_asymmetry(bundle, a, b)
        report.add(defect_check("residual", (i, j), residual))
    cocycle = check_cocycle(lie).passed
    symmetric = check_balanceator_symmetric(bundle).passed
    report.add(defect_check("cocycle-iff-symmetric", (), 0 if cocycle == symmetric else 1,
                            note=f"cocycle={cocycle}, symmetric={symmetric}"))
    return report


def coboundary_lie_rhs(bracket: PseudoAlgebra, r: Tensor, a: Tensor) -> Tensor:
    """``Σ μ([a, u_i] ⊗ v_i + σ12(u_i ⊗ [a, v_i]))``."""
    hopf = bracket.hopf
    out = Tensor.zero(hopf, 2)
    for key, c in r.coeffs.items():
        u = Tensor(hopf, 1, {(key[0],): c})
        v = Tensor(hopf, 1, {(key[1],): 1})
        au = bracket_of(pstar(bracket, a, u))
        first = Decorated(hopf, 2, {(h, mk + (key[1],)): cc * 1 for (h, mk), cc in au.coeffs.items()})
        av = bracket_of(pstar(bracket, a, v))
        second = Decorated(hopf, 2, {(h, (key[0],) + mk): cc * c for (h, mk), cc in av.coeffs.items()})
        out = out + first.act() + second.act()
    return out


def check_coboundary_lie(lie: LieStructure, r: Tensor, suite: str = "lie") -> Report:
    report = Report(suite)
    for g in lie.labels:
        a = lie.bracket.gen(g)
        report.add(defect_check("coboundary", (g,),
                                delta_apply(lie.cobracket, a) - coboundary_lie_rhs(lie.bracket, r, a)))
    return report
