"""Coboundary comultiplications and the pseudo Yang-Baxter expressions.

Throughout, ``r = Σ u_i ⊗ v_i`` is read off the expanded basis of ``A⊗A``:
each basis term ``c·(x gi ⊗ y gj)`` contributes ``u = c·x gi`` and ``v = y gj``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Tuple

from .hopf import add_term
from .modules import Factor, Tensor, act_diag_key, tau_swap
from .bialgebra import Bialgebra, CoalgebraMap, check_coassoc, compat_defect, coassoc_defect
from .pseudoalgebra import (PseudoAlgebra, bullet_left, bullet_right, lieify, pstar)
from .pseudotensor import MuDescriptor, bracket_of, first_form, mu_operator
from .report import Check, Report, defect_check


def r_terms(r: Tensor) -> Iterator[Tuple[Factor, Factor, Fraction]]:
    for (u, v), c in r.terms():
        yield u, v, c


def _elem(hopf, factor: Factor, coef=1) -> Tensor:
    return Tensor(hopf, 1, {(factor,): Fraction(coef)})


def delta_r(alg: PseudoAlgebra, r: Tensor, a: Tensor) -> Tensor:
    """``Σ h^{a,u}·(c ⊗ v) - l^{v,a}·(u ⊗ e)``.

    ``a*u = (h⊗1)⊗_H c`` is taken in last-slot form and ``v*a = (1⊗l)⊗_H e``
    in first-slot form; the H legs act diagonally.
    """
    if r.arity != 2:
        raise ValueError("r must be a 2-tensor")
    hopf = alg.hopf
    out: dict = {}
    for u, v, c in r_terms(r):
        for ((h,), (e,)), ch in pstar(alg, a, _elem(hopf, u)).store.items():
            for k, ck in act_diag_key(hopf, h, (e, v)).items():
                add_term(out, k, c * ch * ck)
        for (l, (e,)), cl in first_form(pstar(alg, _elem(hopf, v), a)).items():
            for k, ck in act_diag_key(hopf, l, (u, e)).items():
                add_term(out, k, -c * cl * ck)
    return Tensor(hopf, 2, out)


def coboundary_delta(alg: PseudoAlgebra, r: Tensor) -> CoalgebraMap:
    return CoalgebraMap(alg.module, {g: delta_r(alg, r, alg.gen(g)) for g in alg.labels})


def coboundary_bundle(alg: PseudoAlgebra, r: Tensor) -> Bialgebra:
    return Bialgebra(alg, coboundary_delta(alg, r), r=r, name="coboundary")


def _brace(alg: PseudoAlgebra, x: Factor, y: Factor, cache: dict | None = None):
    """``{x, y}`` as ``(h, c-factor) -> coefficient``."""
    if cache is not None and (x, y) in cache:
        return cache[(x, y)]
    hopf = alg.hopf
    out = {}
    for (h, (c,)), cc in bracket_of(pstar(alg, _elem(hopf, x), _elem(hopf, y))).coeffs.items():
        out[(h, c)] = cc
    if cache is not None:
        cache[(x, y)] = out
    return out


MU_1_4 = MuDescriptor(1, True, (4,))
MU_2_34 = MuDescriptor(2, False, (3, 4))
MU_3_14 = MuDescriptor(3, False, (1, 4))


def aybe(alg: PseudoAlgebra, r: Tensor) -> Tensor:
    """``μ_{-1}^4({u_i,u_j}⊗v_j⊗v_i) - μ_2^{3,4}(u_i⊗{v_i,u_j}⊗v_j) + μ_3^{1,4}(u_i⊗u_j⊗{v_j,v_i})``."""
    hopf = alg.hopf
    t1: dict = {}
    t2: dict = {}
    t3: dict = {}
    terms = list(r_terms(r))
    cache: dict = {}
    for (ui, vi, ci), (uj, vj, cj) in itertools.product(terms, repeat=2):
        c = ci * cj
        for (h, x), cb in _brace(alg, ui, uj, cache).items():
            add_term(t1, (h, x, vj, vi), c * cb)
        for (h, x), cb in _brace(alg, vi, uj, cache).items():
            add_term(t2, (ui, h, x, vj), c * cb)
        for (h, x), cb in _brace(alg, vj, vi, cache).items():
            add_term(t3, (ui, uj, h, x), c * cb)
    return (mu_operator(MU_1_4, t1, hopf, 4) - mu_operator(MU_2_34, t2, hopf, 4)
            + mu_operator(MU_3_14, t3, hopf, 4))


MU_m1_3 = MuDescriptor(1, True, (3,))
MU_m2_4 = MuDescriptor(2, True, (4,))
MU_m3_2 = MuDescriptor(3, True, (2,))


def cybe(bracket: PseudoAlgebra, r: Tensor) -> Tensor:
    """``μ_{-1}^3([u_j,u_i]⊗v_j⊗v_i) - μ_{-2}^4(u_i⊗[u_j,v_i]⊗v_j) - μ_{-3}^2(u_i⊗u_j⊗[v_j,v_i])``.

    ``bracket`` is a bracket table (for instance the Lie-ification); ``[x, y]``
    is the Fourier image of ``[x*y]``, which drops the unit slot.
    """
    hopf = bracket.hopf
    t1: dict = {}
    t2: dict = {}
    t3: dict = {}
    terms = list(r_terms(r))
    cache: dict = {}
    for (ui, vi, ci), (uj, vj, cj) in itertools.product(terms, repeat=2):
        c = ci * cj
        for (h, x), cb in _brace(bracket, uj, ui, cache).items():
            add_term(t1, (h, x, vj, vi), c * cb)
        for (h, x), cb in _brace(bracket, uj, vi, cache).items():
            add_term(t2, (ui, h, x, vj), c * cb)
        for (h, x), cb in _brace(bracket, vj, vi, cache).items():
            add_term(t3, (ui, uj, h, x), c * cb)
    return (mu_operator(MU_m1_3, t1, hopf, 4) - mu_operator(MU_m2_4, t2, hopf, 4)
            - mu_operator(MU_m3_2, t3, hopf, 4))


def thm44_condition(alg: PseudoAlgebra, r: Tensor, a: Tensor, ar: Tensor | None = None) -> Tensor:
    """``μ_3(a • A(r) - A(r) • a)``; pass ``ar = A(r)`` to reuse it."""
    if ar is None:
        ar = aybe(alg, r)
    if not ar:
        return Tensor.zero(alg.hopf, 3)
    return (bullet_left(alg, a, ar) - bullet_right(alg, ar, a)).act()


def check_aybe(alg: PseudoAlgebra, r: Tensor, suite: str = "aybe") -> Report:
    return Report(suite).add(defect_check("aybe", (), aybe(alg, r)))


def check_cybe(alg: PseudoAlgebra, r: Tensor, suite: str = "cybe") -> Report:
    return Report(suite).add(defect_check("cybe", (), cybe(lieify(alg), r)))


def check_thm44(alg: PseudoAlgebra, r: Tensor, suite: str = "thm44") -> Report:
    """Both sides of the coassociativity criterion, and their agreement."""
    report = Report(suite)
    delta = coboundary_delta(alg, r)
    coassoc = check_coassoc(delta).passed
    ar = aybe(alg, r)
    values = {g: thm44_condition(alg, r, alg.gen(g), ar) for g in alg.labels}
    condition = not any(values.values())
    for g in alg.labels:
        report.add(Check("condition", (g,), True, None, note="zero" if not values[g] else "nonzero"))
    bundle = Bialgebra(alg, delta, r=r)
    compat = all(not compat_defect(bundle, alg.gen(i), alg.gen(j))
                 for i, j in itertools.product(alg.labels, repeat=2))
    report.add(Check("compatibility", (), compat))
    report.add(Check("coassoc-iff-condition", (), coassoc == condition,
                     note=f"coassociative={coassoc}, condition={condition}"))
    return report


def thm44_identity_defect(alg: PseudoAlgebra, r: Tensor, a: Tensor) -> Tensor:
    """Coassociativity defect of ``Δ_r`` at ``a`` compared with ``μ_3(a•A(r) - A(r)•a)``."""
    delta = coboundary_delta(alg, r)
    return coassoc_defect(delta, a) - thm44_condition(alg, r, a)


def coassoc_equiv_check(alg: PseudoAlgebra, r: Tensor) -> Report:
    return check_thm44(alg, r)


def classify_symmetry(r: Tensor) -> str:
    swapped = tau_swap(r)
    if swapped == r and swapped == -r:
        return "symmetric"  # r = 0 is both; report it as symmetric
    if swapped == r:
        return "symmetric"
    if swapped == -r:
        return "anti-symmetric"
    return "neither"


def thm61_suite(alg: PseudoAlgebra, r: Tensor, suite: str = "thm61") -> Report:
    report = Report(suite)
    kind = classify_symmetry(r)
    solves = not aybe(alg, r)
    report.add(Check("symmetry", (), True, note=kind))
    report.add(Check("aybe-solution", (), True, note="yes" if solves else "no"))
    if kind != "neither" and solves:
        report.add(defect_check("cybe", (), cybe(lieify(alg), r)))
    else:
        report.add(Check("cybe", (), True, note="hypotheses not met"))
    return report
