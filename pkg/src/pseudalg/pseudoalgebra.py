"""Associative H-pseudoalgebras on a finite free module.

The product is given on generators by a table ``(gi, gj) -> PseudoTensor``
and extended by H-bilinearity.  Values are always in last-slot-unit normal
form, which makes every axiom check a dictionary comparison.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .hopf import HTensor, HopfMismatch, add_term
from .modules import FreeModule, ModuleMismatch, Tensor
from .pseudotensor import (Decorated, PseudoTensor, RawTensor, first_form, from_first_form,
                           sigma12, sigma_swap, slot_mul)
from .report import Check, Report, defect_check


class PseudoAlgebra:
    """A free module with a pseudoproduct given by structure constants."""

    def __init__(self, module: FreeModule, table: Mapping[Tuple[str, str], PseudoTensor] | None = None,
                 name: str = "product"):
        self.module = module
        self.hopf = module.hopf
        self.name = name
        clean = {}
        for (gi, gj), value in (table or {}).items():
            module.index(gi)
            module.index(gj)
            if value.hopf != self.hopf:
                raise HopfMismatch()
            if value.n != 2 or value.p != 1:
                raise ValueError(f"product {gi} {gj} must lie in (H⊗H) ⊗_H A")
            for _, mk in value.store:
                module.index(mk[0][1])
            if value:
                clean[(gi, gj)] = value
        self.table: Dict[Tuple[str, str], PseudoTensor] = clean
        self._cache: Dict[tuple, dict] = {}

    @property
    def labels(self):
        return self.module.labels

    def gen(self, label: str) -> Tensor:
        return self.module.gen(label)

    def value(self, gi: str, gj: str) -> PseudoTensor:
        return self.table.get((gi, gj), PseudoTensor.zero(self.hopf, 2, 1))

    def with_table(self, table, name: str | None = None) -> "PseudoAlgebra":
        return PseudoAlgebra(self.module, table, name or self.name)

    def basis_product(self, x: tuple, y: tuple) -> dict:
        """Store of ``(h gi) * (k gj)`` for basis factors ``(h, gi)``, ``(k, gj)``."""
        key = (x, y)
        hit = self._cache.get(key)
        if hit is None:
            (h, gi), (k, gj) = x, y
            base = self.table.get((gi, gj))
            if base is None:
                hit = {}
            else:
                hit = slot_mul((self.hopf.basis_element(h), self.hopf.basis_element(k)), base).store
            self._cache[key] = hit
        return hit


def _check_element(alg: PseudoAlgebra, a: Tensor) -> None:
    if a.hopf != alg.hopf:
        raise HopfMismatch()
    if a.arity != 1:
        raise ModuleMismatch("expected a module element")
    for lab in a.labels():
        alg.module.index(lab)


def pstar(alg: PseudoAlgebra, a: Tensor, b: Tensor) -> PseudoTensor:
    _check_element(alg, a)
    _check_element(alg, b)
    out: dict = {}
    for (x,), ca in a.coeffs.items():
        for (y,), cb in b.coeffs.items():
            for k, c in alg.basis_product(x, y).items():
                add_term(out, k, ca * cb * c)
    return PseudoTensor(alg.hopf, 2, 1, out)


def _factor_product(alg: PseudoAlgebra, x: tuple, y: tuple) -> dict:
    return alg.basis_product(x, y)


def comp_left(alg: PseudoAlgebra, a: Tensor, b: Tensor, c: Tensor) -> PseudoTensor:
    """``(a*b)*c``: terms ``(f⊗1)⊗e`` and ``e*c = (p⊗1)⊗t`` give ``(f p1 ⊗ p2 ⊗ 1)⊗t``."""
    hopf = alg.hopf
    out: dict = {}
    ab = pstar(alg, a, b)
    for ((f,), (e,)), c1 in ab.store.items():
        for (z,), cz in c.coeffs.items():
            for ((p,), t), c2 in _factor_product(alg, e, z).items():
                for (p1, p2), cp in hopf.comul_basis(p).items():
                    for fp, cf in hopf.mul_basis(f, p1).items():
                        add_term(out, ((fp, p2), t), c1 * cz * c2 * cp * cf)
    return PseudoTensor(hopf, 3, 1, out)


def comp_right(alg: PseudoAlgebra, a: Tensor, b: Tensor, c: Tensor) -> PseudoTensor:
    """``a*(b*c)``: terms ``(f⊗1)⊗e`` and ``a*e = (p⊗1)⊗t`` give ``(p ⊗ f ⊗ 1)⊗t``."""
    hopf = alg.hopf
    out: dict = {}
    bc = pstar(alg, b, c)
    for ((f,), (e,)), c1 in bc.store.items():
        for (x,), cx in a.coeffs.items():
            for ((p,), t), c2 in _factor_product(alg, x, e).items():
                add_term(out, ((p, f), t), c1 * cx * c2)
    return PseudoTensor(hopf, 3, 1, out)


def check_associativity(alg: PseudoAlgebra, suite: str = "assoc") -> Report:
    report = Report(suite)
    gens = alg.labels
    for i, j, k in itertools.product(gens, repeat=3):
        a, b, c = alg.gen(i), alg.gen(j), alg.gen(k)
        report.add(defect_check("associativity", (i, j, k), comp_left(alg, a, b, c) - comp_right(alg, a, b, c)))
    return report


def check_commutativity(alg: PseudoAlgebra, suite: str = "commut") -> Report:
    report = Report(suite)
    for i, j in itertools.product(alg.labels, repeat=2):
        a, b = alg.gen(i), alg.gen(j)
        report.add(defect_check("commutativity", (i, j), pstar(alg, a, b) - sigma_swap(pstar(alg, b, a))))
    return report


def is_commutative(alg: PseudoAlgebra) -> bool:
    return check_commutativity(alg).passed


# -- bimodule actions on tensor powers -----------------------------------------


def act_left(alg: PseudoAlgebra, a: Tensor, w: Tensor) -> PseudoTensor:
    """``a*(w1⊗...⊗wp) = (h⊗1)⊗_H (c⊗w2⊗...⊗wp)`` where ``a*w1 = (h⊗1)⊗_H c``."""
    _check_element(alg, a)
    out: dict = {}
    for key, cw in w.coeffs.items():
        for (x,), ca in a.coeffs.items():
            for ((h,), (c,)), cc in _factor_product(alg, x, key[0]).items():
                add_term(out, ((h,), (c,) + key[1:]), ca * cw * cc)
    return PseudoTensor(alg.hopf, 2, w.arity, out)


def act_right_first(alg: PseudoAlgebra, w: Tensor, a: Tensor) -> Dict[tuple, Fraction]:
    """``(w1⊗...⊗wp)*a`` as ``(1⊗l)`` terms, keyed by ``(l, target key)``."""
    _check_element(alg, a)
    hopf = alg.hopf
    out: dict = {}
    for key, cw in w.coeffs.items():
        for (x,), ca in a.coeffs.items():
            prod = PseudoTensor(hopf, 2, 1, _factor_product(alg, key[-1], x))
            for (l, (e,)), cl in first_form(prod).items():
                add_term(out, (l, key[:-1] + (e,)), ca * cw * cl)
    return out


def act_right(alg: PseudoAlgebra, w: Tensor, a: Tensor) -> PseudoTensor:
    return from_first_form(alg.hopf, w.arity, act_right_first(alg, w, a))


def bullet_left(alg: PseudoAlgebra, a: Tensor, w: Tensor) -> Decorated:
    return Decorated(alg.hopf, w.arity, {(hk[0], mk): c for (hk, mk), c in act_left(alg, a, w).store.items()})


def bullet_right(alg: PseudoAlgebra, w: Tensor, a: Tensor) -> Decorated:
    return Decorated(alg.hopf, w.arity, act_right_first(alg, w, a))


# -- x-products ------------------------------------------------------------------


def x_product(alg: PseudoAlgebra, a: Tensor, b: Tensor, x) -> Tensor:
    """``a ∘_x b = Σ <S(x), h_i> c_i`` for the dual-basis functional ``δ_x``.

    ``x`` is a basis index of H; the functional ``δ_x`` sends basis element
    ``x`` to 1 and every other basis element to 0.  Since ``S`` permutes the
    group basis, ``<S(δ_x), h> = <δ_x, S(h)>``.
    """
    hopf = alg.hopf
    if not hopf.finite:
        raise ValueError("x-products require finite-dimensional H")
    out: dict = {}
    for ((h,), mk), c in pstar(alg, a, b).store.items():
        pairing = hopf.antipode_basis(h).get(x, 0)
        if pairing:
            add_term(out, mk, c * pairing)
    return Tensor(hopf, 1, out)


# -- Lie-ification ----------------------------------------------------------------


def lie_bracket(alg: PseudoAlgebra, a: Tensor, b: Tensor) -> PseudoTensor:
    return pstar(alg, a, b) - sigma_swap(pstar(alg, b, a))


def lieify(alg: PseudoAlgebra) -> PseudoAlgebra:
    """The bracket table ``[gi*gj] = gi*gj - σ(gj*gi)`` as a product-like table."""
    table = {}
    for i, j in itertools.product(alg.labels, repeat=2):
        table[(i, j)] = lie_bracket(alg, alg.gen(i), alg.gen(j))
    return PseudoAlgebra(alg.module, table, name="bracket")


def star_bracket(alg: PseudoAlgebra, a: Tensor, w: Tensor) -> PseudoTensor:
    """``[a, w]_⋆ = a*w - σ(w*a)`` using the bimodule actions."""
    return act_left(alg, a, w) - sigma_swap(act_right(alg, w, a))


def check_skew(bracket: PseudoAlgebra, suite: str = "lie") -> Report:
    report = Report(suite)
    for i, j in itertools.product(bracket.labels, repeat=2):
        a, b = bracket.gen(i), bracket.gen(j)
        report.add(defect_check("skew-symmetry", (i, j),
                                pstar(bracket, a, b) + sigma_swap(pstar(bracket, b, a))))
    return report


def jacobi_defect(bracket: PseudoAlgebra, a: Tensor, b: Tensor, c: Tensor) -> PseudoTensor:
    """``[[a*b]*c] - [a*[b*c]] + (σ12)[b*[a*c]]``."""
    return (comp_left(bracket, a, b, c) - comp_right(bracket, a, b, c)
            + sigma12(comp_right(bracket, b, a, c)))


def check_jacobi(bracket: PseudoAlgebra, suite: str = "lie") -> Report:
    report = Report(suite)
    for i, j, k in itertools.product(bracket.labels, repeat=3):
        report.add(defect_check("jacobi", (i, j, k),
                                jacobi_defect(bracket, bracket.gen(i), bracket.gen(j), bracket.gen(k))))
    return report


# -- structure constants ----------------------------------------------------------


def structure_constants(alg: PseudoAlgebra) -> Dict[Tuple[str, str, str], HTensor]:
    """The unique ``f ⊗ g`` with ``gi*gj = Σ_k (f_k ⊗ g_k) ⊗_H gk``.

    A normal-form term ``(h⊗1) ⊗_H h' gk`` contributes ``h h'_1 ⊗ h'_2``.
    """
    hopf = alg.hopf
    out: Dict[Tuple[str, str, str], dict] = {}
    for (i, j), value in alg.table.items():
        for ((h,), ((hp, k),)), c in value.store.items():
            slot = out.setdefault((i, j, k), {})
            for (p1, p2), cp in hopf.comul_basis(hp).items():
                for f, cf in hopf.mul_basis(h, p1).items():
                    add_term(slot, (f, p2), c * cp * cf)
    return {key: HTensor(hopf, 2, v) for key, v in out.items() if v}


def from_structure_constants(module: FreeModule, consts: Mapping[Tuple[str, str, str], HTensor]) -> PseudoAlgebra:
    hopf = module.hopf
    raws: Dict[Tuple[str, str], RawTensor] = {}
    for (i, j, k), fg in consts.items():
        raw = raws.setdefault((i, j), RawTensor(hopf, 2, 1))
        for (f, g), c in fg.coeffs.items():
            raw.add((f, g), ((hopf.unit(), k),), c)
    return PseudoAlgebra(module, {ij: raw.normalize() for ij, raw in raws.items()})


def constants_defect(alg: PseudoAlgebra, i: str, j: str, l: str) -> Dict[str, HTensor]:
    """Generator-level associativity identity in ``H^{⊗3}``, per output generator.

    Left: ``Σ_k f_k^{ij} (f_s^{kl})_1 ⊗ g_k^{ij} (f_s^{kl})_2 ⊗ g_s^{kl}``.
    Right: ``Σ_k f_s^{ik} ⊗ f_k^{jl} (g_s^{ik})_1 ⊗ g_k^{jl} (g_s^{ik})_2``.
    Returns ``left - right`` for every ``s`` where it is nonzero.
    """
    hopf = alg.hopf
    consts = structure_constants(alg)
    zero2 = HTensor(hopf, 2, {})
    out: Dict[str, HTensor] = {}
    for s in alg.labels:
        acc: dict = {}
        for k in alg.labels:
            ijk = consts.get((i, j, k), zero2)
            kls = consts.get((k, l, s), zero2)
            for (f1, g1), c1 in ijk.coeffs.items():
                for (f2, g2), c2 in kls.coeffs.items():
                    for (x1, x2), cx in hopf.comul_basis(f2).items():
                        for a, ca in hopf.mul_basis(f1, x1).items():
                            for b, cb in hopf.mul_basis(g1, x2).items():
                                add_term(acc, (a, b, g2), c1 * c2 * cx * ca * cb)
            iks = consts.get((i, k, s), zero2)
            jlk = consts.get((j, l, k), zero2)
            for (f1, g1), c1 in iks.coeffs.items():
                for (f2, g2), c2 in jlk.coeffs.items():
                    for (y1, y2), cy in hopf.comul_basis(g1).items():
                        for a, ca in hopf.mul_basis(f2, y1).items():
                            for b, cb in hopf.mul_basis(g2, y2).items():
                                add_term(acc, (f1, a, b), -c1 * c2 * cy * ca * cb)
        if acc:
            out[s] = HTensor(hopf, 3, acc)
    return out


def check_constants_associativity(alg: PseudoAlgebra, suite: str = "assoc") -> Report:
    report = Report(suite)
    hopf = alg.hopf
    for i, j, l in itertools.product(alg.labels, repeat=3):
        defect = constants_defect(alg, i, j, l)
        text = None
        if defect:
            raw = RawTensor(hopf, 3, 1)
            for s, v in defect.items():
                for key, c in v.coeffs.items():
                    raw.add(key, ((hopf.unit(), s),), c)
            text = str(raw.normalize())
        report.add(Check("constants-associativity", (i, j, l), not defect, text))
    return report


def render_table(alg: PseudoAlgebra) -> str:
    lines = []
    for i, j in itertools.product(alg.labels, repeat=2):
        v = alg.table.get((i, j))
        if v:
            lines.append(f"product {i} {j} = {v}")
    return "\n".join(lines)
