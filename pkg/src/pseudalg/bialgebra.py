"""H-coalgebras, the compatibility condition, duals and current lifts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from .hopf import HopfAlgebra, HopfMismatch, TrivialHopf, add_term
from .modules import FreeModule, Key, ModuleMismatch, Tensor, act_diag_key, apply_at, tau_swap
from .pseudoalgebra import (PseudoAlgebra, act_left, act_right, check_associativity,
                            pstar, structure_constants)
from .pseudotensor import PseudoTensor, RawTensor, apply_to_target
from .report import Report, defect_check


class CoalgebraMap:
    """An H-linear map ``A -> A⊗A`` given on generators."""

    def __init__(self, module: FreeModule, table: Mapping[str, Tensor] | None = None, arity: int = 2):
        self.module = module
        self.hopf = module.hopf
        self.arity = arity
        clean = {}
        for g, value in (table or {}).items():
            module.index(g)
            if value.hopf != self.hopf:
                raise HopfMismatch()
            if value.arity != arity:
                raise ModuleMismatch(f"delta {g} must be a {arity}-tensor")
            for lab in value.labels():
                module.index(lab)
            if value:
                clean[g] = value
        self.table: Dict[str, Tensor] = clean
        self._cache: Dict[tuple, Tensor] = {}

    @property
    def labels(self):
        return self.module.labels

    def on_factor(self, factor) -> Tensor:
        """Image of the basis element ``h·g`` for a factor ``(h, g)``."""
        hit = self._cache.get(factor)
        if hit is None:
            h, g = factor
            self.module.index(g)
            base = self.table.get(g)
            if base is None:
                hit = Tensor.zero(self.hopf, self.arity)
            else:
                out: dict = {}
                for k, c in base.coeffs.items():
                    for kk, cc in act_diag_key(self.hopf, h, k).items():
                        add_term(out, kk, c * cc)
                hit = Tensor(self.hopf, self.arity, out)
            self._cache[factor] = hit
        return hit

    def on_key(self, mk: Key) -> Tensor:
        if len(mk) != 1:
            raise ModuleMismatch("coalgebra maps act on module elements")
        return self.on_factor(mk[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, CoalgebraMap) and self.module == other.module and self.table == other.table

    def __hash__(self):
        return hash((self.module, frozenset(self.table.items())))


def delta_apply(delta: CoalgebraMap, a: Tensor) -> Tensor:
    if a.arity != 1:
        raise ModuleMismatch("delta_apply expects a module element")
    if a.hopf != delta.hopf:
        raise HopfMismatch()
    return apply_at(a, 0, delta.on_factor) if a else Tensor.zero(delta.hopf, delta.arity)


def coassoc_defect(delta: CoalgebraMap, a: Tensor) -> Tensor:
    d = delta_apply(delta, a)
    if not d:
        return Tensor.zero(delta.hopf, 3)
    return apply_at(d, 0, delta.on_factor) - apply_at(d, 1, delta.on_factor)


def check_coassoc(delta: CoalgebraMap, suite: str = "coassoc") -> Report:
    report = Report(suite)
    for g in delta.labels:
        report.add(defect_check("coassociativity", (g,), coassoc_defect(delta, delta.module.gen(g))))
    return report


def check_cocommutativity(delta: CoalgebraMap, suite: str = "cocommut") -> Report:
    report = Report(suite)
    for g in delta.labels:
        d = delta_apply(delta, delta.module.gen(g))
        report.add(defect_check("cocommutativity", (g,), d - tau_swap(d)))
    return report


def opposite(delta: CoalgebraMap) -> CoalgebraMap:
    return CoalgebraMap(delta.module, {g: tau_swap(v) for g, v in delta.table.items()})


@dataclass
class Bialgebra:
    """A pseudoalgebra together with a comultiplication on the same module."""

    alg: PseudoAlgebra
    delta: CoalgebraMap
    r: Optional[Tensor] = None
    name: str = "bundle"

    def __post_init__(self):
        if self.alg.module != self.delta.module:
            raise ModuleMismatch("product and coproduct live on different modules")

    @property
    def labels(self):
        return self.alg.labels

    @property
    def hopf(self) -> HopfAlgebra:
        return self.alg.hopf


def delta_of_product(delta: CoalgebraMap, x: PseudoTensor) -> PseudoTensor:
    return apply_to_target(x, delta.on_key)


def compat_defect(bundle: Bialgebra, a: Tensor, b: Tensor) -> PseudoTensor:
    """``Δ(a*b) - a*Δ(b) - Δ(a)*b`` in ``(H⊗H) ⊗_H (A⊗A)``."""
    alg, delta = bundle.alg, bundle.delta
    lhs = delta_of_product(delta, pstar(alg, a, b))
    if not lhs:
        lhs = PseudoTensor.zero(alg.hopf, 2, 2)
    return lhs - act_left(alg, a, delta_apply(delta, b)) - act_right(alg, delta_apply(delta, a), b)


def check_compat(bundle: Bialgebra, suite: str = "compat") -> Report:
    report = Report(suite)
    for i, j in itertools.product(bundle.labels, repeat=2):
        report.add(defect_check("compatibility", (i, j),
                                compat_defect(bundle, bundle.alg.gen(i), bundle.alg.gen(j))))
    return report


def is_valid_bialgebra(bundle: Bialgebra) -> bool:
    return (check_associativity(bundle.alg).passed and check_coassoc(bundle.delta).passed
            and check_compat(bundle).passed)


# -- dual coalgebra ------------------------------------------------------------


def dual_labels(module: FreeModule) -> list[str]:
    return [f"a{i + 1}" for i in range(len(module.labels))]


def dual_coalgebra(alg: PseudoAlgebra) -> CoalgebraMap:
    """``Δ(a^k) = Σ_{i,j} S(f_k^{ij}) a^i ⊗ S(g_k^{ij}) a^j`` on the dual module."""
    hopf = alg.hopf
    labels = dual_labels(alg.module)
    dual = FreeModule(hopf, labels, name=alg.module.name + "*")
    rename = dict(zip(alg.labels, labels))
    acc: Dict[str, dict] = {}
    for (i, j, k), fg in structure_constants(alg).items():
        out = acc.setdefault(rename[k], {})
        for (f, g), c in fg.coeffs.items():
            for sf, cf in hopf.antipode_basis(f).items():
                for sg, cg in hopf.antipode_basis(g).items():
                    add_term(out, ((sf, rename[i]), (sg, rename[j])), c * cf * cg)
    return CoalgebraMap(dual, {k: Tensor(hopf, 2, v) for k, v in acc.items()})


# -- current construction ----------------------------------------------------------


def cur_from_infbialgebra(bundle: Bialgebra, target: HopfAlgebra) -> Bialgebra:
    """Lift an ordinary infinitesimal bialgebra over ``k`` to ``H ⊗ A``.

    The product becomes ``a_i * a_j = (1⊗1) ⊗_H (a_i a_j)`` and the coproduct
    is copied on generators (then extended H-linearly).
    """
    if not isinstance(bundle.hopf, TrivialHopf):
        raise ValueError("invalid input bialgebra: the current construction starts from H = k")
    if not is_valid_bialgebra(bundle):
        raise ValueError("invalid input bialgebra: it fails an infinitesimal bialgebra axiom")
    module = FreeModule(target, bundle.labels, name=bundle.alg.module.name)
    unit = target.unit()
    lift = lambda key: tuple((unit, lab) for _, lab in key)
    table = {}
    for (i, j), value in bundle.alg.table.items():
        raw = RawTensor(target, 2, 1)
        for (_, mk), c in value.store.items():
            raw.add((unit, unit), lift(mk), c)
        table[(i, j)] = raw.normalize()
    delta = {}
    for g, value in bundle.delta.table.items():
        delta[g] = Tensor(target, 2, {lift(k): c for k, c in value.coeffs.items()})
    alg = PseudoAlgebra(module, table)
    return Bialgebra(alg, CoalgebraMap(module, delta), name=f"Cur_{bundle.name}")


def render_delta(delta: CoalgebraMap) -> str:
    return "\n".join(f"delta {g} = {delta.table[g]}" for g in delta.labels if g in delta.table)
