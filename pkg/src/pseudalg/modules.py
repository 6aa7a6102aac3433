"""Finite free H-modules and their tensor powers over k.

A basis vector of ``M1 ⊗ ... ⊗ Mp`` is a tuple of ``(h_basis, label)`` pairs,
one per factor, and a :class:`Tensor` is a sparse rational combination of
such tuples.  Module elements are tensors of arity one.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .hopf import HElement, HopfAlgebra, HopfMismatch, add_term, render_monomial, to_fraction

Factor = Tuple[object, str]          # (H basis index, generator label)
Key = Tuple[Factor, ...]


class ModuleMismatch(ValueError):
    def __init__(self, msg: str = "module mismatch"):
        super().__init__(msg)


class FreeModule:
    """A free left H-module with named generators."""

    def __init__(self, hopf: HopfAlgebra, labels: Sequence[str], name: str = "A"):
        labels = tuple(labels)
        if not labels:
            raise ValueError("a free module needs at least one generator")
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be distinct")
        if any(not lab for lab in labels):
            raise ValueError("generator labels must be nonempty")
        self.hopf = hopf
        self.labels = labels
        self.name = name
        self._index = {lab: i for i, lab in enumerate(labels)}

    def __eq__(self, other) -> bool:
        return (isinstance(other, FreeModule) and self.hopf == other.hopf
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.hopf, self.labels))

    def __repr__(self) -> str:
        return f"FreeModule({self.name}: {', '.join(self.labels)})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ModuleMismatch(f"unknown generator {label!r}") from None

    def gen(self, label: str, h: HElement | None = None) -> "Tensor":
        self.index(label)
        coef = h if h is not None else self.hopf.one()
        if coef.hopf != self.hopf:
            raise HopfMismatch()
        return Tensor(self.hopf, 1, {((b, label),): c for b, c in coef.coeffs.items()})

    def element(self, table: Mapping[str, HElement]) -> "Tensor":
        out = Tensor.zero(self.hopf, 1)
        for label, h in table.items():
            out = out + self.gen(label, h)
        return out

    def gens(self) -> list["Tensor"]:
        return [self.gen(lab) for lab in self.labels]

    def label_key(self, label: str):
        return self.index(label)


class Tensor:
    """Element of a p-fold tensor product of free modules, fully expanded."""

    __slots__ = ("hopf", "arity", "coeffs")

    def __init__(self, hopf: HopfAlgebra, arity: int, coeffs: Mapping[Key, object]):
        self.hopf = hopf
        self.arity = arity
        clean: Dict[Key, Fraction] = {}
        for k, c in coeffs.items():
            c = to_fraction(c)
            if c:
                if len(k) != arity:
                    raise ValueError(f"tensor key {k!r} does not have arity {arity}")
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, hopf: HopfAlgebra, arity: int) -> "Tensor":
        return cls(hopf, arity, {})

    @classmethod
    def pure(cls, *factors: "Tensor") -> "Tensor":
        out = factors[0]
        for f in factors[1:]:
            out = out.tensor(f)
        return out

    def _check(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError("expected a Tensor")
        if self.hopf != other.hopf:
            raise HopfMismatch()
        if self.arity != other.arity:
            raise ModuleMismatch(f"arity mismatch: {self.arity} vs {other.arity}")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.hopf == other.hopf and self.arity == other.arity and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.coeffs.items())))

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            add_term(out, k, c)
        return Tensor(self.hopf, self.arity, out)

    def __neg__(self) -> "Tensor":
        return Tensor(self.hopf, self.arity, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __mul__(self, scalar) -> "Tensor":
        return Tensor(self.hopf, self.arity, {k: c * scalar for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def tensor(self, other: "Tensor") -> "Tensor":
        if self.hopf != other.hopf:
            raise HopfMismatch()
        out: Dict[Key, Fraction] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                add_term(out, ka + kb, ca * cb)
        return Tensor(self.hopf, self.arity + other.arity, out)

    def terms(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: key_order(self.hopf, kv[0]))

    def labels(self) -> set[str]:
        return {lab for k in self.coeffs for _, lab in k}

    def __repr__(self) -> str:
        return f"Tensor({render_tensor(self)})"

    def __str__(self) -> str:
        return render_tensor(self)


def key_order(hopf: HopfAlgebra, key: Key):
    return tuple((lab, hopf.sort_key(b)) for b, lab in key)


# -- module-level operations ------------------------------------------------


@lru_cache(maxsize=None)
def act_diag_key(hopf: HopfAlgebra, h, key: Key) -> Dict[Key, Fraction]:
    """Diagonal action of a basis element ``h`` on a basis tensor."""
    out: Dict[Key, Fraction] = {}
    for legs, c in hopf.iterated_comul_basis(h, len(key)).items():
        for combo in itertools.product(*(hopf.mul_basis(leg, b).items()
                                         for leg, (b, _) in zip(legs, key))):
            cc = c
            for _, ci in combo:
                cc *= ci
            add_term(out, tuple((p, lab) for (p, _), (_, lab) in zip(combo, key)), cc)
    return out


def act_diag_coeffs(hopf: HopfAlgebra, h, key: Key, coef: Fraction, out: dict) -> None:
    for k, c in act_diag_key(hopf, h, key).items():
        add_term(out, k, coef * c)


def h_act(h: HElement, m: Tensor) -> Tensor:
    """Left action of H on a module element (free action on coefficients)."""
    if m.arity != 1:
        raise ModuleMismatch("h_act expects a module element; use diagonal_act for tensors")
    return diagonal_act(h, m)


def diagonal_act(h: HElement, t: Tensor) -> Tensor:
    """``h·(m1⊗...⊗mp) = h_1 m1 ⊗ ... ⊗ h_p mp``."""
    if h.hopf != t.hopf:
        raise HopfMismatch()
    out: Dict[Key, Fraction] = {}
    for b, cb in h.coeffs.items():
        for k, c in t.coeffs.items():
            act_diag_coeffs(t.hopf, b, k, cb * c, out)
    return Tensor(t.hopf, t.arity, out)


def permute(t: Tensor, perm: Sequence[int]) -> Tensor:
    """Factor ``i`` of the result is factor ``perm[i]`` of ``t``."""
    if sorted(perm) != list(range(t.arity)):
        raise ValueError(f"{perm!r} is not a permutation of {t.arity} factors")
    return Tensor(t.hopf, t.arity, {tuple(k[p] for p in perm): c for k, c in t.coeffs.items()})


def tau_swap(t: Tensor) -> Tensor:
    if t.arity != 2:
        raise ModuleMismatch("tau_swap expects a 2-tensor")
    return permute(t, (1, 0))


def sigma12(t: Tensor) -> Tensor:
    return permute(t, (1, 0) + tuple(range(2, t.arity)))


def apply_at(t: Tensor, pos: int, fn: Callable[[Factor], Tensor]) -> Tensor:
    """Replace factor ``pos`` by ``fn(factor)``, a tensor of any arity.

    ``fn`` is evaluated on basis factors ``(h, label)`` and is expected to be
    H-linear; it is responsible for the coefficient ``h``.
    """
    out: Dict[Key, Fraction] = {}
    arity = None
    for k, c in t.coeffs.items():
        image = fn(k[pos])
        arity = image.arity
        for ik, ic in image.coeffs.items():
            add_term(out, k[:pos] + ik + k[pos + 1:], c * ic)
    if arity is None:
        return Tensor.zero(t.hopf, t.arity)
    return Tensor(t.hopf, t.arity - 1 + arity, out)


def factor_element(hopf: HopfAlgebra, factor: Factor) -> Tensor:
    return Tensor(hopf, 1, {(factor,): Fraction(1)})


def split_terms(t: Tensor) -> Iterable[tuple[Tuple[Tensor, ...], Fraction]]:
    """Yield each basis term as a tuple of arity-1 factors and its coefficient."""
    for k, c in t.terms():
        yield tuple(factor_element(t.hopf, f) for f in k), c


# -- rendering ----------------------------------------------------------------


def render_factor(hopf: HopfAlgebra, factor: Factor) -> str:
    b, lab = factor
    body = hopf.render_basis(b)
    return lab if body == "1" else f"{body}*{lab}"


def render_key(hopf: HopfAlgebra, key: Key, coef: Fraction) -> str:
    parts = [render_factor(hopf, f) for f in key]
    if coef != 1:
        b, lab = key[0]
        parts[0] = render_monomial(hopf, b, coef) + "*" + lab
    return "(" + ", ".join(parts) + ")"


def render_tensor(t: Tensor) -> str:
    if not t.coeffs:
        return "0"
    out = ""
    for i, (k, c) in enumerate(t.terms()):
        term = render_key(t.hopf, k, c)
        out = term if i == 0 else out + " + " + term
    return out
