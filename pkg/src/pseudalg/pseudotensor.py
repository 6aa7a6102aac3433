"""Elements of ``H^{⊗n} ⊗_H M`` in normal form, plus the μ-operator family.

A :class:`PseudoTensor` stores the unique representative whose last H slot is
the unit.  Its store maps ``(hkey, mkey)`` to a rational, where ``hkey`` holds
the first ``n - 1`` H basis indices and ``mkey`` is a basis tensor of the
target ``M = A^{⊗p}`` (see :mod:`pseudalg.modules`).

The rewriting rule that produces the representative is

    (f1 ⊗ ... ⊗ fn) ⊗_H m  =  Σ (f1 S(fn_1) ⊗ ... ⊗ f_{n-1} S(fn_{n-1}) ⊗ 1) ⊗_H fn_n · m

which holds because H is cocommutative.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .hopf import HElement, HopfAlgebra, HopfMismatch, add_term, render_monomial
from .modules import Key, Tensor, act_diag_key, render_factor

HKey = Tuple[object, ...]
Store = Dict[Tuple[HKey, Key], Fraction]


def _prod(hopf: HopfAlgebra, a, b):
    return hopf.mul_basis(a, b).items()


@lru_cache(maxsize=None)
def _normalize_basis(hopf: HopfAlgebra, fkey: HKey, mkey: Key) -> Store:
    """Normal form of the single raw term ``(f1⊗...⊗fn) ⊗_H m``."""
    n = len(fkey)
    out: Store = {}
    last = fkey[-1]
    if n == 1:
        for mk, c in act_diag_key(hopf, last, mkey).items():
            add_term(out, ((), mk), c)
        return out
    for legs, c in hopf.iterated_comul_basis(last, n).items():
        slots = []
        for f, leg in zip(fkey[:-1], legs[:-1]):
            options: Dict[object, Fraction] = {}
            for s, cs in hopf.antipode_basis(leg).items():
                for p, cp in _prod(hopf, f, s):
                    add_term(options, p, cs * cp)
            slots.append(options.items())
        moved = act_diag_key(hopf, legs[-1], mkey)
        for combo in itertools.product(*slots):
            cc = c
            for _, ci in combo:
                cc *= ci
            hk = tuple(b for b, _ in combo)
            for mk, cm in moved.items():
                add_term(out, (hk, mk), cc * cm)
    return out


class PseudoTensor:
    """Element of ``H^{⊗n} ⊗_H A^{⊗p}`` in last-slot-unit normal form."""

    __slots__ = ("hopf", "n", "p", "store")

    def __init__(self, hopf: HopfAlgebra, n: int, p: int, store: Mapping | None = None):
        if n < 1:
            raise ValueError("pseudotensor arity must be >= 1")
        self.hopf = hopf
        self.n = n
        self.p = p
        self.store: Store = {k: Fraction(c) for k, c in (store or {}).items() if c}

    @classmethod
    def zero(cls, hopf: HopfAlgebra, n: int, p: int) -> "PseudoTensor":
        return cls(hopf, n, p)

    def _check(self, other: "PseudoTensor") -> None:
        if not isinstance(other, PseudoTensor):
            raise TypeError("expected a PseudoTensor")
        if self.hopf != other.hopf:
            raise HopfMismatch()
        if (self.n, self.p) != (other.n, other.p):
            raise ValueError(f"shape mismatch: {(self.n, self.p)} vs {(other.n, other.p)}")

    def __bool__(self) -> bool:
        return bool(self.store)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.store
        if not isinstance(other, PseudoTensor):
            return NotImplemented
        return (self.hopf == other.hopf and self.n == other.n and self.p == other.p
                and self.store == other.store)

    def __hash__(self) -> int:
        return hash((self.n, self.p, frozenset(self.store.items())))

    def __add__(self, other: "PseudoTensor") -> "PseudoTensor":
        self._check(other)
        out = dict(self.store)
        for k, c in other.store.items():
            add_term(out, k, c)
        return PseudoTensor(self.hopf, self.n, self.p, out)

    def __neg__(self) -> "PseudoTensor":
        return PseudoTensor(self.hopf, self.n, self.p, {k: -c for k, c in self.store.items()})

    def __sub__(self, other: "PseudoTensor") -> "PseudoTensor":
        return self + (-other)

    def __mul__(self, scalar) -> "PseudoTensor":
        return PseudoTensor(self.hopf, self.n, self.p, {k: c * scalar for k, c in self.store.items()})

    __rmul__ = __mul__

    def terms(self) -> list:
        hopf = self.hopf
        return sorted(self.store.items(), key=lambda kv: (
            tuple(hopf.sort_key(b) for b in kv[0][0]),
            tuple((lab, hopf.sort_key(b)) for b, lab in kv[0][1])))

    def raw_terms(self) -> Iterable[tuple[HKey, Key, Fraction]]:
        """Terms as full n-slot representatives (the unit appended)."""
        unit = self.hopf.unit()
        for (hk, mk), c in self.store.items():
            yield hk + (unit,), mk, c

    def __repr__(self) -> str:
        return f"PseudoTensor({render_pseudotensor(self)})"

    def __str__(self) -> str:
        return render_pseudotensor(self)


class RawTensor:
    """Unnormalized sum of ``(f1⊗...⊗fn) ⊗_H m`` terms; only ever normalized."""

    def __init__(self, hopf: HopfAlgebra, n: int, p: int):
        self.hopf = hopf
        self.n = n
        self.p = p
        self.terms: Dict[Tuple[HKey, Key], Fraction] = {}

    def add(self, fkey: HKey, mkey: Key, coef) -> "RawTensor":
        if len(fkey) != self.n or len(mkey) != self.p:
            raise ValueError("raw term has the wrong shape")
        add_term(self.terms, (tuple(fkey), tuple(mkey)), Fraction(coef))
        return self

    def add_pure(self, factors: Sequence[HElement], target: Tensor, coef=1) -> "RawTensor":
        if any(f.hopf != self.hopf for f in factors) or target.hopf != self.hopf:
            raise HopfMismatch()
        for combo in itertools.product(*(f.coeffs.items() for f in factors)):
            c = Fraction(coef)
            for _, ci in combo:
                c *= ci
            for mk, cm in target.coeffs.items():
                self.add(tuple(b for b, _ in combo), mk, c * cm)
        return self

    def normalize(self) -> PseudoTensor:
        return normalize_last(self)


def normalize_last(x: RawTensor) -> PseudoTensor:
    out: Store = {}
    for (fk, mk), c in x.terms.items():
        for key, cc in _normalize_basis(x.hopf, fk, mk).items():
            add_term(out, key, c * cc)
    return PseudoTensor(x.hopf, x.n, x.p, out)


def pseudo(factors: Sequence[HElement], target: Tensor, coef=1) -> PseudoTensor:
    """Normal form of the pure element ``(f1⊗...⊗fn) ⊗_H target``."""
    hopf = target.hopf
    return RawTensor(hopf, len(factors), target.arity).add_pure(factors, target, coef).normalize()


# -- the first-slot-unit view (arity 2 only) ----------------------------------


def normalize_first(x: RawTensor) -> Dict[Tuple[object, Key], Fraction]:
    """``(f⊗g) ⊗_H m  ->  Σ (1 ⊗ g S(f_1)) ⊗_H f_2·m``, keyed by ``(l, mkey)``."""
    if x.n != 2:
        raise ValueError("normalize_first is defined for arity 2")
    hopf = x.hopf
    out: Dict[Tuple[object, Key], Fraction] = {}
    for ((f, g), mk), c in x.terms.items():
        for (f1, f2), cf in hopf.comul_basis(f).items():
            for s, cs in hopf.antipode_basis(f1).items():
                for l, cl in _prod(hopf, g, s):
                    for m2, cm in act_diag_key(hopf, f2, mk).items():
                        add_term(out, (l, m2), c * cf * cs * cl * cm)
    return out


def first_form(x: PseudoTensor) -> Dict[Tuple[object, Key], Fraction]:
    """The ``(1⊗l)`` representative of a normalized arity-2 value."""
    return normalize_first(to_raw(x))


def from_first_form(hopf: HopfAlgebra, p: int, terms: Mapping[Tuple[object, Key], Fraction]) -> PseudoTensor:
    raw = RawTensor(hopf, 2, p)
    unit = hopf.unit()
    for (l, mk), c in terms.items():
        raw.add((unit, l), mk, c)
    return raw.normalize()


def to_raw(x: PseudoTensor) -> RawTensor:
    raw = RawTensor(x.hopf, x.n, x.p)
    for fk, mk, c in x.raw_terms():
        raw.add(fk, mk, c)
    return raw


# -- H-slot operations -------------------------------------------------------


def slot_mul(h: Sequence[HElement], x: PseudoTensor) -> PseudoTensor:
    """Multiply slot ``i`` of a representative by ``h[i]`` and renormalize."""
    if len(h) != x.n:
        raise ValueError("slot_mul needs one H factor per slot")
    hopf = x.hopf
    if any(f.hopf != hopf for f in h):
        raise HopfMismatch()
    raw = RawTensor(hopf, x.n, x.p)
    for fk, mk, c in x.raw_terms():
        for combo in itertools.product(*(f.coeffs.items() for f in h)):
            per_slot = [_prod(hopf, b, s) for (b, _), s in zip(combo, fk)]
            cc = c
            for _, ci in combo:
                cc *= ci
            for prods in itertools.product(*per_slot):
                cp = cc
                for _, ci in prods:
                    cp *= ci
                raw.add(tuple(b for b, _ in prods), mk, cp)
    return raw.normalize()


def slot_permute(x: PseudoTensor, perm: Sequence[int]) -> PseudoTensor:
    """Slot ``i`` of the result is slot ``perm[i]`` of a representative."""
    if sorted(perm) != list(range(x.n)):
        raise ValueError("not a permutation of the H slots")
    raw = RawTensor(x.hopf, x.n, x.p)
    for fk, mk, c in x.raw_terms():
        raw.add(tuple(fk[i] for i in perm), mk, c)
    return raw.normalize()


def sigma_swap(x: PseudoTensor) -> PseudoTensor:
    if x.n != 2:
        raise ValueError("sigma_swap expects arity 2")
    return slot_permute(x, (1, 0))


def sigma12(x: PseudoTensor) -> PseudoTensor:
    return slot_permute(x, (1, 0) + tuple(range(2, x.n)))


def apply_to_target(x: PseudoTensor, fn: Callable[[Key], Tensor]) -> PseudoTensor:
    """Apply an H-linear map to the stored target values.

    ``fn`` receives a basis tensor of the target and returns its image.  The
    normal form is preserved because the map commutes with the H-action.
    """
    out: Store = {}
    p = None
    for (hk, mk), c in x.store.items():
        image = fn(mk)
        p = image.arity
        for ik, ic in image.coeffs.items():
            add_term(out, (hk, ik), c * ic)
    return PseudoTensor(x.hopf, x.n, x.p if p is None else p, out)


def permute_target(x: PseudoTensor, perm: Sequence[int]) -> PseudoTensor:
    """Permute the tensor factors of the target (e.g. τ on ``A⊗A``)."""
    return PseudoTensor(x.hopf, x.n, x.p,
                        {(hk, tuple(mk[i] for i in perm)): c for (hk, mk), c in x.store.items()})


def tensor_target(x: PseudoTensor, left: Key = (), right: Key = ()) -> PseudoTensor:
    """Append fixed basis factors to every target value (no H-action on them)."""
    return PseudoTensor(x.hopf, x.n, x.p + len(left) + len(right),
                        {(hk, left + mk + right): c for (hk, mk), c in x.store.items()})


# -- brackets ------------------------------------------------------------------


class Decorated:
    """Element of ``H ⊗ A^{⊗p}``: a tensor carrying one extra H leg."""

    __slots__ = ("hopf", "p", "coeffs")

    def __init__(self, hopf: HopfAlgebra, p: int, coeffs: Mapping[Tuple[object, Key], Fraction] | None = None):
        self.hopf = hopf
        self.p = p
        self.coeffs = {k: Fraction(c) for k, c in (coeffs or {}).items() if c}

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, Decorated):
            return NotImplemented
        return self.hopf == other.hopf and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Decorated") -> "Decorated":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            add_term(out, k, c)
        return Decorated(self.hopf, self.p, out)

    def __neg__(self) -> "Decorated":
        return Decorated(self.hopf, self.p, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "Decorated") -> "Decorated":
        return self + (-other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        hopf = self.hopf
        items = sorted(self.coeffs.items(), key=lambda kv: (
            hopf.sort_key(kv[0][0]), tuple((lab, hopf.sort_key(b)) for b, lab in kv[0][1])))
        parts = []
        for (h, mk), c in items:
            body = "(" + ", ".join(render_factor(hopf, f) for f in mk) + ")"
            parts.append(f"{render_monomial(hopf, h, c)} ⊗ {body}")
        return " + ".join(parts)

    __repr__ = __str__

    def act(self) -> Tensor:
        """Let the H leg act diagonally (the operator ``μ``)."""
        out: Dict[Key, Fraction] = {}
        for (h, mk), c in self.coeffs.items():
            for k, ck in act_diag_key(self.hopf, h, mk).items():
                add_term(out, k, c * ck)
        return Tensor(self.hopf, self.p, out)


def bracket_of(x: PseudoTensor) -> Decorated:
    """``Σ (h⊗1) ⊗_H c  ->  Σ h ⊗ c``."""
    if x.n != 2:
        raise ValueError("bracket_of expects arity 2")
    return Decorated(x.hopf, x.p, {(hk[0], mk): c for (hk, mk), c in x.store.items()})


# -- μ operators -------------------------------------------------------------


class MuDescriptor:
    """Which slot carries H, whether it acts through S, and on which slots.

    Positions are 1-based and counted in the input tensor, H slot included,
    matching the usual ``μ_{-k}^{l}`` / ``μ_k^{r,s}`` notation.
    """

    def __init__(self, h_position: int, antipode: bool, targets: Sequence[int]):
        targets = tuple(targets)
        if h_position < 1:
            raise ValueError("malformed descriptor: H position must be >= 1")
        if not targets:
            raise ValueError("malformed descriptor: no target positions")
        if h_position in targets or len(set(targets)) != len(targets):
            raise ValueError("malformed descriptor: targets must be distinct and avoid the H slot")
        self.h_position = h_position
        self.antipode = antipode
        self.targets = targets

    def __repr__(self) -> str:
        sign = "-" if self.antipode else ""
        return f"mu_{sign}{self.h_position}^{{{','.join(map(str, self.targets))}}}"


def mu_operator(desc: MuDescriptor, terms: Mapping[tuple, Fraction], hopf: HopfAlgebra, width: int) -> Tensor:
    """Apply a μ operator to a sum of decorated basis tensors.

    ``terms`` maps ``width``-tuples (an H basis index at the H position and a
    module factor elsewhere) to coefficients.
    """
    k = desc.h_position - 1
    if k >= width or any(t < 1 or t > width for t in desc.targets):
        raise ValueError("position out of range")
    out: Dict[Key, Fraction] = {}
    for key, c in terms.items():
        h = key[k]
        hs = hopf.antipode_basis(h) if desc.antipode else {h: Fraction(1)}
        for s, cs in hs.items():
            for legs, cl in hopf.iterated_comul_basis(s, len(desc.targets)).items():
                slots = list(key)
                per_pos = []
                for pos in range(width):
                    if pos == k:
                        continue
                    if pos + 1 in desc.targets:
                        leg = legs[desc.targets.index(pos + 1)]
                        b, lab = key[pos]
                        per_pos.append([((p, lab), cp) for p, cp in _prod(hopf, leg, b)])
                    else:
                        per_pos.append([(slots[pos], Fraction(1))])
                for combo in itertools.product(*per_pos):
                    cc = c * cs * cl
                    for _, ci in combo:
                        cc *= ci
                    add_term(out, tuple(f for f, _ in combo), cc)
    return Tensor(hopf, width - 1, out)


def mu3(h: HElement, t: Tensor) -> Tensor:
    """``((Δ⊗id)Δ(h)) · (a⊗b⊗c)``."""
    from .modules import diagonal_act
    if t.arity != 3:
        raise ValueError("mu3 expects a 3-tensor")
    return diagonal_act(h, t)


def decorate(h_position: int, h, key: Key) -> tuple:
    """Insert an H basis index into a module key at a 1-based position."""
    return key[:h_position - 1] + (h,) + key[h_position - 1:]


# -- rendering ----------------------------------------------------------------


def render_target(hopf: HopfAlgebra, mk: Key) -> str:
    if len(mk) == 1:
        return render_factor(hopf, mk[0])
    return "(" + ", ".join(render_factor(hopf, f) for f in mk) + ")"


def render_pseudotensor(x: PseudoTensor) -> str:
    if not x.store:
        return "0"
    hopf = x.hopf
    parts = []
    for (hk, mk), c in x.terms():
        slots = list(hk) + [hopf.unit()]
        hs = [render_monomial(hopf, slots[0], c)] + [hopf.render_basis(b) for b in slots[1:]]
        parts.append("[" + " # ".join(hs) + "] @H " + render_target(hopf, mk))
    return " + ".join(parts)
