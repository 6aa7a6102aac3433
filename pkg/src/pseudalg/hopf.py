"""Concrete cocommutative Hopf algebras with exact rational coefficients.

Three families are provided: the trivial Hopf algebra ``k``, the polynomial
algebra ``k[d1, ..., dm]`` with primitive generators, and the group algebra of
a finite group given by its multiplication table.  Every algebra exposes the
same basis-level interface (``mul_basis``, ``comul_basis``, ...), and
:class:`HElement` builds sparse linear combinations on top of it.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Basis = Any
Coeffs = Dict[Any, Fraction]


class HopfMismatch(ValueError):
    def __init__(self, msg: str = "hopf mismatch"):
        super().__init__(msg)


def add_term(store: dict, key, coef) -> None:
    """Accumulate ``coef`` at ``key``, dropping the entry when it cancels."""
    if not coef:
        return
    value = store.get(key, 0) + coef
    if value:
        store[key] = value
    else:
        store.pop(key, None)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class HopfAlgebra:
    """Basis-level structure maps shared by all concrete families."""

    tag: str = "abstract"
    finite: bool = False

    # subclasses fill these in
    def unit(self) -> Basis:
        raise NotImplementedError

    def mul_basis(self, a: Basis, b: Basis) -> Coeffs:
        raise NotImplementedError

    def comul_basis(self, a: Basis) -> Coeffs:
        raise NotImplementedError

    def antipode_basis(self, a: Basis) -> Coeffs:
        raise NotImplementedError

    def counit_basis(self, a: Basis) -> Fraction:
        raise NotImplementedError

    def basis(self, degree_bound: int) -> list:
        raise NotImplementedError

    def degree(self, b: Basis) -> int:
        return 0

    def sort_key(self, b: Basis):
        return b

    def render_basis(self, b: Basis) -> str:
        raise NotImplementedError

    def key(self) -> tuple:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, HopfAlgebra) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"<{self.describe()}>"

    # -- derived structure, cached on basis indices --------------------------

    def iterated_comul_basis(self, a: Basis, n: int) -> Coeffs:
        """n-fold iterated coproduct of a basis element, keyed by n-tuples.

        ``n = 1`` is the identity and ``n = 0`` is the counit (keyed by ``()``).
        """
        return _iterated(self, a, n)

    def elem(self, coeffs: Mapping[Basis, Any] | None = None) -> "HElement":
        return HElement(self, coeffs or {})

    def one(self) -> "HElement":
        return HElement(self, {self.unit(): Fraction(1)})

    def basis_element(self, b: Basis) -> "HElement":
        return HElement(self, {b: Fraction(1)})


@lru_cache(maxsize=None)
def _iterated(hopf: HopfAlgebra, a: Basis, n: int) -> Coeffs:
    if n == 0:
        c = hopf.counit_basis(a)
        return {(): c} if c else {}
    if n == 1:
        return {(a,): Fraction(1)}
    out: Coeffs = {}
    for (b1, b2), c in hopf.comul_basis(a).items():
        for rest, c2 in _iterated(hopf, b2, n - 1).items():
            add_term(out, (b1,) + rest, c * c2)
    return out


class PolynomialHopf(HopfAlgebra):
    """``k[d1..dm]`` with every ``di`` primitive; basis = exponent tuples."""

    tag = "polynomial"
    finite = False

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("polynomial Hopf algebra needs m >= 1")
        self.m = m

    def key(self) -> tuple:
        return (self.tag, self.m)

    def describe(self) -> str:
        return f"polynomial {self.m}"

    def unit(self):
        return (0,) * self.m

    def mul_basis(self, a, b):
        return {tuple(x + y for x, y in zip(a, b)): Fraction(1)}

    @lru_cache(maxsize=None)
    def comul_basis(self, a):
        out = {}
        for left in itertools.product(*(range(e + 1) for e in a)):
            right = tuple(e - l for e, l in zip(a, left))
            c = 1
            for e, l in zip(a, left):
                c *= comb(e, l)
            out[(left, right)] = Fraction(c)
        return out

    def antipode_basis(self, a):
        return {a: Fraction(-1 if sum(a) % 2 else 1)}

    def counit_basis(self, a):
        return Fraction(1 if not any(a) else 0)

    def degree(self, b) -> int:
        return sum(b)

    def sort_key(self, b):
        return (sum(b), tuple(-x for x in b))

    def basis(self, degree_bound: int) -> list:
        out = []
        for total in range(degree_bound + 1):
            for combo in itertools.product(range(total + 1), repeat=self.m):
                if sum(combo) == total:
                    out.append(combo)
        return sorted(out, key=self.sort_key)

    def generator_name(self, i: int) -> str:
        return "d" if self.m == 1 else f"d{i + 1}"

    def render_basis(self, b) -> str:
        parts = []
        for i, e in enumerate(b):
            if e == 1:
                parts.append(self.generator_name(i))
            elif e > 1:
                parts.append(f"{self.generator_name(i)}^{e}")
        return " ".join(parts) if parts else "1"


class TrivialHopf(HopfAlgebra):
    """The one-dimensional Hopf algebra ``k``."""

    tag = "trivial"
    finite = True

    def key(self) -> tuple:
        return (self.tag,)

    def describe(self) -> str:
        return "trivial"

    def unit(self):
        return ()

    def mul_basis(self, a, b):
        return {(): Fraction(1)}

    def comul_basis(self, a):
        return {((), ()): Fraction(1)}

    def antipode_basis(self, a):
        return {(): Fraction(1)}

    def counit_basis(self, a):
        return Fraction(1)

    def basis(self, degree_bound: int = 0) -> list:
        return [()]

    def render_basis(self, b) -> str:
        return "1"


class GroupHopf(HopfAlgebra):
    """Group algebra ``kG`` of a finite group given by a Cayley table.

    Elements are 0-based row indices.  The constructor does not insist that
    the table is a group (``validate=False``) so that broken tables can be
    handed to :func:`check_hopf_axioms`; the spec-file loader validates.
    """

    tag = "group_algebra"
    finite = True

    def __init__(self, table: Sequence[Sequence[int]], identity: int, validate: bool = True):
        n = len(table)
        self.n = n
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.identity = int(identity)
        if any(len(row) != n for row in self.table):
            raise ValueError("group table must be square")
        if not 0 <= self.identity < n:
            raise ValueError("identity index out of range")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise ValueError("group table entries out of range")
        self.inverse = {}
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == self.identity and self.table[h][g] == self.identity:
                    self.inverse[g] = h
                    break
        if validate:
            problems = group_table_problems(self.table, self.identity)
            if problems:
                raise ValueError("invalid group table: " + "; ".join(problems))

    def key(self) -> tuple:
        return (self.tag, self.table, self.identity)

    def describe(self) -> str:
        return f"group {self.n}"

    def unit(self):
        return self.identity

    def mul_basis(self, a, b):
        return {self.table[a][b]: Fraction(1)}

    def comul_basis(self, a):
        return {(a, a): Fraction(1)}

    def antipode_basis(self, a):
        # a missing inverse leaves S undefined; fall back to the identity map so
        # that the antipode axiom check reports the failure
        return {self.inverse.get(a, a): Fraction(1)}

    def counit_basis(self, a):
        return Fraction(1)

    def basis(self, degree_bound: int = 0) -> list:
        return list(range(self.n))

    def sort_key(self, b):
        return (0 if b == self.identity else 1, b)

    def render_basis(self, b) -> str:
        return "1" if b == self.identity else f"g{b + 1}"


def group_table_problems(table, identity: int) -> list[str]:
    n = len(table)
    problems = []
    for g in range(n):
        if table[identity][g] != g or table[g][identity] != g:
            problems.append(f"g{identity + 1} is not a two-sided identity for g{g + 1}")
            break
    for g in range(n):
        if not any(table[g][h] == identity and table[h][g] == identity for h in range(n)):
            problems.append(f"g{g + 1} has no inverse")
            break
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            problems.append(f"table is not associative at (g{a + 1}, g{b + 1}, g{c + 1})")
            break
    return problems


def cyclic_group(n: int) -> GroupHopf:
    return GroupHopf([[(i + j) % n for j in range(n)] for i in range(n)], 0)


# ---------------------------------------------------------------------------


class HElement:
    """Finite rational combination of basis elements of a Hopf algebra."""

    __slots__ = ("hopf", "coeffs", "_hash")

    def __init__(self, hopf: HopfAlgebra, coeffs: Mapping[Basis, Any]):
        self.hopf = hopf
        clean = {}
        for b, c in coeffs.items():
            c = to_fraction(c)
            if c:
                clean[b] = c
        self.coeffs = clean
        self._hash = None

    def _check(self, other: "HElement") -> None:
        if self.hopf != other.hopf:
            raise HopfMismatch()

    def __iter__(self) -> Iterator[Tuple[Basis, Fraction]]:
        return iter(sorted(self.coeffs.items(), key=lambda kv: self.hopf.sort_key(kv[0])))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == self.hopf.one() * other
        if not isinstance(other, HElement):
            return NotImplemented
        return self.hopf == other.hopf and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.hopf, frozenset(self.coeffs.items())))
        return self._hash

    def __add__(self, other: "HElement") -> "HElement":
        self._check(other)
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            add_term(out, b, c)
        return HElement(self.hopf, out)

    def __neg__(self) -> "HElement":
        return HElement(self.hopf, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other: "HElement") -> "HElement":
        return self + (-other)

    def __mul__(self, other) -> "HElement":
        if isinstance(other, (int, Fraction)):
            return HElement(self.hopf, {b: c * other for b, c in self.coeffs.items()})
        self._check(other)
        out: Coeffs = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                for p, cp in self.hopf.mul_basis(a, b).items():
                    add_term(out, p, ca * cb * cp)
        return HElement(self.hopf, out)

    def __rmul__(self, other) -> "HElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        return f"HElement({render_helement(self)})"

    def __str__(self) -> str:
        return render_helement(self)


def render_helement(x: HElement) -> str:
    return render_hexpr(x.hopf, x.coeffs)


def render_monomial(hopf: HopfAlgebra, b: Basis, c: Fraction) -> str:
    body = hopf.render_basis(b)
    if body == "1":
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c} {body}"


def render_hexpr(hopf: HopfAlgebra, coeffs: Mapping[Basis, Fraction]) -> str:
    if not coeffs:
        return "0"
    items = sorted(coeffs.items(), key=lambda kv: hopf.sort_key(kv[0]))
    out = ""
    for i, (b, c) in enumerate(items):
        mono = render_monomial(hopf, b, c)
        if i == 0:
            out = mono
        elif mono.startswith("-"):
            out += " - " + mono[1:]
        else:
            out += " + " + mono
    return out


# -- the structure maps on elements ------------------------------------------


def h_mul(a: HElement, b: HElement) -> HElement:
    return a * b


def h_comul(a: HElement) -> "HTensor":
    return h_iterated_comul(a, 2)


def h_antipode(a: HElement) -> HElement:
    out: Coeffs = {}
    for b, c in a.coeffs.items():
        for s, cs in a.hopf.antipode_basis(b).items():
            add_term(out, s, c * cs)
    return HElement(a.hopf, out)


def h_counit(a: HElement) -> Fraction:
    return sum((c * a.hopf.counit_basis(b) for b, c in a.coeffs.items()), Fraction(0))


def h_iterated_comul(a: HElement, n: int):
    """``n``-fold coproduct; ``n = 0`` returns the counit as a scalar."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return h_counit(a)
    out: Coeffs = {}
    for b, c in a.coeffs.items():
        for legs, cl in a.hopf.iterated_comul_basis(b, n).items():
            add_term(out, legs, c * cl)
    return HTensor(a.hopf, n, out)


class HTensor:
    """Element of ``H^{⊗n}``, stored as basis-tuple -> coefficient."""

    __slots__ = ("hopf", "arity", "coeffs")

    def __init__(self, hopf: HopfAlgebra, arity: int, coeffs: Mapping[tuple, Any]):
        self.hopf = hopf
        self.arity = arity
        self.coeffs = {k: to_fraction(c) for k, c in coeffs.items() if c}

    @classmethod
    def pure(cls, *factors: HElement) -> "HTensor":
        hopf = factors[0].hopf
        out: Coeffs = {}
        for combo in itertools.product(*(f.coeffs.items() for f in factors)):
            if any(f.hopf != hopf for f in factors):
                raise HopfMismatch()
            c = Fraction(1)
            for _, ci in combo:
                c *= ci
            add_term(out, tuple(b for b, _ in combo), c)
        return cls(hopf, len(factors), out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HTensor):
            return NotImplemented
        return self.hopf == other.hopf and self.arity == other.arity and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.hopf, self.arity, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "HTensor") -> "HTensor":
        if self.hopf != other.hopf:
            raise HopfMismatch()
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            add_term(out, k, c)
        return HTensor(self.hopf, self.arity, out)

    def __neg__(self) -> "HTensor":
        return HTensor(self.hopf, self.arity, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "HTensor") -> "HTensor":
        return self + (-other)

    def __mul__(self, other) -> "HTensor":
        """Slotwise product in the algebra ``H^{⊗n}``."""
        if isinstance(other, (int, Fraction)):
            return HTensor(self.hopf, self.arity, {k: c * other for k, c in self.coeffs.items()})
        if self.hopf != other.hopf:
            raise HopfMismatch()
        out: Coeffs = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                for prod, cp in slot_products(self.hopf, ka, kb):
                    add_term(out, prod, ca * cb * cp)
        return HTensor(self.hopf, self.arity, out)

    def map_slots(self, fn) -> "HTensor":
        """Apply a basis-level linear map (basis -> Coeffs) to every slot."""
        out: Coeffs = {}
        for key, c in self.coeffs.items():
            for combo in itertools.product(*(fn(b).items() for b in key)):
                cc = c
                for _, ci in combo:
                    cc *= ci
                add_term(out, tuple(b for b, _ in combo), cc)
        return HTensor(self.hopf, self.arity, out)

    def permute(self, perm: Sequence[int]) -> "HTensor":
        """Slot ``i`` of the result is slot ``perm[i]`` of ``self``."""
        return HTensor(self.hopf, self.arity,
                       {tuple(k[p] for p in perm): c for k, c in self.coeffs.items()})

    def __iter__(self):
        return iter(sorted(self.coeffs.items(),
                           key=lambda kv: tuple(self.hopf.sort_key(b) for b in kv[0])))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for key, c in self:
            parts = [render_monomial(self.hopf, key[0], c)]
            parts += [self.hopf.render_basis(b) for b in key[1:]]
            terms.append(" ⊗ ".join(parts))
        return " + ".join(terms)

    __repr__ = __str__


def slot_products(hopf: HopfAlgebra, ka: tuple, kb: tuple) -> Iterable[tuple[tuple, Fraction]]:
    per_slot = [hopf.mul_basis(a, b).items() for a, b in zip(ka, kb)]
    for combo in itertools.product(*per_slot):
        c = Fraction(1)
        for _, ci in combo:
            c *= ci
        yield tuple(b for b, _ in combo), c


def fourier(x: HTensor) -> HTensor:
    """``f ⊗ g  ->  f S(g_1) ⊗ g_2``."""
    hopf = x.hopf
    out: Coeffs = {}
    for (f, g), c in x.coeffs.items():
        for (g1, g2), cg in hopf.comul_basis(g).items():
            for s, cs in hopf.antipode_basis(g1).items():
                for p, cp in hopf.mul_basis(f, s).items():
                    add_term(out, (p, g2), c * cg * cs * cp)
    return HTensor(hopf, 2, out)


def fourier_inv(x: HTensor) -> HTensor:
    """``f ⊗ g  ->  f g_1 ⊗ g_2``."""
    hopf = x.hopf
    out: Coeffs = {}
    for (f, g), c in x.coeffs.items():
        for (g1, g2), cg in hopf.comul_basis(g).items():
            for p, cp in hopf.mul_basis(f, g1).items():
                add_term(out, (p, g2), c * cg * cp)
    return HTensor(hopf, 2, out)


# -- desk-scale validation ---------------------------------------------------


def check_hopf_axioms(hopf: HopfAlgebra, degree_bound: int = 4):
    """Check the Hopf and cocommutativity axioms on a bounded basis.

    Polynomial algebras are checked on monomials of total degree at most
    ``degree_bound`` (pairs and triples are restricted to the same total
    bound); group algebras are checked exhaustively.
    """
    from .report import Check, Report

    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    basis = hopf.basis(degree_bound)
    deg = hopf.degree
    pairs = [(a, b) for a in basis for b in basis if deg(a) + deg(b) <= degree_bound]
    triples = [(a, b, c) for a in basis for b in basis for c in basis
               if deg(a) + deg(b) + deg(c) <= degree_bound]
    e = lambda b: hopf.basis_element(b)
    one = hopf.one()

    def first_failure(cases, pred):
        for case in cases:
            if not pred(*case):
                return case
        return None

    def coassoc(a):
        d = h_comul(e(a))
        left = HTensor(hopf, 3, {})
        right = HTensor(hopf, 3, {})
        for (x, y), c in d.coeffs.items():
            left = left + _tensor3(h_comul(e(x)), e(y), c, first=True)
            right = right + _tensor3(h_comul(e(y)), e(x), c, first=False)
        return left == right

    def antipode(a):
        target = one * h_counit(e(a))
        left = hopf.elem()
        right = hopf.elem()
        for (x, y), c in hopf.comul_basis(a).items():
            left = left + h_antipode(e(x)) * e(y) * c
            right = right + e(x) * h_antipode(e(y)) * c
        return left == target and right == target

    def counit(a):
        d = h_comul(e(a))
        left = hopf.elem()
        right = hopf.elem()
        for (x, y), c in d.coeffs.items():
            left = left + e(y) * (hopf.counit_basis(x) * c)
            right = right + e(x) * (hopf.counit_basis(y) * c)
        return left == e(a) and right == e(a)

    checks = [
        ("associativity", triples, lambda a, b, c: (e(a) * e(b)) * e(c) == e(a) * (e(b) * e(c))),
        ("unit", [(a,) for a in basis], lambda a: one * e(a) == e(a) == e(a) * one),
        ("coassociativity", [(a,) for a in basis], coassoc),
        ("counit", [(a,) for a in basis], counit),
        ("comultiplicativity", pairs,
         lambda a, b: h_comul(e(a) * e(b)) == h_comul(e(a)) * h_comul(e(b))),
        ("counit multiplicative", pairs,
         lambda a, b: h_counit(e(a) * e(b)) == h_counit(e(a)) * h_counit(e(b))),
        ("antipode", [(a,) for a in basis], antipode),
        ("cocommutativity", [(a,) for a in basis],
         lambda a: h_comul(e(a)).permute((1, 0)) == h_comul(e(a))),
    ]
    if isinstance(hopf, GroupHopf):
        missing = [g for g in range(hopf.n) if g not in hopf.inverse]
        checks.append(("inverses", [(g,) for g in missing], lambda g: False))
    report = Report("hopf")
    for name, cases, pred in checks:
        witness = first_failure(cases, pred)
        inputs = () if witness is None else tuple(hopf.render_basis(b) for b in witness)
        report.add(Check(name, inputs, witness is None))
    return report


def _tensor3(pair: HTensor, single: HElement, coef: Fraction, first: bool) -> HTensor:
    out: Coeffs = {}
    for (x, y), c in pair.coeffs.items():
        for s, cs in single.coeffs.items():
            key = (x, y, s) if first else (s, x, y)
            add_term(out, key, c * cs * coef)
    return HTensor(pair.hopf, 3, out)


def random_helement(hopf: HopfAlgebra, rng, degree: int, coeff_range: int = 2, density: float = 0.6) -> HElement:
    """Random element supported on the basis up to ``degree`` (all of ``kG``)."""
    coeffs = {}
    for b in hopf.basis(degree):
        if rng.random() < density:
            coeffs[b] = rng.randint(-coeff_range, coeff_range)
    return HElement(hopf, coeffs)
