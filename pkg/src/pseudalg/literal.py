"""Tokenizer and parsers for the literal grammar.

    hexpr       := hterm (('+' | '-') hterm)*
    hterm       := ['-'] [rational] monomial? ;  monomial := hsym ('^' int)? ...
    slot        := gen | hexpr '*' gen
    tensor      := '0' | tterm (('+'|'-') tterm)*     tterm := [rational] '(' slot (',' slot)* ')'
    pseudo      := '0' | pterm (('+'|'-') pterm)*     pterm := [rational] '[' hexpr ('#' hexpr)* ']' '@H' target
    target      := slot | '(' slot (',' slot)* ')'

``hsym`` is ``d`` (one generator) or ``d1 .. dm`` for polynomial H, and
``g1 .. gn`` for a group algebra.  Every value rendered by the library parses
back to itself.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .hopf import GroupHopf, HElement, HopfAlgebra, PolynomialHopf, add_term
from .modules import FreeModule, Tensor
from .pseudotensor import PseudoTensor, RawTensor


class SpecError(Exception):
    """Base for parse and semantic errors; carries an optional position."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(self.describe())

    def describe(self) -> str:
        if self.line is None:
            return self.message
        return f"line {self.line}, column {self.col}: {self.message}"


class ParseError(SpecError):
    pass


class SemanticError(SpecError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<at>@H)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>[\[\]\#\(\),\*\+\-\^=⊗])
""", re.VERBOSE)


def tokenize(text: str, line: int = 1, offset: int = 0) -> List[Token]:
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, offset + pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), offset + pos + 1))
        pos = m.end()
    out.append(Token("end", "", offset + len(text) + 1))
    return out


class Parser:
    def __init__(self, hopf: HopfAlgebra, text: str, line: int = 1, offset: int = 0,
                 module: FreeModule | None = None):
        self.hopf = hopf
        self.module = module
        self.line = line
        self.tokens = tokenize(text, line, offset)
        self.i = 0

    # -- token helpers -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def fail(self, expected: Sequence[str]) -> None:
        t = self.tok
        got = "end of line" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected {' or '.join(expected)}, got {got}", self.line, t.col)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "end":
            self.fail([repr(text)])
        return self.advance()

    def at(self, text: str) -> bool:
        return self.tok.kind != "end" and self.tok.text == text

    def done(self) -> None:
        if self.tok.kind != "end":
            self.fail(["end of line"])

    # -- H expressions -------------------------------------------------------

    def hsym(self, text: str):
        """Basis index of a Hopf generator symbol, or None."""
        hopf = self.hopf
        if isinstance(hopf, PolynomialHopf):
            if text == "d" and hopf.m == 1:
                return 0
            m = re.fullmatch(r"d(\d+)", text)
            if m and 1 <= int(m.group(1)) <= hopf.m:
                return int(m.group(1)) - 1
            return None
        if isinstance(hopf, GroupHopf):
            m = re.fullmatch(r"g(\d+)", text)
            if m and 1 <= int(m.group(1)) <= hopf.n:
                return int(m.group(1)) - 1
        return None

    def is_hsym(self, t: Token) -> bool:
        return t.kind == "ident" and self.hsym(t.text) is not None

    def rational(self) -> Fraction:
        t = self.advance()
        return Fraction(t.text)

    def monomial(self) -> Optional[object]:
        """A product of Hopf symbols; returns a basis index or None if absent."""
        hopf = self.hopf
        if not self.is_hsym(self.tok):
            return None
        basis = hopf.unit()
        while self.is_hsym(self.tok):
            idx = self.hsym(self.advance().text)
            power = 1
            if self.at("^"):
                self.advance()
                if self.tok.kind != "num" or "/" in self.tok.text:
                    self.fail(["a non-negative integer exponent"])
                power = int(self.advance().text)
            if isinstance(hopf, PolynomialHopf):
                exps = list(basis)
                exps[idx] += power
                basis = tuple(exps)
            else:
                for _ in range(power):
                    (basis,) = hopf.mul_basis(basis, idx).keys()
        return basis

    def hterm(self, sign: int) -> tuple:
        coef = Fraction(sign)
        have = False
        if self.tok.kind == "num":
            coef *= self.rational()
            have = True
        basis = self.monomial()
        if basis is None:
            if not have:
                self.fail(["a number", "a Hopf symbol"])
            basis = self.hopf.unit()
        return basis, coef

    def hexpr(self, stop_at_star: bool = False) -> HElement:
        out: Dict[object, Fraction] = {}
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        elif self.at("+"):
            self.advance()
        b, c = self.hterm(sign)
        add_term(out, b, c)
        while self.at("+") or self.at("-"):
            sign = 1 if self.advance().text == "+" else -1
            b, c = self.hterm(sign)
            add_term(out, b, c)
        return HElement(self.hopf, out)

    # -- module slots ---------------------------------------------------------

    def gen(self) -> str:
        t = self.tok
        if t.kind != "ident" or self.is_hsym(t):
            self.fail(["a generator"])
        self.advance()
        if self.module is not None and t.text not in self.module.labels:
            raise SemanticError(f"unknown generator {t.text!r}", self.line, t.col)
        return t.text

    def slot(self) -> Tensor:
        t = self.tok
        if t.kind == "ident" and not self.is_hsym(t):
            label = self.gen()
            return Tensor(self.hopf, 1, {((self.hopf.unit(), label),): 1})
        h = self.hexpr()
        self.expect("*")
        label = self.gen()
        return Tensor(self.hopf, 1, {((b, label),): c for b, c in h.coeffs.items()})

    def slots(self) -> Tensor:
        self.expect("(")
        out = self.slot()
        while self.at(","):
            self.advance()
            out = out.tensor(self.slot())
        self.expect(")")
        return out

    def leading_scalar(self) -> Fraction:
        sign = Fraction(1)
        if self.at("-"):
            self.advance()
            sign = Fraction(-1)
        elif self.at("+"):
            self.advance()
        if self.tok.kind == "num":
            sign *= self.rational()
            if self.at("*"):
                self.advance()
        return sign

    def tensor(self) -> Tensor:
        if self.tok.kind == "num" and self.tok.text == "0" and self.peek().kind == "end":
            self.advance()
            return None
        total = None
        first = True
        while first or self.at("+") or self.at("-"):
            if not first and self.at("+"):
                self.advance()
            first = False
            c = self.leading_scalar()
            term = self.slots() * c
            if total is not None and total.arity != term.arity:
                raise SemanticError("tensor terms have different arities", self.line, self.tok.col)
            total = term if total is None else total + term
        return total

    def pseudotensor(self):
        if self.tok.kind == "num" and self.tok.text == "0" and self.peek().kind == "end":
            self.advance()
            return None
        raw = None
        first = True
        while first or self.at("+") or self.at("-"):
            if not first and self.at("+"):
                self.advance()
            first = False
            c = self.leading_scalar()
            self.expect("[")
            factors = [self.hexpr()]
            while self.at("#"):
                self.advance()
                factors.append(self.hexpr())
            self.expect("]")
            if self.tok.kind != "at":
                self.fail(["'@H'"])
            self.advance()
            target = self.slots() if self.at("(") else self.slot()
            if raw is None:
                raw = RawTensor(self.hopf, len(factors), target.arity)
            elif (raw.n, raw.p) != (len(factors), target.arity):
                raise SemanticError("pseudotensor terms have different shapes", self.line, self.tok.col)
            raw.add_pure(factors, target, c)
        return raw.normalize()


def parse_hexpr(hopf: HopfAlgebra, text: str) -> HElement:
    p = Parser(hopf, text)
    out = p.hexpr()
    p.done()
    return out


def parse_tensor(hopf: HopfAlgebra, text: str, module: FreeModule | None = None,
                 arity: int | None = None, line: int = 1, offset: int = 0) -> Tensor:
    p = Parser(hopf, text, line, offset, module)
    out = p.tensor()
    p.done()
    if out is None:
        if arity is None:
            raise SemanticError("the arity of a bare 0 cannot be inferred", line, offset + 1)
        return Tensor.zero(hopf, arity)
    if arity is not None and out.arity != arity:
        raise SemanticError(f"expected a {arity}-tensor, got a {out.arity}-tensor", line, offset + 1)
    return out


def parse_pseudotensor(hopf: HopfAlgebra, text: str, module: FreeModule | None = None,
                       shape: tuple | None = None, line: int = 1, offset: int = 0) -> PseudoTensor:
    p = Parser(hopf, text, line, offset, module)
    out = p.pseudotensor()
    p.done()
    if out is None:
        if shape is None:
            raise SemanticError("the shape of a bare 0 cannot be inferred", line, offset + 1)
        return PseudoTensor.zero(hopf, *shape)
    if shape is not None and (out.n, out.p) != tuple(shape):
        raise SemanticError(f"expected shape {shape}, got {(out.n, out.p)}", line, offset + 1)
    return out


def reserved_symbol(hopf: HopfAlgebra, label: str) -> bool:
    return Parser(hopf, "").hsym(label) is not None or re.fullmatch(r"d\d*|g\d+", label) is not None
