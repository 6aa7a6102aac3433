"""Line-oriented spec files describing a Hopf algebra and one or more bundles.

    # comment
    hopf polynomial 1            (or: hopf trivial / hopf group <n>, then n table rows and `identity <k>`)
    algebra A generators e1 e2
    product e2 e1 = [1 # 1] @H e1
    delta e1 = (e1, e1)
    r = (e2, e1) - (e1, e2)
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional

from .hopf import GroupHopf, HopfAlgebra, PolynomialHopf, TrivialHopf, group_table_problems
from .literal import ParseError, SemanticError, parse_pseudotensor, parse_tensor, reserved_symbol
from .modules import FreeModule, Tensor
from .pseudoalgebra import PseudoAlgebra
from .bialgebra import Bialgebra, CoalgebraMap


@dataclass
class AlgebraSection:
    name: str
    module: FreeModule
    products: dict = field(default_factory=dict)
    deltas: dict = field(default_factory=dict)
    r: Optional[Tensor] = None
    has_delta: bool = False

    def algebra(self) -> PseudoAlgebra:
        return PseudoAlgebra(self.module, self.products, name=self.name)

    def coalgebra(self) -> Optional[CoalgebraMap]:
        if not self.has_delta:
            return None
        return CoalgebraMap(self.module, self.deltas)

    def bundle(self) -> Bialgebra:
        """Product with its Δ; a file with ``r`` but no delta lines uses Δ_r."""
        from .ybe import coboundary_delta
        alg = self.algebra()
        delta = self.coalgebra()
        if delta is None:
            delta = coboundary_delta(alg, self.r) if self.r is not None else CoalgebraMap(self.module, {})
        return Bialgebra(alg, delta, r=self.r, name=self.name)


@dataclass
class SpecFile:
    hopf: HopfAlgebra
    algebras: List[AlgebraSection]

    def section(self, name: str | None = None) -> AlgebraSection:
        if name is None:
            return self.algebras[0]
        for s in self.algebras:
            if s.name == name:
                return s
        raise SemanticError(f"no algebra named {name!r}")


def parse_hopf_line(words: List[str], lineno: int, col: int, lines_iter=None) -> HopfAlgebra:
    if not words:
        raise ParseError("expected 'trivial', 'polynomial' or 'group'", lineno, col)
    kind = words[0]
    if kind == "trivial" and len(words) == 1:
        return TrivialHopf()
    if kind == "polynomial" and len(words) == 2 and words[1].isdigit():
        m = int(words[1])
        if m < 1:
            raise SemanticError("polynomial Hopf algebra needs m >= 1", lineno, col)
        return PolynomialHopf(m)
    if kind == "group" and len(words) == 2 and words[1].isdigit():
        return None  # table follows; handled by the caller
    raise ParseError("expected 'trivial', 'polynomial <m>' or 'group <n>'", lineno, col)


def parse_hopf_spec(text: str) -> HopfAlgebra:
    """Parse a stand-alone Hopf description such as ``polynomial 2`` or ``cyclic 3``."""
    words = text.replace(":", " ").split()
    if len(words) == 2 and words[0] == "cyclic" and words[1].isdigit():
        from .hopf import cyclic_group
        return cyclic_group(int(words[1]))
    hopf = parse_hopf_line(words, 1, 1)
    if hopf is None:
        raise SemanticError("group algebras need a table; use 'cyclic <n>' or a spec file path")
    return hopf


def parse_spec(text: str) -> SpecFile:
    lines = text.splitlines()
    hopf: HopfAlgebra | None = None
    sections: List[AlgebraSection] = []
    i = 0

    def content(raw: str) -> str:
        return "" if raw.lstrip().startswith("#") else raw.rstrip()

    while i < len(lines):
        lineno = i + 1
        raw = content(lines[i])
        i += 1
        if not raw.strip():
            continue
        stripped = raw.lstrip()
        indent = len(raw) - len(stripped)
        head, _, rest = stripped.partition(" ")
        col_rest = indent + len(head) + 2

        if head == "hopf":
            if hopf is not None:
                raise SemanticError("duplicate hopf section", lineno, indent + 1)
            words = rest.split()
            parsed = parse_hopf_line(words, lineno, col_rest)
            if parsed is None:
                n = int(words[1])
                if n < 1:
                    raise SemanticError("a group needs at least one element", lineno, col_rest)
                table = []
                while len(table) < n:
                    if i >= len(lines):
                        raise ParseError(f"expected {n} table rows", i + 1, 1)
                    row_raw = content(lines[i])
                    i += 1
                    if not row_raw.strip():
                        continue
                    cells = row_raw.split()
                    if len(cells) != n or not all(c.isdigit() for c in cells):
                        raise ParseError(f"expected {n} positive integers in a table row", i, 1)
                    table.append([int(c) - 1 for c in cells])
                ident = None
                while ident is None:
                    if i >= len(lines):
                        raise ParseError("expected 'identity <k>'", i + 1, 1)
                    row_raw = content(lines[i])
                    i += 1
                    if not row_raw.strip():
                        continue
                    words2 = row_raw.split()
                    if len(words2) != 2 or words2[0] != "identity" or not words2[1].isdigit():
                        raise ParseError("expected 'identity <k>'", i, 1)
                    ident = int(words2[1]) - 1
                if any(not 0 <= x < n for row in table for x in row) or not 0 <= ident < n:
                    raise SemanticError("group table entries must lie in 1..n", lineno, col_rest)
                problems = group_table_problems(table, ident)
                if problems:
                    raise SemanticError("invalid group table: " + "; ".join(problems), lineno, col_rest)
                parsed = GroupHopf(table, ident)
            hopf = parsed
            continue

        if hopf is None:
            raise ParseError("expected a 'hopf' line first", lineno, indent + 1)

        if head == "algebra":
            m = re.fullmatch(r"\s*(\S+)\s+generators\s+(.+)", rest)
            if not m:
                raise ParseError("expected 'algebra <name> generators <id>+'", lineno, col_rest)
            name = m.group(1)
            labels = m.group(2).split()
            for lab in labels:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", lab):
                    raise ParseError(f"invalid generator name {lab!r}", lineno, raw.find(lab) + 1)
                if reserved_symbol(hopf, lab):
                    raise SemanticError(f"generator {lab!r} clashes with a Hopf symbol", lineno, raw.find(lab) + 1)
            if len(set(labels)) != len(labels):
                raise SemanticError("duplicate generator names", lineno, col_rest)
            if any(s.name == name for s in sections):
                raise SemanticError(f"duplicate algebra {name!r}", lineno, col_rest)
            sections.append(AlgebraSection(name, FreeModule(hopf, labels, name=name)))
            continue

        if not sections:
            raise ParseError("expected an 'algebra' line before structure data", lineno, indent + 1)
        sec = sections[-1]
        lhs, eq, rhs = stripped.partition("=")
        if not eq:
            raise ParseError("expected '='", lineno, len(raw) + 1)
        offset = indent + len(lhs) + 1
        words = lhs.split()

        def known(label: str) -> str:
            if label not in sec.module.labels:
                raise SemanticError(f"unknown generator {label!r}", lineno, raw.find(label) + 1)
            return label

        if head == "product":
            if len(words) != 3:
                raise ParseError("expected 'product <gi> <gj> = ...'", lineno, col_rest)
            key = (known(words[1]), known(words[2]))
            if key in sec.products:
                raise SemanticError(f"duplicate product line for {key[0]} {key[1]}", lineno, indent + 1)
            sec.products[key] = parse_pseudotensor(hopf, rhs, sec.module, (2, 1), lineno, offset)
        elif head == "delta":
            if len(words) != 2:
                raise ParseError("expected 'delta <g> = ...'", lineno, col_rest)
            g = known(words[1])
            if g in sec.deltas:
                raise SemanticError(f"duplicate delta line for {g}", lineno, indent + 1)
            sec.deltas[g] = parse_tensor(hopf, rhs, sec.module, 2, lineno, offset)
            sec.has_delta = True
        elif words == ["r"]:
            if sec.r is not None:
                raise SemanticError("duplicate r line", lineno, indent + 1)
            sec.r = parse_tensor(hopf, rhs, sec.module, 2, lineno, offset)
        else:
            raise ParseError("expected 'product', 'delta' or 'r'", lineno, indent + 1)

    if hopf is None:
        raise ParseError("expected a 'hopf' line", 1, 1)
    if not sections:
        raise ParseError("expected an 'algebra' line", len(lines) + 1, 1)
    return SpecFile(hopf, sections)


def load_spec(path) -> SpecFile:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def render_hopf(hopf: HopfAlgebra) -> str:
    if isinstance(hopf, TrivialHopf):
        return "hopf trivial"
    if isinstance(hopf, PolynomialHopf):
        return f"hopf polynomial {hopf.m}"
    if isinstance(hopf, GroupHopf):
        rows = [" ".join(str(x + 1) for x in row) for row in hopf.table]
        return "\n".join([f"hopf group {hopf.n}", *rows, f"identity {hopf.identity + 1}"])
    raise ValueError("unknown Hopf algebra")


def render_section(name: str, module: FreeModule, products=None, deltas=None, r=None,
                   header: str | None = None) -> str:
    lines = []
    if header:
        lines += [f"# {line}" for line in header.splitlines()]
    lines.append(f"algebra {name} generators {' '.join(module.labels)}")
    for (i, j), v in sorted((products or {}).items(),
                            key=lambda kv: (module.index(kv[0][0]), module.index(kv[0][1]))):
        if v:
            lines.append(f"product {i} {j} = {v}")
    for g in module.labels:
        if deltas and g in deltas:
            lines.append(f"delta {g} = {deltas[g]}")
    if r is not None:
        lines.append(f"r = {r}")
    return "\n".join(lines)


def render_bundle(bundle: Bialgebra, header: str | None = None, include_r: bool = True) -> str:
    module = bundle.alg.module
    deltas = {g: bundle.delta.table.get(g, Tensor.zero(module.hopf, 2)) for g in module.labels}
    body = render_section(bundle.name, module, bundle.alg.table, deltas,
                          bundle.r if include_r else None, header)
    return render_hopf(module.hopf) + "\n" + body + "\n"
