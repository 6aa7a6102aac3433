"""Named check suites over a parsed bundle."""
from __future__ import annotations

import itertools
import random
from typing import Callable, Dict

from .bialgebra import (Bialgebra, check_coassoc, check_cocommutativity, check_compat, is_valid_bialgebra)
from .cohomology import check_cocycle_bundle
from .hopf import check_hopf_axioms, random_helement
from .lie import (check_balanceator_symmetric, check_balanceator_zero, check_coboundary_lie,
                  check_cocycle, check_lie_coalgebra, check_thm56, lie_of)
from .modules import diagonal_act
from .pseudoalgebra import (check_associativity, check_commutativity, check_constants_associativity,
                            check_jacobi, check_skew, comp_left, comp_right)
from .report import Check, Report, defect_check
from .ybe import (check_aybe, check_cybe, check_thm44, classify_symmetry, coboundary_bundle, coboundary_delta,
                  thm61_suite)

SUITES = ("hopf", "assoc", "commut", "coassoc", "cocommut", "compat", "lie", "balanceator",
          "thm56", "deltar", "aybe", "thm44", "cybe", "thm61", "cocycle", "coboundary-lie", "all")
NEEDS_R = {"deltar", "aybe", "thm44", "cybe", "thm61", "coboundary-lie"}


class UnknownSuite(ValueError):
    pass


def _missing_r(name: str) -> Report:
    return Report(name).add(Check("r", (), False, note="this suite needs an 'r' line"))


def suite_assoc(bundle: Bialgebra, degree_bound: int = 4, seed: int = 0) -> Report:
    alg = bundle.alg
    report = check_associativity(alg)
    report.extend(check_constants_associativity(alg))
    # H-multiples guard against extension bugs beyond the generator level
    rng = random.Random(seed)
    hopf = alg.hopf
    deg = min(2, degree_bound)
    for i, j, k in itertools.product(alg.labels, repeat=3):
        a, b, c = (diagonal_act(random_helement(hopf, rng, deg), alg.gen(x)) for x in (i, j, k))
        report.add(defect_check("associativity-sampled", (i, j, k), comp_left(alg, a, b, c) - comp_right(alg, a, b, c)))
    return report


def suite_lie(bundle: Bialgebra, with_cocycle: bool = True) -> Report:
    lie = lie_of(bundle)
    report = Report("lie")
    report.extend(check_skew(lie.bracket))
    report.extend(check_jacobi(lie.bracket))
    report.extend(check_lie_coalgebra(lie.cobracket))
    if with_cocycle:
        report.extend(check_cocycle(lie))
    return report


def suite_balanceator(bundle: Bialgebra) -> Report:
    report = check_balanceator_symmetric(bundle)
    commutative = check_commutativity(bundle.alg).passed and check_cocommutativity(bundle.delta).passed
    coboundary = (bundle.r is not None and classify_symmetry(bundle.r) == "anti-symmetric"
                  and coboundary_delta(bundle.alg, bundle.r).table == bundle.delta.table)
    if (commutative or coboundary) and is_valid_bialgebra(bundle):
        reason = "commutative and cocommutative" if commutative else "coboundary with anti-symmetric r"
        for c in check_balanceator_zero(bundle).checks:
            report.add(Check(c.name, c.inputs, c.passed, c.defect, note=reason))
    return report


def suite_deltar(bundle: Bialgebra) -> Report:
    report = Report("deltar")
    delta = coboundary_delta(bundle.alg, bundle.r)
    for g in bundle.labels:
        value = delta.table.get(g)
        text = str(value) if value is not None else "0"
        if bundle.delta.table.get(g) != value:
            report.add(Check("matches-delta", (g,), False,
                             str(bundle.delta.table.get(g, "0")), note=f"Δ_r({g}) = {text}"))
        else:
            report.add(Check("value", (g,), True, note=f"Δ_r({g}) = {text}"))
    return report


def suite_thm56(bundle: Bialgebra) -> Report:
    report = check_thm56(bundle)
    if is_valid_bialgebra(bundle):
        return report
    # the identity is only claimed for genuine bialgebras; keep the values as information
    out = Report("thm56").add(Check("hypotheses", (), True, note="not an infinitesimal bialgebra; nothing asserted"))
    for c in report.checks:
        out.add(Check(c.name, c.inputs, True, None, note="zero" if c.passed else f"nonzero: {c.defect}"))
    return out


def suite_coboundary_lie(bundle: Bialgebra) -> Report:
    report = Report("coboundary-lie")
    kind = classify_symmetry(bundle.r)
    if kind != "anti-symmetric":
        return report.add(Check("coboundary", (), True, note="r is not anti-symmetric; nothing asserted"))
    cob = coboundary_bundle(bundle.alg, bundle.r)
    return check_coboundary_lie(lie_of(cob), bundle.r, "coboundary-lie")


def run_suite(bundle: Bialgebra, name: str, degree_bound: int = 4) -> Report:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "all":
        return run_all(bundle, degree_bound)
    if name in NEEDS_R and bundle.r is None:
        return _missing_r(name)
    alg, r = bundle.alg, bundle.r
    runners: Dict[str, Callable[[], Report]] = {
        "hopf": lambda: check_hopf_axioms(bundle.hopf, degree_bound),
        "assoc": lambda: suite_assoc(bundle, degree_bound),
        "commut": lambda: check_commutativity(alg),
        "coassoc": lambda: check_coassoc(bundle.delta),
        "cocommut": lambda: check_cocommutativity(bundle.delta),
        "compat": lambda: check_compat(bundle),
        "lie": lambda: suite_lie(bundle),
        "balanceator": lambda: suite_balanceator(bundle),
        "thm56": lambda: suite_thm56(bundle),
        "deltar": lambda: suite_deltar(bundle),
        "aybe": lambda: check_aybe(alg, r),
        "thm44": lambda: check_thm44(alg, r),
        "cybe": lambda: check_cybe(alg, r),
        "thm61": lambda: thm61_suite(alg, r),
        "cocycle": lambda: check_cocycle_bundle(bundle),
        "coboundary-lie": lambda: suite_coboundary_lie(bundle),
    }
    return runners[name]()


ALL_BASE = ("hopf", "assoc", "coassoc", "compat", "thm56", "cocycle")
ALL_WITH_R = ("deltar", "aybe", "thm44", "cybe", "thm61", "coboundary-lie")


def run_all(bundle: Bialgebra, degree_bound: int = 4) -> Report:
    """Every suite that makes an unconditional claim about this bundle.

    The Lie member checks the bracket and cobracket axioms; whether the
    Lie-ification satisfies the cocycle condition is covered by ``thm56``
    through its equivalence with a symmetric balanceator.
    """
    report = Report("all")
    names = list(ALL_BASE)
    if bundle.r is not None:
        names += ALL_WITH_R
    for name in names:
        sub = run_suite(bundle, name, degree_bound)
        for c in sub.checks:
            report.add(Check(f"{name}/{c.name}", c.inputs, c.passed, c.defect, c.note))
        if name == "compat":
            lie = suite_lie(bundle, with_cocycle=False)
            for c in lie.checks:
                report.add(Check(f"lie/{c.name}", c.inputs, c.passed, c.defect, c.note))
    return report
