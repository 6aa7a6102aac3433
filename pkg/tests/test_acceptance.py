"""End-to-end acceptance criteria.

Each test records a verdict that the terminal summary prints as one
``criterion N: PASS|FAIL`` line, whether or not output capture is on.
"""
from __future__ import annotations

import itertools
import json
import random
from pathlib import Path

from conftest import Ctx, record_criterion
from pseudalg import bundled_spec
from pseudalg.bialgebra import (Bialgebra, check_coassoc, check_compat, compat_defect,
                                dual_coalgebra, is_valid_bialgebra)
from pseudalg.cli import main
from pseudalg.cohomology import d0, d1
from pseudalg.hopf import PolynomialHopf, check_hopf_axioms, cyclic_group, fourier, fourier_inv, h_iterated_comul
from pseudalg.lie import (check_balanceator_zero, check_cocycle, check_coboundary_lie, check_lie_coalgebra,
                          check_thm56, lie_of)
from pseudalg.literal import parse_pseudotensor, parse_tensor
from pseudalg.modules import FreeModule, diagonal_act
from pseudalg.pseudoalgebra import PseudoAlgebra, check_constants_associativity, check_jacobi, check_skew, lieify
from pseudalg.specfile import load_spec, parse_spec, render_bundle
from pseudalg.ybe import aybe, coboundary_bundle, coboundary_delta, cybe, thm44_condition
from randoms import random_h, random_htensor, random_tensor, raw_from, small_r

R_ANTI = "(e2, e1) - (e1, e2)"
BUNDLED = ["twisted", "coboundary", "coboundary_dual", "twisted_current"]


def verdict(number: int, title: str, results: dict) -> None:
    """Record the criterion and fail with the list of sub-claims that do not hold."""
    failed = [name for name, ok in results.items() if not ok]
    record_criterion(number, title, not failed, failed)
    assert not failed, f"criterion {number} fails on: {', '.join(failed)}"


def test_criterion_01_coboundary_values(capsys):
    ex = Ctx("coboundary")
    table = coboundary_delta(ex.alg, ex.t(R_ANTI)).table
    code = main(["deltar", bundled_spec("coboundary")])
    out = capsys.readouterr().out
    verdict(1, "coboundary values on the two-generator coboundary bundle", {
        "delta_r(e1) = e1 ⊗ e1": table.get("e1") == ex.t("(e1, e1)"),
        "delta_r(e2) = e2 ⊗ e1": table.get("e2") == ex.t("(e2, e1)"),
        "cli prints e1 value": "delta_r (e1)  -- value = (e1, e1)" in out,
        "cli prints e2 value": "delta_r (e2)  -- value = (e2, e1)" in out,
        "cli exit 0": code == 0,
    })


def test_criterion_02_yang_baxter_and_lie_table():
    ex = Ctx("coboundary")
    r = ex.t(R_ANTI)
    lie = lieify(ex.alg)
    expected = {("e1", "e2"): ex.p("[-1 # 1] @H e1")}
    others = {}
    for key in itertools.product(ex.alg.labels, repeat=2):
        if key not in expected:
            others[f"[{key[0]}*{key[1]}] = 0 (actual {lie.table.get(key, 0)})"] = not lie.table.get(key)
    verdict(2, "Yang-Baxter values and Lie-ified table", {
        "aybe = 0": not aybe(ex.alg, r),
        "cybe on Lie-ification = 0": not cybe(lie, r),
        "[e1*e2] = [-1 # 1] @H e1": lie.table.get(("e1", "e2")) == expected[("e1", "e2")],
        **others,
    })


def test_criterion_03_scalar_twisted_example():
    results = {}
    for name, label in (("twisted", "f = d, g = 1"), ("twisted_dsq", "f = d, g = d^2")):
        bundle = Ctx(name).bundle
        results[f"{label}: assoc"] = check_constants_associativity(bundle.alg).passed
        results[f"{label}: coassoc"] = check_coassoc(bundle.delta).passed
        results[f"{label}: compat"] = check_compat(bundle).passed
    verdict(3, "twisted two-dimensional example for both choices of g", results)


def test_criterion_04_coassociativity_biconditional():
    ex = Ctx("coboundary")
    rng = random.Random(20240604)
    results = {}
    for sample in range(50):
        r = small_r(ex.module, rng)
        delta = coboundary_delta(ex.alg, r)
        bundle = Bialgebra(ex.alg, delta, r=r)
        coassoc = check_coassoc(delta).passed
        ar = aybe(ex.alg, r)
        condition = all(not thm44_condition(ex.alg, r, ex.gen(g), ar) for g in ex.alg.labels)
        compat = all(not compat_defect(bundle, ex.gen(i), ex.gen(j))
                     for i, j in itertools.product(ex.alg.labels, repeat=2))
        results[f"sample {sample}: verdicts agree"] = coassoc == condition
        results[f"sample {sample}: compat defect 0"] = compat
    verdict(4, "coassociativity of delta_r against the mu3 condition (50 samples)", results)


def _valid_bundles():
    out = {name: Ctx(name).bundle for name in ("twisted", "twisted_current", "cur_commutative", "coboundary_dual")}
    ex = Ctx("coboundary")
    out["coboundary coboundary"] = coboundary_bundle(ex.alg, ex.t(R_ANTI))
    return out


def test_criterion_05_balanceator_residual():
    results = {}
    for name, bundle in _valid_bundles().items():
        results[f"{name}: valid bialgebra"] = is_valid_bialgebra(bundle)
        results[f"{name}: residual 0"] = check_thm56(bundle).passed
    verdict(5, "balanceator residual vanishes on valid bundled bialgebras", results)


def test_criterion_06_balanceator_zero():
    ex = Ctx("coboundary")
    verdict(6, "balanceator zero on commutative and coboundary bundles", {
        "commutative current bundle": check_balanceator_zero(Ctx("cur_commutative").bundle).passed,
        "coboundary with anti-symmetric r": check_balanceator_zero(coboundary_bundle(ex.alg, ex.t(R_ANTI))).passed,
    })


def test_criterion_07_lie_bialgebra():
    ex = Ctx("coboundary")
    r = ex.t(R_ANTI)
    lie = lie_of(ex.bundle)
    verdict(7, "Lie-ified coboundary bundle is a coboundary Lie bialgebra", {
        "skew": check_skew(lie.bracket).passed,
        "jacobi": check_jacobi(lie.bracket).passed,
        "lie coalgebra": check_lie_coalgebra(lie.cobracket).passed,
        "cocycle": check_cocycle(lie).passed,
        "coboundary with r": check_coboundary_lie(lie, r).passed,
    })


def test_criterion_08_dual_coalgebra():
    ex = Ctx("coboundary")
    delta = dual_coalgebra(ex.alg)
    dual = delta.module
    mutated_table = dict(ex.alg.table)
    mutated_table[("e2", "e2")] = ex.p("[1 # 1] @H e1")
    mutated = PseudoAlgebra(ex.module, mutated_table)
    verdict(8, "dual coalgebra values and defect transfer", {
        "Δ(a1) = a2 ⊗ a1": delta.table.get("a1") == parse_tensor(ex.hopf, "(a2, a1)", dual, 2),
        "Δ(a2) = a2 ⊗ a2": delta.table.get("a2") == parse_tensor(ex.hopf, "(a2, a2)", dual, 2),
        "dual coassociative": check_coassoc(delta).passed,
        "mutated primal not associative": not check_constants_associativity(mutated).passed,
        "mutated dual not coassociative": not check_coassoc(dual_coalgebra(mutated)).passed,
    })


def test_criterion_09_kernel_properties():
    rng = random.Random(7)
    results = {}
    hopfs = {"k[d]": PolynomialHopf(1), "k[d1,d2]": PolynomialHopf(2), "kZ2": cyclic_group(2), "kZ3": cyclic_group(3)}
    for name, hopf in hopfs.items():
        results[f"hopf axioms {name}"] = check_hopf_axioms(hopf, 4).passed
        results[f"fourier round trip {name}"] = all(
            fourier_inv(fourier(x)) == x for x in (random_htensor(hopf, rng, 2, 3, 4) for _ in range(20)))
    rewrites_ok = True
    for i in range(100):
        hopf = list(hopfs.values())[i % 4]
        module = FreeModule(hopf, ["e1", "e2"])
        n, p = rng.choice([(1, 1), (2, 1), (2, 2), (3, 1)])
        x, m, h = random_htensor(hopf, rng, n, 2), random_tensor(module, rng, p, 2), random_h(hopf, rng, 2)
        rewrites_ok &= (raw_from(x * h_iterated_comul(h, n), m).normalize()
                        == raw_from(x, diagonal_act(h, m)).normalize())
    results["normal form unique under 100 rewrites"] = rewrites_ok
    ex = Ctx("coboundary")
    results["d1 ∘ d0 = 0 on 50 cochains"] = all(
        all(not v for v in d1(ex.alg, d0(ex.alg, random_tensor(ex.module, rng, 2, 2, terms=4)), 2).values())
        for _ in range(50))
    verdict(9, "Hopf kernel and normal form properties", results)


def test_criterion_10_cli_contract(capsys, tmp_path):
    results = {}
    for name in BUNDLED:
        results[f"check all {name} exits 0"] = main(["check", bundled_spec(name), "--suite", "all"]) == 0
    for path in sorted(Path(bundled_spec("coboundary")).parent.glob("*.spec")):
        text = render_bundle(load_spec(path).section().bundle())
        results[f"render fixpoint {path.name}"] = render_bundle(parse_spec(text).section().bundle()) == text
    capsys.readouterr()
    main(["check", bundled_spec("twisted_dsq"), "--suite", "compat", "--json"])
    report = json.loads(capsys.readouterr().out)
    sec = Ctx("twisted_dsq")
    results["emitted defects parse back"] = all(
        str(parse_pseudotensor(sec.hopf, c["defect"], sec.module, (2, 2))) == c["defect"]
        for c in report["checks"] if "defect" in c)
    bad = tmp_path / "bad.spec"
    bad.write_text("hopf polynomial 1\nalgebra A generators e1\nproduct e1 e1 = [1 # @H e1\n")
    results["parse error exits 2"] = main(["check", str(bad)]) == 2
    results["failing check exits 1"] = main(["check", bundled_spec("twisted_dsq"), "--suite", "compat"]) == 1
    results["unknown suite exits 2"] = main(["check", bundled_spec("coboundary"), "--suite", "zzz"]) == 2
    capsys.readouterr()
    verdict(10, "command line contract", results)
