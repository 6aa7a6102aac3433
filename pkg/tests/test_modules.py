from __future__ import annotations

import pytest

from pseudalg.hopf import PolynomialHopf, cyclic_group
from pseudalg.literal import parse_hexpr, parse_tensor
from pseudalg.modules import (FreeModule, ModuleMismatch, Tensor, apply_at, diagonal_act, h_act, permute,
                              sigma12, tau_swap)

KD = PolynomialHopf(1)
A = FreeModule(KD, ["e1", "e2"])
Z2 = cyclic_group(2)
B = FreeModule(Z2, ["e1", "e2"])


def t(text, arity=2, module=A):
    return parse_tensor(module.hopf, text, module, arity)


def test_free_action():
    d = parse_hexpr(KD, "d")
    assert h_act(d, A.gen("e1")) == t("(d*e1)", 1)
    assert h_act(KD.one(), t("(e1) - (3 d*e2)", 1)) == t("(e1) - (3 d*e2)", 1)
    assert h_act(d, t("(d*e1) + (e2)", 1)) == t("(d^2*e1) + (d*e2)", 1)


def test_diagonal_action_primitive_and_grouplike():
    d = parse_hexpr(KD, "d")
    assert diagonal_act(d, t("(e1, e2)")) == t("(d*e1, e2) + (e1, d*e2)")
    x = t("(e1, e2) - (d*e2, e2)")
    assert diagonal_act(KD.one(), x) == x
    g = Z2.basis_element(1)
    assert diagonal_act(g, t("(e1, e2)", module=B)) == t("(g2*e1, g2*e2)", module=B)


def test_tau_swap():
    assert tau_swap(t("(e1, e2)")) == t("(e2, e1)")
    x = t("(d*e1, e2) + (e2, e1)")
    assert tau_swap(x) == t("(e2, d*e1) + (e1, e2)")
    assert tau_swap(tau_swap(x)) == x


def test_sigma12_and_permute():
    x = t("(e1, d*e2, e2)", 3)
    assert sigma12(x) == t("(d*e2, e1, e2)", 3)
    assert permute(x, (2, 0, 1)) == t("(e2, e1, d*e2)", 3)


def test_apply_at_is_h_linear_in_the_factor():
    dup = lambda f: Tensor.pure(Tensor(KD, 1, {(f,): 1}), Tensor(KD, 1, {(f,): 1}))
    out = apply_at(t("(2 d*e1, e2)"), 0, dup)
    assert out == t("(2 d*e1, d*e1, e2)", 3)


def test_unknown_generator_rejected():
    with pytest.raises(ModuleMismatch):
        A.gen("e3")


def test_rendering_round_trips():
    for text in ["(2 d*e1, e2) + (-1*e1, e2)", "(e1, d^2*e2) + (-1/2 d*e2, e1)", "0"]:
        x = t(text)
        assert str(t(str(x))) == str(x)
    assert str(Tensor.zero(KD, 2)) == "0"


def test_arity_mismatch_rejected():
    with pytest.raises(ModuleMismatch):
        t("(e1, e2)") + t("(e1, e2, e1)", 3)
