from __future__ import annotations

from fractions import Fraction

import pytest

from pseudalg.hopf import (GroupHopf, HTensor, HopfMismatch, PolynomialHopf, TrivialHopf, check_hopf_axioms,
                           cyclic_group, fourier, fourier_inv, group_table_problems, h_antipode, h_comul,
                           h_counit, h_iterated_comul, h_mul)
from pseudalg.literal import parse_hexpr

KD = PolynomialHopf(1)
Z2 = cyclic_group(2)


def hx(text, hopf=KD):
    return parse_hexpr(hopf, text)


def test_monomial_degrees_add():
    assert h_mul(hx("d"), hx("d^2")) == hx("d^3")


def test_unit_law():
    x = hx("3 + 2 d - 1/2 d^4")
    assert h_mul(KD.one(), x) == x
    assert h_mul(x, KD.one()) == x


def test_group_square_is_identity():
    g = Z2.basis_element(1)
    assert h_mul(g, g) == Z2.one()


def test_comul_of_d_squared():
    assert h_comul(hx("d^2")) == HTensor(KD, 2, {((2,), (0,)): 1, ((1,), (1,)): 2, ((0,), (2,)): 1})


def test_comul_of_unit_and_grouplike():
    assert h_comul(KD.one()) == HTensor.pure(KD.one(), KD.one())
    g = Z2.basis_element(1)
    assert h_comul(g) == HTensor.pure(g, g)


def test_antipode_values():
    assert h_antipode(hx("d")) == hx("-d")
    assert h_antipode(KD.one()) == KD.one()
    assert h_antipode(hx("d^2")) == hx("d^2")


def test_counit_values():
    assert h_counit(hx("3 + 2 d")) == 3
    assert h_counit(KD.one()) == 1
    assert h_counit(Z2.basis_element(1)) == 1


def test_iterated_comul():
    d = hx("d")
    three = h_iterated_comul(d, 3)
    assert three == HTensor(KD, 3, {((1,), (0,), (0,)): 1, ((0,), (1,), (0,)): 1, ((0,), (0,), (1,)): 1})
    assert h_iterated_comul(hx("2 d + 5"), 1) == HTensor(KD, 1, {((1,),): 2, ((0,),): 5})
    assert h_iterated_comul(d, 0) == 0


def test_iterated_comul_association_orders_agree():
    x = hx("d^3 - d")
    two = h_comul(x)
    assert h_iterated_comul(x, 2) == two
    again_left = HTensor(KD, 3, {})
    again_right = HTensor(KD, 3, {})
    for (a, b), c in two.coeffs.items():
        for (a1, a2), ca in KD.comul_basis(a).items():
            again_left += HTensor(KD, 3, {(a1, a2, b): c * ca})
        for (b1, b2), cb in KD.comul_basis(b).items():
            again_right += HTensor(KD, 3, {(a, b1, b2): c * cb})
    assert again_left == again_right == h_iterated_comul(x, 3)


def test_two_variable_polynomial_rendering():
    k2 = PolynomialHopf(2)
    x = parse_hexpr(k2, "d1 d2^2 - 3")
    assert str(x) == str(parse_hexpr(k2, str(x)))
    assert h_counit(x) == -3


@pytest.mark.parametrize("hopf", [PolynomialHopf(1), PolynomialHopf(2), cyclic_group(2), cyclic_group(3),
                                  TrivialHopf()], ids=lambda h: h.describe())
def test_axiom_suite_passes(hopf):
    report = check_hopf_axioms(hopf, 4)
    assert report.passed, [c.name for c in report.failures()]


def test_broken_inverses_are_named():
    table = [[0, 1, 2], [1, 2, 2], [2, 0, 1]]
    problems = group_table_problems(table, 0)
    assert problems
    bad = GroupHopf(table, 0, validate=False)
    report = check_hopf_axioms(bad, 2)
    assert not report.passed
    assert {c.name for c in report.failures()} & {"inverses", "antipode", "associativity"}


def test_fourier_examples():
    dd = HTensor.pure(hx("d"), hx("d"))
    assert fourier(dd) == HTensor(KD, 2, {((2,), (0,)): -1, ((1,), (1,)): 1})
    one_d = HTensor.pure(KD.one(), hx("d"))
    assert fourier_inv(one_d) == HTensor(KD, 2, {((1,), (0,)): 1, ((0,), (1,)): 1})
    assert fourier(fourier_inv(one_d)) == one_d


def test_mixing_hopf_algebras_is_refused():
    with pytest.raises(HopfMismatch):
        KD.one() + Z2.one()


def test_exact_rationals():
    x = hx("1/3 d") * Fraction(3)
    assert x == hx("d")
