"""Unit tests for the Buchberger engine on ordinary polynomial dicts."""

from __future__ import annotations

from invsub import groebner as gb


def P(d):
    return dict(d)


def test_grevlex_order_prefers_total_degree():
    assert gb.grevlex_key((2, 0)) > gb.grevlex_key((1, 0))
    assert gb.grevlex_key((3, 0)) > gb.grevlex_key((1, 1))


def test_grevlex_tiebreak_rightmost_smaller_wins():
    # Equal degree: the exponent vector with the smaller last entry is larger.
    assert gb.grevlex_key((1, 1, 0)) > gb.grevlex_key((0, 1, 1))
    assert gb.grevlex_key((2, 0)) > gb.grevlex_key((0, 2))


def test_leading_term_and_monic():
    f = {(2, 0): 2, (0, 1): 1}
    e, c = gb.leading_term(f)
    assert e == (2, 0) and c == 2
    m = gb.monic(f, 3)
    assert gb.leading_term(m)[1] == 1


def test_normal_form_single_divisor():
    # x^2 reduced by x^2 - y leaves y.
    f = {(2, 0): 1}
    basis = [{(2, 0): 1, (0, 1): 2}]  # x^2 - y over F_3
    r = gb.normal_form(f, basis, 3)
    assert r == {(0, 1): 1}


def test_divide_single_exact_and_failed():
    f = {(1, 0): 1, (0, 0): 2}  # x - 1 over F_3
    g = gb.mul(f, {(1, 0): 1, (0, 1): 1}, 3)  # (x - 1)(x + y)
    q = gb.divide_single(g, f, 3)
    assert q == {(1, 0): 1, (0, 1): 1}
    assert gb.divide_single({(0, 1): 1}, f, 3) is None


def test_buchberger_unit_ideal_collapses_to_one():
    # (x, x + 1) contains 1.
    out = gb.buchberger([{(1,): 1}, {(1,): 1, (0,): 1}], 2)
    assert out == [{(0,): 1}]
    assert gb.contains_unit(out)


def test_buchberger_known_basis():
    # Over F_3: ideal (x^2 - y, y^2 - x); the reduced basis is the input
    # (already a Groebner basis in grevlex) and x^4 - x reduces to zero.
    f1 = {(2, 0): 1, (0, 1): 2}
    f2 = {(0, 2): 1, (1, 0): 2}
    out = gb.buchberger([f1, f2], 3)
    assert not gb.contains_unit(out)
    # (x^2 - y) * f1 + (x + 1) * f2 is in the ideal; its normal form vanishes.
    member = gb.add(
        gb.mul(f1, f1, 3), gb.mul({(1, 0): 1, (0, 0): 1}, f2, 3), 3
    )
    assert gb.normal_form(member, out, 3) == {}


def test_buchberger_deterministic():
    gens = [{(1, 1): 1, (0, 0): 2}, {(2, 0): 1, (0, 1): 1}]
    a = gb.buchberger(gens, 3)
    b = gb.buchberger(list(reversed(gens)), 3)
    assert a == b


def test_reduce_basis_removes_redundant():
    # x and x^2 generate (x); the reduced basis drops x^2.
    out = gb.reduce_basis([{(1,): 1}, {(2,): 1}], 5)
    assert out == [{(1,): 1}]
