import numpy as np
import pytest
from hypothesis import given, settings

from osbornkit.errors import Malformed, NoIdentity, NotLatin
from osbornkit.loop import (Loop, divide, inverse_element, nucleus, parse_loop, render_loop,
                            translation)
from osbornkit.perm import Perm

from conftest import small_loops


def test_parse_z2():
    loop = parse_loop("2\n0 1\n1 0")
    assert loop.n == 2 and loop.e == 0
    assert loop.table.tolist() == [[0, 1], [1, 0]]


def test_parse_z3():
    loop = parse_loop("3\n0 1 2\n1 2 0\n2 0 1")
    assert loop.e == 0
    assert loop.mul(2, 2) == 1


def test_parse_not_latin_reports_column():
    with pytest.raises(NotLatin) as info:
        parse_loop("2\n0 1\n0 1")
    assert info.value.axis == "column"
    assert info.value.cell[1] == 0


def test_parse_comments_and_errors():
    loop = parse_loop("# cyclic\n2\n# body\n0 1\n1 0\n")
    assert loop.n == 2
    with pytest.raises(Malformed):
        parse_loop("2\n0 1\n1")
    with pytest.raises(Malformed):
        parse_loop("2\n0 x\n1 0")
    with pytest.raises(Malformed):
        parse_loop("2\n0 2\n1 0")
    with pytest.raises(NoIdentity):
        parse_loop("3\n0 2 1\n2 1 0\n1 0 2")


def test_identity_not_renormalized():
    loop = parse_loop("2\n1 0\n0 1")
    assert loop.e == 1


def test_divide_examples(z3):
    assert divide(z3, "left", 1, 0) == 2
    assert divide(z3, "right", 0, 1) == 2
    for k in range(3):
        assert divide(z3, "left", z3.e, k) == k


def test_translation_examples(z2, z3, s3):
    assert translation(z3, "R", 1).image == (1, 2, 0)
    assert translation(z2, "R", 1).image == (1, 0)
    assert translation(s3, "L", s3.e).is_identity()


def test_inverse_examples(z3, n5, s3):
    assert inverse_element(z3, "lambda", 1) == 2
    assert inverse_element(n5, "λ", 1) == 1
    for loop in (z3, n5, s3):
        assert inverse_element(loop, "rho", loop.e) == loop.e
        assert inverse_element(loop, "λ", loop.e) == loop.e


def test_nucleus_examples(z2, z3, n5):
    assert nucleus(z3, "middle") == {0, 1, 2}
    assert nucleus(z2, "middle") == {0, 1}
    mid = nucleus(n5, "middle")
    assert 0 in mid
    # brute-force oracle
    t = n5.table
    expect = {a for a in range(5)
              if all(t[t[x, a], y] == t[x, t[a, y]] for x in range(5) for y in range(5))}
    assert mid == expect


def test_render_format(z3):
    assert render_loop(z3) == "3\n0 1 2\n1 2 0\n2 0 1\n"


@settings(max_examples=60, deadline=None)
@given(small_loops())
def test_divisions_via_translations(loop):
    for a in range(loop.n):
        for b in range(loop.n):
            assert loop.L_inv(a)(b) == loop.ldiv(a, b)
            assert loop.R_inv(b)(a) == loop.rdiv(a, b)
            assert loop.mul(a, loop.ldiv(a, b)) == b
            assert loop.mul(loop.rdiv(a, b), b) == a


@settings(max_examples=60, deadline=None)
@given(small_loops())
def test_two_sided_inverses(loop):
    for x in range(loop.n):
        assert loop.mul(loop.lam(x), x) == loop.e
        assert loop.mul(x, loop.rho(x)) == loop.e


@settings(max_examples=60, deadline=None)
@given(small_loops())
def test_render_round_trip(loop):
    again = parse_loop(render_loop(loop))
    assert np.array_equal(again.table, loop.table)
    assert again.e == loop.e


def test_perm_postfix_composition():
    a = Perm([1, 2, 0])
    b = Perm([0, 2, 1])
    # x(ab) = (xa)b
    assert all((a * b)(x) == b(a(x)) for x in range(3))
    assert (a * a.inverse()).is_identity()
    assert Perm.parse("2,0,1") == Perm([2, 0, 1])
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_loop_is_immutable(z3):
    with pytest.raises(ValueError):
        z3.table[0, 0] = 1
