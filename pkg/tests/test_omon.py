import itertools
from fractions import Fraction

import pytest

import reslat as R
from reslat.nilpotent import DyadicPair, HEIS_UNIT, HeisTriple
from reslat.omon import (
    M1ChainAlgebra,
    M1Instance,
    S2ChainAlgebra,
    S2Instance,
    ResidualExhausted,
    hamvty_witness,
    lex_product_order,
    m1_cmp,
    m1_mul,
    m1_parse,
    m1_residual,
    m1_word,
    residual_search,
    s2_residual,
)

X, Y = HeisTriple(1, 0, 0), HeisTriple(0, 1, 0)


def test_m1_chain_prefix():
    want = ["e", "x", "y", "x2", "xy", "y2", "x3", "x2y", "xy2", "y3"]
    got = list(itertools.islice(M1Instance.candidates(4), len(want)))
    assert [m1_word(g) for g in got] == want
    # strictly descending in the chain order
    for a, b in zip(got, got[1:]):
        assert m1_cmp(a, b) == 1


def test_m1_word_round_trip():
    for w in [(0, 0), (1, 0), (0, 3), (2, 5)]:
        assert m1_parse(m1_word(w)) == w
    with pytest.raises(ValueError):
        m1_parse("z2")


def test_m1_residual_examples():
    x, y, e = (1, 0), (0, 1), (0, 0)
    assert m1_residual(y, x) == x   # y/x = x: greatest w with w+x <= y is x^1
    assert m1_residual(x, y) == e   # x/y = e
    assert m1_residual((2, 1), (1, 0)) == (1, 1)  # componentwise divides
    assert m1_residual(e, x) == e


def test_m1_residual_against_search():
    words = [(a, d - a) for d in range(9) for a in range(d + 1)]
    for w in words:
        for z in words:
            assert m1_residual(w, z) == residual_search(M1Instance, z, w, "left",
                                                        bound=18)
            # commutative, so both sides agree
            assert m1_residual(w, z) == residual_search(M1Instance, z, w, "right",
                                                        bound=18)


def test_m1_divisibility_fails():
    x, y = (1, 0), (0, 1)
    r = m1_residual(y, x)
    assert m1_mul(r, x) == (2, 0)
    assert m1_cmp(m1_mul(r, x), M1ChainAlgebra.meet(x, y)) != 0


def test_s2_residual_examples():
    e = HEIS_UNIT
    assert s2_residual(X, e, "left") == e
    assert s2_residual(Y, X, "right") == X
    assert s2_residual(e, Y, "left") == Y
    xy = HeisTriple(1, 1, 0)
    assert s2_residual(X, xy, "left") == Y  # x\(xy) = y exactly


def test_s2_residual_against_search_box():
    box = [HeisTriple(a, b, c)
           for a in range(4) for b in range(4) for c in range(a * b + 1)]
    for a in box:
        for b in box:
            for side in ("left", "right"):
                assert s2_residual(a, b, side) == residual_search(
                    S2Instance, a, b, side, bound=12), (a, b, side)


def test_s2_divisibility_fails():
    r = s2_residual(Y, X, "right")
    prod = R.heis_mul(r, Y)
    assert prod == HeisTriple(1, 1, 0)
    assert R.s2_cmp(prod, S2ChainAlgebra.meet(X, Y)) != 0


def test_residual_search_exhaustion():
    with pytest.raises(ResidualExhausted):
        residual_search(M1Instance, (0, 0), (5, 5), "left", bound=1)


def test_chain_algebra_interfaces():
    eq = R.parse_equation("x*(x\\y) ^ y = x*(x\\y)")
    v = R.check_equation_sampled(eq, S2ChainAlgebra,
                                 [{"x": X, "y": Y}, {"x": Y, "y": X}])
    assert v.holds  # x(x\y) <= y always


def test_lex_product_order():
    prod = lex_product_order([M1Instance, M1Instance])
    e, x = (0, 0), (1, 0)
    assert prod.unit == (e, e)
    assert prod.mul((x, e), (e, x)) == (x, x)
    # first coordinate dominates
    assert prod.cmp((x, e), (e, x)) == -1
    assert prod.cmp((x, x), (x, e)) == -1
    assert prod.cmp((x, x), (x, x)) == 0
    assert prod.integral
    # the candidate stream is strictly descending and starts at the unit
    stream = list(itertools.islice(prod.candidates(2), 6))
    assert stream[0] == (e, e)
    for a, b in zip(stream, stream[1:]):
        assert prod.cmp(a, b) == 1
    with pytest.raises(ValueError):
        lex_product_order([])


def test_hamvty_witness_small():
    rep = hamvty_witness(1)
    assert rep.rows[1].n == 1 and rep.rows[1].coordinate == 1
    rep = hamvty_witness(4)
    assert rep.all_certified()
    by_n = {row.n: row for row in rep.rows}
    assert by_n[3].coordinate == 1  # 4^1 = 4 > 3
    assert by_n[4].coordinate == 2  # needs 4^2 = 16 > 4
    for row in rep.rows:
        if row.coordinate is not None:
            # the conjugate coordinate really fails to dominate the power
            assert R.dyadic_cmp(row.conjugate, row.power) == -1


def test_hamvty_rejects_bad_truncation():
    with pytest.raises(ValueError):
        hamvty_witness(0)
