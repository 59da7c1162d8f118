import pytest

import mealygrowth as mg


def test_quotient_orders():
    assert [mg.quotient_order(n) for n in range(1, 8)] == [
        mg.quotient_order_formula(n) for n in range(1, 8)
    ]
    assert mg.quotient_order_formula(12) == 94210


def test_growth_series():
    assert mg.word_growth_coeffs(9) == [1, 2, 3, 4, 5, 7, 9, 11, 13, 16]
    assert mg.automaton_growth_coeffs(5)[1:] == [2, 4, 6, 9, 13]
    assert mg.ball_growth_coeffs(5) == [1, 3, 6, 10, 15, 22]
    q = mg.odd_distinct_partitions(2000)
    assert q[16] == 5
    assert isinstance(q[2000], int) and q[2000] > 2**64


def test_automaton_roundtrip():
    a = mg.i2_automaton()
    assert mg.automaton_growth(a, 5) == [2, 4, 6, 9, 13]
    assert mg.apply(a, 0, [0, 0, 1]) == [1, 1, 0]
    assert not mg.is_invertible(a)
    b = mg.parse_automaton(repr(a))
    assert b == a
    assert mg.minimize(mg.power(a, 3)).state_count == 6


def test_rewriting():
    r = mg.reduce("1011011")
    assert r["word"] == "10110"
    assert r["steps"] == 1
    assert mg.words_equal("001", "1")
    assert not mg.words_equal("10", "01")
    assert mg.width("1") == 1
    assert mg.verify_relation(3, 12)
    assert mg.verify_left_zero(4) == (True, True)
    assert mg.enumerate_normal_forms(5) == 7


def test_errors():
    with pytest.raises(ValueError):
        mg.reduce("102")
    with pytest.raises(ValueError):
        mg.power(mg.i2_automaton(), 0)
    with pytest.raises(ValueError):
        mg.richmond_asymptote([2], 2, 1, 10.0)
