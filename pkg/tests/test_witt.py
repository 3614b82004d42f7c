from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from quaddt.errors import NonzeroRank, ZeroWeight
from quaddt.partitions import Partition3D
from quaddt.vertex import WeightChar, specialized_trace
from quaddt.witt import epsilon, euler_ratio, plain_ratio, sign_product

SINGLE_BOX = {2: 1, 6: 1, 10: 1, 8: -1, 12: -1, 16: -1}


@pytest.mark.parametrize("m,expected", [(1, 1), (2, 1), (3, -1), (4, -1), (-2, 1),
                                        (-1, -1), (-3, 1), (-4, -1), (6, 1), (8, -1)])
def test_epsilon_values(m, expected):
    assert epsilon(m) == expected


def test_epsilon_undefined_at_zero():
    with pytest.raises(ZeroWeight):
        epsilon(0)


@given(st.integers(min_value=-10**6, max_value=10**6).filter(bool))
def test_epsilon_matches_table(m):
    assert epsilon(m) == oracles.epsilon_table(m)


@given(st.integers(min_value=-10**4, max_value=10**4).map(lambda k: 2 * k),
       st.integers(min_value=-10**4, max_value=10**4).map(lambda k: 4 * k + 2))
def test_epsilon_duality_pairing(w, total):
    # even w paired with -w - (s1 + s2 + s3), where the total is 2 mod 4
    if w and w + total:
        assert epsilon(w) * epsilon(-w - total) == -1


def test_epsilon_is_even_under_negation_of_even_weights():
    assert epsilon(2) * epsilon(-2) == 1
    assert epsilon(4) * epsilon(-4) == 1


def test_euler_ratio_hand_values():
    assert euler_ratio({2: 3, 4: -3}) == -8
    assert euler_ratio(SINGLE_BOX) == F(-64, 5)
    assert euler_ratio({}) == 1
    assert euler_ratio(WeightChar(SINGLE_BOX)) == F(-64, 5)


def test_plain_ratio_drops_signs():
    assert plain_ratio(SINGLE_BOX) == F(8 * 12 * 16, 2 * 6 * 10)


def test_euler_ratio_rejects_bad_characters():
    with pytest.raises(ZeroWeight):
        euler_ratio({0: 1, 2: -1})
    with pytest.raises(NonzeroRank):
        euler_ratio({2: 1})


def test_sign_product():
    assert sign_product(SINGLE_BOX) == -1
    assert sign_product({}) == 1
    assert sign_product(specialized_trace(Partition3D([(0, 0, 0)]), (-2, -6, -10))) == -1


@given(st.dictionaries(st.integers(min_value=-40, max_value=40).filter(bool),
                       st.integers(min_value=-3, max_value=3), max_size=6))
def test_euler_ratio_matches_naive(d):
    rank = sum(d.values())
    # pad to rank 0 with a weight that is not already present
    pad = next(w for w in range(41, 100) if w not in d)
    d = dict(d)
    d[pad] = d.get(pad, 0) - rank
    assert euler_ratio(d) == oracles.euler_ratio_naive(d)
    assert euler_ratio(d) == sign_product(d) * plain_ratio(d)
