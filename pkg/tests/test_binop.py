"""Partial operation tables."""

import pytest

from ordalg import BinOp


def test_round_trips():
    op = BinOp.from_rows([[0, None], [1, 0]])
    assert op.n == 2
    assert not op.is_total
    assert op.value(0, 1) is None
    assert op.defined(1, 0)
    assert op.undefined_cells() == ((0, 1),)
    assert op.flat() == [0, -1, 1, 0]
    assert BinOp.from_flat(2, op.flat()) == op
    assert BinOp.from_flat(2, op.flat(undefined=9), undefined=9) == op


def test_total_table():
    op = BinOp.from_rows([[1, 0], [0, 1]])
    assert op.is_total
    assert op.undefined_cells() == ()


def test_shape_validation():
    with pytest.raises(ValueError):
        BinOp(2, ((0, 1),))
    with pytest.raises(ValueError):
        BinOp(2, ((0, 1), (0,)))
    with pytest.raises(ValueError):
        BinOp(2, ((0, 2), (0, 1)))
    with pytest.raises(ValueError):
        BinOp(2, ((0, -1), (0, 1)))
