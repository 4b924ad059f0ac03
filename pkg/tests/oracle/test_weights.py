from fractions import Fraction

import pytest

from transdist.exceptions import NonPositiveWeight, VertexOutOfRange
from transdist.oracle import TableWeights, TreeWeights


def test_tree_weights(star):
    weights = TreeWeights(star)

    assert weights.n == 4
    assert weights.weight(weights.cost_units(1, 2)) == 2
    assert weights.weight(weights.cost_units(1, 4)) == 1


def test_table_weights_accept_either_order():
    weights = TableWeights(3, {(1, 2): 1, (3, 1): 2, (2, 3): Fraction(1, 2)})

    assert weights.scale == 2
    assert weights.weight(weights.cost_units(2, 1)) == 1
    assert weights.weight(weights.cost_units(1, 3)) == 2
    assert weights.weight(weights.cost_units(3, 2)) == Fraction(1, 2)


def test_table_weights_errors():
    with pytest.raises(VertexOutOfRange):
        TableWeights(3, {(1, 2): 1, (1, 3): 1})
    with pytest.raises(NonPositiveWeight):
        TableWeights(2, {(1, 2): 0})
