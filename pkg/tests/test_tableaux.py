import itertools

import pytest

from horn_lab.combinatorics.partitions import Partition, SubsetIndex, weight
from horn_lab.combinatorics.tableaux import (
    lr_coefficient,
    lr_tableaux,
    product_expansion,
    schubert_constant,
    triple_intersection,
)
from horn_lab.combinatorics.utils import partitions_up_to
from horn_lab.errors import DimensionError


def test_known_coefficients():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((), (2, 1), (2, 1)) == 1


def test_incompatible_shapes_give_zero():
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0


def test_coefficients_symmetric_in_lambda_mu():
    shapes = partitions_up_to(4, 3)
    for lam, mu in itertools.product(shapes, repeat=2):
        for nu in product_expansion(lam, mu):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_product_expansion():
    assert product_expansion((1,), (1,)) == {Partition((2,)): 1, Partition((1, 1)): 1}
    expansion = product_expansion((2, 1), (2, 1))
    assert expansion[Partition((3, 2, 1))] == 2
    assert sum(expansion.values()) == 8


def test_lr_tableaux_are_the_counted_objects():
    tableaux = list(lr_tableaux((2, 1), (2, 1), (3, 2, 1)))
    assert len(tableaux) == 2
    for t in tableaux:
        assert t.content() == Partition((2, 1))

    (single,) = lr_tableaux((1,), (1,), (1, 1))
    assert single.rows == ((), (1,))
    assert single.reading_word() == (1,)
    assert list(lr_tableaux((1,), (1,), (3,))) == []


def test_schubert_constants_on_grassmannians():
    i = SubsetIndex(6, (2, 4, 6))
    k = SubsetIndex(6, (1, 3, 5))
    assert schubert_constant(i, i, k) == 2
    assert triple_intersection(i, i, i) == 2

    # Gr(1, 2): sigma_1 * sigma_0 * sigma_0 = [pt]
    assert triple_intersection(SubsetIndex(2, (1,)), SubsetIndex(2, (2,)), SubsetIndex(2, (2,))) == 1
    # codimensions 1 + 1 + 1 != 1
    assert triple_intersection(SubsetIndex(2, (1,)), SubsetIndex(2, (1,)), SubsetIndex(2, (1,))) == 0


def test_schubert_constant_rejects_mixed_shapes():
    with pytest.raises(DimensionError):
        schubert_constant(SubsetIndex(3, (1,)), SubsetIndex(3, (1, 2)), SubsetIndex(3, (1,)))
    with pytest.raises(DimensionError):
        triple_intersection(SubsetIndex(3, (1,)), SubsetIndex(4, (1,)), SubsetIndex(3, (1,)))


@pytest.mark.slow
def test_coefficients_symmetric_up_to_weight_eight():
    shapes = partitions_up_to(8, 4)
    for lam, mu in itertools.product(shapes, repeat=2):
        if weight(lam) + weight(mu) > 8:
            continue
        for nu, c in product_expansion(lam, mu).items():
            assert lr_coefficient(mu, lam, nu) == c


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_triple_intersection_invariant_under_permutation(n):
    for r in range(1, n):
        subsets = [SubsetIndex(n, c) for c in itertools.combinations(range(1, n + 1), r)]
        for triple in itertools.combinations_with_replacement(subsets, 3):
            value = triple_intersection(*triple)
            for order in itertools.permutations(triple):
                assert triple_intersection(*order) == value
