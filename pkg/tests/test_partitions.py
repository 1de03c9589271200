from fractions import Fraction

import pytest

from horn_lab.combinatorics.partitions import (
    Partition,
    SubsetIndex,
    box_complement,
    conjugate,
    dual_subset,
    from_subset,
    minimal_ambient,
    scale,
    to_subset,
    weight,
)
from horn_lab.combinatorics.utils import (
    format_partition,
    format_rational,
    format_subset,
    parse_partition,
    parse_subset,
    parse_triple,
    partitions_in_box,
    partitions_of,
    partitions_up_to,
)
from horn_lab.errors import BoxViolationError, DimensionError


def test_partition_normalizes_trailing_zeros():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert len(Partition((0, 0))) == 0
    assert Partition((2, 1))[5] == 0

    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))


def test_subset_encoding_round_trip_in_box():
    # I = {n - a + i - lambda_i}
    assert to_subset((2, 1), 2, 4) == SubsetIndex(4, (1, 3))
    assert to_subset((), 2, 4) == SubsetIndex(4, (3, 4))

    for p in partitions_in_box(2, 3):
        s = to_subset(p, 2, 5)
        assert from_subset(s, 2, 5) == p
        assert s.codimension == weight(p)


def test_subset_encoding_rejects_bad_boxes():
    with pytest.raises(BoxViolationError):
        to_subset((3,), 2, 4)
    with pytest.raises(BoxViolationError):
        to_subset((1, 1, 1), 2, 4)
    with pytest.raises(DimensionError):
        to_subset((1,), 5, 4)
    with pytest.raises(DimensionError):
        from_subset(SubsetIndex(4, (1, 3)), 3, 4)


def test_dual_subset_matches_box_complement():
    s = SubsetIndex(4, (1, 3))
    assert dual_subset(s) == SubsetIndex(4, (2, 4))
    assert dual_subset(dual_subset(s)) == s
    for p in partitions_in_box(3, 3):
        d = dual_subset(to_subset(p, 3, 6))
        assert from_subset(d, 3, 6) == box_complement(p, 3, 6)


def test_subset_validation():
    with pytest.raises(ValueError):
        SubsetIndex(3, (2, 1))
    with pytest.raises(ValueError):
        SubsetIndex(3, (0, 1))
    with pytest.raises(ValueError):
        SubsetIndex(3, ())
    assert SubsetIndex(4, (2, 4)).complement() == (1, 3)
    assert str(SubsetIndex(4, (2, 4))) == "{2,4}"


def test_minimal_ambient_and_scaling():
    assert minimal_ambient((1,), (1,), (1, 1)) == (2, 3)
    assert minimal_ambient((2, 1), (2, 1), (3, 2, 1)) == (3, 6)
    assert minimal_ambient((), (), ()) == (1, 2)

    assert scale((2, 1), 3) == Partition((6, 3))
    with pytest.raises(ValueError):
        scale((2, 1), 0)
    assert conjugate((3, 1)) == Partition((2, 1, 1))


def test_enumeration_order():
    assert partitions_of(4, 2) == [Partition((4,)), Partition((3, 1)), Partition((2, 2))]
    assert partitions_in_box(2, 2) == [
        Partition(()),
        Partition((1,)),
        Partition((2,)),
        Partition((1, 1)),
        Partition((2, 1)),
        Partition((2, 2)),
    ]


def test_text_codecs():
    assert parse_partition("2,1") == Partition((2, 1))
    assert parse_partition("") == Partition(())
    assert parse_partition("0") == Partition(())
    assert format_partition(Partition((2, 1))) == "2,1"
    assert format_partition(Partition(())) == "0"
    for p in partitions_up_to(4, 3):
        assert parse_partition(format_partition(p)) == p

    s = parse_subset("{1,3}@n=4")
    assert s == SubsetIndex(4, (1, 3))
    assert format_subset(s) == "{1,3}@n=4"
    assert parse_subset("{1,3}", 5).n == 5
    with pytest.raises(ValueError):
        parse_subset("{1,3}")

    i, j, k = parse_triple("{1}{2}{2}", 2)
    assert (i.elements, j.elements, k.elements) == ((1,), (2,), (2,))
    with pytest.raises(ValueError):
        parse_triple("{1}{2}", 2)

    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(3) == "3/1"


def test_conjugate_is_an_involution():
    for p in partitions_up_to(8, 8):
        assert conjugate(conjugate(p)) == p
        assert weight(conjugate(p)) == weight(p)
    assert conjugate(()) == Partition(())


def test_partition_rejects_fractional_parts():
    with pytest.raises(ValueError):
        Partition((1.5,))
    with pytest.raises(ValueError):
        Partition((2, Fraction(1, 2)))
    assert Partition((2.0, 1)) == Partition((2, 1))
