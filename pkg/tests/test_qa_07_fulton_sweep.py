import pytest

from horn_lab.fulton import SweepConfig, fulton_sweep, saturation_sweep


@pytest.mark.parametrize("max_weight", [6, pytest.param(8, marks=pytest.mark.slow)])
def test_qa07_fulton_sweep(max_weight):
    """
    QA-07: Fulton Sweep

    Every coefficient-1 triple with |nu| <= max_weight and at most 3 parts
    keeps coefficient 1 after scaling by N = 2 and 3.
    """
    table = fulton_sweep(SweepConfig(max_weight=max_weight, max_parts=3, n_max=3))

    assert len(table) > 0
    assert set(table["N"]) == {1, 2, 3}
    assert table["passed"].all()
    assert (table["coefficient"] == 1).all()


@pytest.mark.parametrize("max_weight", [4, pytest.param(8, marks=pytest.mark.slow)])
def test_qa07_saturation_spot_check(max_weight):
    """
    QA-07: no saturation violations among weight-compatible triples.
    """
    violations = saturation_sweep(SweepConfig(max_weight=max_weight, max_parts=3, n_max=3))

    assert violations.empty
