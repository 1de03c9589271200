import numpy as np
import pytest

from horn_lab.combinatorics.partitions import SubsetIndex
from horn_lab.errors import InsufficientSamplesError
from horn_lab.face_geometry import (
    FaceSamplingConfig,
    affine_rank,
    assemble_block_spectrum,
    face_dimension,
    on_face,
    on_face_direct,
    sample_weak_face_point,
)
from horn_lab.horn_cone import HornInequality, enumerate_inequalities
from horn_lab.spectra import rational_member


@pytest.mark.parametrize("n", [2, 3])
def test_qa06_facet_faces_have_codimension_one(n):
    """
    QA-06: Face Dimension

    For every coefficient-1 triple, the sampled face points span an affine
    space of dimension 3n - 2 (codimension 2 in E(n), one in Delta(n)).
    """
    for idx, h in enumerate(enumerate_inequalities(n, facets_only=True)):
        assert face_dimension(h.i, h.j, h.k, seed=100 * n + idx) == 3 * n - 2


@pytest.mark.slow
def test_qa06_coefficient_two_face_is_smaller():
    """
    QA-06: the coefficient-2 face at n = 6 spans fewer than 16 = 3n - 2
    dimensions.
    """
    i = SubsetIndex(6, (2, 4, 6))
    config = FaceSamplingConfig(max_attempts=40)
    assert face_dimension(i, i, i, sample_count=18, seed=0, config=config) < 16

    with pytest.raises(InsufficientSamplesError) as info:
        face_dimension(
            i, i, i, sample_count=3, seed=0,
            config=FaceSamplingConfig(max_attempts=40, allow_ties=False),
        )
    assert info.value.achieved == 0


def test_qa06_weak_face_points_on_the_coefficient_two_face():
    """
    QA-06: the {2,4,6} face holds only doubled spectra (q, q), so its
    points interleave with ties.
    """
    i = SubsetIndex(6, (2, 4, 6))
    h = HornInequality(i, i, i, 2)
    system = enumerate_inequalities(3, facets_only=True)
    for seed in range(3):
        p = sample_weak_face_point(i, i, i, seed=seed)
        assert p.is_exact and p.in_chamber()
        assert h.evaluate(p) == 0
        assert on_face(p, i, i, i, system, system)
        for block in p.blocks:
            assert block[0::2] == block[1::2]

    rng = np.random.default_rng(6)
    points = []
    while len(points) < 20:
        q = rational_member(3, rng, system)
        if q is None:
            continue
        # alpha = (q1, q1, q2, q2, q3, q3)
        p = assemble_block_spectrum(q, q, i, i, i, system, system)
        assert on_face(p, i, i, i, system, system)
        points.append(p)
    assert affine_rank(points) < 16


def test_qa06_weak_sampling_on_a_facet():
    """QA-06: tie-allowing points of a facet face still satisfy both face tests."""
    for h in enumerate_inequalities(2, facets_only=True):
        for seed in range(4):
            p = sample_weak_face_point(h.i, h.j, h.k, seed=seed)
            assert h.evaluate(p) == 0
            assert on_face(p, h.i, h.j, h.k)
            assert on_face_direct(p, h.i, h.j, h.k)
