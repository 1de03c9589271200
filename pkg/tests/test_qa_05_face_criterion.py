import numpy as np

from horn_lab.face_geometry import (
    assemble_block_spectrum,
    fit_block_shift,
    on_face,
    on_face_direct,
    sample_face_point,
)
from horn_lab.horn_cone import enumerate_inequalities
from horn_lab.spectra import random_chamber_point, rational_member


def _outsider(h, rng):
    """A point of E(4)^+ on the form's hyperplane whose complementary block is arbitrary."""
    q_r = rational_member(h.r, rng)
    if q_r is None:
        return None
    q_s = random_chamber_point(h.n - h.r, rng, bound=10)
    shift = fit_block_shift(q_r, q_s, h.i, h.j, h.k, rng)
    if shift is None:
        return None
    return assemble_block_spectrum(
        q_r.shifted(*shift), q_s, h.i, h.j, h.k, check_membership=False
    )


def test_qa05_face_criterion_equivalence():
    """
    QA-05: Face Criterion Equivalence

    At n = 4, r = 2, for 3 facet triples and 200 seeded rational points of
    E(4)^+ each, the splitting test (both halves in their Horn cones) agrees
    exactly with the direct test (member of Delta(4) with the form vanishing).
    """
    n = 4
    system = enumerate_inequalities(n, facets_only=True)
    triples = [h for h in system if h.r == 2][:3]
    assert len(triples) == 3

    for t, h in enumerate(triples):
        rng = np.random.default_rng(500 + t)
        on, off = 0, 0
        for idx in range(200):
            kind = idx % 3
            if kind == 0:
                p = sample_face_point(h.i, h.j, h.k, rng)
            elif kind == 1:
                p = random_chamber_point(n, rng)
            else:
                p = _outsider(h, rng) or random_chamber_point(n, rng)

            split = on_face(p, h.i, h.j, h.k)
            assert split == on_face_direct(p, h.i, h.j, h.k, system)
            on += split
            off += not split

        assert on >= 60
        assert off >= 60
