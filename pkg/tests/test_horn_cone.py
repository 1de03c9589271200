import itertools
from fractions import Fraction

import pytest

from horn_lab.combinatorics.partitions import SubsetIndex
from horn_lab.errors import DimensionError
from horn_lab.spectra import random_chamber_point, rational_member
from horn_lab.horn_cone import (
    FacetStatus,
    HornInequality,
    MembershipConfig,
    SpectrumPoint,
    chamber_constraints,
    classify_chamber_facets,
    classify_facet,
    classify_inequalities,
    enumerate_inequalities,
    face_meets_open_chamber,
    is_member,
    max_min_slack,
    relabel,
)


def _point(alpha, beta, gamma):
    return SpectrumPoint(
        tuple(Fraction(x) for x in alpha),
        tuple(Fraction(x) for x in beta),
        tuple(Fraction(x) for x in gamma),
    )


def test_enumeration_at_small_n():
    assert enumerate_inequalities(1) == []

    labels = [h.label for h in enumerate_inequalities(2, facets_only=True)]
    assert labels == ["{1}{2}{2}", "{2}{1}{2}", "{2}{2}{1}"]

    system = enumerate_inequalities(3)
    assert len(system) == 12
    assert all(h.coefficient == 1 for h in system)
    assert [h.r for h in system] == sorted(h.r for h in system)


def test_inequality_form_matches_evaluation():
    h = HornInequality(SubsetIndex(2, (1,)), SubsetIndex(2, (2,)), SubsetIndex(2, (2,)), 1)
    p = _point((3, -1), (2, 0), (-1, -3))
    assert h.evaluate(p) == 3 + 0 - 3
    assert h.form().evaluate(p) == h.evaluate(p)
    assert h.form().coefficients == (1, 0, 0, 1, 0, 1)


def test_membership_verdicts():
    assert is_member(SpectrumPoint.zero(2))
    assert is_member(_point((1, -1), (1, -1), (1, -1)))

    verdict = is_member(_point((2, -2), (0, 0), (0, 0)))
    assert not verdict
    assert verdict.reason == "inequality"
    assert verdict.certificate.label == "{1}{2}{2}"
    assert verdict.value == 2

    assert is_member(_point((0, 1), (0, 0), (-1, 0))).reason == "chamber"
    assert is_member(_point((1, 0), (0, 0), (0, 0))).reason == "trace"


def test_membership_float_tolerance():
    nearly = SpectrumPoint((1.0, 0.0), (0.0, -1.0), (1e-10, 0.0))
    assert is_member(nearly)
    assert not is_member(nearly, config=MembershipConfig(slack_tolerance=0.0, trace_tolerance=0.0))


def test_membership_rejects_foreign_system():
    with pytest.raises(DimensionError):
        is_member(SpectrumPoint.zero(3), enumerate_inequalities(2))


def test_facets_at_n2():
    classified = classify_inequalities(2, facets_only=True)
    assert [h.status for h in classified] == [FacetStatus.FACET] * 3


def test_chamber_walls_of_delta2_are_not_facets():
    # alpha_1 = alpha_2 makes A scalar, which pins C = -A - B: codimension 2
    statuses = [status for _, status in classify_chamber_facets(2)]
    assert statuses == [FacetStatus.REDUNDANT] * 3
    # the walls are still active at nonzero members
    assert is_member(_point((0, 0), (1, -1), (1, -1)))


def test_max_min_slack_is_zero_for_the_trace_multiple():
    n = 2
    target = HornInequality(SubsetIndex(2, (1,)), SubsetIndex(2, (2,)), SubsetIndex(2, (2,)), 1).form()
    assert max_min_slack(target, [target], n) == 0
    assert max_min_slack(target, chamber_constraints(n), n) > 0


def test_relabel_permutes_blocks():
    p = _point((1, 0), (0, -1), (0, 0))
    assert relabel(p, (1, 2, 0)).blocks == (p.beta, p.gamma, p.alpha)
    with pytest.raises(ValueError):
        relabel(p, (0, 0, 1))


def test_facet_faces_meet_the_open_chamber():
    for h in enumerate_inequalities(3, facets_only=True):
        assert face_meets_open_chamber(h.i, h.j, h.k)
        assert classify_facet(h) == FacetStatus.FACET


def _sample_points(n, count):
    system = enumerate_inequalities(n, facets_only=True)
    points = []
    for seed in range(count):
        points.append(random_chamber_point(n, seed=seed))
        member = rational_member(n, seed, system)
        if member is not None:
            points.append(member)
    return points


@pytest.mark.parametrize("n", [2, 3, 4])
def test_facet_system_agrees_with_full_system(n):
    facets = enumerate_inequalities(n, facets_only=True)
    full = enumerate_inequalities(n)
    for p in _sample_points(n, 60):
        assert bool(is_member(p, facets)) == bool(is_member(p, full))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_membership_is_invariant_under_relabeling(n):
    points = _sample_points(n, 60)
    assert any(is_member(p) for p in points)
    for p in points:
        verdict = bool(is_member(p))
        for order in itertools.permutations(range(3)):
            assert bool(is_member(relabel(p, order))) == verdict


@pytest.mark.parametrize("n", [2, 3, 4])
def test_membership_is_invariant_under_positive_scaling(n):
    for p in _sample_points(n, 60):
        verdict = bool(is_member(p))
        for factor in (Fraction(1, 5), Fraction(7, 3), 11):
            assert bool(is_member(p.scaled(factor))) == verdict
