"""Weighted projective spaces: well-formedness, singular loci,
involutions, and the admissibility scan."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spin7 import wps
from spin7.wps import (CompleteIntersectionDatum, GaussianRational,
                       InvolutionDatum, WeightedSpace)


def GR(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

gaussians = st.builds(
    GR,
    st.fractions(min_value=-9, max_value=9, max_denominator=7),
    st.fractions(min_value=-9, max_value=9, max_denominator=7))


@settings(max_examples=80, deadline=None)
@given(gaussians, gaussians)
def test_gaussian_norm_is_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@settings(max_examples=80, deadline=None)
@given(gaussians, gaussians)
def test_gaussian_division_inverts_multiplication(a, b):
    if b:
        assert (a * b) / b == a


@settings(max_examples=80, deadline=None)
@given(gaussians)
def test_gaussian_parse_round_trip(a):
    assert GaussianRational.parse(str(a)) == a


def test_gaussian_parse_examples():
    assert GaussianRational.parse("1") == GR(1)
    assert GaussianRational.parse("-2/3") == GR(Fraction(-2, 3))
    assert GaussianRational.parse("i") == GR(0, 1)
    assert GaussianRational.parse("-i") == GR(0, -1)
    assert GaussianRational.parse("2i") == GR(0, 2)
    assert GaussianRational.parse("1+2i") == GR(1, 2)
    with pytest.raises(ValueError):
        GaussianRational.parse("bogus")


def test_unit_power_cycles():
    assert wps.unit_power(0) == GR(1)
    assert wps.unit_power(1) == GR(0, 1)
    assert wps.unit_power(2) == GR(-1)
    assert wps.unit_power(3) == GR(0, -1)
    assert wps.unit_power(4) == GR(1)
    assert wps.unit_power(-1) == GR(0, -1)


# ---------------------------------------------------------------------------
# weighted spaces and well-formedness
# ---------------------------------------------------------------------------

def test_weighted_space_requires_coprime_weights():
    with pytest.raises(ValueError):
        WeightedSpace((2, 4, 6))
    WeightedSpace((1, 1, 1, 1, 4))  # fine


def test_well_formed_examples():
    space = WeightedSpace((1, 1, 1, 1, 4))
    ok, violations = wps.well_formed(CompleteIntersectionDatum(space, (8,)))
    assert ok and not violations

    bad = WeightedSpace((1, 1, 2, 2))
    ok, violations = wps.well_formed(CompleteIntersectionDatum(bad, (3,)))
    assert not ok
    assert any("gcd 2" in v for v in violations)

    # Two hypersurfaces: the codimension-2 gcd condition is one-or-both.
    space6 = WeightedSpace((1, 1, 1, 1, 4, 4))
    ok, violations = wps.well_formed(
        CompleteIntersectionDatum(space6, (8, 8)))
    assert ok and not violations

    deep = CompleteIntersectionDatum(space, (8, 8, 8))
    with pytest.raises(wps.UnsupportedError):
        wps.well_formed(deep)


def test_singular_strata():
    strata = wps.singular_strata(WeightedSpace((1, 1, 1, 1, 4)))
    assert len(strata) == 1
    assert strata[0].indices == (4,)
    assert strata[0].order == 4

    strata = wps.singular_strata(WeightedSpace((1, 1, 1, 1, 4, 4)))
    assert len(strata) == 1
    assert strata[0].indices == (4, 5)
    assert strata[0].order == 4
    assert strata[0].dimension == 1

    assert wps.singular_strata(WeightedSpace((1, 1, 1, 1, 1))) == []


def test_anticanonical_degree_and_linear_cone():
    space = WeightedSpace((1, 1, 1, 1, 4))
    assert wps.anticanonical_degree(CompleteIntersectionDatum(space)) == 8
    v = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 1, 4, 4)), (8,))
    assert wps.anticanonical_degree(v) == 4
    cone = CompleteIntersectionDatum(WeightedSpace((1, 1, 2)), (2,))
    assert wps.linear_cone_detect(cone) == [2]
    assert wps.linear_cone_detect(v) == []


def test_diagonal_quasismooth():
    space = WeightedSpace((1, 1, 1, 1, 4, 4))
    good = CompleteIntersectionDatum(space, (8,), (8, 8, 8, 8, 2, 2))
    ok, note = wps.diagonal_quasismooth(good)
    assert ok, note
    with pytest.raises(ValueError):
        CompleteIntersectionDatum(space, (8,), (8, 8, 8, 8, 2, 3))


# ---------------------------------------------------------------------------
# isolated Z4 points
# ---------------------------------------------------------------------------

def test_isolated_z4_check_ambient_point():
    ambient = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 1, 4)))
    iso = wps.isolated_z4_check(ambient)
    assert iso.ok and iso.action_ok
    assert iso.k == 1
    assert iso.points[0].count == 1


def test_isolated_z4_check_two_points_on_a_diagonal_member():
    space = WeightedSpace((1, 1, 1, 1, 4, 4))
    v = CompleteIntersectionDatum(space, (8,), (8, 8, 8, 8, 2, 2))
    iso = wps.isolated_z4_check(v)
    assert iso.ok and iso.action_ok
    assert iso.k == 2


def test_isolated_z4_check_rejects_a_singular_line():
    ambient = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 1, 4, 4)))
    iso = wps.isolated_z4_check(ambient)
    assert not iso.ok
    assert any("dimension" in r or "isolated" in r for r in iso.reasons)


def test_isolated_z4_check_rejects_wrong_order():
    ambient = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 3)))
    iso = wps.isolated_z4_check(ambient)
    assert iso.k == 1 and not iso.action_ok


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

def octic_polynomial(n, extra=()):
    entries = []
    for i in range(n):
        exps = [0] * n
        exps[i] = 8 if i < 4 else 2
        entries.append((tuple(exps), GR(1)))
    for exps, coeff in extra:
        entries.append((tuple(exps), coeff))
    return wps.parse_polynomial(entries)


def test_involution_on_the_octic_ambient():
    ambient = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 1, 4)))
    rho = InvolutionDatum((1, 0, 3, 2, 4), (0, 2, 0, 2, 0))
    poly = octic_polynomial(5)
    check = wps.involution_check(ambient, rho, [poly])
    assert check.ok, check.reasons
    assert check.fixed_count == 1  # the Z4 point itself


def test_involution_with_two_fixed_points():
    space = WeightedSpace((1, 1, 1, 1, 4, 4))
    v = CompleteIntersectionDatum(space, (8,), (8, 8, 8, 8, 2, 2))
    rho = InvolutionDatum((1, 0, 3, 2, 5, 4), (0, 2, 0, 2, 0, 0))
    poly = octic_polynomial(6)
    check = wps.involution_check(v, rho, [poly])
    assert check.ok, check.reasons
    assert check.fixed_count == 2


def test_involution_rejects_unpreserved_polynomial():
    ambient = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 1, 4)))
    rho = InvolutionDatum((1, 0, 3, 2, 4), (0, 2, 0, 2, 0))
    # x0^8 alone is sent to x1^8: not preserved.
    poly = wps.parse_polynomial([((8, 0, 0, 0, 0), GR(1))])
    check = wps.involution_check(ambient, rho, [poly])
    assert not check.ok
    assert any("preserve" in r for r in check.reasons)


def test_involution_requires_square_identity():
    with pytest.raises(ValueError):
        InvolutionDatum((1, 2, 0), (0, 0, 0))  # a 3-cycle


def test_involution_requires_projective_involutivity():
    ambient = CompleteIntersectionDatum(WeightedSpace((1, 1, 1, 1, 4)))
    # phases that do not square to a single projective unit
    rho = InvolutionDatum((1, 0, 3, 2, 4), (0, 1, 0, 2, 0))
    check = wps.involution_check(ambient, rho, [octic_polynomial(5)])
    assert not check.ok


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def test_scan_is_deterministic_and_finds_the_known_weights():
    first = wps.scan_admissible(4, 4)
    second = wps.scan_admissible(4, 4)
    assert first == second
    accepted = [c.weights for c in first if c.accepted]
    assert accepted == [(1, 1, 1, 1, 4)]
    # Every rejected candidate carries at least one reason.
    assert all(c.reasons for c in first if not c.accepted)


def test_scan_low_dimension_and_weight_edge_cases():
    assert wps.scan_admissible(4, 2) == []
    assert all(not c.accepted for c in wps.scan_admissible(1, 4))
