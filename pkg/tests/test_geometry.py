import pytest

from tropicount.errors import ParameterError
from tropicount.geometry import (
    PolygonSpec,
    boundary_integer_length,
    boundary_length_closed_form,
    build_polygon,
    chord_points,
    closed_form_budget,
    closed_form_profile,
    interval_budget,
    legal_specs,
    sigma_profile,
)


def test_square_profile():
    prof = sigma_profile(PolygonSpec("square", 2))
    assert prof.m == 4
    assert prof.sigma == (0, 1, 2, 1, 0)
    assert prof.budget == 3


def test_pentagon_profile_is_not_a_palindrome():
    prof = sigma_profile(PolygonSpec("pentagon", 2, 1))
    assert prof.sigma == (1, 2, 1, 0)
    assert prof.sigma != prof.sigma[::-1]


def test_hexagon_d_skips_levels():
    prof = sigma_profile(PolygonSpec("hexagonD", 3, 1))
    assert prof.levels == tuple(sorted(prof.levels))
    assert prof.m == len(prof.levels) - 1


@pytest.mark.parametrize("spec", list(legal_specs(5, 2)), ids=lambda s: s.label())
def test_profile_matches_closed_form(spec):
    prof = sigma_profile(spec)
    assert (prof.m, prof.sigma) == closed_form_profile(spec)
    assert prof.budget == closed_form_budget(spec) == interval_budget(spec)
    assert boundary_integer_length(spec) == boundary_length_closed_form(spec)


@pytest.mark.parametrize("spec", list(legal_specs(4, 2)), ids=lambda s: s.label())
def test_chords_are_symmetric_about_the_bisectrix(spec):
    for c in sigma_profile(spec).levels:
        pts = chord_points(spec, c)
        assert sorted((y, x) for x, y in pts) == sorted(pts)


@pytest.mark.parametrize("family,params", [("square", (3,)), ("hexagonD", (3, 1)), ("hexagonD", (4, 2))])
def test_palindromic_families(family, params):
    sigma = sigma_profile(PolygonSpec(family, *params)).sigma
    assert sigma == sigma[::-1]


def test_polygon_is_counterclockwise():
    for spec in legal_specs(4):
        v = build_polygon(spec)
        area2 = sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1] for i in range(len(v)))
        assert area2 > 0


@pytest.mark.parametrize(
    "args",
    [
        ("circle", 2, None, None, 1),
        ("square", 0, None, None, 1),
        ("square", 2, None, None, 0),
        ("square", 2, 1, None, 1),
        ("pentagon", 2, None, None, 1),
        ("pentagon", 2, 2, None, 1),
        ("hexagonC", 3, 1, 2, 1),
        ("hexagonC", 3, 2, None, 1),
        ("hexagonD", 2, 1, 1, 1),
    ],
)
def test_illegal_parameters(args):
    with pytest.raises(ParameterError):
        PolygonSpec(*args)


def test_scaling_multiplies_boundary():
    spec = PolygonSpec("hexagonC", 4, 2, 1)
    assert boundary_integer_length(spec.scaled(3)) == 3 * boundary_integer_length(spec)
    assert spec.scaled(3).unscaled() == spec
