import numpy as np
import pytest

from gaugekit.errors import InputError
from gaugekit.fixtures import (
    FIXTURES,
    get_fixture,
    projected_cylinder_radii,
    regular_polygon,
    slanted_cylinder,
    stadium,
)
from gaugekit.geometry import Polytope, Subspace, orthogonal_project, vertex_hausdorff
from gaugekit.measures import GaugeBody


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_builds(name: str):
    fixture = get_fixture(name)
    P = fixture.polytope()
    assert P.is_full_dimensional, name
    if fixture.kind == "gauge":
        GaugeBody(P)


def test_unknown_fixture():
    with pytest.raises(InputError, match="unknown fixture"):
        get_fixture("dodecahedron")


def test_regular_polygon():
    V = regular_polygon(6, 2.0)
    np.testing.assert_allclose(np.linalg.norm(V, axis=1), 2.0)
    np.testing.assert_allclose(V[0], [2.0, 0.0], atol=1e-12)


def test_stadium_is_cylinder_shadow():
    plane = Subspace.spanned_by(np.eye(3)[:2], 3)
    shadow = orthogonal_project(slanted_cylinder(16), plane)
    np.testing.assert_allclose(shadow.vertices[:, 2], 0.0, atol=1e-12)
    flat = Polytope.from_points(shadow.vertices[:, :2])
    assert vertex_hausdorff(flat, stadium(16)) < 1e-9


def test_projected_cylinder_radii():
    result = projected_cylinder_radii()
    assert result.n == 64
    assert result.in_space == pytest.approx(2.0, abs=0.02)
    assert result.in_plane == pytest.approx(1.0, abs=1e-9)
