"""Smoke tests for the Python bindings."""

import os

import pytest

import toricarr

DATA = os.environ.get("TORICARR_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def path(name):
    return os.path.join(DATA, name)


def test_poset_invariants():
    b3 = toricarr.Poset.boolean(3)
    assert len(b3) == 8
    assert b3.height == 3
    assert b3.cd_index() == "1*cc + 1*d"
    assert b3.ab_index() == "1*aa + 2*ba + 2*ab + 1*bb"
    assert b3.moebius() == -1
    assert b3.is_eulerian()
    assert b3.flag_f()[(1, 2)] == 6
    assert b3.flag_h()[(1,)] == 2
    z = b3.zaslavsky()
    assert z["z"] == 8


def test_affine_arrangement():
    cube = toricarr.AffineArrangement.load(path("cube6.affine"))
    assert cube.n == 3 and cube.m == 6
    assert not cube.is_central()
    assert cube.chi() == "t^3 - 6*t^2 + 12*t - 8"
    assert cube.chi_at("-1") == -27
    rc = cube.region_counts()
    assert (rc["regions"], rc["bounded"], rc["unbounded"]) == (27, 1, 26)
    assert cube.psi_unbounded() == "1*ccc + 22*dc + 24*cd"

    coords = toricarr.AffineArrangement.load(path("coords3.affine"))
    assert coords.psi_central() == "1*ccc + 4*dc + 6*cd"
    assert coords.intersection_lattice().is_eulerian()


def test_toric_arrangement():
    two = toricarr.ToricArrangement.load(path("example2.toric"))
    assert two.chi() == "t^2 - 3*t + 8"
    assert two.regions() == 8
    assert two.psi_toric() == "(a-b)^3 + 7*dc + 8*cd"
    assert two.f_vector() == [7, 15, 8]
    assert two.modulus() == 15
    assert two.grid_count(15) == 188 == two.chi_at("15")


def test_graph():
    k3 = toricarr.Graph.load(path("k3.graph"))
    assert k3.chromatic_polynomial() == "t^3 - 3*t^2 + 2*t"
    assert k3.toric_regions() == 2 == k3.unique_sink_orientations()
    assert k3.acyclic_orientations() == 6
    assert k3.toric_arrangement().chi() == k3.chromatic_polynomial()


def test_polynomial_helpers():
    assert toricarr.omega("7*aab + 8*abb") == "16*dc + 14*cd"
    assert toricarr.cd_expand("c") == "1*a + 1*b"
    assert toricarr.ab_to_cd("1*a + 1*b") == "1*c"
    with pytest.raises(Exception):
        toricarr.ab_to_cd("a - b")
