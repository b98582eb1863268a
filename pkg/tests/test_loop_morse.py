import itertools

import pytest

from liehofer.circle_index import CircleSubgroup, riemannian_index_conjugate
from liehofer.errors import NotDominant
from liehofer.loop_morse import (
    bott_index,
    enumerate_critical_strata,
    exponents,
    in_coroot_lattice,
    omega_g_series,
    poly_divexact,
    poly_mul,
    stratum_poincare,
    transgression_series,
)
from liehofer.root_system import from_label, weyl_orbit

ALL_LABELS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"]


def test_poly_helpers():
    assert poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert poly_divexact((1, 2, 1), (1, 1)) == (1, 1)
    with pytest.raises(ArithmeticError):
        poly_divexact((1, 1, 1), (1, 1))


def test_bott_index_examples():
    a1 = from_label("A1")
    assert bott_index(a1.coweight([2])) == 2
    assert bott_index(a1.coweight([0])) == 0
    a2 = from_label("A2")
    assert bott_index(a2.coweight([2, 0])) == 4


def test_bott_index_requires_dominant():
    with pytest.raises(NotDominant):
        bott_index(from_label("A2").coweight([1, -1]))


def test_bott_index_matches_conjugate_point_oracle():
    for label in ("A2", "B2", "G2", "B3"):
        system = from_label(label)
        for coords in itertools.product(range(4), repeat=system.rank):
            xi = system.coweight(coords)
            if xi.is_zero or not CircleSubgroup(xi).regular:
                continue
            assert bott_index(xi) == riemannian_index_conjugate(CircleSubgroup(xi))


def test_stratum_poincare_examples():
    a1 = from_label("A1")
    assert stratum_poincare(a1.coweight([2])) == (1, 0, 1)  # S^2
    a2 = from_label("A2")
    assert stratum_poincare(a2.coweight([1, 1])) == (1, 0, 2, 0, 2, 0, 1)  # full flag
    assert stratum_poincare(a2.coweight([1, 0])) == (1, 0, 1, 0, 1)  # CP^2


def test_stratum_poincare_at_one_is_orbit_size():
    for label in ("A2", "B2", "C3", "G2"):
        system = from_label(label)
        for coords in itertools.product(range(3), repeat=system.rank):
            xi = system.coweight(coords)
            assert sum(stratum_poincare(xi)) == len(weyl_orbit(xi))


def test_enumerate_strata_a1():
    a1 = from_label("A1")
    strata = enumerate_critical_strata(a1, 6)
    by_coords = {s.xi.coords: s.bott_index for s in strata}
    assert by_coords == {(0,): 0, (1,): 0, (2,): 2, (3,): 4, (4,): 6}
    assert all(s.unstable_dim == s.bott_index for s in strata)


def test_enumerate_strata_a2_low_degree():
    a2 = from_label("A2")
    coords = {s.xi.coords for s in enumerate_critical_strata(a2, 2)}
    assert {(0, 0), (1, 0), (0, 1), (1, 1)} <= coords
    assert all(bott_index(a2.coweight(c)) <= 2 for c in coords)


def test_enumerate_strata_degree_zero_contains_origin():
    for label in ("A1", "B2", "G2"):
        system = from_label(label)
        coords = {s.xi.coords for s in enumerate_critical_strata(system, 0)}
        assert (0,) * system.rank in coords


def test_zero_stratum_is_constant_loop():
    b2 = from_label("B2")
    zero = next(
        s for s in enumerate_critical_strata(b2, 4) if s.xi.is_zero
    )
    assert zero.bott_index == 0
    assert zero.stratum_poly == (1,)
    assert zero.in_coroot_lattice


def test_coroot_lattice_membership():
    a1 = from_label("A1")
    assert in_coroot_lattice(a1.coweight([2]))
    assert not in_coroot_lattice(a1.coweight([1]))
    a2 = from_label("A2")
    assert in_coroot_lattice(a2.coweight([1, 1]))
    assert not in_coroot_lattice(a2.coweight([1, 0]))
    g2 = from_label("G2")
    assert in_coroot_lattice(g2.coweight([1, 0]))  # G2 has trivial center


def test_omega_series_a1():
    a1 = from_label("A1")
    series = omega_g_series(a1, 10)
    assert series.coeffs == (1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)


def test_omega_series_a2():
    a2 = from_label("A2")
    series = omega_g_series(a2, 8)
    assert series.coeffs == (1, 0, 1, 0, 2, 0, 2, 0, 3)


@pytest.mark.parametrize("label", ALL_LABELS)
def test_omega_series_matches_oracle(label):
    system = from_label(label)
    cutoff = 12 if system.rank <= 3 else 10
    series = omega_g_series(system, cutoff, check=True)
    oracle = transgression_series(system, cutoff)
    assert series.coeffs == oracle.coeffs
    assert series.coeffs[0] == 1
    assert all(c >= 0 for c in series.coeffs)
    assert all(series.coeffs[d] == 0 for d in range(1, cutoff + 1, 2))


def test_exponents_table():
    assert exponents(from_label("A3")) == (1, 2, 3)
    assert exponents(from_label("B4")) == (1, 3, 5, 7)
    assert exponents(from_label("D4")) == (1, 3, 3, 5)
    assert exponents(from_label("G2")) == (1, 5)
    assert exponents(from_label("F4")) == (1, 5, 7, 11)
