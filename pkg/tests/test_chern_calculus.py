"""The closed-form Chern evaluators against their published values."""

import pytest

from fanoenum.chern_calculus import (
    BlowupData,
    SurfaceBundleData,
    antican_cube_by_index,
    antican_cube_divisor_in_p2_bundle,
    antican_cube_p1_bundle_over_surface,
    antican_sq_dot_exceptional,
    blowup_exceptional_cube,
    conic_bundle_ksq_dot_pullback,
    genus_from_blowup,
    xi_square_on_curve,
)
from fanoenum.errors import (
    ConstraintError,
    IncompleteSpecError,
    ParityError,
    UnsupportedIndexError,
)


def test_p1_bundle_cubes():
    assert antican_cube_p1_bundle_over_surface(SurfaceBundleData(2, 0, 8)) == 52
    assert antican_cube_p1_bundle_over_surface(SurfaceBundleData(1, 0, 9)) == 56
    assert antican_cube_p1_bundle_over_surface(SurfaceBundleData(4, 0, 9)) == 62


def test_xi_square_is_the_degree():
    assert xi_square_on_curve(2) == 2
    assert xi_square_on_curve(0) == 0
    assert xi_square_on_curve(-3) == -3


def test_divisor_in_p2_bundle_cubes():
    over_quadric = SurfaceBundleData(
        c1_sq=8, c2=2, Ky_sq=8, c1_dot_F=-10, c1_dot_Ky=8, F_dot_Ky=-10, F_sq=12
    )
    assert antican_cube_divisor_in_p2_bundle(over_quadric) == 14
    over_plane = SurfaceBundleData(
        c1_sq=9, c2=2, Ky_sq=9, c1_dot_F=0, c1_dot_Ky=-9, F_dot_Ky=0, F_sq=0
    )
    assert antican_cube_divisor_in_p2_bundle(over_plane) == 14
    zeros = SurfaceBundleData(0, 0, 0, 0, 0, 0, 0)
    assert antican_cube_divisor_in_p2_bundle(zeros) == 0


def test_divisor_formula_requires_all_fields():
    with pytest.raises(IncompleteSpecError):
        antican_cube_divisor_in_p2_bundle(SurfaceBundleData(8, 2, 8))


def test_exceptional_cube_is_the_conormal_degree():
    assert blowup_exceptional_cube(BlowupData(deg_conormal=2)) == 2
    assert blowup_exceptional_cube(BlowupData(deg_conormal=0)) == 0
    assert blowup_exceptional_cube(BlowupData(deg_conormal=-4)) == -4
    with pytest.raises(IncompleteSpecError):
        blowup_exceptional_cube(BlowupData(ky_dot_C=1))


def test_antican_sq_dot_exceptional():
    assert antican_sq_dot_exceptional(BlowupData(ky_dot_C=36, genus=10)) == 18
    assert antican_sq_dot_exceptional(BlowupData(ky_dot_C=0, genus=1)) == 0
    assert antican_sq_dot_exceptional(BlowupData(ky_dot_C=2, genus=0)) == 4


def test_negative_genus_rejected_at_construction():
    with pytest.raises(ConstraintError):
        BlowupData(genus=-1)


def test_conic_bundle_ksq():
    # against a line on P^2 this specializes to 12 - deg Delta
    for deg_delta in range(0, 13):
        assert conic_bundle_ksq_dot_pullback(-3, deg_delta) == 12 - deg_delta
    assert conic_bundle_ksq_dot_pullback(-2, 4) == 4
    assert conic_bundle_ksq_dot_pullback(0, 0) == 0


def test_genus_from_blowup_known_cases():
    assert genus_from_blowup(16, 64, 4, 7) == 5
    assert genus_from_blowup(20, 54, 3, 6) == 2
    assert genus_from_blowup(40, 64, 4, 3) == 1


def test_genus_from_blowup_parity_errors():
    with pytest.raises(ParityError):
        genus_from_blowup(15, 64, 4, 7)
    with pytest.raises(ParityError):
        genus_from_blowup(16, 63, 4, 7)


def test_genus_from_blowup_rejects_negative():
    with pytest.raises(ConstraintError):
        genus_from_blowup(2, 64, 4, 1)


def test_index2_centres_all_have_genus_one():
    # blowing up a degree-L3 elliptic curve on a degree-L3 del Pezzo threefold
    for L3 in range(1, 6):
        assert genus_from_blowup(4 * L3, 8 * L3, 2, L3) == 1


def test_antican_cube_by_index():
    assert antican_cube_by_index(4) == 64
    assert antican_cube_by_index(3) == 54
    for L3 in range(1, 6):
        assert antican_cube_by_index(2, L3) == 8 * L3
    with pytest.raises(IncompleteSpecError):
        antican_cube_by_index(2)
    with pytest.raises(UnsupportedIndexError):
        antican_cube_by_index(5)
