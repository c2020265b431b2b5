"""Space dimensions, boundary codimensions, and group expression arithmetic."""

import pytest

from moduli_strata.errors import GroundTooSmall, NoCompactificationRule
from moduli_strata.moduli import (
    CurveModuli,
    GroupExpr,
    Siegel,
    SpAtom,
    SUFormAtom,
    UnitarySpace,
    boundary_codim,
    dim_space,
    group_dim,
    half_exact,
    sp_product,
    su_form,
    torelli_codim,
)


class TestDimensions:
    def test_siegel(self):
        assert dim_space(Siegel(4)) == 10
        assert dim_space(Siegel(0)) == 0
        assert dim_space(Siegel(1)) == 1

    def test_unitary(self):
        assert dim_space(UnitarySpace(2, 3)) == 6
        assert dim_space(UnitarySpace(0, 5)) == 0

    def test_curves(self):
        assert dim_space(CurveModuli(2)) == 3
        assert dim_space(CurveModuli(4)) == 9

    @pytest.mark.parametrize("g", range(0, 12))
    def test_siegel_increment(self, g):
        assert dim_space(Siegel(g + 1)) - dim_space(Siegel(g)) == g + 1


class TestBoundary:
    def test_siegel_exact(self):
        b = boundary_codim(Siegel(3))
        assert (b.codim, b.exact) == (3, True)
        assert boundary_codim(Siegel(1)).codim == 1

    def test_unitary_lower_bound(self):
        b = boundary_codim(UnitarySpace(2, 2))
        assert (b.codim, b.exact) == (3, False)

    def test_curves_have_no_rule(self):
        with pytest.raises(NoCompactificationRule):
            boundary_codim(CurveModuli(3))

    def test_degenerate_rejected(self):
        with pytest.raises(GroundTooSmall):
            boundary_codim(Siegel(0))
        with pytest.raises(GroundTooSmall):
            boundary_codim(UnitarySpace(0, 2))

    @pytest.mark.parametrize("g", range(1, 10))
    def test_siegel_boundary_is_dimension_drop(self, g):
        assert boundary_codim(Siegel(g)).codim == dim_space(Siegel(g)) - dim_space(Siegel(g - 1))

    @pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 7) for q in range(1, 7)])
    def test_unitary_boundary_is_dimension_drop(self, p, q):
        drop = dim_space(UnitarySpace(p, q)) - dim_space(UnitarySpace(p - 1, q - 1))
        assert boundary_codim(UnitarySpace(p, q)).codim == drop


class TestTorelli:
    def test_values(self):
        assert torelli_codim(3) == 0
        assert torelli_codim(4) == 1
        assert torelli_codim(5) == 3

    def test_too_small(self):
        with pytest.raises(GroundTooSmall):
            torelli_codim(1)


class TestGroupExpr:
    def test_atom_dims(self):
        assert SpAtom(4).dim == 36
        assert SpAtom(3).dim == 21
        assert SUFormAtom(2, 2).dim == 15

    def test_product_dim(self):
        expr = sp_product([2, 3])
        assert group_dim(expr) == 31
        assert expr.label == "Sp(4) x Sp(6)"
        assert group_dim(su_form(2, 2)) == 15

    def test_canonical_order(self):
        assert GroupExpr.of([SpAtom(3), SpAtom(2)]) == GroupExpr.of([SpAtom(2), SpAtom(3)])
        assert sp_product([3, 2]).label == "Sp(4) x Sp(6)"

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            GroupExpr(())

    @pytest.mark.parametrize("m", range(1, 12))
    def test_rank_increment(self, m):
        assert SpAtom(m + 1).dim - SpAtom(m).dim == 4 * m + 3

    def test_half_exact_guards_parity(self):
        assert half_exact(6) == 3
        with pytest.raises(ArithmeticError):
            half_exact(7)
