"""Exact dimensions of the ambient moduli spaces and symbolic groups.

Everything here is integer arithmetic on three families of spaces:

* ``Siegel(g)`` -- principally polarized abelian g-folds; dimension g(g+1)/2.
* ``UnitarySpace(p, q)`` -- abelian (p+q)-folds with multiplication by an
  imaginary quadratic field acting with eigenspace dimensions (p, q);
  dimension p*q.
* ``CurveModuli(g)`` -- smooth genus-g curves; dimension 3g-3.

Group expressions are formal products of ``Sp(2k)`` and ``SU(p,q)``-form
atoms with exact dimensions k(2k+1) and (p+q)^2 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import GroundTooSmall, NoCompactificationRule

#: Level structures are carried as metadata only; dimensions never depend on
#: the level, so a single default is enough for most call sites.
DEFAULT_LEVEL = 3


def half_exact(n: int) -> int:
    """Return n/2, insisting that n is even.

    All half-integer formulas in this package are exact; a failed parity
    check here means a formula was applied outside its domain.
    """
    if n % 2 != 0:
        raise ArithmeticError(f"expected an even value, got {n}")
    return n // 2


def quarter_exact(n: int) -> int:
    if n % 4 != 0:
        raise ArithmeticError(f"expected a multiple of 4, got {n}")
    return n // 4


@dataclass(frozen=True)
class Siegel:
    """Moduli of principally polarized abelian g-folds (g = 0 is a point)."""

    g: int
    level: int = DEFAULT_LEVEL

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"Siegel parameter must be >= 0, got {self.g}")


@dataclass(frozen=True)
class UnitarySpace:
    """Moduli of abelian (p+q)-folds with imaginary quadratic multiplication.

    Degenerate parameters (p = 0 or q = 0) are accepted as point spaces;
    stratum arithmetic needs them as residual factors.
    """

    p: int
    q: int
    level: int = DEFAULT_LEVEL

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"Unitary parameters must be >= 0, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class CurveModuli:
    """Moduli of smooth genus-g curves, g >= 2."""

    g: int
    level: int = DEFAULT_LEVEL

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"CurveModuli needs genus >= 2, got {self.g}")


ModuliSpace = Union[Siegel, UnitarySpace, CurveModuli]


def dim_space(space: ModuliSpace) -> int:
    """Exact dimension of a moduli space."""
    if isinstance(space, Siegel):
        return space.g * (space.g + 1) // 2
    if isinstance(space, UnitarySpace):
        return space.p * space.q
    if isinstance(space, CurveModuli):
        return 3 * space.g - 3
    raise TypeError(f"not a moduli space: {space!r}")


def siegel_dim(g: int) -> int:
    """Shorthand for ``dim_space(Siegel(g))`` used heavily by stratum sums."""
    if g < 0:
        raise ValueError(f"dimension must be >= 0, got {g}")
    return g * (g + 1) // 2


def unitary_dim(p: int, q: int) -> int:
    if p < 0 or q < 0:
        raise ValueError(f"parameters must be >= 0, got ({p}, {q})")
    return p * q


@dataclass(frozen=True)
class BoundaryCodim:
    """Codimension of the minimal compactification boundary.

    ``exact`` distinguishes a sharp value from a guaranteed lower bound.
    """

    codim: int
    exact: bool


def boundary_codim(space: ModuliSpace) -> BoundaryCodim:
    """Boundary codimension of the minimal (projective) compactification.

    Siegel(g): the boundary is a chain of lower Siegel spaces, so the
    codimension is exactly g.  UnitarySpace(p, q): the boundary strata are
    the spaces with parameters (p-r, q-r), giving the lower bound
    pq - (p-1)(q-1) = p+q-1.  Curve moduli carry no rule here.
    """
    if isinstance(space, Siegel):
        if space.g < 1:
            raise GroundTooSmall("boundary codimension needs g >= 1")
        return BoundaryCodim(space.g, exact=True)
    if isinstance(space, UnitarySpace):
        if space.p < 1 or space.q < 1:
            raise GroundTooSmall("boundary codimension needs p, q >= 1")
        return BoundaryCodim(space.p + space.q - 1, exact=False)
    if isinstance(space, CurveModuli):
        raise NoCompactificationRule("no boundary codimension rule for curve moduli")
    raise TypeError(f"not a moduli space: {space!r}")


def torelli_codim(g: int) -> int:
    """Codimension of the closure of the Jacobian locus: g(g+1)/2 - (3g-3)."""
    if g < 2:
        raise GroundTooSmall(f"Torelli codimension needs g >= 2, got {g}")
    return g * (g + 1) // 2 - (3 * g - 3)


@dataclass(frozen=True, order=True)
class SpAtom:
    """A symplectic factor Sp(2*rank); dimension rank*(2*rank+1)."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"Sp atom rank must be >= 1, got {self.rank}")

    @property
    def dim(self) -> int:
        return self.rank * (2 * self.rank + 1)

    @property
    def label(self) -> str:
        return f"Sp({2 * self.rank})"


@dataclass(frozen=True, order=True)
class SUFormAtom:
    """A rational form of SU(p, q); dimension (p+q)^2 - 1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"SU-form parameters must be >= 1, got ({self.p}, {self.q})")

    @property
    def dim(self) -> int:
        return (self.p + self.q) ** 2 - 1

    @property
    def label(self) -> str:
        return f"SU({self.p},{self.q})"


GroupAtom = Union[SpAtom, SUFormAtom]


def _atom_key(atom: GroupAtom) -> tuple[int, int, int]:
    if isinstance(atom, SpAtom):
        return (0, atom.rank, 0)
    return (1, atom.p, atom.q)


@dataclass(frozen=True)
class GroupExpr:
    """A formal product of group atoms in canonical (sorted) order."""

    atoms: tuple[GroupAtom, ...]

    def __post_init__(self) -> None:
        if not self.atoms:
            raise ValueError("a group expression needs at least one atom")
        object.__setattr__(self, "atoms", tuple(sorted(self.atoms, key=_atom_key)))

    @classmethod
    def of(cls, atoms: Iterable[GroupAtom]) -> "GroupExpr":
        return cls(tuple(atoms))

    @property
    def label(self) -> str:
        return " x ".join(a.label for a in self.atoms)

    @property
    def dim(self) -> int:
        return sum(a.dim for a in self.atoms)


def sp_product(ranks: Iterable[int]) -> GroupExpr:
    """Product of Sp(2k) atoms, one per rank."""
    return GroupExpr.of(SpAtom(r) for r in ranks)


def su_form(p: int, q: int) -> GroupExpr:
    return GroupExpr.of([SUFormAtom(p, q)])


def group_dim(expr: GroupExpr) -> int:
    """Total dimension of a group expression."""
    return expr.dim
