"""Family planning: dimension budgets, monodromy groups, feasibility.

A family specification fixes a product decomposition (a fixed part that
stays constant and a varying part that moves in moduli).  The planner turns
it into a budget: a complete base of dimension d exists when both the
repeated-factor locus and the compactification boundary have codimension at
least d + 1 in the ambient family locus, so

    d_max = min(mdec_codim, boundary_codim) - 1.

The connected monodromy group of the resulting family is the product of
full symplectic groups of the varying factors (symplectic flavor) or a
rational form of SU(p, q) (unitary flavor); fixed factors contribute
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import (
    GenusTooSmall,
    RankTooSmall,
    RuleNotProven,
    SpecInvalid,
    TargetTooLarge,
    UnitaryBoundViolated,
    UnrealizableTarget,
)
from .hecke_groups import gamma_gamma_codim
from .moduli import (
    DEFAULT_LEVEL,
    BoundaryCodim,
    GroupExpr,
    Siegel,
    SpAtom,
    SUFormAtom,
    UnitarySpace,
    boundary_codim,
    siegel_dim,
    torelli_codim,
    unitary_dim,
)
from .partitions import SetPartition
from .strata import (
    DecompositionShape,
    MinCodim,
    mdec_codim_fixedpart,
    mdec_codim_unitary_fixedpart,
    unitary_closed_form,
)


@dataclass(frozen=True)
class SymplecticFamily:
    """Fixed abelian factors plus varying full-moduli factors."""

    fixed_dims: tuple[int, ...] = ()
    varying_dims: tuple[int, ...] = ()
    level: int = DEFAULT_LEVEL

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed_dims", tuple(sorted(self.fixed_dims)))
        object.__setattr__(self, "varying_dims", tuple(sorted(self.varying_dims)))

    @property
    def total_g(self) -> int:
        return sum(self.fixed_dims) + sum(self.varying_dims)


@dataclass(frozen=True)
class UnitaryFamily:
    """Fixed non-CM elliptic factors plus one varying factor with
    imaginary quadratic multiplication of type (p, q)."""

    elliptic_count: int
    p: int
    q: int
    field_label: str = "L"
    level: int = DEFAULT_LEVEL

    @property
    def total_g(self) -> int:
        return self.elliptic_count + self.p + self.q


FamilySpec = Union[SymplecticFamily, UnitaryFamily]


def validate_spec(spec: FamilySpec) -> list[str]:
    """List of violated hypotheses; empty means the spec is plannable."""
    violations: list[str] = []
    if isinstance(spec, SymplecticFamily):
        if not spec.varying_dims:
            violations.append("at least one varying factor is required")
        for d in spec.varying_dims:
            if d < 2:
                violations.append(f"varying dim {d} < 2")
        for d in spec.fixed_dims:
            if d < 1:
                violations.append(f"fixed dim {d} < 1")
    elif isinstance(spec, UnitaryFamily):
        if spec.elliptic_count < 0:
            violations.append(f"elliptic factor count {spec.elliptic_count} < 0")
        if spec.p < 1 or spec.q < 1:
            violations.append(f"unitary parameters ({spec.p},{spec.q}) must be >= 1")
        elif spec.p + spec.q < 4:
            violations.append(f"p+q={spec.p + spec.q} < 4")
        if not spec.field_label:
            violations.append("field label must be nonempty")
    else:
        violations.append(f"unknown spec flavor: {type(spec).__name__}")
    if spec.level < 3:
        violations.append(f"level {spec.level} < 3")
    return violations


def derived_mt(spec: FamilySpec) -> GroupExpr:
    """Monodromy bound: the derived group of the generic Hodge-theoretic
    symmetry group.  Fixed factors are monodromy-invariant and drop out."""
    violations = validate_spec(spec)
    if violations:
        raise SpecInvalid(violations)
    if isinstance(spec, SymplecticFamily):
        return GroupExpr.of(SpAtom(d) for d in spec.varying_dims)
    return GroupExpr.of([SUFormAtom(spec.p, spec.q)])


def _spec_partition(spec: FamilySpec) -> SetPartition | None:
    """The decomposition of {1..g} induced by the spec's factor sizes.

    Returns None when there is only one block (nothing proper to margin
    against).
    """
    if isinstance(spec, SymplecticFamily):
        sizes = list(spec.fixed_dims) + list(spec.varying_dims)
    else:
        sizes = [1] * spec.elliptic_count + [spec.p + spec.q]
    if len(sizes) < 2:
        return None
    blocks: list[tuple[int, ...]] = []
    start = 1
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    return SetPartition.from_blocks(blocks)


@dataclass(frozen=True)
class PlanReport:
    """Everything the budget arithmetic produces for one family spec."""

    spec: FamilySpec
    total_g: int
    ambient_dim: int
    mdec: MinCodim
    boundary: BoundaryCodim
    budget: int
    d_max: int
    monodromy: GroupExpr
    monodromy_dim: int
    hecke_margin: int | None
    feasible: bool
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "spec": spec_to_dict(self.spec),
            "total_g": self.total_g,
            "ambient_dim": self.ambient_dim,
            "mdec_codim": self.mdec.codim,
            "mdec_witness": self.mdec.witness.to_dict(),
            "mdec_closed_form": self.mdec.closed_form,
            "mdec_agrees": self.mdec.agrees,
            "boundary_codim": self.boundary.codim,
            "boundary_exact": self.boundary.exact,
            "budget": self.budget,
            "d_max": self.d_max,
            "monodromy": self.monodromy.label,
            "monodromy_atoms": [atom_to_dict(a) for a in self.monodromy.atoms],
            "monodromy_dim": self.monodromy_dim,
            "hecke_margin": self.hecke_margin,
            "feasible": self.feasible,
        }


def spec_to_dict(spec: FamilySpec) -> dict:
    if isinstance(spec, SymplecticFamily):
        return {
            "flavor": "symplectic",
            "fixed_dims": list(spec.fixed_dims),
            "varying_dims": list(spec.varying_dims),
            "level": spec.level,
        }
    return {
        "flavor": "unitary",
        "elliptic_count": spec.elliptic_count,
        "p": spec.p,
        "q": spec.q,
        "field_label": spec.field_label,
        "level": spec.level,
    }


def atom_to_dict(atom) -> dict:
    if isinstance(atom, SpAtom):
        return {"kind": "sp", "rank": atom.rank, "dim": atom.dim}
    return {"kind": "su_form", "p": atom.p, "q": atom.q, "dim": atom.dim}


def plan_family(spec: FamilySpec) -> PlanReport:
    """Compute the full dimension budget and monodromy for a family spec.

    The repeated-factor codimension comes from stratum enumeration, the
    boundary codimension from the compactification rule, and the budget is
    their minimum; d_max = budget - 1.  For unitary specs where the
    enumeration undercuts the closed form min(2p, p+q-2, 2q), the computed
    (smaller) budget is reported and the divergence is noted.
    """
    violations = validate_spec(spec)
    if violations:
        raise SpecInvalid(violations)
    notes: list[str] = []
    if isinstance(spec, SymplecticFamily):
        ambient = sum(siegel_dim(d) for d in spec.varying_dims)
        mdec = mdec_codim_fixedpart(DecompositionShape(spec.fixed_dims, spec.varying_dims))
        per_factor = [boundary_codim(Siegel(d)) for d in spec.varying_dims]
        boundary = BoundaryCodim(min(b.codim for b in per_factor), exact=all(b.exact for b in per_factor))
        if spec.fixed_dims:
            notes.append(
                "fixed factors are assumed pairwise non-isogenous, non-isogenous to "
                "every varying factor, and (for the varying factors) general in moduli"
            )
    else:
        ambient = unitary_dim(spec.p, spec.q)
        mdec = mdec_codim_unitary_fixedpart(spec.elliptic_count, spec.p, spec.q)
        boundary = boundary_codim(UnitarySpace(spec.p, spec.q))
        notes.append(
            "fixed elliptic factors are assumed pairwise non-isogenous and without "
            "extra endomorphisms; the varying factor is assumed general in its moduli"
        )
    budget = min(mdec.codim, boundary.codim)
    d_max = budget - 1
    monodromy = derived_mt(spec)
    notes.extend(mdec.notes)
    if isinstance(spec, SymplecticFamily):
        expected = min(spec.varying_dims) - 1
        if d_max != expected:
            raise AssertionError(f"symplectic budget {d_max} differs from bound {expected}")
    else:
        closed = unitary_closed_form(spec.p, spec.q)
        if closed is not None and d_max != closed - 1:
            notes.append(
                f"d_max {d_max} is below the closed-form bound {closed - 1}; "
                "the stratum enumeration is authoritative"
            )
    lam = _spec_partition(spec)
    if lam is None:
        margin = None
        notes.append("decomposition has a single factor; no translate margin to compute")
    else:
        margin = gamma_gamma_codim(spec.total_g, lam)
    return PlanReport(
        spec=spec,
        total_g=spec.total_g,
        ambient_dim=ambient,
        mdec=mdec,
        boundary=boundary,
        budget=budget,
        d_max=d_max,
        monodromy=monodromy,
        monodromy_dim=monodromy.dim,
        hecke_margin=margin,
        feasible=d_max >= 1,
        notes=tuple(notes),
    )


def realize_group(target: GroupExpr, g_prime: int) -> FamilySpec:
    """A family spec of total dimension g' whose monodromy group is target.

    Symplectic targets are padded with pairwise non-isogenous elliptic
    fixed factors of dimension 1; a unitary target needs at least one such
    pad, i.e. 5 <= p+q+1 <= g'.
    """
    atoms = target.atoms
    if all(isinstance(a, SpAtom) for a in atoms):
        ranks = tuple(a.rank for a in atoms)  # type: ignore[union-attr]
        if any(r < 2 for r in ranks):
            raise RankTooSmall(f"every symplectic rank must be >= 2, got {ranks}")
        if g_prime < sum(ranks):
            raise TargetTooLarge(
                f"target needs total dimension >= {sum(ranks)}, got g' = {g_prime}"
            )
        pad = g_prime - sum(ranks)
        return SymplecticFamily(fixed_dims=(1,) * pad, varying_dims=ranks)
    if len(atoms) == 1 and isinstance(atoms[0], SUFormAtom):
        p, q = atoms[0].p, atoms[0].q
        if p + q + 1 < 5:
            raise UnitaryBoundViolated(f"need p+q+1 >= 5, got {p + q + 1}")
        if g_prime < p + q + 1:
            raise UnitaryBoundViolated(f"need g' >= p+q+1 = {p + q + 1}, got {g_prime}")
        return UnitaryFamily(elliptic_count=g_prime - (p + q), p=p, q=q)
    raise UnrealizableTarget(
        "target must be a product of Sp atoms or a single SU-form atom"
    )


@dataclass(frozen=True)
class KodairaReport:
    """Budget chain for a complete one-dimensional family of curves.

    The fiber-genus-h construction works inside the locus of products of a
    fixed elliptic curve with varying (h-1)-folds, then descends through
    the Jacobian locus; completeness needs two units of budget left after
    paying the Torelli codimension.
    """

    fiber_genus: int
    spec: SymplecticFamily
    mdec: MinCodim
    boundary: BoundaryCodim
    torelli_codim: int
    post_torelli_budget: int
    feasible: bool
    monodromy: GroupExpr
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "fiber_genus": self.fiber_genus,
            "spec": spec_to_dict(self.spec),
            "mdec_codim": self.mdec.codim,
            "mdec_witness": self.mdec.witness.to_dict(),
            "boundary_codim": self.boundary.codim,
            "boundary_exact": self.boundary.exact,
            "torelli_codim": self.torelli_codim,
            "post_torelli_budget": self.post_torelli_budget,
            "feasible": self.feasible,
            "monodromy": self.monodromy.label,
            "monodromy_dim": self.monodromy.dim,
        }


def kodaira_budget(fiber_genus: int) -> KodairaReport:
    """Feasibility of the complete-curve-family construction at a genus.

    Uses the spec {elliptic} x (moduli of (genus-1)-folds); the method
    needs post_torelli_budget = min(mdec, boundary) - torelli >= 2.
    """
    if fiber_genus < 3:
        raise GenusTooSmall(f"fiber genus must be >= 3, got {fiber_genus}")
    spec = SymplecticFamily(fixed_dims=(1,), varying_dims=(fiber_genus - 1,))
    mdec = mdec_codim_fixedpart(DecompositionShape(spec.fixed_dims, spec.varying_dims))
    boundary = boundary_codim(Siegel(fiber_genus - 1))
    torelli = torelli_codim(fiber_genus)
    budget = min(mdec.codim, boundary.codim) - torelli
    notes = (
        "ramification of the period map over the hyperelliptic locus is "
        "resolved by a branched double cover of the base",
    )
    return KodairaReport(
        fiber_genus=fiber_genus,
        spec=spec,
        mdec=mdec,
        boundary=boundary,
        torelli_codim=torelli,
        post_torelli_budget=budget,
        feasible=budget >= 2,
        monodromy=GroupExpr.of([SpAtom(fiber_genus - 1)]),
        notes=notes,
    )


class FieldKind(str, Enum):
    RATIONAL = "rational"
    IMAGINARY_QUADRATIC = "imaginary_quadratic"
    REAL_QUADRATIC = "real_quadratic"
    OTHER = "other"


@dataclass(frozen=True)
class EndFactor:
    """One factor of an endomorphism algebra with its multiplicity."""

    kind: FieldKind
    label: str = ""
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if self.kind is not FieldKind.RATIONAL and not self.label:
            raise ValueError(f"{self.kind.value} factors need a nonempty label")


@dataclass(frozen=True)
class EndAlgebra:
    """Endomorphism algebra of an abelian variety as a product of fields."""

    factors: tuple[EndFactor, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("an endomorphism algebra needs at least one factor")


def polarized_isogeny_closed(alg: EndAlgebra) -> bool:
    """Whether every isogeny class is guaranteed to be a polarized one.

    True exactly when every factor is the rationals or an imaginary
    quadratic field with multiplicity one.  False means "not guaranteed by
    the multiplicity-one criterion", not "provably false".
    """
    return all(
        f.multiplicity == 1 and f.kind in (FieldKind.RATIONAL, FieldKind.IMAGINARY_QUADRATIC)
        for f in alg.factors
    )


def ns_rank(alg: EndAlgebra) -> int:
    """Rank of the Neron-Severi group under the multiplicity-one criterion.

    Each rational or imaginary quadratic factor contributes a rank-one
    piece fixed by the polarization involution; outside that hypothesis the
    rule is not proven and the call is refused.
    """
    if not polarized_isogeny_closed(alg):
        raise RuleNotProven(
            "rank rule requires multiplicity-one rational or imaginary quadratic factors"
        )
    return len(alg.factors)
