"""Strata of the multiply-decomposable locus and their minimal codimension.

Inside a product of Siegel factors, a point with two isogenous simple
factors lies on one of two stratum families:

* ``b_offdiag(i, j, d)`` -- factors i < j share a common d-dimensional
  isogeny factor; codimension d(2g_i + 2g_j + 1 - 3d)/2.
* ``b_diag(i, d)`` -- factor i contains a repeated d-dimensional factor;
  codimension d(4g_i + 1 - 5d)/2.

With a fixed product of abelian varieties in front, there is additionally

* ``c(i, j)`` -- varying factor i absorbs fixed factor j; codimension
  g_c(2g_v + 1 - g_c)/2, only realizable when g_c <= g_v.

Inside a unitary moduli space with parameters (p, q):

* ``unitary_cm(k, l)`` -- the repeated factor itself carries the field
  action; k, l even, k + l >= 2; dimension kl/4 + (p-k)(q-l).
* ``unitary_noncm(k)`` -- the repeated factor carries no field action,
  1 <= k <= min(p, q); dimension k(k+1)/2 + (p-k)(q-k).

Every stratum dimension is computed twice: from raw sums of moduli-space
dimensions and (where one exists) from the closed form, and the two must
agree.  Minima over strata are compared against published closed-form
minima; a disagreement is reported, never silently overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidShape, VaryingDimTooSmall
from .moduli import half_exact, quarter_exact, siegel_dim, unitary_dim


@dataclass(frozen=True)
class Stratum:
    """One component of the multiply-decomposable locus."""

    kind: str
    params: tuple[int, ...]
    ambient_dim: int
    stratum_dim: int

    def __post_init__(self) -> None:
        if self.stratum_dim > self.ambient_dim:
            raise ValueError(f"stratum dimension exceeds ambient: {self}")

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.stratum_dim

    @property
    def label(self) -> str:
        return f"{self.kind}({', '.join(str(p) for p in self.params)})"

    def sort_key(self) -> tuple[int, str, tuple[int, ...]]:
        return (self.codim, self.kind, self.params)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": list(self.params),
            "ambient_dim": self.ambient_dim,
            "stratum_dim": self.stratum_dim,
            "codim": self.codim,
        }


@dataclass(frozen=True)
class DecompositionShape:
    """Fixed factor dimensions plus varying factor dimensions.

    Both tuples are kept sorted ascending; fixed factors may be absent,
    varying factors must all have dimension at least 2.
    """

    fixed_dims: tuple[int, ...]
    varying_dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.varying_dims:
            raise InvalidShape("at least one varying factor is required")
        if any(d < 2 for d in self.varying_dims):
            raise InvalidShape(f"varying dimensions must be >= 2, got {self.varying_dims}")
        if any(d < 1 for d in self.fixed_dims):
            raise InvalidShape(f"fixed dimensions must be >= 1, got {self.fixed_dims}")
        object.__setattr__(self, "fixed_dims", tuple(sorted(self.fixed_dims)))
        object.__setattr__(self, "varying_dims", tuple(sorted(self.varying_dims)))

    @property
    def total(self) -> int:
        return sum(self.fixed_dims) + sum(self.varying_dims)


@dataclass(frozen=True)
class MinCodim:
    """Minimum codimension over a stratum family, with audit trail.

    ``closed_form`` is the published formula's value where one applies;
    ``agrees`` records whether the enumerated minimum matches it.
    """

    codim: int
    witness: Stratum
    closed_form: int | None
    agrees: bool
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "codim": self.codim,
            "witness": self.witness.to_dict(),
            "closed_form": self.closed_form,
            "agrees": self.agrees,
            "notes": list(self.notes),
        }


def _check_two_paths(closed: int, raw: int, label: str) -> int:
    if closed != raw:
        raise AssertionError(f"codimension paths disagree for {label}: closed {closed}, raw {raw}")
    return closed


def strata_of_product(varying_dims: Sequence[int]) -> tuple[Stratum, ...]:
    """Strata of the repeated-factor locus in a product of Siegel spaces.

    Factors are indexed 1..s in ascending dimension order.  Codimensions
    are computed both by the closed forms above and by alternating sums of
    Siegel dimensions; the two paths must agree exactly.
    """
    dims = tuple(sorted(varying_dims))
    if not dims:
        raise VaryingDimTooSmall("at least one factor is required")
    if any(d < 2 for d in dims):
        raise VaryingDimTooSmall(f"factor dimensions must be >= 2, got {dims}")
    ambient = sum(siegel_dim(d) for d in dims)
    out: list[Stratum] = []
    for i, gi in enumerate(dims, start=1):
        for j in range(i + 1, len(dims) + 1):
            gj = dims[j - 1]
            for d in range(1, min(gi, gj) + 1):
                closed = half_exact(d * (2 * gi + 2 * gj + 1 - 3 * d))
                raw = (
                    siegel_dim(gi) + siegel_dim(gj)
                    - siegel_dim(gi - d) - siegel_dim(d) - siegel_dim(gj - d)
                )
                codim = _check_two_paths(closed, raw, f"b_offdiag({i},{j},{d})")
                out.append(Stratum("b_offdiag", (i, j, d), ambient, ambient - codim))
        for d in range(1, gi // 2 + 1):
            closed = half_exact(d * (4 * gi + 1 - 5 * d))
            raw = siegel_dim(gi) - siegel_dim(gi - 2 * d) - siegel_dim(d)
            codim = _check_two_paths(closed, raw, f"b_diag({i},{d})")
            out.append(Stratum("b_diag", (i, d), ambient, ambient - codim))
    out.sort(key=Stratum.sort_key)
    return tuple(out)


def _min_stratum(strata: Iterable[Stratum]) -> Stratum:
    return min(strata, key=Stratum.sort_key)


def mdec_codim_product(varying_dims: Sequence[int]) -> MinCodim:
    """Minimal codimension of the repeated-factor locus in a pure product.

    The enumerated minimum provably equals 2*g1 - 2 for the smallest factor
    dimension g1; the identity is still recomputed on every call.
    """
    strata = strata_of_product(varying_dims)
    witness = _min_stratum(strata)
    closed = 2 * min(varying_dims) - 2
    if witness.codim != closed:
        raise AssertionError(
            f"product minimum {witness.codim} differs from closed form {closed} "
            f"for dims {tuple(sorted(varying_dims))}"
        )
    return MinCodim(witness.codim, witness, closed, agrees=True)


def strata_of_shape(shape: DecompositionShape) -> tuple[Stratum, ...]:
    """Strata for a varying product with a fixed product in front.

    The fixed factors contribute the absorption strata ``c(i, j)``; pairs
    with g_c > g_v are empty and omitted.
    """
    base = strata_of_product(shape.varying_dims)
    ambient = sum(siegel_dim(d) for d in shape.varying_dims)
    out = list(base)
    for i, gv in enumerate(shape.varying_dims, start=1):
        for j, gc in enumerate(shape.fixed_dims, start=1):
            if gc > gv:
                continue
            closed = half_exact(gc * (2 * gv + 1 - gc))
            raw = siegel_dim(gv) - siegel_dim(gv - gc)
            codim = _check_two_paths(closed, raw, f"c({i},{j})")
            out.append(Stratum("c", (i, j), ambient, ambient - codim))
    out.sort(key=Stratum.sort_key)
    return tuple(out)


def fixedpart_closed_form(shape: DecompositionShape) -> int | None:
    """Published minimum for a shape, or None where it is not asserted.

    The formula min(2g_v1 - 2, h(g_c1), h(g_cr)) with
    h(x) = x(2g_v1 + 1 - x)/2 presumes every absorption stratum is
    realizable, i.e. max(fixed) <= min(varying).
    """
    gv1 = shape.varying_dims[0]
    if not shape.fixed_dims:
        return 2 * gv1 - 2
    if shape.fixed_dims[-1] > gv1:
        return None
    gc1, gcr = shape.fixed_dims[0], shape.fixed_dims[-1]
    return min(
        2 * gv1 - 2,
        half_exact(gc1 * (2 * gv1 + 1 - gc1)),
        half_exact(gcr * (2 * gv1 + 1 - gcr)),
    )


def mdec_codim_fixedpart(shape: DecompositionShape) -> MinCodim:
    """Minimal codimension of the repeated-factor locus for a shape.

    Whenever all fixed dimensions are at most all varying dimensions the
    enumerated minimum must match the closed form; otherwise only the
    enumeration is authoritative and the exclusion is noted.  In every
    case the minimum is at least the smallest varying dimension.
    """
    strata = strata_of_shape(shape)
    witness = _min_stratum(strata)
    gv1 = shape.varying_dims[0]
    if witness.codim < gv1:
        raise AssertionError(
            f"fixed-part minimum {witness.codim} fell below the bound {gv1} for {shape}"
        )
    closed = fixedpart_closed_form(shape)
    notes: list[str] = []
    if closed is None:
        excluded = [
            (i, j)
            for i, gv in enumerate(shape.varying_dims, start=1)
            for j, gc in enumerate(shape.fixed_dims, start=1)
            if gc > gv
        ]
        notes.append(
            "closed form not asserted: absorption strata "
            + ", ".join(f"c{p}" for p in excluded)
            + " are empty (fixed dimension exceeds a varying dimension)"
        )
        agrees = True
    else:
        agrees = witness.codim == closed
        if not agrees:
            notes.append(
                f"enumerated minimum {witness.codim} differs from closed form {closed}"
            )
    return MinCodim(witness.codim, witness, closed, agrees, tuple(notes))


def strata_of_unitary(p: int, q: int) -> tuple[Stratum, ...]:
    """Strata of the repeated-factor locus in a unitary moduli space.

    unitary_cm dimensions are cross-checked against the expanded form
    pq - pl - kq + 5kl/4.  unitary_noncm dimensions use the raw sum
    k(k+1)/2 + (p-k)(q-k) only: the half-weight closed form
    pq - k(p+q - 3k/2 - 1/2)/2 disagrees with that sum (its correction
    term is off by a factor of two) and is not used.
    """
    if p < 1 or q < 1:
        raise InvalidShape(f"unitary parameters must be >= 1, got ({p}, {q})")
    ambient = unitary_dim(p, q)
    out: list[Stratum] = []
    for k in range(0, p + 1, 2):
        for l in range(0, q + 1, 2):
            if k + l < 2:
                continue
            raw = unitary_dim(k // 2, l // 2) + unitary_dim(p - k, q - l)
            closed = ambient - p * l - k * q + quarter_exact(5 * k * l)
            if closed != raw:
                raise AssertionError(f"cm stratum paths disagree at ({k},{l}): {closed} vs {raw}")
            out.append(Stratum("unitary_cm", (k, l), ambient, raw))
    for k in range(1, min(p, q) + 1):
        raw = siegel_dim(k) + unitary_dim(p - k, q - k)
        out.append(Stratum("unitary_noncm", (k,), ambient, raw))
    out.sort(key=Stratum.sort_key)
    return tuple(out)


NONCM_DISPLAY_NOTE = (
    "unitary_noncm dimensions are raw sums dim A_k + dim Z(p-k, q-k); the "
    "half-weight closed form pq - k(p+q - 3k/2 - 1/2)/2 disagrees with that "
    "sum by a factor of two in its correction term and is not used"
)


def unitary_closed_form(p: int, q: int) -> int | None:
    """min(2p, p+q-2, 2q); only asserted once p + q >= 3."""
    if p + q < 3:
        return None
    return min(2 * p, p + q - 2, 2 * q)


def mdec_codim_unitary(p: int, q: int) -> MinCodim:
    """Minimal codimension of the repeated-factor locus in unitary moduli.

    The minimum is taken over the enumerated strata.  It is compared with
    min(2p, p+q-2, 2q); at (p, q) = (2, 2) and (3, 3) the unitary_noncm
    stratum with k = p = q lies strictly deeper than the closed form and
    the disagreement is reported in the result.
    """
    strata = strata_of_unitary(p, q)
    witness = _min_stratum(strata)
    closed = unitary_closed_form(p, q)
    notes: list[str] = []
    agrees = True
    if closed is not None and witness.codim != closed:
        agrees = False
        notes.append(
            f"enumerated minimum {witness.codim} is below the closed form "
            f"min(2p, p+q-2, 2q) = {closed}; witness {witness.label} has "
            f"dimension {witness.stratum_dim} in ambient dimension {witness.ambient_dim}"
        )
    cm = [s for s in strata if s.kind == "unitary_cm"]
    if cm:
        top = max(cm, key=lambda s: (s.stratum_dim, s.params))
        low = [s for s in cm if sum(s.params) == 2]
        if low and top.stratum_dim > max(s.stratum_dim for s in low):
            notes.append(
                f"largest unitary_cm stratum is {top.label} with k+l > 2 "
                f"(dimension {top.stratum_dim}); the k+l = 2 strata are smaller"
            )
    return MinCodim(witness.codim, witness, closed, agrees, tuple(notes))


def mdec_codim_unitary_fixedpart(r: int, p: int, q: int) -> MinCodim:
    """Same minimum with r fixed non-CM elliptic factors in front.

    Fixed elliptic factors without extra endomorphisms contribute no new
    strata, so the value is independent of r.
    """
    if r < 0:
        raise InvalidShape(f"elliptic factor count must be >= 0, got {r}")
    base = mdec_codim_unitary(p, q)
    note = f"{r} fixed elliptic factor(s) contribute no strata; minimum equals the r = 0 case"
    return MinCodim(base.codim, base.witness, base.closed_form, base.agrees, base.notes + (note,))
