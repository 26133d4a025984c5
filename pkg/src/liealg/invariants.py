"""Basic invariant polynomials of the classical reflection groups.

Each family carries its classical generating set: power sums for the
symmetric group (acting on one extra variable, restricted to the sum-zero
hyperplane where the action is effective), even power sums for the signed
permutation groups, and even power sums plus the full product for the
even-sign subgroup.  Algebraic independence is certified exactly through the
Jacobian criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .families import AlgebraFamily
from .polynomials import MultiPoly, poly_det
from .weyl import SignedPermutation


@dataclass(frozen=True)
class InvariantSuite:
    """An ordered generating set for one family's invariant ring."""

    family: AlgebraFamily
    rank: int  # subscript of the Weyl group type (Lie rank)
    nvars: int
    polys: tuple[MultiPoly, ...]
    degrees: tuple[int, ...]

    def degree_product(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out


def _power_sum(nvars: int, power: int) -> MultiPoly:
    out = MultiPoly.zero(nvars)
    for i in range(nvars):
        expo = tuple(power if k == i else 0 for k in range(nvars))
        out = out + MultiPoly.monomial(nvars, expo)
    return out


def build_suite(family: AlgebraFamily, n: int) -> InvariantSuite:
    """The classical basic invariants for Weyl type A_n, B_n/C_n, or D_n.

    ``n`` is the rank of the reflection group (the Lie rank); the A-family
    suite lives on n+1 variables, the others on n.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    if family is AlgebraFamily.SL:
        nvars = n + 1
        polys = tuple(_power_sum(nvars, k) for k in range(2, n + 2))
    elif family in (AlgebraFamily.SP, AlgebraFamily.SO_ODD):
        nvars = n
        polys = tuple(_power_sum(nvars, 2 * k) for k in range(1, n + 1))
    elif family is AlgebraFamily.SO_EVEN:
        if n < 2:
            raise ValueError("the even orthogonal family needs rank >= 2")
        nvars = n
        product = MultiPoly.monomial(nvars, (1,) * nvars)
        polys = tuple(_power_sum(nvars, 2 * k) for k in range(1, n)) + (product,)
    else:
        raise ValueError(f"unknown family {family}")
    degrees = tuple(p.degree() for p in polys)
    return InvariantSuite(family=family, rank=n, nvars=nvars, polys=polys, degrees=degrees)


def check_invariance(s: InvariantSuite, gens: Sequence[SignedPermutation]) -> bool:
    """True iff every polynomial is fixed by every generator.

    Fixing the generators fixes the whole group they generate, since the
    action is by algebra automorphisms.
    """
    for g in gens:
        if g.n != s.nvars:
            raise ValueError(
                f"generator acts on {g.n} coordinates, suite has {s.nvars} variables"
            )
    return all(p.transform(g.perm, g.signs) == p for p in s.polys for g in gens)


def _restrict_to_effective(s: InvariantSuite) -> tuple[MultiPoly, ...]:
    """For the A family, substitute x_{n+1} = -(x_1 + ... + x_n)."""
    if s.family is not AlgebraFamily.SL:
        return s.polys
    nv = s.nvars - 1
    replacement = MultiPoly.zero(nv)
    for i in range(nv):
        replacement = replacement - MultiPoly.variable(nv, i)
    return tuple(p.eliminate_last(replacement) for p in s.polys)


def jacobian(s: InvariantSuite) -> MultiPoly:
    """Exact determinant of the partial-derivative matrix of the suite.

    The A-family polynomials are restricted to the effective hyperplane
    first, so the matrix is square in every family.
    """
    polys = _restrict_to_effective(s)
    nv = polys[0].nvars
    if len(polys) != nv:
        raise ValueError("suite size must match the effective variable count")
    matrix = [[p.derivative(j) for j in range(nv)] for p in polys]
    return poly_det(matrix)


def jacobian_criterion(s: InvariantSuite) -> bool:
    """Algebraic independence: the Jacobian is not the zero polynomial."""
    return not jacobian(s).is_zero()


def jacobian_of(polys: Sequence[MultiPoly]) -> MultiPoly:
    """Jacobian determinant of an arbitrary square family of polynomials."""
    nv = polys[0].nvars
    if len(polys) != nv:
        raise ValueError("need as many polynomials as variables")
    matrix = [[p.derivative(j) for j in range(nv)] for p in polys]
    return poly_det(matrix)


# ---------------------------------------------------------------------------
# Closed forms for comparison and the exact constant between them.
# ---------------------------------------------------------------------------


def vandermonde_squares(nvars: int) -> MultiPoly:
    """Product over i < j of (x_j^2 - x_i^2)."""
    out = MultiPoly.constant(nvars, 1)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            xi2 = MultiPoly.monomial(nvars, tuple(2 if k == i else 0 for k in range(nvars)))
            xj2 = MultiPoly.monomial(nvars, tuple(2 if k == j else 0 for k in range(nvars)))
            out = out * (xj2 - xi2)
    return out


def vandermonde(nvars: int) -> MultiPoly:
    """Product over i < j of (x_j - x_i)."""
    out = MultiPoly.constant(nvars, 1)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            out = out * (MultiPoly.variable(nvars, j) - MultiPoly.variable(nvars, i))
    return out


def full_product(nvars: int) -> MultiPoly:
    """The monomial x_1 x_2 ... x_n."""
    return MultiPoly.monomial(nvars, (1,) * nvars)


def doubled_coordinate_forms(nvars: int) -> MultiPoly:
    """Product over i of (x_1 + ... + 2 x_i + ... + x_n)."""
    out = MultiPoly.constant(nvars, 1)
    total = MultiPoly.zero(nvars)
    for k in range(nvars):
        total = total + MultiPoly.variable(nvars, k)
    for i in range(nvars):
        out = out * (total + MultiPoly.variable(nvars, i))
    return out


def constant_ratio(p: MultiPoly, q: MultiPoly) -> Fraction | None:
    """The scalar c with p = c q, or None when no such constant exists."""
    if q.is_zero():
        return None
    expo, coeff = next(iter(q.terms.items()))
    c = p.terms.get(expo, Fraction(0)) / coeff
    return c if p == q.scale(c) else None
