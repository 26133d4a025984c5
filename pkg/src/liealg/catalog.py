"""Canonical matrix realizations of the classical families.

Each realization carries a labelled basis in a fixed deterministic order:
the diagonal Cartan elements first, then one vector per positive root
(sorted by root coordinates), then their images under the opposite-graph
antimorphism, which span the negative root spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .digraph import opposite_antimorphism
from .families import AlgebraFamily, AlgebraSpec
from .matrices import EdgeMatrix, SpanSolver, mat_bracket, sparse_rank

Weight = tuple[Fraction, ...]


class InternalConsistencyError(RuntimeError):
    """A structural fact that must hold by construction failed to hold."""


def format_weight(w: Sequence[Fraction]) -> str:
    """Render a functional as a combination of the coordinate symbols a_i."""
    parts: list[str] = []
    for i, c in enumerate(w, start=1):
        if not c:
            continue
        if c == 1:
            term = f"a{i}"
        elif c == -1:
            term = f"-a{i}"
        else:
            term = f"{c}a{i}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class AlgebraRealization:
    """A concrete algebra: labelled basis, Cartan choice, defining form."""

    spec: AlgebraSpec
    basis: tuple[tuple[str, EdgeMatrix], ...]
    cartan_indices: tuple[int, ...]
    structure_form: EdgeMatrix | None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def cartan_basis(self) -> tuple[EdgeMatrix, ...]:
        return tuple(self.basis[i][1] for i in self.cartan_indices)

    def basis_matrices(self) -> tuple[EdgeMatrix, ...]:
        return tuple(mat for _, mat in self.basis)

    def diag_coords(self, h: EdgeMatrix) -> tuple[Fraction, ...]:
        """Coordinates x_1..x_n of a Cartan element; validates its shape.

        The Cartan subalgebras are diagonal: diag(x) for sl (sum zero),
        diag(x, -x) for sp and even so, diag(x, -x, 0) for odd so.
        """
        n = self.spec.rank
        if h.dim != self.spec.realization_dim:
            raise ValueError("dimension mismatch with realization")
        sparse = h.sparse()
        if any(r != c for (r, c) in sparse):
            raise ValueError("not a Cartan element: off-diagonal entries present")
        diag = h.diagonal()
        if self.spec.family is AlgebraFamily.SL:
            if sum(diag):
                raise ValueError("not a Cartan element: nonzero trace")
            return tuple(diag)
        coords = diag[:n]
        if any(diag[n + i] != -coords[i] for i in range(n)):
            raise ValueError("not a Cartan element: blocks are not opposite")
        if self.spec.family is AlgebraFamily.SO_ODD and diag[2 * n]:
            raise ValueError("not a Cartan element: last diagonal entry nonzero")
        return tuple(coords)


def _fraction_tuple(values: Sequence[int]) -> Weight:
    return tuple(Fraction(v) for v in values)


def _positive_root_table(spec: AlgebraSpec) -> list[tuple[Weight, EdgeMatrix]]:
    """Positive roots with their canonical edge-basis vectors, sorted."""
    n = spec.rank
    d = spec.realization_dim
    E = lambda i, j: EdgeMatrix.unit(d, i, j)
    table: list[tuple[Weight, EdgeMatrix]] = []

    def coords(pairs: dict[int, int]) -> Weight:
        base = [0] * n
        for idx, val in pairs.items():
            base[idx - 1] = val
        return _fraction_tuple(base)

    if spec.family is AlgebraFamily.SL:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                table.append((coords({i: 1, j: -1}), E(i, j)))
    else:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                table.append((coords({i: 1, j: -1}), E(i, j) - E(n + j, n + i)))
        if spec.family is AlgebraFamily.SP:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    table.append((coords({i: 1, j: 1}), E(i, n + j) + E(j, n + i)))
            for i in range(1, n + 1):
                table.append((coords({i: 2}), E(i, n + i)))
        else:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    table.append((coords({i: 1, j: 1}), E(i, n + j) - E(j, n + i)))
            if spec.family is AlgebraFamily.SO_ODD:
                last = 2 * n + 1
                for i in range(1, n + 1):
                    table.append(
                        (coords({i: 1}), E(last, n + i) - E(i, last))
                    )
    table.sort(key=lambda item: item[0], reverse=True)
    return table


def structure_form(spec: AlgebraSpec) -> EdgeMatrix | None:
    """The defining bilinear form S (none for sl)."""
    n = spec.rank
    if spec.family is AlgebraFamily.SL:
        return None
    d = spec.realization_dim
    rows = [[0] * d for _ in range(d)]
    lower_sign = -1 if spec.family is AlgebraFamily.SP else 1
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = lower_sign
    if spec.family is AlgebraFamily.SO_ODD:
        rows[2 * n][2 * n] = 1
    return EdgeMatrix.from_rows(rows)


def build(spec: AlgebraSpec) -> AlgebraRealization:
    """Construct the canonical basis and Cartan subalgebra for a family."""
    n = spec.rank
    d = spec.realization_dim
    E = lambda i, j: EdgeMatrix.unit(d, i, j)

    basis: list[tuple[str, EdgeMatrix]] = []
    if spec.family is AlgebraFamily.SL:
        for i in range(1, n):
            basis.append((f"h{i}", E(i, i) - E(i + 1, i + 1)))
    else:
        for i in range(1, n + 1):
            basis.append((f"h{i}", E(i, i) - E(n + i, n + i)))
    cartan_indices = tuple(range(len(basis)))

    positives = _positive_root_table(spec)
    for root, mat in positives:
        basis.append((f"x({format_weight(root)})", mat))
    for root, mat in positives:
        neg = tuple(-c for c in root)
        basis.append(
            (f"x({format_weight(neg)})", opposite_antimorphism(mat, spec.family))
        )

    realization = AlgebraRealization(
        spec=spec,
        basis=tuple(basis),
        cartan_indices=cartan_indices,
        structure_form=structure_form(spec),
    )

    if realization.dimension != spec.dimension:
        raise InternalConsistencyError(
            f"{spec}: built {realization.dimension} basis elements, "
            f"expected {spec.dimension}"
        )
    for label, mat in realization.basis:
        if not check_membership(mat, spec):
            raise InternalConsistencyError(f"{spec}: basis element {label} not a member")
    rank = sparse_rank(mat.sparse() for _, mat in realization.basis)
    if rank != spec.dimension:
        raise InternalConsistencyError(
            f"{spec}: basis has rank {rank}, expected {spec.dimension}"
        )
    return realization


def check_membership(x: EdgeMatrix, spec: AlgebraSpec) -> bool:
    """Exact test of the defining relation: trace 0, or X^t S + S X = 0."""
    if x.dim != spec.realization_dim:
        raise ValueError(
            f"dimension mismatch: matrix has dim {x.dim}, "
            f"{spec} is realized in dim {spec.realization_dim}"
        )
    if spec.family is AlgebraFamily.SL:
        return x.trace() == 0
    S = structure_form(spec)
    assert S is not None
    return (x.transpose() @ S + S @ x).is_zero()


def span_solver(r: AlgebraRealization) -> SpanSolver:
    return SpanSolver(r.basis_matrices())


def structure_constants(
    r: AlgebraRealization,
) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    """c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k, solved exactly."""
    mats = r.basis_matrices()
    solver = span_solver(r)
    dim = len(mats)
    out = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i == j:
                row.append((Fraction(0),) * dim)
                continue
            bracket = mat_bracket(mats[i], mats[j])
            try:
                coeffs = solver.expand(bracket)
            except ValueError as exc:
                raise InternalConsistencyError(
                    f"bracket of basis elements {i},{j} falls outside the span"
                ) from exc
            row.append(tuple(coeffs))
        out.append(tuple(row))
    return tuple(out)


def ad_matrix(r: AlgebraRealization, x: EdgeMatrix, solver: SpanSolver | None = None):
    """Matrix of ad(x) = [x, .] in the canonical basis (columns = images)."""
    if solver is None:
        solver = span_solver(r)
    mats = r.basis_matrices()
    columns = []
    for b in mats:
        try:
            columns.append(solver.expand(mat_bracket(x, b)))
        except ValueError as exc:
            raise InternalConsistencyError(
                "adjoint image falls outside the span of the basis"
            ) from exc
    dim = len(mats)
    return [[columns[j][i] for j in range(dim)] for i in range(dim)]
