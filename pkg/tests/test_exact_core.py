"""Scalar, matrix, and linear-kernel behavior, all exact."""

import random
from fractions import Fraction

import pytest

from liealg.exact import format_rational, parse_rational
from liealg.matrices import (
    EdgeMatrix,
    SpanSolver,
    determinant,
    dot,
    is_positive_definite,
    mat_bracket,
    mat_mul,
    mat_trace,
    solve_linear,
    sparse_rank,
)


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-30, 30), rng.randint(1, 12))


class TestScalars:
    def test_field_axioms_on_sampled_triples(self):
        rng = random.Random(20240517)
        for _ in range(200):
            a, b, c = (random_fraction(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + 0 == a and a * 1 == a
            assert a + (-a) == 0
            if a:
                assert a * (1 / a) == 1

    def test_lowest_terms_and_positive_denominator(self):
        x = Fraction(6, -8)
        assert x.numerator == -3 and x.denominator == 4

    def test_parse_and_format(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-7") == Fraction(-7)
        assert format_rational(Fraction(-1, 2)) == "-1/2"
        assert format_rational(Fraction(5)) == "5"
        with pytest.raises(ValueError):
            parse_rational("0.5x")
        with pytest.raises(ValueError):
            parse_rational("1/0")


def E(dim, i, j):
    return EdgeMatrix.unit(dim, i, j)


class TestMatrixProduct:
    def test_edge_composition(self):
        assert mat_mul(E(2, 1, 2), E(2, 2, 1)) == E(2, 1, 1)

    def test_edge_mismatch_gives_zero(self):
        assert mat_mul(E(2, 1, 2), E(2, 1, 2)).is_zero()

    def test_identity(self):
        a = E(3, 2, 3) + E(3, 1, 1).scale(Fraction(5, 7))
        assert mat_mul(EdgeMatrix.identity(3), a) == a
        assert mat_mul(a, EdgeMatrix.identity(3)) == a

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError):
            mat_mul(E(2, 1, 1), E(3, 1, 1))
        with pytest.raises(ValueError):
            mat_bracket(E(2, 1, 1), E(3, 1, 1))

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            EdgeMatrix.from_rows([[0.5, 0], [0, 0]])


class TestBracket:
    def test_elementary_identity(self):
        assert mat_bracket(E(2, 1, 2), E(2, 2, 1)) == E(2, 1, 1) - E(2, 2, 2)

    def test_antisymmetry_on_self(self):
        a = E(3, 1, 2) + E(3, 3, 1)
        assert mat_bracket(a, a).is_zero()

    def test_sl2_relation(self):
        h = E(2, 1, 1) - E(2, 2, 2)
        e = E(2, 1, 2)
        assert mat_bracket(h, e) == e.scale(2)

    def test_jacobi_identity_all_edge_triples(self):
        # [x,[y,z]] = [[x,y],z] + [y,[x,z]] over the full edge basis, each dim.
        for dim in range(2, 7):
            edges = [E(dim, i, j) for i in range(1, dim + 1) for j in range(1, dim + 1)]
            pair = {}
            for a in range(len(edges)):
                for b in range(len(edges)):
                    pair[a, b] = mat_bracket(edges[a], edges[b])
            for y in range(len(edges)):
                for z in range(len(edges)):
                    inner = pair[y, z]
                    for x in range(len(edges)):
                        left = mat_bracket(edges[x], inner)
                        right = mat_bracket(pair[x, y], edges[z]) + mat_bracket(
                            edges[y], pair[x, z]
                        )
                        assert left == right

    def test_bracket_is_traceless_on_edge_pairs(self):
        for dim in range(2, 7):
            edges = [E(dim, i, j) for i in range(1, dim + 1) for j in range(1, dim + 1)]
            assert all(
                mat_trace(mat_bracket(a, b)) == 0 for a in edges for b in edges
            )


class TestTrace:
    def test_diagonal_difference(self):
        assert mat_trace(E(2, 1, 1) - E(2, 2, 2)) == 0

    def test_identity_trace(self):
        for n in (1, 4, 9):
            assert mat_trace(EdgeMatrix.identity(n)) == n

    def test_off_diagonal_edge(self):
        assert mat_trace(E(2, 1, 2)) == 0


class TestLinearKernel:
    def test_sparse_rank(self):
        rows = [
            {0: Fraction(1), 1: Fraction(2)},
            {0: Fraction(2), 1: Fraction(4)},
            {2: Fraction(1)},
        ]
        assert sparse_rank(rows) == 2

    def test_span_solver_expand(self):
        basis = [E(2, 1, 1), E(2, 1, 2), E(2, 2, 2)]
        solver = SpanSolver(basis)
        target = E(2, 1, 1).scale(3) - E(2, 1, 2).scale(Fraction(1, 2))
        assert solver.expand(target) == [Fraction(3), Fraction(-1, 2), Fraction(0)]
        with pytest.raises(ValueError):
            solver.expand(E(2, 2, 1))

    def test_solve_linear(self):
        sol = solve_linear([[2, 1], [1, -1]], [5, 1])
        assert sol == [Fraction(2), Fraction(1)]
        with pytest.raises(ValueError):
            solve_linear([[1, 1], [2, 2]], [1, 3])

    def test_determinant(self):
        assert determinant([[1, 2], [3, 4]]) == -2
        assert determinant([[Fraction(1, 2), 0], [7, Fraction(2)]]) == 1
        assert determinant([[1, 2], [2, 4]]) == 0

    def test_positive_definite(self):
        assert is_positive_definite([[2, -1], [-1, 2]])
        assert not is_positive_definite([[1, 2], [2, 1]])
        assert not is_positive_definite([[0]])

    def test_dot(self):
        assert dot([1, 2], [Fraction(1, 2), 3]) == Fraction(13, 2)
        with pytest.raises(ValueError):
            dot([1], [1, 2])
