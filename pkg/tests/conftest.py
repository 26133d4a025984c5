"""Shared fixtures: cached realizations, root data, and Weyl enumerations."""

from __future__ import annotations

import io
from contextlib import redirect_stdout

import liealg as L
from liealg import AlgebraFamily, AlgebraSpec

_REALIZATIONS: dict[tuple[AlgebraFamily, int], L.AlgebraRealization] = {}
_ROOT_DATA: dict[tuple[AlgebraFamily, int], L.RootDatum] = {}
_WEYL_GROUPS: dict[tuple[AlgebraFamily, int], frozenset[L.SignedPermutation]] = {}

ALL_FAMILIES = tuple(AlgebraFamily)


def spec_of(family: AlgebraFamily, n: int) -> AlgebraSpec:
    return AlgebraSpec(family, n)


def realization(family: AlgebraFamily, n: int) -> L.AlgebraRealization:
    key = (family, n)
    if key not in _REALIZATIONS:
        _REALIZATIONS[key] = L.build(AlgebraSpec(family, n))
    return _REALIZATIONS[key]


def root_datum(family: AlgebraFamily, n: int) -> L.RootDatum:
    key = (family, n)
    if key not in _ROOT_DATA:
        _ROOT_DATA[key] = L.cartan_decompose(realization(family, n))
    return _ROOT_DATA[key]


def weyl_group(family: AlgebraFamily, n: int, cap: int = 100_000):
    key = (family, n)
    if key not in _WEYL_GROUPS:
        gens = L.simple_reflections(root_datum(family, n))
        _WEYL_GROUPS[key] = L.generate(gens, cap=cap)
    return _WEYL_GROUPS[key]


def family_ranks(max_rank: int):
    """All (family, n) pairs with n up to max_rank, honoring family minimums."""
    out = []
    for family in ALL_FAMILIES:
        start = 2 if family in (AlgebraFamily.SL, AlgebraFamily.SO_EVEN) else 1
        for n in range(start, max_rank + 1):
            out.append((family, n))
    return out


def run_cli(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process, returning (exit code, captured stdout)."""
    from liealg.cli import main

    buffer = io.StringIO()
    with redirect_stdout(buffer):
        try:
            code = main(argv)
        except SystemExit as exc:  # argparse usage errors
            code = exc.code if isinstance(exc.code, int) else 2
    return code, buffer.getvalue()
