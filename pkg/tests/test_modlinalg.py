"""Howell/HNF/SNF backends checked against brute-force span enumeration."""

import random
from itertools import product

import pytest

from qci import modlinalg as ml


def brute_span(rows, n, width):
    """Every Z/n combination of the rows, the slow way."""
    seen = {tuple([0] * width)}
    frontier = [tuple([0] * width)]
    while frontier:
        v = frontier.pop()
        for r in rows:
            w = tuple((a + b) % n for a, b in zip(v, r))
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def test_xgcd():
    for a in range(-12, 13):
        for b in range(-12, 13):
            g, x, y = ml.xgcd(a, b)
            assert x * a + y * b == g
            assert g >= 0


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8, 12])
def test_howell_spans_match_bruteforce(n):
    rng = random.Random(99 + n)
    for _ in range(12):
        width = rng.randrange(1, 4)
        rows = [[rng.randrange(n) for _ in range(width)]
                for _ in range(rng.randrange(1, 4))]
        basis = ml.howell(rows, n, width)
        assert brute_span(rows, n, width) == brute_span(basis or [[0] * width], n, width)
        # membership agrees with the brute span
        span = brute_span(rows, n, width)
        for v in product(range(n), repeat=width):
            assert ml.howell_member(basis, list(v), n) == (v in span)


@pytest.mark.parametrize("n", [4, 6])
def test_howell_is_canonical(n):
    rng = random.Random(5)
    for _ in range(10):
        width = 3
        rows = [[rng.randrange(n) for _ in range(width)] for _ in range(3)]
        basis = ml.howell(rows, n, width)
        # regenerate the span from shuffled/unit-scaled generators
        gens = [list(r) for r in rows] + [list(r) for r in basis]
        rng.shuffle(gens)
        assert ml.howell(gens, n, width) == basis


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_kernel_mod_exact(n):
    rng = random.Random(7 + n)
    for _ in range(10):
        nrows, ncols = rng.randrange(1, 4), rng.randrange(1, 4)
        mat = [[rng.randrange(n) for _ in range(ncols)] for _ in range(nrows)]
        kern = ml.kernel_mod(mat, ncols, n)
        brute = {v for v in product(range(n), repeat=ncols)
                 if all(sum(r[c] * v[c] for c in range(ncols)) % n == 0
                        for r in mat)}
        assert brute_span(kern or [[0] * ncols], n, ncols) == brute


def test_hnf_and_solve():
    rows = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    basis = ml.hnf(rows, 3)
    # every original row is in the lattice of the basis
    for r in rows:
        coeffs = ml.solve_in_hnf(basis, r)
        recon = [0, 0, 0]
        for q, b in zip(coeffs, basis):
            recon = [x + q * y for x, y in zip(recon, b)]
        assert recon == r
    with pytest.raises(ValueError):
        ml.solve_in_hnf(basis, [1, 0, 0])


def test_kernel_int():
    mat = [[1, 2, 3], [2, 4, 6]]
    kern = ml.kernel_int(mat, 3)
    assert kern
    for v in kern:
        assert all(sum(r[c] * v[c] for c in range(3)) == 0 for r in mat)
    # kernel lattice has rank 2 here
    assert len(ml.hnf(kern, 3)) == 2


def test_snf_diagonal_divisibility():
    rng = random.Random(3)
    for _ in range(15):
        rows = [[rng.randrange(-6, 7) for _ in range(3)] for _ in range(3)]
        diag = ml.snf_diagonal(rows, 3)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
    assert ml.snf_diagonal([[2, 0], [0, 3]], 2) == [1, 6]


def test_quotient_invariant_factors():
    # Z_4^2 / <(2,0)> = Z_2 x Z_4
    assert ml.quotient_invariant_factors(
        [[1, 0], [0, 1]], [[2, 0]], 4, 2) == [2, 4]
    # Z_6 / Z_6 is trivial
    assert ml.quotient_invariant_factors([[1]], [[1]], 6, 1) == []
    # <2> / <4> inside Z_8 is Z_2
    assert ml.quotient_invariant_factors([[2]], [[4]], 8, 1) == [2]


def test_quotient_over_int():
    # Z^2 / <(0,2)> = Z + Z_2
    free, tors = ml.quotient_over_int([[1, 0], [0, 1]], [[0, 2]], 2)
    assert (free, tors) == (1, [2])
