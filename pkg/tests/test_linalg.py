"""Sparse exact elimination against a dense Fraction oracle."""

import random
from fractions import Fraction

from qwedge.linalg import Eliminator, SparseMatrix, kernel_basis, vec_add, vec_axpy, vec_scale
from qwedge.scalars import ONE, Scalar


def dense_rank(rows):
    """Plain Gaussian elimination over Fraction, used as the oracle."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def to_sparse(row):
    return {j: Scalar.from_int(v) for j, v in enumerate(row) if v}


def test_rank_matches_dense_oracle():
    rng = random.Random(42)
    for _ in range(40):
        nrows, ncols = rng.randrange(1, 7), rng.randrange(1, 7)
        rows = [[Fraction(rng.randrange(-3, 4)) for _ in range(ncols)] for _ in range(nrows)]
        elim = Eliminator()
        for row in rows:
            elim.add_row(to_sparse(row))
        assert elim.rank == dense_rank(rows)


def test_express_recovers_exact_coefficients():
    rng = random.Random(5)
    for _ in range(40):
        basis = []
        elim = Eliminator()
        for idx in range(4):
            row = {j: Scalar.from_int(rng.randrange(-4, 5)) for j in range(6)}
            row = {j: v for j, v in row.items() if v}
            if elim.add_row(dict(row), {idx: ONE}) is not None:
                basis.append((idx, row))
        coeffs = {idx: Scalar.from_int(rng.randrange(-3, 4)) for idx, _ in basis}
        combo = {}
        for idx, row in basis:
            vec_axpy(combo, -coeffs[idx], row)
        got = elim.express(combo)
        want = {idx: c for idx, c in coeffs.items() if c}
        assert got == want


def test_express_rejects_outside_vectors():
    elim = Eliminator()
    elim.add_row({0: ONE, 1: ONE}, {"a": ONE})
    assert elim.express({2: ONE}) is None
    assert elim.express({0: ONE, 1: ONE}) == {"a": ONE}


def test_dependent_row_reports_combination():
    elim = Eliminator()
    elim.add_row({0: ONE}, {"x": ONE})
    elim.add_row({1: ONE}, {"y": ONE})
    assert elim.add_row({0: ONE, 1: ONE}, {"z": ONE}) is None
    tag = elim.last_dependent_tag
    # the vanishing combination z - x - y
    assert tag is not None and set(tag) == {"x", "y", "z"}


def test_kernel_basis_annihilates_and_counts():
    rng = random.Random(11)
    for _ in range(30):
        nrows, ncols = rng.randrange(1, 6), rng.randrange(1, 6)
        rows = [[Fraction(rng.randrange(-2, 3)) for _ in range(ncols)] for _ in range(nrows)]
        images = [(c, {r: Scalar.from_int(rows[r][c]) for r in range(nrows) if rows[r][c]}) for c in range(ncols)]
        kernel = kernel_basis(images, ONE)
        cols = [[rows[r][c] for c in range(ncols)] for r in range(nrows)]
        assert len(kernel) == ncols - dense_rank(cols or [[]])
        for vec in kernel:
            out = {}
            for c, coeff in vec.items():
                for r in range(nrows):
                    if rows[r][c]:
                        vec_axpy(out, -coeff, {r: Scalar.from_int(rows[r][c])})
            assert out == {}


def test_sparse_matrix_matvec_and_transpose():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(1, 5)
        entries = [(r, c, Scalar.from_int(rng.randrange(-3, 4))) for r in range(n) for c in range(n)]
        mat = SparseMatrix.from_entries(entries)
        v = {c: Scalar.from_int(rng.randrange(-2, 3)) for c in range(n)}
        got = mat.matvec(v)
        for r in range(n):
            want = sum(
                (mat.get(r, c) or Scalar.from_int(0)) * v.get(c, Scalar.from_int(0))
                for c in range(n)
            )
            assert got.get(r, Scalar.from_int(0)) == want
        t = mat.transpose()
        for r, c, val in mat.entries():
            assert t.get(c, r) == val


def test_vector_helpers():
    a = {0: ONE, 1: Scalar.from_int(2)}
    b = {1: Scalar.from_int(-2), 2: ONE}
    s = vec_add(a, b)
    assert s == {0: ONE, 2: ONE}
    assert vec_scale(a, Scalar.from_int(0)) == {}
    target = dict(a)
    vec_axpy(target, ONE, a)
    assert target == {}
