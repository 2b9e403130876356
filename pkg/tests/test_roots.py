"""Root data: index sets, Cartan pairings, weights, dimension formulas."""

import math
from fractions import Fraction

import pytest

from qwedge.roots import KINDS, Algebra, dominant_check, weyl_dimension

RANKS = {"a2even": (2, 3), "a2odd": (3, 4), "a2odd-dagger": (3, 4), "c1": (2, 3)}


def all_algebras():
    return [Algebra(kind, n) for kind in KINDS for n in RANKS[kind]]


def test_rank_validation():
    with pytest.raises(ValueError):
        Algebra("a2odd", 2)
    with pytest.raises(ValueError):
        Algebra("c1", 1)
    with pytest.raises(ValueError):
        Algebra("b1", 2)


def test_index_set_and_order():
    alg = Algebra("a2even", 2)
    assert alg.J == (1, 2, 0, -2, -1)
    assert [alg.order_index[j] for j in alg.J] == [0, 1, 2, 3, 4]
    assert Algebra("c1", 2).J == (1, 2, -2, -1)
    # the order is total and strict
    for alg in all_algebras():
        for a in alg.J:
            assert not alg.precedes(a, a)
            for b in alg.J:
                if a != b:
                    assert alg.precedes(a, b) != alg.precedes(b, a)


def test_cartan_matrix_structure():
    for alg in all_algebras():
        n = alg.n
        for i in range(n + 1):
            assert alg.cartan_entry(i, i) == 2
            for j in range(n + 1):
                if i != j:
                    assert alg.cartan_entry(i, j) <= 0
                    assert (alg.cartan_entry(i, j) == 0) == (alg.cartan_entry(j, i) == 0)
                # d_i a_ij is the symmetric bilinear form, hence symmetric
                assert alg.d[i] * alg.cartan_entry(i, j) == alg.d[j] * alg.cartan_entry(j, i)


def test_marks_span_the_null_root():
    # sum_j a_j alpha_j pairs to zero with every coroot; same for comarks
    for alg in all_algebras():
        n = alg.n
        for i in range(n + 1):
            assert sum(alg.marks[j] * alg.cartan_entry(i, j) for j in range(n + 1)) == 0
            assert sum(alg.comarks[j] * alg.cartan_entry(j, i) for j in range(n + 1)) == 0


def test_weights_of_indices():
    alg = Algebra("c1", 3)
    assert alg.weight_of_index(2) == (0, 1, 0)
    assert alg.weight_of_index(-2) == (0, -1, 0)
    b = Algebra("a2even", 2)
    assert b.weight_of_index(0) == (0, 0)
    for alg in all_algebras():
        for j in alg.J:
            w = alg.weight_of_index(j)
            opposite = alg.weight_of_index(-j)
            assert tuple(-x for x in w) == opposite


def test_fundamental_and_conjugate_weights():
    alg = Algebra("a2odd-dagger", 4)
    assert alg.fundamental_weight(2) == (1, 1, 0, 0)
    assert alg.conjugate_weight() == (1, 1, 1, -1)
    assert dominant_check("D", 4, alg.conjugate_weight())


def test_weyl_dimensions_against_known_values():
    one = Fraction(1)
    zero = Fraction(0)
    known = [
        ("B", 2, (one, zero), 5),
        ("B", 2, (one, one), 10),
        ("B", 3, (one, zero, zero), 7),
        ("B", 3, (one, one, zero), 21),
        ("B", 3, (one, one, one), 35),
        ("C", 2, (one, zero), 4),
        ("C", 2, (one, one), 5),
        ("C", 3, (one, one, zero), 14),
        ("C", 3, (one, one, one), 14),
        ("D", 3, (one, zero, zero), 6),
        ("D", 3, (one, one, zero), 15),
        ("D", 4, (one, one, zero, zero), 28),
        ("D", 4, (one, one, one, zero), 56),
        ("D", 4, (one, one, one, one), 35),
        ("D", 4, (one, one, one, -one), 35),
    ]
    for classical, n, lam, dim in known:
        assert weyl_dimension(classical, n, lam) == dim, (classical, n, lam)


def test_wedge_dimensions():
    for alg in all_algebras():
        for k in range(1, alg.n + 1):
            want = math.comb(len(alg.J), k)
            if alg.kind == "c1":
                lower = math.comb(2 * alg.n, k - 2) if k >= 2 else 0
                want = math.comb(2 * alg.n, k) - lower
            assert alg.wedge_dimension(k) == want


def test_t_eigenvalues_exponentiate_the_pairing():
    for alg in all_algebras():
        for i in range(alg.n + 1):
            for j in alg.J:
                mu = alg.weight_of_index(j)
                pairing = alg.coroot_pairing(i, mu)
                want = (Fraction(3, 2)) ** (alg.d[i] * pairing)
                assert alg.t_eigenvalue(i, mu).eval_at(Fraction(3, 2)) == want
