"""Vector representation matrices and the coproduct action on tensor slots."""

import random
from fractions import Fraction

from qwedge.roots import Algebra
from qwedge.scalars import ONE, Scalar, quantum_factorial
from qwedge.vectorrep import (
    Representation,
    check_defining_relations,
    fusion_parameters,
    tensor_apply,
    tensor_apply_power,
)

SMALL = [("a2even", 2), ("a2odd", 3), ("a2odd-dagger", 3), ("c1", 2)]


def test_defining_relations_minimal_ranks():
    for kind, n in SMALL:
        rep = Representation(Algebra(kind, n))
        failed = [name for name, ok in check_defining_relations(rep) if not ok]
        assert not failed, (kind, n, failed)


def test_generators_shift_weights_by_simple_roots():
    for kind, n in SMALL:
        alg = Algebra(kind, n)
        rep = Representation(alg)
        for i in range(n + 1):
            alpha = alg.simple_roots[i]
            for r, c, _ in rep.e[i].entries():
                got = tuple(a - b for a, b in zip(rep.weights[r], rep.weights[c]))
                assert got == alpha, (kind, i)
            for r, c, _ in rep.f[i].entries():
                got = tuple(b - a for a, b in zip(rep.weights[r], rep.weights[c]))
                assert got == alpha, (kind, i)


def test_t_matrix_is_the_eigenvalue_diagonal():
    rep = Representation(Algebra("c1", 2))
    for i in range(3):
        mat = rep.t_matrix(i)
        for j in rep.alg.J:
            assert mat.get(j, j) == rep.t[i][j]
        inv = rep.t_matrix(i, inverse=True)
        for j in rep.alg.J:
            assert mat.get(j, j) * inv.get(j, j) == ONE


def test_tensor_apply_matches_explicit_coproduct_on_two_slots():
    # f acts as t (x) f + f (x) 1, e as e (x) t^{-1} + 1 (x) e
    rng = random.Random(2026)
    for kind, n in SMALL:
        alg = Algebra(kind, n)
        rep = Representation(alg)
        for i in range(1, n + 1):
            for _ in range(6):
                a, b = rng.choice(alg.J), rng.choice(alg.J)
                state = {(a, b): ONE}

                want = {}
                for r, c, v in rep.f[i].entries():
                    if c == b:
                        lab = (a, r)
                        want[lab] = want.get(lab, Scalar.from_int(0)) + rep.t[i][a] * v
                    if c == a:
                        lab = (r, b)
                        want[lab] = want.get(lab, Scalar.from_int(0)) + v
                want = {l: v for l, v in want.items() if v}
                assert tensor_apply(rep, "f", i, state) == want, (kind, i, a, b)

                want = {}
                for r, c, v in rep.e[i].entries():
                    if c == a:
                        lab = (r, b)
                        want[lab] = want.get(lab, Scalar.from_int(0)) + v * rep.t_inv[i][b]
                    if c == b:
                        lab = (a, r)
                        want[lab] = want.get(lab, Scalar.from_int(0)) + v
                want = {l: v for l, v in want.items() if v}
                assert tensor_apply(rep, "e", i, state) == want, (kind, i, a, b)


def test_zero_color_action_uses_slot_parameters():
    rep = Representation(Algebra("c1", 2))
    zs = fusion_parameters(2)
    state = {(-1, 1): ONE}
    got = tensor_apply(rep, "e", 0, state)
    want = {}
    for r, c, v in rep.e[0].entries():
        if c == -1:
            want[(r, 1)] = zs[0] * v * rep.t_inv[0][1]
        if c == 1:
            want[(-1, r)] = zs[1] * v
    want = {l: v for l, v in want.items() if v}
    assert got == want


def test_fusion_parameters_are_alternating_q_powers():
    # slot j of k carries (-q)^(2j - k - 1)
    for k in range(1, 5):
        zs = fusion_parameters(k)
        assert len(zs) == k
        for j, z in enumerate(zs, start=1):
            assert z == Scalar.minus_q_power(2 * j - k - 1)


def test_divided_powers():
    rep = Representation(Algebra("a2odd-dagger", 3))
    state = {(1, 2): ONE}
    twice = tensor_apply(rep, "f", 1, tensor_apply(rep, "f", 1, state))
    divided = tensor_apply_power(rep, "f", 1, state, 2)
    fac = quantum_factorial(2, rep.alg.d[1])
    assert {l: v * fac for l, v in divided.items()} == twice
