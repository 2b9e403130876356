"""The vector representation and the fused action on its tensor powers.

Basis vectors of V are labeled by the index set J of the algebra; matrices
are stored column-major, so E(i, j) contributes v_j -> v_i. Tensor states
are dicts mapping k-tuples of indices to coefficients. The level-0 generator
pair (e_0, f_0) acts on the j-th tensor slot through the slot parameter
z_j = (-q)**(2j - k - 1); consecutive slots keep the ratio q**2, and a single
slot gets z = 1 so the one-fold "tensor power" is the representation itself.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple

from .linalg import SparseMatrix, Vec
from .roots import Algebra, Weight
from .scalars import ONE, Scalar, quantum_factorial, quantum_integer


class Representation:
    """Vector representation: generator matrices plus weight bookkeeping."""

    __slots__ = ("alg", "e", "f", "t", "t_inv", "weights")

    def __init__(self, alg: Algebra):
        self.alg = alg
        n = alg.n
        self.weights: Dict[int, Weight] = {j: alg.weight_of_index(j) for j in alg.J}

        e: Dict[int, SparseMatrix] = {}
        if alg.kind == "a2odd":
            e[0] = SparseMatrix.from_entries([(-1, 2, ONE), (-2, 1, ONE)])
        else:
            e[0] = SparseMatrix.from_entries([(-1, 1, ONE)])
        for i in range(1, n):
            e[i] = SparseMatrix.from_entries(
                [(i, i + 1, ONE), (-i - 1, -i, ONE)]
            )
        if alg.kind == "a2even":
            two_n = quantum_integer(2, alg.d[n])
            e[n] = SparseMatrix.from_entries([(n, 0, two_n), (0, -n, ONE)])
        elif alg.kind == "a2odd-dagger":
            e[n] = SparseMatrix.from_entries(
                [(n - 1, -n, ONE), (n, -n + 1, ONE)]
            )
        else:
            e[n] = SparseMatrix.from_entries([(n, -n, ONE)])

        f = {i: m.transpose() for i, m in e.items()}
        if alg.kind == "a2even":
            two_n = quantum_integer(2, alg.d[n])
            f[n] = SparseMatrix.from_entries([(0, n, ONE), (-n, 0, two_n)])

        self.e = e
        self.f = f
        self.t = {
            i: {j: alg.t_eigenvalue(i, self.weights[j]) for j in alg.J}
            for i in range(n + 1)
        }
        self.t_inv = {
            i: {j: v ** -1 for j, v in row.items()} for i, row in self.t.items()
        }

    def t_matrix(self, i: int, inverse: bool = False) -> SparseMatrix:
        row = self.t_inv[i] if inverse else self.t[i]
        return SparseMatrix({j: {j: v} for j, v in row.items()})

    def tensor_weight(self, label: Tuple[int, ...]) -> Weight:
        out = [0] * self.alg.n
        for j in label:
            w = self.weights[j]
            for m in range(self.alg.n):
                out[m] += w[m]
        return tuple(out)


def build_rep(alg: Algebra) -> Representation:
    return Representation(alg)


def fusion_parameters(k: int) -> Tuple[Scalar, ...]:
    return tuple(Scalar.minus_q_power(2 * j - k - 1) for j in range(1, k + 1))


def _acc(out: Vec, label, v) -> None:
    cur = out.get(label)
    cur = v if cur is None else cur + v
    if cur:
        out[label] = cur
    else:
        out.pop(label, None)


def tensor_apply(
    rep: Representation,
    op: str,
    i: int,
    state: Vec,
    zs: Optional[Tuple] = None,
    z_invs: Optional[Tuple] = None,
) -> Vec:
    """Apply generator (op, i) to a tensor state in V**k.

    `zs`/`z_invs` override the slot parameters for e_0/f_0; by default the
    standard fusion values are used. Coefficients may be Scalar or any type
    closed under multiplication by Scalar (Laurent polynomials in z for the
    two-slot intertwiner checks).
    """
    if not state:
        return {}
    k = len(next(iter(state)))
    if i == 0:
        if zs is None:
            zs = fusion_parameters(k)
        if z_invs is None and op == "f":
            z_invs = tuple(z ** -1 for z in zs)
    out: Vec = {}
    if op == "t":
        tau = rep.t[i]
        for label, c in state.items():
            fac = c
            for a in label:
                fac = fac * tau[a]
            _acc(out, label, fac)
        return out
    mat = (rep.e if op == "e" else rep.f)[i]
    tau = rep.t[i] if op == "f" else rep.t_inv[i]
    for label, c in state.items():
        if op == "e":
            # slot j, then t_i^{-1} on every later slot
            fac = c
            for j in range(k - 1, -1, -1):
                col = mat.cols.get(label[j])
                if col:
                    here = fac * zs[j] if i == 0 else fac
                    for b, entry in col.items():
                        _acc(out, label[:j] + (b,) + label[j + 1 :], here * entry)
                fac = fac * tau[label[j]]
        else:
            # t_i on every earlier slot, then slot j
            fac = c
            for j in range(k):
                col = mat.cols.get(label[j])
                if col:
                    here = fac * z_invs[j] if i == 0 else fac
                    for b, entry in col.items():
                        _acc(out, label[:j] + (b,) + label[j + 1 :], here * entry)
                fac = fac * tau[label[j]]
    return out


def tensor_apply_power(
    rep: Representation, op: str, i: int, state: Vec, m: int, divided: bool = True
) -> Vec:
    out = state
    for _ in range(m):
        out = tensor_apply(rep, op, i, out)
    if divided and m >= 2 and out:
        inv = quantum_factorial(m, rep.alg.d[i]) ** -1
        out = {l: c * inv for l, c in out.items()}
    return out


def check_defining_relations(rep: Representation) -> List[Tuple[str, bool]]:
    """Verify the algebra relations hold for the generator matrices."""
    alg = rep.alg
    n = alg.n
    checks: List[Tuple[str, bool]] = []

    ok = True
    for i in range(n + 1):
        tau = rep.t[i]
        for j in range(n + 1):
            shift = Scalar.s_power(alg.d[i] * alg.cartan_entry(i, j))
            for a, b, v in rep.e[j].entries():
                if tau[a] * v * rep.t_inv[i][b] != shift * v:
                    ok = False
            for a, b, v in rep.f[j].entries():
                if tau[a] * v * rep.t_inv[i][b] != (shift ** -1) * v:
                    ok = False
    checks.append(("torus-conjugation", ok))

    ok = True
    for i in range(n + 1):
        for j in range(n + 1):
            comm = rep.e[i] @ rep.f[j] - rep.f[j] @ rep.e[i]
            if i == j:
                expected = SparseMatrix(
                    {
                        a: {a: quantum_integer(alg.coroot_pairing(i, rep.weights[a]), alg.d[i])}
                        for a in alg.J
                    }
                )
                comm = comm - expected
            if not comm.is_zero():
                ok = False
    checks.append(("ef-commutator", ok))

    ok = True
    for mats in (rep.e, rep.f):
        for i in range(n + 1):
            for j in range(n + 1):
                if i == j:
                    continue
                b = 1 - alg.cartan_entry(i, j)
                powers = [
                    _divided_matrix_power(mats[i], m, alg.d[i], alg.J)
                    for m in range(b + 1)
                ]
                total = SparseMatrix({})
                for m in range(b + 1):
                    term = powers[m] @ mats[j] @ powers[b - m]
                    total = total + (term if m % 2 == 0 else term.scale_entries(-1))
                if not total.is_zero():
                    ok = False
    checks.append(("serre", ok))

    ok = True
    for a in alg.J:
        prod = ONE
        for i in range(n + 1):
            prod = prod * rep.t[i][a] ** alg.marks[i]
        if not prod.is_one():
            ok = False
    checks.append(("torus-center", ok))
    return checks


def _divided_matrix_power(
    mat: SparseMatrix, m: int, d: int, labels: Iterable
) -> SparseMatrix:
    if m == 0:
        return SparseMatrix({a: {a: ONE} for a in labels})
    out = mat
    for _ in range(m - 1):
        out = out @ mat
    if m >= 2:
        inv = quantum_factorial(m, d) ** -1
        out = out.scale_entries(inv)
    return out
