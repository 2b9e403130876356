"""Wedge quotients V^k = V**k / sum_i V..W..V and their verification.

W is the q-analogue of the symmetric square sitting inside V (x) V: the image
of the two-slot intertwiner at z = q**2, equivalently its kernel at q**-2.
The quotient is presented on the monomial basis of V**k; relations are
eliminated per classical weight block, with pivot columns chosen to be the
most "disordered" tensor labels (weak descents first, then position order),
so that strictly increasing index tuples survive as the normal basis.
Everything is exact over Q(s).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .linalg import Eliminator, SparseMatrix, Vec, kernel_basis
from .roots import Algebra, Weight, weyl_dimension
from .scalars import ONE, Scalar, ZERO
from .vectorrep import Representation, fusion_parameters, tensor_apply

# ---------------------------------------------------------------------------
# relation generators on V (x) V


def relation_generators(rep: Representation) -> List[Vec]:
    """Spanning vectors of W, one list entry per generator."""
    alg = rep.alg
    n = alg.n
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)
    gens: List[Vec] = []
    for i in alg.J:
        if i != 0:
            gens.append({(i, i): ONE})
    for i in alg.J:
        for j in alg.J:
            if i != j and i != -j and alg.precedes(j, i):
                gens.append({(i, j): ONE, (j, i): q1})
    for i in range(1, n):
        gens.append(
            {
                (-i, i): ONE,
                (i, -i): q2,
                (i + 1, -i - 1): q1,
                (-i - 1, i + 1): q1,
            }
        )
    if alg.kind in ("a2even", "a2odd-dagger", "c1"):
        gens.append({(-1, 1): ONE, (1, -1): ONE})
    if alg.kind in ("a2even", "a2odd", "c1"):
        pair: Vec = {(-n, n): ONE, (n, -n): q2}
        if alg.kind == "a2even":
            pair[(0, 0)] = Scalar.s_power(1)
        gens.append(pair)
    return gens


# ---------------------------------------------------------------------------
# the quotient spaces


def label_key_fn(alg: Algebra) -> Callable:
    idx = alg.order_index

    def key(label: Tuple[int, ...]):
        pos = tuple(idx[a] for a in label)
        descents = sum(1 for m in range(len(pos) - 1) if pos[m] >= pos[m + 1])
        return (-descents, pos)

    return key


class WedgeSpace:
    """Quotient of V**k by the embedded relation spaces, with normal forms."""

    def __init__(self, rep: Representation, k: int):
        alg = rep.alg
        if not 1 <= k <= alg.n:
            raise ValueError(f"wedge degree must lie in 1..{alg.n}, got {k}")
        self.rep = rep
        self.alg = alg
        self.k = k
        self.key = label_key_fn(alg)
        self.zs = fusion_parameters(k)
        self.z_invs = tuple(z ** -1 for z in self.zs)
        self.labels = list(itertools.product(alg.J, repeat=k))

        self.blocks: Dict[Weight, Eliminator] = {}
        gens = relation_generators(rep)
        for pos in range(k - 1):
            for prefix in itertools.product(alg.J, repeat=pos):
                for suffix in itertools.product(alg.J, repeat=k - 2 - pos):
                    for g in gens:
                        row = {
                            prefix + pair + suffix: c for pair, c in g.items()
                        }
                        wt = rep.tensor_weight(next(iter(row)))
                        elim = self.blocks.get(wt)
                        if elim is None:
                            elim = self.blocks[wt] = Eliminator(key=self.key)
                        elim.add_row(row)

        pivots = set()
        for elim in self.blocks.values():
            pivots.update(elim.pivots)
        self.basis: Tuple[Tuple[int, ...], ...] = tuple(
            sorted((l for l in self.labels if l not in pivots), key=self.key)
        )
        self.basis_index = {l: m for m, l in enumerate(self.basis)}
        self._matrices: Dict[Tuple[str, int], SparseMatrix] = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def normal_form(self, state: Vec) -> Vec:
        """Reduce a tensor state modulo the relations; the result is
        supported on the normal basis labels."""
        parts: Dict[Weight, Vec] = {}
        for label, c in state.items():
            parts.setdefault(self.rep.tensor_weight(label), {})[label] = c
        out: Vec = {}
        for wt, part in parts.items():
            elim = self.blocks.get(wt)
            reduced = elim.reduce(part)[0] if elim is not None else part
            for label, c in reduced.items():
                cur = out.get(label)
                cur = c if cur is None else cur + c
                if cur:
                    out[label] = cur
                else:
                    out.pop(label, None)
        return out

    def apply(self, op: str, i: int, coords: Vec) -> Vec:
        """Apply a generator to a vector given in normal-basis coordinates."""
        return self.action_matrix(op, i).matvec(coords)

    def action_matrix(self, op: str, i: int) -> SparseMatrix:
        got = self._matrices.get((op, i))
        if got is not None:
            return got
        cols = {}
        for b in self.basis:
            image = tensor_apply(
                self.rep, op, i, {b: ONE}, zs=self.zs, z_invs=self.z_invs
            )
            image = self.normal_form(image)
            if image:
                cols[b] = image
        mat = SparseMatrix(cols)
        self._matrices[(op, i)] = mat
        return mat

    def basis_weights(self) -> Dict[Tuple[int, ...], Weight]:
        return {b: self.rep.tensor_weight(b) for b in self.basis}


def build_wedge(rep: Representation, k: int) -> WedgeSpace:
    return WedgeSpace(rep, k)


# ---------------------------------------------------------------------------
# highest weight analysis


def highest_weight_vectors(wedge: WedgeSpace) -> Dict[Weight, List[Vec]]:
    """Joint kernel of e_1..e_n on the quotient, per classical weight."""
    by_weight: Dict[Weight, List] = {}
    for b in wedge.basis:
        by_weight.setdefault(wedge.rep.tensor_weight(b), []).append(b)
    mats = [wedge.action_matrix("e", i) for i in range(1, wedge.alg.n + 1)]
    out: Dict[Weight, List[Vec]] = {}
    for wt, labels in by_weight.items():
        images = []
        for b in labels:
            stacked: Vec = {}
            for m, mat in enumerate(mats):
                col = mat.cols.get(b)
                if col:
                    for r, v in col.items():
                        stacked[(m, r)] = v
            images.append((b, stacked))
        kern = kernel_basis(images, ONE)
        if kern:
            out[wt] = kern
    return out


def predicted_highest_states(alg: Algebra, k: int) -> List[Tuple[Weight, Vec]]:
    """The claimed highest weight vectors, as tensor states."""
    out: List[Tuple[Weight, Vec]] = []
    lead = tuple(range(1, k + 1))
    out.append((alg.fundamental_weight(k), {lead: ONE}))
    if alg.kind == "a2odd-dagger" and k == alg.n:
        label = tuple(range(1, alg.n)) + (-alg.n,)
        out.append((alg.conjugate_weight(), {label: ONE}))
    if alg.kind == "a2odd":
        for l in range(1, k // 2 + 1):
            head = tuple(range(1, k - 2 * l + 1))
            state: Vec = {}
            for combo in itertools.combinations(range(k - 2 * l + 1, alg.n + 1), l):
                label = head + combo + tuple(-i for i in reversed(combo))
                state[label] = Scalar.minus_q_power(sum(combo))
            out.append((alg.fundamental_weight(k - 2 * l), state))
    return out


# ---------------------------------------------------------------------------
# verification suites


def relation_space_checks(rep: Representation) -> List[Tuple[str, bool]]:
    """W must be the image of R(q**2), the kernel of R(q**-2), a submodule,
    and degenerate to the symmetric square at q = 1."""
    from .rmatrix import build_rmatrix, evaluate_matrix

    alg = rep.alg
    gens = relation_generators(rep)
    rmat = build_rmatrix(rep)
    at_sq = evaluate_matrix(rmat, Scalar.q_power(2))
    at_inv = evaluate_matrix(rmat, Scalar.q_power(-2))
    results: List[Tuple[str, bool]] = []

    elim_img = Eliminator()
    for c, col in sorted(at_sq.cols.items()):
        elim_img.add_row(dict(col))
    rank_img = elim_img.rank
    ok = all(elim_img.add_row(dict(g)) is None for g in gens)
    results.append(("generators-inside-image", ok))

    elim_gen = Eliminator()
    for g in gens:
        elim_gen.add_row(dict(g))
    results.append(("generators-independent", elim_gen.rank == len(gens)))
    results.append(("generators-span-image", elim_gen.rank == rank_img))

    expected = weyl_dimension(
        alg.classical, alg.n, (Fraction(2),) + (Fraction(0),) * (alg.n - 1)
    )
    if alg.kind != "a2odd":
        expected += 1
    results.append(("relation-dimension", rank_img == expected))

    ok = all(not at_inv.matvec(g) for g in gens)
    results.append(("killed-at-inverse-point", ok))

    elim_ker = Eliminator()
    for c, col in sorted(at_inv.cols.items()):
        elim_ker.add_row(dict(col))
    n2 = len(alg.J) ** 2
    results.append(("kernel-complement-rank", elim_ker.rank + rank_img == n2))

    ok = True
    zs = fusion_parameters(2)
    z_invs = tuple(z ** -1 for z in zs)
    for g in gens:
        for op in ("e", "f", "t"):
            for i in range(alg.n + 1):
                image = tensor_apply(rep, op, i, g, zs=zs, z_invs=z_invs)
                if elim_gen.reduce(image)[0]:
                    ok = False
    results.append(("submodule-stability", ok))

    one = Fraction(1)
    elim_cl = Eliminator()
    swap_ok = True
    for g in gens:
        classical: Vec = {}
        for (a, b), v in g.items():
            x = v.eval_at(one)
            if x:
                classical[(a, b)] = x
        for (a, b), x in classical.items():
            if classical.get((b, a)) != x:
                swap_ok = False
        elim_cl.add_row(classical)
    N = len(alg.J)
    results.append(("classical-limit-symmetric", swap_ok))
    results.append(("classical-limit-rank", elim_cl.rank == N * (N + 1) // 2))
    return results


def decomposition_checks(
    rep: Representation, k: int, wedge: Optional[WedgeSpace] = None
) -> List[Tuple[str, bool]]:
    """Dimension and highest weight structure of the k-th quotient."""
    alg = rep.alg
    if wedge is None:
        wedge = build_wedge(rep, k)
    results: List[Tuple[str, bool]] = []
    results.append(("quotient-dimension", wedge.dimension == alg.wedge_dimension(k)))

    ok = all(wedge.key(b)[0] == 0 for b in wedge.basis)
    results.append(("normal-basis-increasing", ok))
    if alg.kind != "c1":
        want = {
            tuple(combo)
            for combo in itertools.combinations(alg.J, k)
        }
        results.append(("normal-basis-complete", set(wedge.basis) == want))

    found = highest_weight_vectors(wedge)
    predicted = predicted_highest_states(alg, k)
    pred_weights = [wt for wt, _ in predicted]
    results.append(
        (
            "highest-weight-multiplicities",
            sorted(found) == sorted(pred_weights)
            and all(len(v) == 1 for v in found.values()),
        )
    )

    ok = True
    for wt, state in predicted:
        coords = wedge.normal_form(state)
        if not coords:
            ok = False
            continue
        for i in range(1, alg.n + 1):
            raised = tensor_apply(rep, "e", i, state)
            if wedge.normal_form(raised):
                ok = False
    results.append(("predicted-vectors-highest", ok))

    total = sum(weyl_dimension(alg.classical, alg.n, wt) for wt in pred_weights)
    results.append(("component-dimension-sum", total == wedge.dimension))

    one = Fraction(1)
    classical_gens = []
    for g in relation_generators(rep):
        cl: Vec = {}
        for pair, v in g.items():
            x = v.eval_at(one)
            if x:
                cl[pair] = x
        classical_gens.append(cl)
    elim = Eliminator(key=wedge.key)
    for pos in range(k - 1):
        for prefix in itertools.product(alg.J, repeat=pos):
            for suffix in itertools.product(alg.J, repeat=k - 2 - pos):
                for g in classical_gens:
                    elim.add_row(
                        {prefix + pair + suffix: c for pair, c in g.items()}
                    )
    classical_dim = len(wedge.labels) - elim.rank
    results.append(
        ("classical-limit-dimension", classical_dim == math.comb(len(alg.J), k))
    )
    return results


# ---------------------------------------------------------------------------
# explicit identities inside the quotients


def _weight_zero_vector(rep: Representation) -> Vec:
    """The invariant vector of V (x) V, as a tensor state."""
    from .rmatrix import component_data

    for tag, _poly, vec, _dim in component_data(rep):
        if tag == "triv":
            return dict(vec)
    raise AssertionError("unreachable")


def _pair_sum(alg: Algebra, forward: bool = True) -> Vec:
    """sum_i (-q)**(i-1) v_i v_{-i}, or the reversed-pair variant
    sum_i (-q)**(1-i) v_{-i} v_i."""
    out: Vec = {}
    for i in range(1, alg.n + 1):
        if forward:
            out[(i, -i)] = Scalar.minus_q_power(i - 1)
        else:
            out[(-i, i)] = Scalar.minus_q_power(1 - i)
    return out


def identity_checks(rep: Representation) -> List[Tuple[str, bool]]:
    """Closed-form identities that hold inside V^2, all phrased as
    left-minus-right reducing to zero in the quotient."""
    alg = rep.alg
    n = alg.n
    wedge2 = build_wedge(rep, 2)
    results: List[Tuple[str, bool]] = []
    q2 = Scalar.q_power(2)
    fac = ONE - q2

    u0 = _weight_zero_vector(rep)
    if alg.kind == "a2odd":
        factor = ONE + Scalar.q_power(2 * n + 2)
        diff = dict(u0)
        for l, c in _pair_sum(alg).items():
            diff[l] = diff.get(l, ZERO) - factor * c
        results.append(("weight-zero-factor", not wedge2.normal_form(diff)))
    else:
        results.append(("weight-zero-collapse", not wedge2.normal_form(u0)))

    if alg.kind == "a2odd":
        # the reversed pair sum collapses onto the forward one
        diff = _pair_sum(alg, forward=False)
        for i in range(1, n + 1):
            diff[(i, -i)] = Scalar.minus_q_power(i + 1)
        results.append(("reversed-pair-collapse", not wedge2.normal_form(diff)))

    if alg.kind == "c1":
        dep: Vec = {(j, -j): Scalar.minus_q_power(j) for j in range(1, n + 1)}
        results.append(("dependent-sum", not wedge2.normal_form(dep)))
        results.append(
            (
                "both-pair-sums-vanish",
                not wedge2.normal_form(_pair_sum(alg))
                and not wedge2.normal_form(_pair_sum(alg, forward=False)),
            )
        )

    if alg.kind in ("a2odd", "c1"):
        ok = True
        for i in range(1, n):
            row: Vec = {(-i, i): ONE, (i, -i): q2}
            for m in range(1, n - i + 1):
                row[(i + m, -(i + m))] = -(fac * Scalar.minus_q_power(m))
            if wedge2.normal_form(row):
                ok = False
        results.append(("straightening", ok))

    if alg.kind in ("a2even", "a2odd-dagger", "c1"):
        # reversed recursion; coefficient is (q**2-1)(-q)**-m, sign opposite
        # to the forward form
        ok = True
        for i in range(1, n + 1):
            row = {(-i, i): ONE, (i, -i): ONE}
            for m in range(1, i):
                row[(i - m, -(i - m))] = fac * Scalar.minus_q_power(-m)
            if wedge2.normal_form(row):
                ok = False
        results.append(("straightening-reverse", ok))

    if alg.kind == "a2odd-dagger":
        diff = _pair_sum(alg, forward=False)
        shift = Scalar.q_power(-(2 * n - 2))
        for l, c in _pair_sum(alg).items():
            diff[l] = diff.get(l, ZERO) + shift * c
        results.append(("pair-sum-proportional", not wedge2.normal_form(diff)))
    return results


def example_checks(rep: Representation) -> List[Tuple[str, bool]]:
    """Worked examples at specific small ranks."""
    alg = rep.alg
    results: List[Tuple[str, bool]] = []
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)

    if alg.kind == "a2odd-dagger" and alg.n == 4:
        wedge3 = build_wedge(rep, 3)
        x: Vec = {
            (1, 2, -2): ONE,
            (1, 3, -3): -q1,
            (1, 4, -4): q2,
        }
        image = wedge3.normal_form(tensor_apply(rep, "e", 4, x))
        want = {(1, 3, 4): -(q1 * (ONE + q2))}
        results.append(("raise-by-last-color", image == want))
        image3 = wedge3.normal_form(tensor_apply(rep, "e", 3, x))
        results.append(("raise-by-middle-color", not image3))

    if alg.kind == "a2odd" and alg.n == 3:
        wedge3 = build_wedge(rep, 3)
        u: Vec = {(1, 2, -2): ONE, (1, 3, -3): -q1}
        coords = wedge3.normal_form(u)
        ok = bool(coords)
        for i in range(1, alg.n + 1):
            if wedge3.normal_form(tensor_apply(rep, "e", i, u)):
                ok = False
        results.append(("three-slot-invariant-vector", ok))
    return results


# ---------------------------------------------------------------------------
# the two augmented relation spaces on a 2n-dimensional slice


def _common_pair_rows(n: int) -> List[Vec]:
    labels = list(range(1, n + 1)) + list(range(-n, 0))
    idx = {j: m for m, j in enumerate(labels)}
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)
    rows: List[Vec] = []
    for i in labels:
        rows.append({(i, i): ONE})
    for i in labels:
        for j in labels:
            if i != j and i != -j and idx[j] < idx[i]:
                rows.append({(i, j): ONE, (j, i): q1})
    for i in range(1, n):
        rows.append(
            {
                (-i, i): ONE,
                (i, -i): q2,
                (i + 1, -i - 1): q1,
                (-i - 1, i + 1): q1,
            }
        )
    return rows


def pair_congruence_checks(n: int) -> List[Tuple[str, bool]]:
    """Congruences between the two weight-zero pair sums modulo the two
    augmentations of the common relations on a 2n-dimensional vector space."""
    q2 = Scalar.q_power(2)
    base = _common_pair_rows(n)
    elim1 = Eliminator()
    elim2 = Eliminator()
    for row in base:
        elim1.add_row(dict(row))
        elim2.add_row(dict(row))
    elim1.add_row({(1, -1): ONE, (-1, 1): ONE})
    elim2.add_row({(-n, n): ONE, (n, -n): q2})

    u0: Vec = {(i, -i): Scalar.minus_q_power(i - 1) for i in range(1, n + 1)}
    u0p: Vec = {(-i, i): Scalar.minus_q_power(1 - i) for i in range(1, n + 1)}
    results: List[Tuple[str, bool]] = []

    diff2 = dict(u0p)
    for l, c in u0.items():
        diff2[l] = q2 * c
    results.append(("pair-sum-forward", not elim2.reduce(diff2)[0]))

    diff1 = dict(u0p)
    shift = Scalar.q_power(-(2 * n - 2))
    for l, c in u0.items():
        diff1[l] = shift * c
    results.append(("pair-sum-backward", not elim1.reduce(diff1)[0]))

    fac = ONE - q2
    ok = True
    for i in range(1, n + 1):
        row: Vec = {(-i, i): ONE, (i, -i): ONE}
        for m in range(1, i):
            row[(i - m, -(i - m))] = fac * Scalar.minus_q_power(-m)
        if elim1.reduce(row)[0]:
            ok = False
    results.append(("straightening-backward", ok))

    ok = True
    for i in range(1, n + 1):
        row = {(-i, i): ONE, (i, -i): q2}
        for m in range(1, n - i + 1):
            row[(i + m, -(i + m))] = -(fac * Scalar.minus_q_power(m))
        if elim2.reduce(row)[0]:
            ok = False
    results.append(("straightening-forward", ok))
    return results
