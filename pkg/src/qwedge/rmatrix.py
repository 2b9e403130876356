"""The two-slot intertwiner R(z) on V (x) V and its spectral decomposition.

The matrix acts on basis tensors labeled (a, b); entries are Laurent
polynomials in the spectral parameter z over Q(s). Conventions: R(z) with
z = z1/z2 intertwines the coproduct action twisted by evaluation parameters
(z1, z2) into the one twisted by (z2, z1).

As a module over the classical subalgebra, V (x) V splits into three
irreducible pieces; we tag them "sym" (highest weight 2 e_1), "alt"
(e_1 + e_2) and "triv" (weight zero). R(z) acts on each piece by an
explicit scalar polynomial, which is everything one needs to locate the
wedge relation space W as an image or kernel at the special points q**2,
q**-2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .linalg import Eliminator, SparseMatrix, Vec
from .roots import weyl_dimension
from .scalars import ONE, Scalar, ZPoly, quantum_integer
from .vectorrep import Representation, tensor_apply


def _lin(c0: Scalar, c1: Scalar) -> ZPoly:
    return ZPoly({0: c0, 1: c1})


def coefficient_poly(rep: Representation, i: int, j: int) -> ZPoly:
    """The weight-zero band entry sending v_j (x) v_{-j} to v_{-i} (x) v_i."""
    alg = rep.alg
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)
    xi = alg.xi
    if i == j:
        out = _lin(q2, -xi) * _lin(ONE, -ONE)
        if i == 0:
            out = out + (ONE - q1) * (_lin(q1, ONE) * _lin(ONE, -xi))
        return out
    eps = alg.epsilon_sign(j) * alg.epsilon_sign(i) ** -1
    phase = eps * Scalar.minus_q_power(alg.bar(j) - alg.bar(i))
    if alg.precedes(i, j):
        core = phase * _lin(-ONE, ONE)
        if i == -j:
            core = core + _lin(ONE, -xi)
        return (ONE - q2) * core
    core = (phase * xi) * _lin(-ONE, ONE)
    if i == -j:
        core = core + _lin(ONE, -xi)
    return (ONE - q2) * (ZPoly.z_power(1) * core)


def build_rmatrix(rep: Representation) -> SparseMatrix:
    alg = rep.alg
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)
    xi = alg.xi
    same = _lin(ONE, -q2) * _lin(ONE, -xi)
    perm = q1 * (_lin(ONE, -ONE) * _lin(ONE, -xi))
    stay = (ONE - q2) * _lin(ONE, -xi)
    stay_z = stay * ZPoly.z_power(1)

    entries = []
    for a in alg.J:
        for b in alg.J:
            if a == b != 0:
                entries.append(((a, a), (a, a), same))
            elif a != b and a != -b:
                entries.append(((b, a), (a, b), perm))
                entries.append(
                    ((a, b), (a, b), stay if alg.precedes(b, a) else stay_z)
                )
    for j in alg.J:
        for i in alg.J:
            poly = coefficient_poly(rep, i, j)
            if poly:
                entries.append((((-i), i), (j, -j), poly))
    return SparseMatrix.from_entries(entries)


def component_data(rep: Representation) -> List[Tuple[str, ZPoly, Vec, int]]:
    """(tag, eigenvalue polynomial, explicit extreme vector, dimension)
    for the three classical components of V (x) V."""
    alg = rep.alg
    n = alg.n
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)
    xi = alg.xi

    c_sym = _lin(ONE, -q2) * _lin(ONE, -xi)
    c_alt = _lin(ONE, -xi) * _lin(-q2, ONE)
    if alg.kind == "a2odd":
        c_triv = _lin(-q2, ONE) * _lin(-xi, ONE)
    else:
        c_triv = _lin(ONE, -q2) * _lin(-xi, ONE)

    u_sym: Vec = {(1, 1): ONE}
    u_alt: Vec = {(1, 2): ONE, (2, 1): -q1}
    u_triv: Vec = {}
    for i in range(1, n + 1):
        u_triv[(i, -i)] = Scalar.minus_q_power(i - 1)
        u_triv[(-i, i)] = -(Scalar.minus_q_power(-i - 1) * alg.xi_prime)
    if alg.kind == "a2even":
        u_triv[(0, 0)] = -(
            Scalar.minus_q_power(n - 1) * quantum_integer(2, alg.d[n]) ** -1
        )

    dim_sym = weyl_dimension(alg.classical, n, (Fraction(2),) + (Fraction(0),) * (n - 1))
    dim_alt = weyl_dimension(alg.classical, n, alg.fundamental_weight(2))
    return [
        ("sym", c_sym, u_sym, dim_sym),
        ("alt", c_alt, u_alt, dim_alt),
        ("triv", c_triv, u_triv, 1),
    ]


def _pair_action(rep: Representation, op: str, i: int, exps: Tuple[int, int]) -> SparseMatrix:
    """Matrix of generator (op, i) on V (x) V with slot parameters
    (z**exps[0], z**exps[1]); entries are Laurent polynomials in z."""
    zs = tuple(ZPoly.z_power(m) for m in exps)
    z_invs = tuple(ZPoly.z_power(-m) for m in exps)
    cols = {}
    for a in rep.alg.J:
        for b in rep.alg.J:
            image = tensor_apply(
                rep, op, i, {(a, b): ZPoly.const(ONE)}, zs=zs, z_invs=z_invs
            )
            if image:
                cols[(a, b)] = image
    return SparseMatrix(cols)


def intertwining_check(rep: Representation) -> bool:
    """R(z) must send the (z, 1)-twisted coproduct action to the (1, z) one."""
    rmat = build_rmatrix(rep)
    for op in ("e", "f", "t"):
        for i in range(rep.alg.n + 1):
            m_in = _pair_action(rep, op, i, (1, 0))
            m_out = _pair_action(rep, op, i, (0, 1))
            if not (rmat @ m_in - m_out @ rmat).is_zero():
                return False
    return True


def spectral_checks(rep: Representation) -> List[Tuple[str, bool]]:
    """Exact checks pinning down the spectral decomposition of R(z)."""
    rmat = build_rmatrix(rep)
    comps = component_data(rep)
    results: List[Tuple[str, bool]] = []

    ok = True
    for tag, poly, vec, _dim in comps:
        lifted = {label: ZPoly.const(c) for label, c in vec.items()}
        image = rmat.matvec(lifted)
        expected = {label: poly * c for label, c in vec.items()}
        if image != expected:
            ok = False
    results.append(("component-eigenvalues", ok))

    # (R - c_sym)(R - c_alt)(R - c_triv) = 0: the three polynomials exhaust
    # the spectrum
    labels = [(a, b) for a in rep.alg.J for b in rep.alg.J]
    ident = SparseMatrix({l: {l: ZPoly.const(ONE)} for l in labels})
    prod = ident
    for _tag, poly, _vec, _dim in comps:
        shifted = rmat - SparseMatrix({l: {l: poly} for l in labels})
        prod = prod @ shifted
    results.append(("annihilating-cubic", prod.is_zero()))

    trace = ZPoly({})
    for l in labels:
        v = rmat.get(l, l)
        if v:
            trace = trace + v
    want = ZPoly({})
    for _tag, poly, _vec, dim in comps:
        want = want + poly * Scalar.from_int(dim)
    results.append(("trace-identity", trace == want))

    dims_ok = sum(d for _t, _p, _v, d in comps) == len(rep.alg.J) ** 2
    results.append(("component-dimensions", dims_ok))
    return results


def evaluate_matrix(rmat: SparseMatrix, z0: Scalar) -> SparseMatrix:
    return rmat.map_entries(lambda p: p.evaluate(z0))


def rank_at_point(mat: SparseMatrix, s0: Fraction) -> int:
    """Rank of a Scalar matrix after evaluating s at a rational point."""
    elim = Eliminator()
    for c, col in sorted(mat.cols.items()):
        row = {}
        for r, v in col.items():
            x = v.eval_at(s0)
            if x:
                row[r] = x
        if row:
            elim.add_row(row)
    return elim.rank


def projectors(rep: Representation, z0: Optional[Scalar] = None) -> Dict[str, SparseMatrix]:
    """Spectral projectors built from R(z0) by Lagrange interpolation.

    z0 must keep the three eigenvalues pairwise distinct; the default q**4
    does for every family and rank.
    """
    if z0 is None:
        z0 = Scalar.q_power(4)
    rmat = build_rmatrix(rep)
    comps = component_data(rep)
    values = {tag: poly.evaluate(z0) for tag, poly, _v, _d in comps}
    tags = [tag for tag, _p, _v, _d in comps]
    for a in range(len(tags)):
        for b in range(a + 1, len(tags)):
            if values[tags[a]] == values[tags[b]]:
                raise ValueError(
                    f"eigenvalues for {tags[a]} and {tags[b]} collide at z0"
                )
    at_z0 = evaluate_matrix(rmat, z0)
    labels = [(a, b) for a in rep.alg.J for b in rep.alg.J]
    out: Dict[str, SparseMatrix] = {}
    for tag in tags:
        proj = SparseMatrix({l: {l: ONE} for l in labels})
        for other in tags:
            if other == tag:
                continue
            shift = at_z0 - SparseMatrix({l: {l: values[other]} for l in labels})
            denom = (values[tag] - values[other]) ** -1
            proj = (proj @ shift).scale_entries(denom)
        out[tag] = proj
    return out


def projector_checks(rep: Representation) -> List[Tuple[str, bool]]:
    projs = projectors(rep)
    labels = [(a, b) for a in rep.alg.J for b in rep.alg.J]
    ident = SparseMatrix({l: {l: ONE} for l in labels})
    results = []

    ok = all((p @ p - p).is_zero() for p in projs.values())
    results.append(("projector-idempotent", ok))

    tags = list(projs)
    ok = True
    for a in range(len(tags)):
        for b in range(len(tags)):
            if a != b and not (projs[tags[a]] @ projs[tags[b]]).is_zero():
                ok = False
    results.append(("projector-orthogonal", ok))

    total = SparseMatrix({})
    for p in projs.values():
        total = total + p
    results.append(("projector-complete", (total - ident).is_zero()))

    comps = component_data(rep)
    s0 = Fraction(3, 2)
    ok = True
    for tag, _poly, _vec, dim in comps:
        if rank_at_point(projs[tag], s0) != dim:
            ok = False
    results.append(("projector-ranks", ok))
    return results
