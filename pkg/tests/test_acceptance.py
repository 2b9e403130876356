"""Acceptance suite: one test and one printed pass/fail line per criterion.

Every check is exact (symbolic over the ground field); nothing here samples
floats or tolerances. Grids cover all four families at their small ranks,
including the top-degree doubled case of the dagger family.
"""

import itertools
import math
import time
from fractions import Fraction

from qwedge.crystal import crystal_suite, verify_operator_words
from qwedge.linalg import Eliminator
from qwedge.rmatrix import component_data, intertwining_check, projector_checks, spectral_checks
from qwedge.roots import Algebra, weyl_dimension
from qwedge.scalars import ONE, ZERO, Scalar, ZPoly
from qwedge.vectorrep import Representation, check_defining_relations
from qwedge.wedge import (
    build_wedge,
    decomposition_checks,
    example_checks,
    identity_checks,
    pair_congruence_checks,
    predicted_highest_states,
    relation_generators,
    relation_space_checks,
)

RANK_GRID = [
    ("a2even", 2),
    ("a2even", 3),
    ("a2odd", 3),
    ("a2odd-dagger", 3),
    ("c1", 2),
    ("c1", 3),
]


def _conclude(label, failures):
    status = "FAIL" if failures else "PASS"
    print(f"[acceptance] {label}: {status}")
    assert not failures, (label, failures)


def _collect(failures, tag, checks):
    for name, ok in checks:
        if not ok:
            failures.append(f"{tag}: {name}")


def test_criterion_1_defining_relations():
    failures = []
    t0 = time.monotonic()
    for kind, n in RANK_GRID + [("a2odd-dagger", 4)]:
        rep = Representation(Algebra(kind, n))
        if not check_defining_relations(rep):
            failures.append(f"{kind} n={n}")
    elapsed = time.monotonic() - t0
    if elapsed >= 30:
        failures.append(f"too slow: {elapsed:.1f}s")
    _conclude("criterion 1, defining relations", failures)


def test_criterion_2_intertwining():
    failures = []
    t0 = time.monotonic()
    for kind, n in RANK_GRID:
        rep = Representation(Algebra(kind, n))
        if not intertwining_check(rep):
            failures.append(f"{kind} n={n}")
    elapsed = time.monotonic() - t0
    if elapsed >= 120:
        failures.append(f"too slow: {elapsed:.1f}s")
    _conclude("criterion 2, two-slot intertwining", failures)


def test_criterion_3_spectral_decomposition():
    failures = []
    for kind, n in RANK_GRID:
        rep = Representation(Algebra(kind, n))
        _collect(failures, f"{kind} n={n}", spectral_checks(rep))
        _collect(failures, f"{kind} n={n} projectors", projector_checks(rep))

    # the one family whose smallest eigenvalue flips both linear factors
    alg = Algebra("a2odd", 3)
    q2 = Scalar.q_power(2)
    _, c_triv, _, _ = next(
        c for c in component_data(Representation(alg)) if c[0] == "triv"
    )
    want = ZPoly({0: q2 * alg.xi, 1: -(q2 + alg.xi), 2: ONE})
    if c_triv != want:
        failures.append("a2odd trivial eigenvalue shape")
    _conclude("criterion 3, spectral decomposition", failures)


def test_criterion_4_relation_space_characterization():
    failures = []
    for kind, n in RANK_GRID:
        rep = Representation(Algebra(kind, n))
        _collect(failures, f"{kind} n={n}", relation_space_checks(rep))
    for kind, n, dim in [("a2even", 2, 15), ("a2odd", 3, 21), ("c1", 2, 11)]:
        gens = relation_generators(Representation(Algebra(kind, n)))
        if len(gens) != dim:
            failures.append(f"{kind} n={n}: {len(gens)} generators, wanted {dim}")
    _conclude("criterion 4, relation space characterization", failures)


def test_criterion_5_quotient_dimensions_and_highest_weights():
    failures = []
    grid = RANK_GRID + [("a2odd-dagger", 4)]
    for kind, n in grid:
        alg = Algebra(kind, n)
        rep = Representation(alg)
        N = len(alg.J)
        for k in range(1, n + 1):
            _collect(failures, f"{kind} n={n} k={k}", decomposition_checks(rep, k))
            wedge = build_wedge(rep, k)
            if kind == "c1":
                want = math.comb(2 * n, k)
                if k >= 2:
                    want -= math.comb(2 * n, k - 2)
            else:
                want = math.comb(N, k)
            if wedge.dimension != want:
                failures.append(f"{kind} n={n} k={k}: dim {wedge.dimension} != {want}")
            predicted = predicted_highest_states(alg, k)
            if kind == "a2odd" and len(predicted) != k // 2 + 1:
                failures.append(f"a2odd n={n} k={k}: {len(predicted)} components")
            if kind == "a2odd-dagger" and k == n and len(predicted) != 2:
                failures.append(f"dagger n={n} k={n}: no doubling")

    # the highlighted component splittings, with explicit numbers
    highlights = [
        ("a2odd-dagger", 4, 4, 70, [35, 35]),
        ("a2odd", 3, 2, 15, [14, 1]),
        ("c1", 2, 2, 5, [5]),
    ]
    for kind, n, k, total, parts in highlights:
        alg = Algebra(kind, n)
        wedge = build_wedge(Representation(alg), k)
        dims = sorted(
            (
                weyl_dimension(alg.classical, n, wt)
                for wt, _ in predicted_highest_states(alg, k)
            ),
            reverse=True,
        )
        if wedge.dimension != total or dims != parts:
            failures.append(f"{kind} n={n} k={k}: {wedge.dimension} = {dims}")

    # the untwisted family admits no analogue of the lower components: the
    # corresponding states straighten to zero
    for n in (2, 3):
        alg = Algebra("c1", n)
        rep = Representation(alg)
        for k in range(2, n + 1):
            wedge = build_wedge(rep, k)
            for l in range(1, k // 2 + 1):
                head = tuple(range(1, k - 2 * l + 1))
                state = {}
                for combo in itertools.combinations(range(k - 2 * l + 1, n + 1), l):
                    label = head + combo + tuple(-i for i in reversed(combo))
                    state[label] = Scalar.minus_q_power(sum(combo))
                if wedge.normal_form(state):
                    failures.append(f"c1 n={n} k={k} l={l}: state survives")
    _conclude("criterion 5, quotient dimensions and highest weights", failures)


def test_criterion_6_identities_and_worked_examples():
    failures = []
    for kind, n in RANK_GRID:
        rep = Representation(Algebra(kind, n))
        _collect(failures, f"{kind} n={n}", identity_checks(rep))
    for kind, n in [("a2odd", 3), ("a2odd-dagger", 4)]:
        rep = Representation(Algebra(kind, n))
        checks = example_checks(rep)
        if not checks:
            failures.append(f"{kind} n={n}: no worked examples")
        _collect(failures, f"{kind} n={n}", checks)
    for n in (2, 3):
        _collect(failures, f"pair congruences n={n}", pair_congruence_checks(n))
    _conclude("criterion 6, closed-form identities and worked examples", failures)


def test_criterion_7_crystal_bases():
    failures = []
    t0 = time.monotonic()
    grid = [("a2even", 2), ("a2even", 3), ("a2odd-dagger", 3), ("a2odd-dagger", 4), ("c1", 2), ("c1", 3)]
    for kind, n in grid:
        rep = Representation(Algebra(kind, n))
        for k in range(1, n + 1):
            out = crystal_suite(rep, k)
            _collect(failures, f"{kind} n={n} k={k}", out["checks"])
            graph = out["graph"]
            wedge = out["wedge"]
            if not (graph.size == wedge.dimension == len(out["labels"])):
                failures.append(f"{kind} n={n} k={k}: size mismatch")
    elapsed = time.monotonic() - t0
    if elapsed >= 600:
        failures.append(f"too slow: {elapsed:.1f}s")
    _conclude("criterion 7, crystal lattices and labelings", failures)


def test_criterion_8_operator_words():
    failures = []
    hook_names = {
        "lowering-word",
        "plain-lowering-inverse",
        "raising-word",
        "plain-raising-inverse",
    }
    top_names = {f"{base}-{sign}" for base in hook_names for sign in ("plus", "minus")}
    cases = [
        ("a2even", 2, 2, hook_names),
        ("a2even", 3, 2, hook_names),
        ("c1", 2, 2, hook_names),
        ("c1", 3, 2, hook_names),
        ("a2odd-dagger", 3, 2, hook_names),
        ("a2odd-dagger", 3, 3, top_names),
        ("a2odd-dagger", 4, 4, top_names),
    ]
    for kind, n, k, names in cases:
        wedge = build_wedge(Representation(Algebra(kind, n)), k)
        checks = verify_operator_words(wedge)
        if {name for name, _ in checks} != names:
            failures.append(f"{kind} n={n} k={k}: unexpected identity set")
        _collect(failures, f"{kind} n={n} k={k}", checks)
    _conclude("criterion 8, composite operator words", failures)


# ---------------------------------------------------------------------------
# criterion 9: classical limit, plus the type-A warm-up on four letters


def _sl_t_eig(i, a):
    return Scalar.q_power((1 if a == i else 0) - (1 if a == i + 1 else 0))


def _sl_apply(m, op, i, state, k):
    """Generator action on k letter slots, same ordering convention as the
    package: lowering twists earlier slots, raising twists later ones."""
    out = {}
    for label, c in state.items():
        for j in range(k):
            a = label[j]
            if op == "e":
                if a != i + 1:
                    continue
                coeff = c
                for pos in range(j + 1, k):
                    coeff = coeff * _sl_t_eig(i, label[pos]) ** -1
                new = label[:j] + (i,) + label[j + 1 :]
            else:
                if a != i:
                    continue
                coeff = c
                for pos in range(j):
                    coeff = coeff * _sl_t_eig(i, label[pos])
                new = label[:j] + (i + 1,) + label[j + 1 :]
            cur = out.get(new, ZERO) + coeff
            if cur:
                out[new] = cur
            else:
                out.pop(new, None)
    return out


def _sl_relation_gens(m):
    q1 = Scalar.q_power(1)
    gens = [{(i, i): ONE} for i in range(1, m + 1)]
    for i in range(1, m + 1):
        for j in range(1, i):
            gens.append({(i, j): ONE, (j, i): q1})
    return gens


def test_criterion_9_classical_limit_and_type_a_warmup():
    failures = []
    one = Fraction(1)

    # q = 1 turns every relation generator symmetric, spanning the full
    # symmetric square; the named checks pin rank and symmetry per family
    for kind, n in RANK_GRID:
        rep = Representation(Algebra(kind, n))
        classical = [
            (name, ok)
            for name, ok in relation_space_checks(rep)
            if name.startswith("classical-limit")
        ]
        if len(classical) != 2:
            failures.append(f"{kind} n={n}: classical checks missing")
        _collect(failures, f"{kind} n={n}", classical)

    m = 4
    gens = _sl_relation_gens(m)
    elim = Eliminator()
    for g in gens:
        elim.add_row(dict(g))
    if elim.rank != m * (m + 1) // 2:
        failures.append("type A generators are dependent")

    # condition 1: the relation span is stable under every generator
    for g in gens:
        for op in ("e", "f"):
            for i in range(1, m):
                image = _sl_apply(m, op, i, g, 2)
                if elim.reduce(image)[0]:
                    failures.append(f"type A span not stable under {op}_{i}")

    # the span is exactly the image of the two-slot intertwiner at q**2
    z0 = Scalar.q_power(2)
    q1 = Scalar.q_power(1)
    q2 = Scalar.q_power(2)
    cols = []
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a == b:
                cols.append({(a, a): ONE - q2 * z0})
            else:
                cols.append(
                    {
                        (b, a): q1 * (ONE - z0),
                        (a, b): (ONE - q2) * (ONE if a > b else z0),
                    }
                )
    elim_cols = Eliminator()
    for col in cols:
        elim_cols.add_row(dict(col))
    elim_both = Eliminator()
    for row in gens + cols:
        elim_both.add_row(dict(row))
    if not (elim.rank == elim_cols.rank == elim_both.rank):
        failures.append("type A span differs from the intertwiner image")

    # condition 2: q = 1 degenerates the span to the symmetric square
    elim_cl = Eliminator()
    for g in gens:
        row = {}
        for label, v in g.items():
            x = v.eval_at(one)
            if x:
                row[label] = x
        for (a, b), x in row.items():
            if row.get((b, a)) != x:
                failures.append("type A generator not symmetric at q = 1")
        elim_cl.add_row(row)
    if elim_cl.rank != m * (m + 1) // 2:
        failures.append("type A classical rank off")

    # condition 3: the k-slot quotients have binomial dimensions and a
    # raising-killed leading vector
    for k in (2, 3):
        elim_k = Eliminator()
        for pos in range(k - 1):
            for prefix in itertools.product(range(1, m + 1), repeat=pos):
                for suffix in itertools.product(range(1, m + 1), repeat=k - 2 - pos):
                    for g in gens:
                        elim_k.add_row(
                            {prefix + pair + suffix: c for pair, c in g.items()}
                        )
        if m ** k - elim_k.rank != math.comb(m, k):
            failures.append(f"type A quotient dimension off at k={k}")
        lead = tuple(range(1, k + 1))
        if not elim_k.reduce({lead: ONE})[0]:
            failures.append(f"type A leading vector dies at k={k}")
        for i in range(1, m):
            image = _sl_apply(m, "e", i, {lead: ONE}, k)
            if elim_k.reduce(image)[0]:
                failures.append(f"type A leading vector not raised to zero, k={k}")
    _conclude("criterion 9, classical limit and the type A warm-up", failures)
