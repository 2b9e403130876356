"""Command line surface: export module data, draw crystal graphs, and run
the verification suite with a machine-readable report.

Exit codes: 0 success, 1 verification failure, 2 usage or unsupported
combination, 3 resource cap exceeded.
"""

import argparse
import itertools
import json
import random
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .crystal import CRYSTAL_KINDS, CrystalError, crystal_suite
from .report import SuiteReport, emit_dot, graph_json
from .rmatrix import (
    build_rmatrix,
    component_data,
    intertwining_check,
    projector_checks,
    spectral_checks,
)
from .roots import KINDS, Algebra, weyl_dimension
from .scalars import Scalar
from .vectorrep import Representation, fusion_parameters
from .vectorrep import check_defining_relations
from .wedge import (
    WedgeSpace,
    build_wedge,
    decomposition_checks,
    example_checks,
    highest_weight_vectors,
    identity_checks,
    pair_congruence_checks,
    relation_space_checks,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


class CapExceeded(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _algebra(args) -> Algebra:
    try:
        return Algebra(args.type, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _guard_cap(alg: Algebra, k: int, cap: int) -> None:
    if len(alg.J) ** k > cap:
        raise CapExceeded(
            f"{len(alg.J)}^{k} tuples exceed --cap {cap}; raise the cap to proceed"
        )


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(data, path: Optional[str]) -> None:
    _write(json.dumps(data, sort_keys=True, indent=2) + "\n", path)


def _scalar_value(x: Scalar, point: Optional[Fraction]):
    if point is None:
        return x.to_json()
    return str(x.eval_at(point))


# ---------------------------------------------------------------------------
# data exports


def cmd_rep(args) -> int:
    alg = _algebra(args)
    rep = Representation(alg)
    order = alg.order_index
    point = args.eval_point

    def matrix_entries(mat) -> List:
        rows = sorted(mat.entries(), key=lambda e: (order[e[1]], order[e[0]]))
        return [[r, c, _scalar_value(v, point)] for r, c, v in rows]

    data = {
        "kind": alg.kind,
        "n": alg.n,
        "size": len(alg.J),
        "letters": list(alg.J),
        "weights": [[j, [str(x) for x in rep.weights[j]]] for j in alg.J],
        "matrices": {
            "e": {str(i): matrix_entries(rep.e[i]) for i in range(alg.n + 1)},
            "f": {str(i): matrix_entries(rep.f[i]) for i in range(alg.n + 1)},
            "t": {
                str(i): [[j, j, _scalar_value(rep.t[i][j], point)] for j in alg.J]
                for i in range(alg.n + 1)
            },
        },
    }
    _dump_json(data, args.json)
    return EXIT_OK


def cmd_rmatrix(args) -> int:
    alg = _algebra(args)
    rep = Representation(alg)
    rmat = build_rmatrix(rep)
    order = alg.order_index

    def pair_key(label):
        return (order[label[0]], order[label[1]])

    z0 = None
    if args.eval_point is not None:
        z0 = Scalar.from_int(args.eval_point)

    entries = []
    for r, c, poly in sorted(rmat.entries(), key=lambda e: (pair_key(e[1]), pair_key(e[0]))):
        value = poly.to_json() if z0 is None else _scalar_value(poly.evaluate(z0), None)
        entries.append([list(r), list(c), value])

    components = []
    for name, eig, vec, dim in component_data(rep):
        components.append(
            {
                "name": name,
                "dim": dim,
                "eigenvalue": eig.to_json(),
                "extreme_vector": [
                    [list(lb), v.to_json()] for lb, v in sorted(vec.items(), key=lambda t: pair_key(t[0]))
                ],
            }
        )

    data = {
        "kind": alg.kind,
        "n": alg.n,
        "dimension": len(alg.J) ** 2,
        "components": components,
        "entries": entries,
    }
    _dump_json(data, args.json)
    return EXIT_OK


def cmd_wedge(args) -> int:
    alg = _algebra(args)
    _guard_cap(alg, args.k, args.cap)
    rep = Representation(alg)
    try:
        wedge = build_wedge(rep, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    hw = highest_weight_vectors(wedge)
    parts = []
    for wt in sorted(hw):
        d = weyl_dimension(alg.classical, alg.n, wt)
        for _ in hw[wt]:
            parts.append((d, wt))
    parts.sort(key=lambda t: (-t[0], t[1]))

    data = {
        "kind": alg.kind,
        "n": alg.n,
        "k": args.k,
        "dims": {
            "total": wedge.dimension,
            "components": [d for d, _ in parts],
        },
        "highest_weights": [
            {"weight": [str(x) for x in wt], "component_dim": d} for d, wt in parts
        ],
        "basis": [list(b) for b in wedge.basis],
        "fusion_parameters": [z.to_json() for z in fusion_parameters(args.k)],
    }
    _dump_json(data, args.json)
    return EXIT_OK


def cmd_crystal(args) -> int:
    alg = _algebra(args)
    _guard_cap(alg, args.k, args.cap)
    rep = Representation(alg)
    try:
        suite = crystal_suite(rep, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    graph = suite["graph"]

    if args.dot:
        _write(emit_dot(graph), args.dot)
    if args.json or not args.dot:
        data = graph_json(graph)
        data["meta"] = {
            "kind": alg.kind,
            "n": alg.n,
            "k": args.k,
            "convention": suite["convention"],
            "roots": list(graph.roots),
            "checks": [[name, bool(ok)] for name, ok in suite["checks"]],
        }
        _dump_json(data, args.json)

    if not all(ok for _, ok in suite["checks"]):
        bad = [name for name, ok in suite["checks"] if not ok]
        print(f"failed checks: {', '.join(bad)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# the verification suite


def _add(report: SuiteReport, case_id: str, ref: str, outcome, t0: float) -> None:
    """outcome: bool, or list of (name, ok) pairs whose failures become the
    witness payload."""
    elapsed = time.time() - t0
    if isinstance(outcome, bool):
        report.add(case_id, ref, outcome, None, elapsed)
        return
    bad = [name for name, ok in outcome if not ok]
    report.add(case_id, ref, not bad, {"failed": bad} if bad else None, elapsed)


def _verify_algebra(report: SuiteReport, rep: Representation, tag: str) -> None:
    t0 = time.time()
    _add(
        report,
        f"defining-relations[{tag}]",
        "qwedge.vectorrep.check_defining_relations",
        check_defining_relations(rep),
        t0,
    )


def _verify_rmatrix(report: SuiteReport, rep: Representation, tag: str) -> None:
    t0 = time.time()
    _add(
        report,
        f"intertwining[{tag}]",
        "qwedge.rmatrix.intertwining_check",
        intertwining_check(rep),
        t0,
    )
    t0 = time.time()
    _add(
        report,
        f"spectral[{tag}]",
        "qwedge.rmatrix.spectral_checks",
        spectral_checks(rep),
        t0,
    )
    t0 = time.time()
    _add(
        report,
        f"projectors[{tag}]",
        "qwedge.rmatrix.projector_checks",
        projector_checks(rep),
        t0,
    )


def _verify_wedge(
    report: SuiteReport, rep: Representation, tag: str, cap: int, rng: random.Random
) -> None:
    alg = rep.alg
    t0 = time.time()
    _add(
        report,
        f"relation-space[{tag}]",
        "qwedge.wedge.relation_space_checks",
        relation_space_checks(rep),
        t0,
    )
    t0 = time.time()
    _add(
        report,
        f"identities[{tag}]",
        "qwedge.wedge.identity_checks",
        identity_checks(rep),
        t0,
    )
    examples = example_checks(rep)
    if examples:
        _add(
            report,
            f"examples[{tag}]",
            "qwedge.wedge.example_checks",
            examples,
            time.time(),
        )
    for k in range(1, alg.n + 1):
        case = f"decomposition[{tag},k={k}]"
        if len(alg.J) ** k > cap:
            report.add(case, "qwedge.wedge.decomposition_checks", "skipped", {"reason": "cap"})
            continue
        t0 = time.time()
        _add(report, case, "qwedge.wedge.decomposition_checks", decomposition_checks(rep, k), t0)

    # seeded spot check: straightening is idempotent and weight preserving
    k = min(2, alg.n)
    wedge = build_wedge(rep, k)
    t0 = time.time()
    ok = True
    for _ in range(20):
        label = tuple(rng.choice(alg.J) for _ in range(k))
        nf = wedge.normal_form({label: Scalar.from_int(1)})
        if wedge.normal_form(nf) != nf:
            ok = False
        wt = rep.tensor_weight(label)
        if any(rep.tensor_weight(b) != wt for b in nf):
            ok = False
    _add(
        report,
        f"straightening-spot[{tag},k={k}]",
        "qwedge.wedge.WedgeSpace.normal_form",
        ok,
        t0,
    )


def _verify_crystal(report: SuiteReport, rep: Representation, tag: str, cap: int) -> None:
    alg = rep.alg
    for k in range(1, alg.n + 1):
        case = f"crystal[{tag},k={k}]"
        ref = "qwedge.crystal.crystal_suite"
        if alg.kind not in CRYSTAL_KINDS:
            report.add(case, ref, "skipped", {"reason": "labeling not covered for this kind"})
            continue
        if len(alg.J) ** k > cap:
            report.add(case, ref, "skipped", {"reason": "cap"})
            continue
        t0 = time.time()
        try:
            suite = crystal_suite(rep, k)
        except CrystalError as exc:
            report.add(case, ref, False, {"error": str(exc)}, time.time() - t0)
            continue
        _add(report, case, ref, suite["checks"], t0)


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    report = SuiteReport(
        {
            "suite": args.suite,
            "max_n": args.max_n,
            "eval_point": str(args.eval_point) if args.eval_point is not None else None,
            "seed": args.seed,
            "cap": args.cap,
        }
    )

    for kind in KINDS:
        minimal = 3 if kind in ("a2odd", "a2odd-dagger") else 2
        for n in range(minimal, args.max_n + 1):
            tag = f"{kind},n={n}"
            rep = Representation(Algebra(kind, n))
            if args.suite in ("all", "algebra"):
                _verify_algebra(report, rep, tag)
            if args.suite in ("all", "rmatrix"):
                _verify_rmatrix(report, rep, tag)
            if args.suite in ("all", "wedge"):
                _verify_wedge(report, rep, tag, args.cap, rng)
            if args.suite in ("all", "crystal"):
                _verify_crystal(report, rep, tag, args.cap)

    if args.suite in ("all", "wedge"):
        for n in range(2, args.max_n + 1):
            t0 = time.time()
            _add(
                report,
                f"pair-congruences[n={n}]",
                "qwedge.wedge.pair_congruence_checks",
                pair_congruence_checks(n),
                t0,
            )

    for case in report.cases:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[case.status]
        extra = ""
        if case.status == "fail" and case.witness:
            extra = f"  {case.witness}"
        print(f"{mark} {case.id}{extra}")
    s = report.summary
    print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")

    if args.json:
        _write(report.to_json(), args.json)
    return report.exit_code


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser, need_k: bool) -> None:
    p.add_argument("--type", required=True, choices=KINDS, help="algebra kind")
    p.add_argument("--n", required=True, type=int, help="rank")
    if need_k:
        p.add_argument("--k", required=True, type=int, help="number of slots")
    p.add_argument("--json", metavar="PATH", help="write JSON here ('-' for stdout)")
    p.add_argument(
        "--eval-point",
        type=_fraction,
        default=None,
        metavar="P/Q",
        help="rational evaluation point for exported scalar entries",
    )
    p.add_argument("--cap", type=int, default=10_000, help="tuple-count resource cap")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled spot checks")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qwedge",
        description="exact q-wedge modules, R-matrices, and crystal graphs",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rep", help="export the vector representation")
    _add_common(p, need_k=False)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("rmatrix", help="export the two-slot intertwiner")
    _add_common(p, need_k=False)
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("wedge", help="export a wedge module decomposition")
    _add_common(p, need_k=True)
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("crystal", help="export a crystal graph (JSON/DOT)")
    _add_common(p, need_k=True)
    p.add_argument("--dot", metavar="PATH", help="write DOT here")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=("all", "algebra", "rmatrix", "wedge", "crystal"), default="all")
    p.add_argument("--max-n", type=int, default=3, help="largest rank per kind")
    p.add_argument("--json", metavar="PATH", help="write the report here")
    p.add_argument("--eval-point", type=_fraction, default=Fraction(3, 2), metavar="P/Q")
    p.add_argument("--cap", type=int, default=10_000, help="tuple-count resource cap")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled spot checks")
    p.set_defaults(func=cmd_verify)

    return top


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
