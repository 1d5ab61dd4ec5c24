"""Command-line front end.

Problem instances arrive as JSON, results leave as CSV.  Exit codes are
a stable contract: 0 success, 1 validation error, 2 wave equation not
solvable, 3 internal error.  Errors are emitted on stderr as a JSON
object {"error": code, "detail": ...}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cayley, cosets, oracles, tree, verify
from .errors import LatticeWavesError, NotSolvable, ShapeMismatch
from .functions import SupportedFunction
from .groups import make_element
from .serialize import (
    element_from_json,
    function_to_csv,
    group_from_json,
    tree_function_to_csv,
)

SOLVER_KINDS = {"heat", "wave", "coset-heat", "coset-wave", "tree-heat", "tree-wave"}

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NOT_SOLVABLE = 2
EXIT_INTERNAL = 3


def _load_problem(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _values_to_function(G, values) -> SupportedFunction:
    entries = {}
    for row in values or []:
        x = element_from_json(G, row["elem"])
        entries[x] = entries.get(x, Fraction(0)) + Fraction(int(row["num"]), int(row["den"]))
    return SupportedFunction(G, entries)


def _values_to_tree_function(k, values) -> tree.TreeFunction:
    entries = {}
    for row in values or []:
        x = tree.make_vertex(row["elem"], k)
        entries[x] = entries.get(x, Fraction(0)) + Fraction(int(row["num"]), int(row["den"]))
    return tree.TreeFunction(k, entries)


def _project_initial(P: cosets.CosetProblem, values) -> SupportedFunction:
    """Coset initial data is given on base-group representatives; push it down."""
    entries = {}
    for row in values or []:
        x = element_from_json(P.base_group, row["elem"])
        q = P.quot.project(x)
        if q in entries:
            raise ShapeMismatch(f"two representatives of the same coset given: {row['elem']}")
        entries[q] = Fraction(int(row["num"]), int(row["den"]))
    return SupportedFunction(P.quotient_group, entries)


def _tree_eval_vertices(instance: dict, k: int, f: tree.TreeFunction, n: int):
    spec = instance.get("eval")
    if spec and "vertices" in spec:
        return [tree.make_vertex(w, k) for w in spec["vertices"]]
    center = tree.ROOT
    radius = None
    if spec and "ball" in spec:
        ball = spec["ball"]
        radius = int(ball.get("radius"))
        center = tree.make_vertex(ball.get("center", []), k)
    if radius is None:
        # Default window: the whole region where the solution can be nonzero.
        support_radius = max((tree.tree_distance(center, y) for y in f.support()), default=0)
        radius = support_radius + n
    out = [center]
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in tree.neighbors(x, k):
                if tree.tree_distance(center, y) > tree.tree_distance(center, x):
                    nxt.append(y)
        out += nxt
        frontier = nxt
    return out


def _solve(instance: dict, n: int):
    """Run the closed-form solver for a solver-kind instance.

    Returns (result, header, kind_tag); result is a SupportedFunction or
    TreeFunction.
    """
    kind = instance["kind"]
    if kind in ("heat", "wave"):
        G = group_from_json(instance["group"])
        S = cayley_generators(instance, G)
        f = _values_to_function(G, instance.get("f"))
        if kind == "heat":
            u = cayley.heat_solve(f, S, n)
        else:
            g = _values_to_function(G, instance.get("g"))
            u = cayley.wave_solve(f, g, S, n)
        return u, {"kind": kind, "n": n, "k": S.degree}
    if kind in ("coset-heat", "coset-wave"):
        P = build_coset(instance)
        f = _project_initial(P, instance.get("f"))
        if kind == "coset-heat":
            u = cosets.coset_heat_solve(f, P, n)
        else:
            g = _project_initial(P, instance.get("g"))
            u = cosets.coset_wave_solve(f, g, P, n)
        return u, {"kind": kind, "n": n, "k": P.S_tilde.degree, "H_order": P.H_order}
    if kind in ("tree-heat", "tree-wave"):
        k = int(instance["k"])
        f = _values_to_tree_function(k, instance.get("f"))
        eval_at = _tree_eval_vertices(instance, k, f, n)
        if kind == "tree-heat":
            u = tree.tree_heat_solve(f, n, eval_at)
        else:
            g = _values_to_tree_function(k, instance.get("g"))
            u = tree.tree_wave_solve(f, g, n, eval_at)
        return u, {"kind": kind, "n": n, "k": k}
    raise ShapeMismatch(f"unknown problem kind {kind!r}")


def cayley_generators(instance: dict, G):
    from .groups import validate_generators

    return validate_generators(G, [element_from_json(G, s) for s in instance["S"]])


def build_coset(instance: dict) -> cosets.CosetProblem:
    G = group_from_json(instance["group"])
    H = [element_from_json(G, h) for h in instance.get("subgroup_gens", [])]
    S = [element_from_json(G, s) for s in instance["S"]]
    return cosets.build_coset_problem(G, H, S)


def _emit(result, header, out_path):
    if isinstance(result, tree.TreeFunction):
        text = tree_function_to_csv(result, header)
    else:
        text = function_to_csv(result, header)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _oracle_solution(instance: dict, n: int):
    """Independent brute-force solution for a solver-kind instance."""
    kind = instance["kind"]
    if kind in ("heat", "wave"):
        G = group_from_json(instance["group"])
        S = cayley_generators(instance, G)
        f = _values_to_function(G, instance.get("f"))
        if kind == "heat":
            u = f
            for _ in range(n):
                u = oracles.cayley_heat_step(u, S)
            return u
        g = _values_to_function(G, instance.get("g"))
        return oracles.cayley_wave_trajectory(f, g, S, n)[n]
    if kind in ("coset-heat", "coset-wave"):
        P = build_coset(instance)
        f = _project_initial(P, instance.get("f"))
        if kind == "coset-heat":
            u = cosets.lift(f, P)
            for _ in range(n):
                u = oracles.lifted_coset_heat_step(u, P)
            return cosets.restrict(u, P)
        g = _project_initial(P, instance.get("g"))
        u_prev = cosets.lift(f, P)
        if n == 0:
            return cosets.restrict(u_prev, P)
        from .functions import add

        u_curr = add(u_prev, cosets.lift(g, P))
        for _ in range(n - 1):
            u_prev, u_curr = u_curr, oracles.lifted_coset_wave_step(u_prev, u_curr, P)
        return cosets.restrict(u_curr, P)
    if kind in ("tree-heat", "tree-wave"):
        k = int(instance["k"])
        f = _values_to_tree_function(k, instance.get("f"))
        if kind == "tree-heat":
            u = f
            for _ in range(n):
                u = oracles.tree_step_heat(u)
            return u
        g = _values_to_tree_function(k, instance.get("g"))
        u_prev = f
        if n == 0:
            return u_prev
        u_curr = tree.TreeFunction(
            k,
            {
                x: f(x) + g(x)
                for x in f.support() | g.support()
            },
        )
        for _ in range(n - 1):
            u_prev, u_curr = u_curr, oracles.tree_step_wave(u_prev, u_curr)
        return u_curr
    raise ShapeMismatch(f"kind {kind!r} has no oracle")


def _diff_report(closed, oracle):
    """Exact max absolute difference and per-vertex mismatches."""
    if isinstance(closed, tree.TreeFunction):
        keys = closed.support() | oracle.support()
        diffs = {x: closed(x) - oracle(x) for x in keys}
    else:
        keys = closed.support() | oracle.support()
        diffs = {x: closed(x) - oracle(x) for x in keys}
    diffs = {x: d for x, d in diffs.items() if d != 0}
    max_diff = max((abs(d) for d in diffs.values()), default=Fraction(0))
    return max_diff, diffs


def cmd_run(args) -> int:
    instance = _load_problem(args.problem)
    kind = instance.get("kind") or args.kind
    if args.kind and instance.get("kind") not in (None, args.kind):
        raise ShapeMismatch(
            f"problem file kind {instance.get('kind')!r} does not match subcommand {args.kind!r}"
        )
    instance["kind"] = kind
    n = args.n if args.n is not None else int(instance.get("n", 0))
    if n < 0:
        raise ShapeMismatch("time index n must be non-negative")

    if kind == "kernel":
        G = group_from_json(instance["group"])
        S = cayley_generators(instance, G)
        role = instance.get("role", "heat")
        if role == "heat":
            data = cayley.heat_kernel(G, S, n).data
        elif role in ("wave-f", "wave-g"):
            fk, gk = cayley.wave_kernels(G, S, n)
            data = fk.data if role == "wave-f" else gk.data
        else:
            raise ShapeMismatch(f"unknown kernel role {role!r}")
        _emit(data, {"kind": "kernel", "role": role, "n": n, "k": S.degree}, args.out)
        return EXIT_OK

    if kind == "weights":
        k = int(instance["k"])
        which = instance.get("which", "heat")
        lines = ["# " + f"kind=weights which={which} n={n} k={k}", "table,s,num,den"]
        if which == "heat":
            tables = [("heat", tree.tree_heat_weights(k, n))]
        elif which == "wave":
            wf, wg = tree.tree_wave_weights(k, n)
            tables = [("wave-f", wf), ("wave-g", wg)]
        else:
            raise ShapeMismatch(f"unknown weights selector {which!r}")
        for tag, table in tables:
            for s, w in enumerate(table.weights):
                lines.append(f"{tag},{s},{w.numerator},{w.denominator}")
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if kind not in SOLVER_KINDS:
        raise ShapeMismatch(f"unknown problem kind {kind!r}")
    result, header = _solve(instance, n)
    _emit(result, header, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    instance = _load_problem(args.problem)
    kind = instance.get("kind")
    n = args.n if args.n is not None else int(instance.get("n", 0))

    if kind == "kernel":
        # Float cross-check of the exact Z heat kernel against quadrature.
        G = group_from_json(instance["group"])
        S = cayley_generators(instance, G)
        K = cayley.heat_kernel(G, S, n).data
        worst = 0.0
        for r in range(-n, n + 1):
            exact = float(K(make_element(G, [r], [])))
            worst = max(worst, abs(oracles.quadrature_kernel(S, n, r) - exact))
        print(f"kind=kernel n={n} max_abs_diff={worst:.3e} tolerance=1e-09")
        return EXIT_OK if worst <= 1e-9 else EXIT_INTERNAL

    if kind not in SOLVER_KINDS:
        raise ShapeMismatch(f"kind {kind!r} cannot be compared")
    closed, _header = _solve(instance, n)
    if os.environ.get("LATTICE_WAVES_FAULT"):
        # Self-test hook: corrupt one value so the harness must report a diff.
        entries = dict(closed.entries)
        if entries:
            x = next(iter(entries))
            entries[x] = -entries[x]
        closed = type(closed)(closed.k, entries) if isinstance(closed, tree.TreeFunction) \
            else SupportedFunction(closed.group, entries)
    oracle = _oracle_solution(instance, n)
    if kind in ("tree-heat", "tree-wave"):
        # The closed form is only evaluated on the requested window;
        # restrict the oracle to the same vertices before diffing.
        k = int(instance["k"])
        f = _values_to_tree_function(k, instance.get("f"))
        eval_at = _tree_eval_vertices(instance, k, f, n)
        oracle = tree.TreeFunction(k, {x: oracle(x) for x in eval_at})
    max_diff, diffs = _diff_report(closed, oracle)
    print(f"kind={kind} n={n} max_abs_diff={max_diff}")
    if diffs:
        for x, d in sorted(diffs.items(), key=str):
            print(f"  mismatch at {x}: {d}")
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, max_n=args.max_n, seed=args.seed)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  {status}  cases={r.cases}"
        if r.detail:
            line += f"  {r.detail}"
        print(line)
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-waves",
        description="Exact heat/wave solvers on Cayley graphs, coset graphs, and regular trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for kind in sorted(SOLVER_KINDS) + ["kernel", "weights"]:
        p = sub.add_parser(kind, help=f"run the {kind} solver")
        p.add_argument("--problem", required=True, help="path to the problem JSON")
        p.add_argument("--out", help="CSV output path (default stdout)")
        p.add_argument("--n", type=int, help="override the time index")
        p.set_defaults(func=cmd_run, kind=kind)

    p = sub.add_parser("compare", help="run closed form and oracle, report exact diff")
    p.add_argument("--problem", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_compare, kind=None)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--suite", default="all", choices=sorted(verify.SUITES))
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify, kind=None)

    return parser


def main(argv=None) -> int:
    threads = os.environ.get("LATTICE_WAVES_THREADS")
    if threads is not None and (not threads.isdigit() or int(threads) < 1):
        print(json.dumps({"error": "VALIDATION", "detail": "LATTICE_WAVES_THREADS must be a positive integer"}), file=sys.stderr)
        return EXIT_VALIDATION

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotSolvable as exc:
        print(json.dumps({"error": exc.code, "detail": str(exc)}), file=sys.stderr)
        return EXIT_NOT_SOLVABLE
    except LatticeWavesError as exc:
        print(json.dumps({"error": exc.code, "detail": str(exc)}), file=sys.stderr)
        return EXIT_VALIDATION
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        print(json.dumps({"error": "VALIDATION", "detail": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # pragma: no cover
        print(json.dumps({"error": "INTERNAL", "detail": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
