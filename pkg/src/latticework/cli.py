"""Command line front end binding every module behind stable JSON output.

Commands: construct, analyze, normalize, boundary, verify, search,
reproduce.  Families travel as {"n": int, "sets": [[elements]...]} JSON.
Every command other than a bare `construct` wraps its results in a run
report that echoes the command, parameters, seed, version, and timing, so
a report is reproducible from its own content.  Exact rationals are
rendered as strings like "4/3"; exit codes are 0 (pass), 1 (verification
failure), 2 (usage error), 3 (budget exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from fractions import Fraction

from . import __version__
from .colouring import EdgeColouredGraph, LayerPairGraph
from .constructions import (
    Diamond,
    diamond_family,
    disconnected_extremal,
    full_layer_pair,
    sharp_family,
)
from .core import (
    DomainError,
    LatticeError,
    PreconditionError,
    ResourceLimitError,
    SetFamily,
    comparability_graph,
    count_two_chains,
    full_cube,
    height,
    mask_of,
)
from .lubell import lubell
from .normalize import (
    NormalizationError,
    make_skipless,
    make_skipless_with_trace,
    skip_count,
)
from .search import (
    la_exact,
    la_exact_restricted,
    lambda_star_exact,
    mad_star_probe,
    max_disconnected,
    min_two_chains,
    xi_star_exact,
)
from .shadow import boundary_report
from .verify import REPRODUCTIONS, run_reproduction, run_verifier

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


def _jsonify(obj):
    """Make a result tree JSON-safe: fractions to 'p/q', tuples to lists."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or isinstance(obj, (int, str, float)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, SetFamily):
        return obj.to_jsonable()
    return str(obj)


def _load_family(path: str) -> SetFamily:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(
            f"parse error in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        return SetFamily.from_jsonable(data)
    except (LatticeError, KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"invalid family in {path}: {exc}") from exc


def _parse_elements(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError as exc:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from exc
    return parts


def _witness_jsonable(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, SetFamily):
        out = witness.to_jsonable()
        out["digest"] = witness.digest()
        return out
    if isinstance(witness, LayerPairGraph):
        return {"a": witness.a.to_jsonable(), "b": witness.b.to_jsonable()}
    if isinstance(witness, EdgeColouredGraph):
        return witness.to_jsonable()
    return _jsonify(witness)


def _flatten(obj, prefix: str, lines: list[str]) -> None:
    if isinstance(obj, dict):
        for key, val in obj.items():
            _flatten(val, f"{prefix}{key}." if prefix else f"{key}.", lines)
        return
    label = prefix[:-1]
    if isinstance(obj, list):
        if all(not isinstance(v, (list, dict)) for v in obj):
            lines.append(f"{label}: {', '.join(str(v) for v in obj)}")
        else:
            lines.append(f"{label}: {json.dumps(obj, separators=(',', ':'))}")
        return
    lines.append(f"{label}: {obj}")


def _emit(report: dict, fmt: str) -> None:
    report = _jsonify(report)
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        lines: list[str] = []
        _flatten(report, "", lines)
        print("\n".join(lines))


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise _UsageError(f"--{name.replace('_', '-')} is required here")


def cmd_construct(args) -> tuple[dict, dict, int]:
    name = args.name
    if name == "sharp":
        _require(args, "n", "k")
        fam = sharp_family(args.n, args.k, ceil_middle=args.ceil_middle)
    elif name == "disconnected":
        _require(args, "n")
        fam = disconnected_extremal(args.n)
    elif name == "diamond":
        _require(args, "n", "top")
        bottom = mask_of(_parse_elements(args.bottom))
        top = mask_of(_parse_elements(args.top))
        fam = diamond_family(Diamond(bottom, top), args.n)
    elif name == "full-cube":
        _require(args, "n")
        fam = full_cube(args.n)
    elif name == "layer-pair":
        _require(args, "n", "k")
        a, b = full_layer_pair(args.n, args.k)
        fam = SetFamily.from_masks(args.n, a.members + b.members)
    else:
        raise _UsageError(f"unknown construction {name!r}")
    params = {"name": name, "n": args.n, "k": args.k}
    results = {"family": fam.to_jsonable(), "size": len(fam), "digest": fam.digest()}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(fam.to_jsonable(), fh, indent=2)
            fh.write("\n")
        results["written_to"] = args.out
    return params, results, EXIT_OK


def cmd_analyze(args) -> tuple[dict, dict, int]:
    fam = _load_family(args.family)
    results: dict = {"n": fam.n, "size": len(fam), "digest": fam.digest()}
    if len(fam) == 0:
        results.update({"height": None, "lubell": Fraction(0), "two_chains": 0, "skips": 0})
        return {"family": args.family}, results, EXIT_OK
    g = comparability_graph(fam)
    results["height"] = height(fam)
    results["component_orders"] = sorted(g.component_orders)
    results["component_order_histogram"] = dict(sorted(Counter(g.component_orders).items()))
    results["component_size_histogram"] = dict(sorted(Counter(g.component_sizes).items()))
    results["two_chains"] = count_two_chains(fam)
    results["lubell"] = lubell(fam)
    results["skips"] = skip_count(fam)
    return {"family": args.family}, results, EXIT_OK


def cmd_normalize(args) -> tuple[dict, dict, int]:
    _require(args, "t")
    fam = _load_family(args.family)
    before = skip_count(fam)
    if args.trace:
        out, steps = make_skipless_with_trace(fam, args.t)
        trace = [[s.added, s.removed] for s in steps]
    else:
        out = make_skipless(fam, args.t)
        trace = None
    results = {
        "family": out.to_jsonable(),
        "digest": out.digest(),
        "size": len(out),
        "skips_before": before,
        "skips_after": skip_count(out),
    }
    if trace is not None:
        results["trace"] = trace
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(out.to_jsonable(), fh, indent=2)
            fh.write("\n")
        results["written_to"] = args.out
    return {"family": args.family, "t": args.t, "trace": bool(args.trace)}, results, EXIT_OK


def cmd_boundary(args) -> tuple[dict, dict, int]:
    fam = _load_family(args.family)
    try:
        with open(args.split_file, "r", encoding="utf-8") as fh:
            split = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {args.split_file}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(
            f"parse error in {args.split_file} at line {exc.lineno}: {exc.msg}"
        ) from exc
    if not isinstance(split, dict) or "a" not in split or "b" not in split:
        raise _UsageError('split file must be {"a": [component indices], "b": [...]}')
    g = comparability_graph(fam)
    side_a, side_b = list(split["a"]), list(split["b"])
    chosen = side_a + side_b
    if sorted(chosen) != list(range(g.n_components)):
        raise _UsageError(
            f"split must use each of the {g.n_components} component indices exactly once"
        )
    if not side_a or not side_b:
        raise _UsageError("both sides of the split must be nonempty")

    def side(indices: list[int]) -> SetFamily:
        masks: list[int] = []
        for i in indices:
            masks.extend(g.component_family(i).members)
        return SetFamily.from_masks(fam.n, masks)

    results = boundary_report(side(side_a), side(side_b))
    params = {"family": args.family, "split_file": args.split_file, "a": side_a, "b": side_b}
    return params, results, EXIT_OK


_VERIFY_PARAM_NAMES = {
    "blym": ("n", "samples", "seed", "family"),
    "diamond-blym": ("n", "samples", "seed", "sharp_n", "family"),
    "kk": ("n", "k", "samples", "seed"),
    "technical": ("nmax", "kmax"),
    "colouring": ("n", "k", "samples", "seed"),
    "fact-ab": ("n", "budget_nodes"),
    "key-lemma": ("n", "budget_nodes"),
}


def cmd_verify(args) -> tuple[dict, dict, int]:
    allowed = _VERIFY_PARAM_NAMES.get(args.name)
    if allowed is None:
        raise _UsageError(f"unknown suite {args.name!r}; choose from {sorted(_VERIFY_PARAM_NAMES)}")
    kwargs = {}
    for key in allowed:
        if key == "family":
            if args.family is not None:
                kwargs["family"] = _load_family(args.family)
        elif key == "seed":
            kwargs["seed"] = args.seed
        elif key == "budget_nodes":
            if args.budget_nodes is not None:
                kwargs["budget_nodes"] = args.budget_nodes
        elif getattr(args, key) is not None:
            kwargs[key] = getattr(args, key)
    results = run_verifier(args.name, **kwargs)
    params = {k: (args.family if k == "family" else v) for k, v in kwargs.items()}
    return {"suite": args.name, **params}, results, EXIT_OK if results["passed"] else EXIT_FAIL


def cmd_search(args) -> tuple[dict, dict, int]:
    budget = {} if args.budget_nodes is None else {"budget_nodes": args.budget_nodes}
    op = args.op
    if op == "la":
        _require(args, "n", "t")
        res = la_exact(args.n, args.t, **budget)
    elif op == "la-restricted":
        _require(args, "n", "t", "kmin", "kmax")
        res = la_exact_restricted(args.n, args.t, args.kmin, args.kmax, **budget)
    elif op == "lambda-star":
        _require(args, "n", "t")
        res = lambda_star_exact(args.n, args.t, **budget)
    elif op == "disconnected":
        _require(args, "n")
        res = max_disconnected(args.n, **budget)
    elif op == "xi-star":
        _require(args, "n", "m")
        res = xi_star_exact(args.n, args.m, **budget)
    elif op == "min2chains":
        _require(args, "n", "m")
        res = min_two_chains(args.n, args.m, **budget)
    elif op == "madstar":
        _require(args, "t")
        res = mad_star_probe(args.t, **budget)
    else:
        raise _UsageError(f"unknown search operation {op!r}")
    params = {
        "op": op,
        **{k: getattr(args, k) for k in ("n", "t", "m", "kmin", "kmax") if getattr(args, k) is not None},
    }
    results = {
        "value": res.value,
        "nodes_explored": res.nodes_explored,
        "proven_optimal": res.proven_optimal,
        "witness": _witness_jsonable(res.witness),
    }
    return params, results, EXIT_OK if res.proven_optimal else EXIT_BUDGET


def cmd_reproduce(args) -> tuple[dict, dict, int]:
    if args.list:
        results = {
            "registry": [
                {"name": rep.name, "summary": rep.summary, "expected": str(rep.expected)}
                for rep in REPRODUCTIONS.values()
            ]
        }
        return {"list": True}, results, EXIT_OK
    if args.name is None:
        raise _UsageError("give a reproduction name or --list")
    results = run_reproduction(args.name)
    return {"name": args.name}, results, EXIT_OK if results["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticework",
        description="Exact workbench for subfamilies of the Boolean lattice.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    parser.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; all operations run single-threaded")
    parser.add_argument("--budget-nodes", type=int, default=None, dest="budget_nodes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named construction as family JSON")
    p.add_argument("name", choices=("sharp", "disconnected", "diamond", "full-cube", "layer-pair"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ceil-middle", action="store_true", dest="ceil_middle")
    p.add_argument("--bottom", help="diamond bottom corner, comma-separated elements")
    p.add_argument("--top", help="diamond top corner, comma-separated elements")
    p.add_argument("--out", help="also write the family JSON to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="size, height, components, 2-chains, Lubell, skips")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("normalize", help="rewrite to a skipless family of equal size")
    p.add_argument("--family", required=True)
    p.add_argument("--t", type=int, help="component order bound the input satisfies")
    p.add_argument("--trace", action="store_true", help="record (added, removed) mask pairs")
    p.add_argument("--out", help="also write the result family JSON to this file")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("boundary", help="boundary families and excluded count of a split")
    p.add_argument("--family", required=True)
    p.add_argument("--split-file", required=True, dest="split_file",
                   help='JSON {"a": [component indices], "b": [...]}')
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("name", choices=sorted(_VERIFY_PARAM_NAMES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--sharp-n", type=int, dest="sharp_n")
    p.add_argument("--family")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exact extremal searches with explicit budgets")
    p.add_argument("op", choices=("la", "la-restricted", "lambda-star", "disconnected",
                                  "xi-star", "min2chains", "madstar"))
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--kmin", type=int)
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="rerun a pinned computation and diff the value")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.time()
    try:
        params, results, code = args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, PreconditionError, NormalizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.command == "construct" and not args.out:
        # Bare construct emits the family file format itself, so the output
        # pipes straight back into --family arguments.
        print(json.dumps(results["family"], indent=2))
        return code
    report = {
        "command": args.command,
        "params": params,
        "results": results,
        "seed": args.seed,
        "version": __version__,
        "timing_seconds": round(time.time() - started, 6),
    }
    _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
