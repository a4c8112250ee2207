"""Command-line interface: enumeration, classification, stars, and the checks.

Exit codes everywhere: 0 = verified / success, 1 = counterexample or negative
verdict (the report names the witness), 2 = invalid input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .cartan import CartanData, LambdaConfig, Weight, classify_orbit
from .enumeration import (
    CounterexampleError,
    EnumConfig,
    bfs_enumerate,
    box_enumerate_sigma,
    export_graph,
)
from .lattice import (
    ImageMembershipError,
    elt_from_json,
    elt_to_json,
    star_full,
)
from .suites import SUITE_NAMES, render_report, run_suite
from .weyl import is_extremal


def _add_cartan_flags(p: argparse.ArgumentParser, with_weight: bool = True) -> None:
    p.add_argument("--a1", type=int, help="first off-diagonal Cartan entry (negated)")
    p.add_argument("--a2", type=int, help="second off-diagonal Cartan entry (negated)")
    if with_weight:
        p.add_argument("--k1", type=int, help="coefficient of Λ1 in λ = k1·Λ1 − k2·Λ2")
        p.add_argument("--k2", type=int, help="coefficient of −Λ2 in λ = k1·Λ1 − k2·Λ2")


def _add_enum_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--depth", type=int, help="BFS depth from the vacuum (default 8)")
    p.add_argument("--support", type=int, help="box support radius (default 3)")
    p.add_argument("--max-coord", type=int, help="box coordinate bound (default 4)")
    p.add_argument("--weyl-depth", type=int, help="Weyl-walk truncation K (default 8)")


def _load_config_file(path: str) -> dict:
    if path.endswith(".toml"):
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _gather_params(args: argparse.Namespace) -> dict:
    params = {}
    keys = (
        "a1", "a2", "k1", "k2", "depth", "support", "max_coord",
        "weyl_depth", "k_range", "kmax",
    )
    for key in keys:
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if getattr(args, "config", None):
        params.update(_load_config_file(args.config))
    return params


def _enum_config(params: dict) -> EnumConfig:
    cfg = LambdaConfig(
        CartanData(int(params["a1"]), int(params["a2"])),
        int(params["k1"]),
        int(params["k2"]),
    )
    return EnumConfig(
        cfg,
        depth=int(params.get("depth", 8)),
        support=int(params.get("support", 3)),
        max_coord=int(params.get("max_coord", 4)),
        weyl_depth=int(params.get("weyl_depth", 8)),
    )


def _read_element(args: argparse.Namespace):
    text = args.element if args.element else sys.stdin.read()
    return elt_from_json(json.loads(text))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="crystalcone",
        description=(
            "Exact polyhedral model of extremal-weight crystals for rank-2 "
            "hyperbolic Cartan matrices: enumeration, star/extremality "
            "queries, and theorem-level verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a weight's Weyl orbit")
    _add_cartan_flags(p, with_weight=False)
    p.add_argument("--m1", type=int, required=True, help="coefficient of Λ1")
    p.add_argument("--m2", type=int, required=True, help="coefficient of Λ2")
    p.add_argument("--config")

    p = sub.add_parser("enumerate", help="BFS the crystal graph from the vacuum")
    _add_cartan_flags(p)
    _add_enum_flags(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.add_argument("--config")

    p = sub.add_parser("box-enum", help="enumerate cone elements in a coordinate box")
    _add_cartan_flags(p)
    _add_enum_flags(p)
    p.add_argument("--config")

    p = sub.add_parser("star", help="star an element (reads JSON arg or stdin)")
    _add_cartan_flags(p)
    p.add_argument("element", nargs="?", help="element JSON")
    p.add_argument("--config")

    p = sub.add_parser("extremal", help="truncated extremality of an element")
    _add_cartan_flags(p)
    _add_enum_flags(p)
    p.add_argument("element", nargs="?", help="element JSON")
    p.add_argument("--config")

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    _add_cartan_flags(p)
    _add_enum_flags(p)
    p.add_argument("--k-range", type=int, dest="k_range")
    p.add_argument("--kmax", type=int)
    p.add_argument("--config", help="TOML or JSON config; overrides flags")

    p = sub.add_parser("export", help="enumerate and write the graph to a file")
    _add_cartan_flags(p)
    _add_enum_flags(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", required=True)
    p.add_argument("--config")

    args = parser.parse_args(argv)

    try:
        if args.command == "classify":
            params = _gather_params(args)
            cartan = CartanData(int(params["a1"]), int(params["a2"]))
            verdict = classify_orbit(cartan, Weight(args.m1, args.m2))
            print(json.dumps(verdict.to_json(), indent=2))
            return 0

        if args.command in ("enumerate", "export"):
            ec = _enum_config(_gather_params(args))
            try:
                result = bfs_enumerate(ec)
            except CounterexampleError as exc:
                print(
                    json.dumps(
                        {"error": str(exc), "witness": elt_to_json(exc.element)},
                        indent=2,
                    ),
                    file=sys.stderr,
                )
                return 1
            text = export_graph(result.elements, result, fmt=args.format)
            _emit(text, args.out if args.command == "export" else getattr(args, "out", None))
            return 0

        if args.command == "box-enum":
            ec = _enum_config(_gather_params(args))
            elements = box_enumerate_sigma(ec)
            print(json.dumps([elt_to_json(e) for e in elements], indent=2))
            return 0

        if args.command == "star":
            params = _gather_params(args)
            cartan = CartanData(int(params["a1"]), int(params["a2"]))
            elt = _read_element(args)
            starred = star_full(cartan, elt)
            print(json.dumps(elt_to_json(starred), indent=2))
            return 0

        if args.command == "extremal":
            params = _gather_params(args)
            cartan = CartanData(int(params["a1"]), int(params["a2"]))
            elt = _read_element(args)
            K = int(params.get("weyl_depth", 8))
            report = is_extremal(cartan, elt, K)
            print(json.dumps(report.to_json(), indent=2))
            return 0 if report.extremal else 1

        if args.command == "check":
            code, report = run_suite(args.suite, _gather_params(args))
            print(render_report(report))
            return code

    except (KeyError, TypeError) as exc:
        print(f"invalid configuration: missing or bad parameter {exc}", file=sys.stderr)
        return 2
    except (ValueError, ImageMembershipError, json.JSONDecodeError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2

    parser.error(f"unhandled command {args.command}")
    return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
