"""Command-line interface: ``kces <subcommand> ...``.

Exit status is 0 whenever a result was computed (an extendible verdict is a
result, not a failure) and 2 on usage, format or precondition errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds, io
from .bounds import Scenario
from .catalog import NAMES, catalog
from .construction import build_kces, min_spanning_count
from .errors import FormatError, KcesError
from .states import SubspaceBasis, ppt_state_from_set, vector_depth
from .unextendibility import verify_level


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _scenario(args) -> Scenario:
    return Scenario(args.d, args.n, args.k)


def cmd_dims(args) -> None:
    s = _scenario(args)
    info = {
        "max_kces_dim": bounds.max_kces_dim(s),
        "optimal_partition_shape": list(bounds.optimal_partition_shape(s)),
        "min_spanning_count": min_spanning_count(s),
    }
    if args.json:
        _emit(io.dumps(info), None)
        return
    print(f"max k-CES dim: {info['max_kces_dim']}")
    print(f"optimal partition shape: {','.join(map(str, info['optimal_partition_shape']))}")
    print(f"min spanning count: {info['min_spanning_count']}")


def cmd_bounds(args) -> None:
    s = _scenario(args)
    combined, strict = bounds.combined_lower_bound(s)
    info = {
        "trivial": bounds.min_upb_trivial(s),
        "pigeonhole": bounds.pigeonhole_bound(s),
        "combined": combined,
        "pigeonhole_strict": strict,
    }
    if args.json:
        _emit(io.dumps(info), None)
        return
    print(f"trivial bound: {info['trivial']}")
    print(f"pigeonhole bound: {info['pigeonhole']}")
    print(f"combined bound: {combined} (pigeonhole strict: {str(strict).lower()})")


def _parse_nodes(raw: str) -> list[Fraction]:
    try:
        return [io.parse_rational(x) for x in raw.split(",")]
    except FormatError as exc:
        raise FormatError(f"--nodes: {exc}") from None


def cmd_construct(args) -> None:
    nodes = _parse_nodes(args.nodes) if args.nodes else None
    count = args.count
    if nodes is not None and count is None:
        count = len(nodes)
    result = build_kces(_scenario(args), count, nodes)
    _emit(io.dumps(io.kces_result_to_json(result)), args.out)


def cmd_verify(args) -> None:
    s = io.product_set_from_json(io.load_json(args.input))
    _emit(io.dumps(io.verdict_to_json(verify_level(s, args.level))), None)


def _depth_targets(obj) -> tuple[tuple[int, ...], list]:
    if isinstance(obj, dict) and "vector" in obj:
        b = io.subspace_basis_from_json({"dims": obj.get("dims"), "basis": [obj["vector"]]})
    else:
        b = io.subspace_basis_from_json(obj)
    return b.dims, list(b.basis)


def cmd_depth(args) -> None:
    dims, rows = _depth_targets(io.load_json(args.input))
    if args.row is not None:
        if not 0 <= args.row < len(rows):
            raise FormatError(f"--row {args.row} out of range (0..{len(rows) - 1})")
        picked = [(args.row, rows[args.row])]
    else:
        picked = list(enumerate(rows))
    report = []
    for i, v in picked:
        depth, finest = vector_depth(v, dims)
        report.append({"row": i, "depth": depth, "partition": finest.labels()})
    if args.json:
        _emit(io.dumps(report), None)
        return
    for item in report:
        blocks = "|".join(",".join(map(str, b)) for b in item["partition"])
        print(f"row {item['row']}: depth {item['depth']}, finest partition {blocks}")


def cmd_catalog(args) -> None:
    item = catalog(args.name, args.n)
    if isinstance(item, SubspaceBasis):
        obj = io.subspace_basis_to_json(item)
    else:
        obj = io.product_set_to_json(item)
    _emit(io.dumps(obj), args.out)


def cmd_ppt_state(args) -> None:
    s = io.product_set_from_json(io.load_json(args.input))
    rho, verdicts = ppt_state_from_set(s)
    obj = {
        "dims": list(s.dims),
        "rho": [[io.rational_to_str(x) for x in row] for row in rho],
        "ppt": verdicts,
    }
    _emit(io.dumps(obj), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kces",
        description="Entanglement-depth subspaces: dimensions, bounds, constructions, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_parser(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--d", type=int, required=True, help="local dimension")
        p.add_argument("--n", type=int, required=True, help="number of parties")
        p.add_argument("--k", type=int, required=True, help="depth threshold")
        return p

    p = scenario_parser("dims", "maximal dimension and minimal spanning count")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_dims)

    p = scenario_parser("bounds", "lower bounds on UPB cardinality")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_bounds)

    p = scenario_parser("construct", "build a Vandermonde k-CES")
    p.add_argument("--count", type=int, help="number of Vandermonde vectors")
    p.add_argument("--nodes", help="comma-separated increasing positive rationals")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="level-j unextendibility of a product set")
    p.add_argument("--in", dest="input", required=True, help="product set JSON file")
    p.add_argument("--level", type=int, required=True, help="producibility level j")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("depth", help="entanglement depth of vectors")
    p.add_argument("--in", dest="input", required=True, help="subspace basis or vector JSON file")
    p.add_argument("--row", type=int, help="only this basis row")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("catalog", help="emit a named reference set")
    p.add_argument("--name", required=True, help=f"one of: {', '.join(NAMES)}")
    p.add_argument("--n", type=int, default=3, help="qubit count for ghz")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("ppt-state", help="normalized complement projector and its PPT checks")
    p.add_argument("--in", dest="input", required=True, help="product set JSON file")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_ppt_state)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (KcesError, OSError) as exc:
        print(f"kces {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
