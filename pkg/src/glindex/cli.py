"""Command-line interface: JSON in, sorted JSON out.

Exit codes: 0 success, 2 malformed input, 3 unsupported parameter range.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from pathlib import Path

from .betti import UnsupportedInputError, betti_table, gl_index, INFINITY
from .clutter import CATALOG_NAMES, Clutter, catalog, family_C_matcher
from .complex import parse_field
from .linpres import linearly_presented_graph, power_check
from .monomial import MonomialIdeal, ideal_from_json
from .search import (
    UnsupportedRangeError,
    case_census_deg6,
    enumerate_omega,
    family_D,
    family_D_matcher,
    kappa,
)

EXIT_MALFORMED = 2
EXIT_UNSUPPORTED = 3


class MalformedInput(ValueError):
    pass


def load_input(source: str) -> Clutter | MonomialIdeal:
    """A catalog name, or a JSON file holding an ideal or a clutter."""
    if source in CATALOG_NAMES:
        return catalog()[source]
    path = Path(source)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise MalformedInput(f"no such file or catalog name: {source}") from None
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read {source}: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedInput("input JSON must be an object")
    is_ideal = {"vars", "generators"} <= data.keys()
    is_clutter = {"n", "d", "circuits"} <= data.keys()
    if is_ideal == is_clutter:
        raise MalformedInput("cannot tell whether the input is an ideal or a clutter")
    try:
        if is_ideal:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                ideal = ideal_from_json(data)
            for w in caught:
                print(f"warning: {w.message}", file=sys.stderr)
            return ideal
        return Clutter.from_json(data)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def _ideal(obj) -> MonomialIdeal:
    return obj.edge_ideal() if isinstance(obj, Clutter) else obj


def _clutter(obj) -> Clutter:
    if not isinstance(obj, Clutter):
        raise MalformedInput("this command needs a clutter, not an ideal")
    return obj


def _index_json(x) -> int | str:
    return "infinity" if x == INFINITY else int(x)


def cmd_betti(args) -> dict:
    return betti_table(_ideal(load_input(args.input)), args.field).to_json()


def cmd_index(args) -> dict:
    I = _ideal(load_input(args.input))
    if args.power > 1:
        I = I.power(args.power)
    return {"index": _index_json(gl_index(I, args.field)), "power": args.power}


def cmd_linpres(args) -> dict:
    I = _ideal(load_input(args.input))
    return power_check(I, args.power).to_json()


def _d_matcher(args):
    return family_D_matcher(jobs=args.jobs, cache=args.cache_dir)


def cmd_check_free(args) -> dict:
    C = _clutter(load_input(args.input))
    if args.complement:
        C = C.complement()
    if C.d != 3:
        raise UnsupportedRangeError("the families are 3-uniform")
    matcher = family_C_matcher() if args.family == "C" else _d_matcher(args)
    out = matcher.check(C).to_json()
    out["family"] = args.family
    return out


def cmd_classify(args) -> dict:
    C = _clutter(load_input(args.input))
    if C.d != 3:
        raise UnsupportedRangeError("classify expects a 3-uniform clutter")
    I = C.edge_ideal()
    return {
        "complement_C_free": bool(family_C_matcher().check(C.complement())),
        "D_free": bool(_d_matcher(args).check(C)),
        "index_gt1": bool(linearly_presented_graph(I)),
        "index_sq_gt1": bool(power_check(I, 2)),
    }


def cmd_enumerate(args) -> dict:
    res = enumerate_omega(args.d, args.k, args.n, jobs=args.jobs, cache=args.cache_dir)
    return res.to_json(with_reps=args.reps)


def cmd_census(args) -> dict:
    return case_census_deg6().to_json()


def cmd_kappa(args) -> dict:
    return kappa(args.d, jobs=args.jobs).to_json()


def cmd_catalog(args) -> dict:
    cat = catalog()
    if args.name is None:
        return {"names": list(CATALOG_NAMES)}
    if args.name not in cat:
        raise MalformedInput(f"unknown catalog name {args.name!r}")
    return {"name": args.name, "value": cat[args.name].to_json()}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals, default) or a prime")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    common.add_argument("--cache-dir", default=None,
                        help="cache directory (GLINDEX_CACHE_DIR overrides)")

    p = argparse.ArgumentParser(prog="glindex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("betti", parents=[common], help="multigraded and graded Betti table")
    s.add_argument("input")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("index", parents=[common], help="Green-Lazarsfeld index")
    s.add_argument("input")
    s.add_argument("--power", type=int, default=1)
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("linpres", parents=[common], help="linear presentation via the generator graph")
    s.add_argument("input")
    s.add_argument("--power", type=int, default=1)
    s.set_defaults(func=cmd_linpres)

    s = sub.add_parser("check-free", parents=[common], help="induced family-freeness")
    s.add_argument("input")
    s.add_argument("--family", choices=["C", "D"], default="C")
    s.add_argument("--complement", action="store_true", help="test the complement clutter")
    s.set_defaults(func=cmd_check_free)

    s = sub.add_parser("classify", parents=[common], help="all four predicates for a 3-clutter")
    s.add_argument("input")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", parents=[common], help="count minimal obstructions")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--reps", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census-105", parents=[common], help="degree-6 case census")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("kappa", parents=[common], help="exhaustive kappa_d")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_kappa)

    s = sub.add_parser("catalog", parents=[common], help="named clutters and ideals")
    s.add_argument("--name", default=None)
    s.set_defaults(func=cmd_catalog)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.field = parse_field(args.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if getattr(args, "power", 1) < 1:
        print("error: --power must be positive", file=sys.stderr)
        return EXIT_UNSUPPORTED
    try:
        result = args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (UnsupportedRangeError, UnsupportedInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
