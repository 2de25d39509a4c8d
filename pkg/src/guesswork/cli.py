"""Command-line front ends: `guesswork` and `symmetries`.

Exit codes: 0 on success, 1 for usage or parse errors, 2 when an
algorithm's preconditions are violated (for example requesting the
paired search on a set without central symmetry, or the polynomial
symmetry finder on a non-spanning set).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .documents import DocumentError, format_document, parse_document
from .ensemble import Ensemble
from .errors import PreconditionError, SpanningError
from .ring import RingMismatchError
from .search import compute_guesswork
from .solids import canonical_name, list_solids, solid
from .symmetry import find_symmetries, symmetries_exhaustive, symmetries_fast


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_flags(parser: _Parser) -> None:
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--solid", metavar="NAME", help="one of the built-in solids")
    src.add_argument("--file", metavar="PATH", help="JSON ensemble document")


def _load_input(args) -> tuple[Ensemble, str]:
    if args.solid:
        name = canonical_name(args.solid)
        return solid(name), name
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError(f"cannot read {args.file}: {exc.strerror}") from None
        return parse_document(text), args.file
    raise DocumentError("no input: pass --solid NAME or --file PATH")


def _ring_json(ens: Ensemble):
    return "integers" if ens.ring.k is None else {"k": ens.ring.k}


def _scalar_json(s):
    return s.z0 if s.ring.k is None else [s.z0, s.z1]


def main_guesswork(argv=None) -> int:
    parser = _Parser(
        prog="guesswork",
        description="Exact minimum guesswork of a qubit ensemble of Bloch vectors.",
    )
    _add_input_flags(parser)
    parser.add_argument("--list-solids", action="store_true", help="list built-in solids and exit")
    parser.add_argument("--export", action="store_true", help="print the input as a JSON document and exit")
    parser.add_argument(
        "--algorithm",
        default="auto",
        choices=["auto", "exhaustive", "symmetric", "central", "transitive"],
        help="search restriction (default: auto-detected symmetries)",
    )
    parser.add_argument("--digits", type=int, default=4, help="decimal digits to render (default 4)")
    parser.add_argument("--workers", type=int, default=1, help="parallel search processes")
    parser.add_argument("--engine", default="auto", choices=["auto", "python", "compiled"])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--witness", action="store_true", help="include a maximizing tuple")
    args = parser.parse_args(argv)

    try:
        if args.list_solids:
            for info in list_solids():
                ring = "Z" if info.k is None else f"Z[sqrt({info.k})]"
                print(f"{info.name}: N = {info.n}, ring {ring}")
            return 0
        if args.digits < 1:
            raise DocumentError("--digits must be >= 1")
        if args.workers < 1:
            raise DocumentError("--workers must be >= 1")
        ens, label = _load_input(args)
        if args.export:
            sys.stdout.write(format_document(ens))
            return 0
        t0 = time.perf_counter()
        result = compute_guesswork(
            ens, args.algorithm, engine=args.engine, workers=args.workers
        )
        elapsed_ms = int((time.perf_counter() - t0) * 1000)
    except (DocumentError, RingMismatchError) as exc:
        print(f"guesswork: error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"guesswork: precondition violated: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"guesswork: error: {exc}", file=sys.stderr)
        return 1

    if args.json:
        payload = {
            "n": ens.n,
            "ring": _ring_json(ens),
            "scale": _scalar_json(ens.scale),
            "g_raw": _scalar_json(result.raw),
            "g_scale": _scalar_json(result.scale),
            "g_decimal": result.g_decimal(args.digits),
            "gmin_exact": result.gmin_exact(),
            "gmin_decimal": result.gmin_decimal(args.digits),
            "algorithm": result.algorithm,
            "states_examined": result.states_examined,
            "elapsed_ms": elapsed_ms,
        }
        if args.witness:
            payload["witness"] = list(result.witness)
        print(json.dumps(payload))
    else:
        ring = "Z" if ens.ring.k is None else f"Z[sqrt({ens.ring.k})]"
        print(f"ensemble: {label} (N = {ens.n}, ring {ring}, scale {ens.scale})")
        print(f"algorithm: {result.algorithm} ({result.states_examined} states, {elapsed_ms} ms)")
        print(f"g = {result.g_string()} ~ {result.g_decimal(args.digits)}")
        print(f"G_min = {result.gmin_exact()} ~ {result.gmin_decimal(args.digits)}")
        if args.witness:
            print(f"witness: {list(result.witness)}")
    return 0


def main_symmetries(argv=None) -> int:
    parser = _Parser(
        prog="symmetries",
        description="All geometric symmetries of an exact point set.",
    )
    _add_input_flags(parser)
    parser.add_argument(
        "--algorithm",
        default="auto",
        choices=["auto", "exhaustive", "fast"],
        help="fast needs a spanning set; auto falls back to exhaustive",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--perms", action="store_true", help="print the permutation list")
    args = parser.parse_args(argv)

    try:
        ens, label = _load_input(args)
        t0 = time.perf_counter()
        if args.algorithm == "fast":
            try:
                group = symmetries_fast(ens)
            except SpanningError as exc:
                raise SpanningError(f"{exc}; try --algorithm exhaustive") from None
        elif args.algorithm == "exhaustive":
            group = symmetries_exhaustive(ens)
        else:
            group = find_symmetries(ens)
        elapsed_ms = int((time.perf_counter() - t0) * 1000)
    except DocumentError as exc:
        print(f"symmetries: error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"symmetries: precondition violated: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"symmetries: error: {exc}", file=sys.stderr)
        return 1

    perms = sorted(group.permutations)
    if args.json:
        payload = {
            "n": ens.n,
            "ring": _ring_json(ens),
            "order": group.order,
            "centrally_symmetric": group.centrally_symmetric,
            "vertex_transitive": group.vertex_transitive,
            "algorithm": args.algorithm,
            "elapsed_ms": elapsed_ms,
        }
        if args.perms:
            payload["permutations"] = [list(p) for p in perms]
        print(json.dumps(payload))
    else:
        flags = [
            "centrally symmetric" if group.centrally_symmetric else "not centrally symmetric",
            "vertex transitive" if group.vertex_transitive else "not vertex transitive",
        ]
        print(f"ensemble: {label} (N = {ens.n})")
        print(f"order {group.order}, " + ", ".join(flags))
        if args.perms:
            for p in perms:
                print(" ", list(p))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main_guesswork())
