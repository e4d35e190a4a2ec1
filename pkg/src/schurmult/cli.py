"""Command-line front door.

Commands: ``mult`` (multiplicity table), ``schur`` (generalized Schur
polynomial), ``orbit`` (orbit weights), ``character`` (alternant-quotient
character), ``sub`` (height class of dominant weights), ``audit``
(oracle-equivalence sweep), ``bench`` (Schur route vs alternant route
timings).  Output is JSON, CSV, or text; everything except the measured
times in ``bench`` is byte-identical across runs.

Exit codes: 0 success, 1 usage error, 2 audit mismatch, 3 internal
inconsistency (inexact division or a bad linear system).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass

from .lattice import (
    AlgebraContext,
    DominantWeight,
    Partition,
    Weight,
    height,
    orbit_size,
    orbit_weights,
    partition_to_dominant,
    partitions_of,
    sub_Q_lambda1,
)
from .oracle import freudenthal, inflated_exponents, kostka_multiplicity
from .polyengine import InexactDivisionError
from .schur import generalized_schur, schur_context
from .solver import MultiplicityTable, SolverError, dimension, solve_multiplicities
from .weyl import weyl_character_u

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_AUDIT = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class AuditMismatch(Exception):
    pass


@dataclass
class Query:
    """A parsed CLI request."""

    command: str
    rank: int = 0
    weight: tuple[int, ...] | None = None
    partition: tuple[int, ...] | None = None
    height: int | None = None
    fmt: str = "text"
    oracle: bool = False
    ranks: tuple[int, ...] = ()
    max_height: int = 4
    heights: tuple[int, ...] = ()
    flagship: bool = False


def _context(q: Query) -> AlgebraContext:
    if q.rank < 2:
        raise UsageError("--rank must be at least 2")
    return AlgebraContext(q.rank)


def _target_weight(q: Query, ctx: AlgebraContext) -> DominantWeight:
    if (q.weight is None) == (q.partition is None):
        raise UsageError("give exactly one of --weight or --partition")
    if q.weight is not None:
        if len(q.weight) != ctx.N - 1:
            raise UsageError(
                f"--weight needs {ctx.N - 1} comma-separated coordinates for rank {ctx.N}"
            )
        if any(c < 0 for c in q.weight):
            raise UsageError("--weight coordinates must be nonnegative")
        return DominantWeight(q.weight, ctx)
    return partition_to_dominant(_partition_arg(q, ctx), ctx)


def _partition_arg(q: Query, ctx: AlgebraContext) -> Partition:
    assert q.partition is not None
    try:
        p = Partition(q.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if p.length > ctx.N:
        raise UsageError(f"partition {p} has more than {ctx.N} rows")
    return p


def _height_partition(member: DominantWeight, total: int) -> list[int]:
    return [v for v in inflated_exponents(member, total) if v > 0]


def _format_fraction(value) -> str:
    return str(value)


def _poly_terms_json(p) -> list[dict]:
    out = []
    for exps, coeff in p.sorted_terms():
        c = coeff if isinstance(coeff, int) else _format_fraction(coeff)
        out.append({"monomial": list(exps), "coefficient": c})
    return out


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _run_mult(q: Query) -> str:
    ctx = _context(q)
    target = _target_weight(q, ctx)
    table = solve_multiplicities(target)
    total = height(target)
    if q.oracle:
        _check_against_oracles(table)
    payload = {
        "algebra": str(ctx),
        "highest_weight": list(target.coords),
        "dimension": table.dimension,
        "entries": [
            {
                "weight": list(member.coords),
                "partition": _height_partition(member, total),
                "multiplicity": mult,
                "orbit_size": orbit_size(member),
            }
            for member, mult in table
        ],
    }
    if q.oracle:
        payload["oracle_check"] = "ok"
    if q.fmt == "json":
        return _dump_json(payload)
    if q.fmt == "csv":
        rows = [
            [
                " ".join(map(str, e["weight"])),
                " ".join(map(str, e["partition"])),
                e["multiplicity"],
                e["orbit_size"],
            ]
            for e in payload["entries"]
        ]
        return _dump_csv(["weight", "partition", "multiplicity", "orbit_size"], rows)
    lines = [
        f"{payload['algebra']}  highest weight {payload['highest_weight']}  dimension {table.dimension}"
    ]
    for e in payload["entries"]:
        lines.append(
            f"  {','.join(map(str, e['partition'])):18s}"
            f" weight {' '.join(map(str, e['weight'])):14s}"
            f" multiplicity {e['multiplicity']:3d}  orbit {e['orbit_size']}"
        )
    if q.oracle:
        lines.append("oracle check: ok")
    return "\n".join(lines) + "\n"


def _check_against_oracles(table: MultiplicityTable) -> None:
    target = table.highest_weight
    ctx = target.context
    total = height(target)
    fm = freudenthal(target)
    for member, mult in table:
        key = Weight(inflated_exponents(member, total), ctx)
        freud = fm.get(key, 0)
        tableau = kostka_multiplicity(target, member)
        if mult != freud or mult != tableau:
            raise AuditMismatch(
                f"multiplicity of {member} in {target}: solver={mult}, "
                f"recursion={freud}, tableaux={tableau}"
            )
    if table.dimension != dimension(target) or table.dimension != sum(fm.values()):
        raise AuditMismatch(f"dimension mismatch for {target}")


def _run_schur(q: Query) -> str:
    ctx = _context(q)
    if q.partition is None:
        raise UsageError("schur requires --partition")
    p = _partition_arg(q, ctx)
    poly = generalized_schur(p, schur_context(ctx.N))
    if q.fmt == "json":
        return _dump_json(
            {
                "algebra": str(ctx),
                "partition": list(p.parts),
                "variables": ctx.N - 1,
                "terms": _poly_terms_json(poly),
            }
        )
    if q.fmt == "csv":
        rows = [
            [" ".join(map(str, exps)), _format_fraction(coeff)]
            for exps, coeff in poly.sorted_terms()
        ]
        return _dump_csv(["monomial", "coefficient"], rows)
    return f"{poly}\n"


def _run_orbit(q: Query) -> str:
    ctx = _context(q)
    target = _target_weight(q, ctx)
    weights = orbit_weights(target)
    payload = {
        "algebra": str(ctx),
        "weight": list(target.coords),
        "partition": list(target.to_partition().parts),
        "orbit_size": orbit_size(target),
        "weights": [list(w.mu_exponents) for w in weights],
    }
    if q.fmt == "json":
        return _dump_json(payload)
    if q.fmt == "csv":
        return _dump_csv(
            ["exponents"], [[" ".join(map(str, w.mu_exponents))] for w in weights]
        )
    lines = [f"{payload['algebra']}  weight {payload['weight']}  orbit size {payload['orbit_size']}"]
    lines.extend("  " + " ".join(map(str, w.mu_exponents)) for w in weights)
    return "\n".join(lines) + "\n"


def _run_character(q: Query) -> str:
    ctx = _context(q)
    target = _target_weight(q, ctx)
    ch = weyl_character_u(target)
    dim = sum(ch.terms.values())
    if q.fmt == "json":
        return _dump_json(
            {
                "algebra": str(ctx),
                "weight": list(target.coords),
                "dimension": dim,
                "terms": _poly_terms_json(ch),
            }
        )
    if q.fmt == "csv":
        rows = [
            [" ".join(map(str, exps)), coeff] for exps, coeff in ch.sorted_terms()
        ]
        return _dump_csv(["monomial", "coefficient"], rows)
    return f"dimension {dim}\n{ch}\n"


def _run_sub(q: Query) -> str:
    ctx = _context(q)
    if q.height is None or q.height < 1:
        raise UsageError("sub requires --height >= 1")
    members = sub_Q_lambda1(q.height, ctx)
    entries = [
        {
            "partition": _height_partition(member, q.height),
            "weight": list(member.coords),
            "height": height(member),
            "orbit_size": orbit_size(member),
        }
        for member in members
    ]
    if q.fmt == "json":
        return _dump_json({"algebra": str(ctx), "height": q.height, "entries": entries})
    if q.fmt == "csv":
        rows = [
            [
                " ".join(map(str, e["partition"])),
                " ".join(map(str, e["weight"])),
                e["height"],
                e["orbit_size"],
            ]
            for e in entries
        ]
        return _dump_csv(["partition", "weight", "height", "orbit_size"], rows)
    lines = [f"{ctx}  height class {q.height}: {len(entries)} dominant weights"]
    for e in entries:
        lines.append(
            f"  {','.join(map(str, e['partition'])):18s}"
            f" weight {' '.join(map(str, e['weight'])):14s}"
            f" height {e['height']:2d}  orbit {e['orbit_size']}"
        )
    return "\n".join(lines) + "\n"


def _alternant_table(target: DominantWeight) -> list[int]:
    """Multiplicities read directly off the alternant-quotient character."""
    ctx = target.context
    total = height(target)
    ch = weyl_character_u(target)
    members = sub_Q_lambda1(total, ctx)
    return [ch.terms.get(inflated_exponents(m, total), 0) for m in members]


def _run_audit(q: Query) -> str:
    ranks = q.ranks or (3, 4)
    lines = []
    checked = 0
    failures = []
    for n in ranks:
        if n < 2:
            raise UsageError("audit ranks must be at least 2")
        ctx = AlgebraContext(n)
        for h in range(1, q.max_height + 1):
            for parts in partitions_of(h, n - 1):
                target = partition_to_dominant(Partition(parts), ctx)
                label = f"{ctx} h={h} {Partition(parts)}"
                try:
                    table = solve_multiplicities(target)
                    _check_against_oracles(table)
                    direct = _alternant_table(target)
                    solved = [m for _, m in table]
                    if direct != solved:
                        raise AuditMismatch(
                            f"alternant route {direct} != solver route {solved}"
                        )
                except AuditMismatch as exc:
                    failures.append(f"{label}: {exc}")
                    lines.append(f"FAIL {label}: {exc}")
                else:
                    checked += 1
                    lines.append(f"ok   {label}")
    if q.flagship:
        ctx = AlgebraContext(6)
        target = DominantWeight((5, 1, 0, 0, 0), ctx)
        label = f"{ctx} h=7 (6,1)"
        try:
            table = solve_multiplicities(target)
            _check_against_oracles(table)
        except AuditMismatch as exc:
            failures.append(f"{label}: {exc}")
            lines.append(f"FAIL {label}: {exc}")
        else:
            checked += 1
            lines.append(f"ok   {label}")
    lines.append(f"audit: {checked} passed, {len(failures)} failed")
    text = "\n".join(lines) + "\n"
    if failures:
        raise AuditMismatch(text)
    return text


def _run_bench(q: Query) -> str:
    ranks = q.ranks or (3, 4, 5)
    heights = q.heights or (3, 4, 5)
    rows = []
    for n in ranks:
        ctx = AlgebraContext(n)
        for h in heights:
            target = partition_to_dominant(Partition((h,)), ctx)
            t0 = time.perf_counter()
            solve_multiplicities(target)
            schur_ms = (time.perf_counter() - t0) * 1000
            t0 = time.perf_counter()
            _alternant_table(target)
            alternant_ms = (time.perf_counter() - t0) * 1000
            rows.append((n, h, schur_ms, alternant_ms))
    if q.fmt == "json":
        return _dump_json(
            {
                "cells": [
                    {
                        "rank": n,
                        "height": h,
                        "schur_route_ms": round(a, 3),
                        "alternant_route_ms": round(b, 3),
                    }
                    for n, h, a, b in rows
                ]
            }
        )
    lines = [f"{'rank':>4} {'height':>6} {'schur_ms':>10} {'alternant_ms':>13}"]
    for n, h, a, b in rows:
        lines.append(f"{n:>4} {h:>6} {a:>10.3f} {b:>13.3f}")
    return "\n".join(lines) + "\n"


_RUNNERS = {
    "mult": _run_mult,
    "schur": _run_schur,
    "orbit": _run_orbit,
    "character": _run_character,
    "sub": _run_sub,
    "audit": _run_audit,
    "bench": _run_bench,
}


def run(q: Query) -> tuple[int, str]:
    """Execute a query; returns (exit status, serialized output)."""
    runner = _RUNNERS.get(q.command)
    if runner is None:
        return EXIT_USAGE, f"error: unknown command {q.command!r}\n"
    try:
        return EXIT_OK, runner(q)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except AuditMismatch as exc:
        return EXIT_AUDIT, str(exc)
    except (InexactDivisionError, SolverError) as exc:
        return EXIT_INTERNAL, f"internal inconsistency: {exc}\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="schurmult", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, fmt_default="text"):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
        return sub

    mult = add("mult", "multiplicity table of an irreducible representation", "json")
    schur = add("schur", "generalized Schur polynomial of a partition")
    orbit = add("orbit", "weights of one Weyl orbit")
    character = add("character", "irreducible character from the alternant quotient")
    sub_cmd = add("sub", "dominant weights of one height class")
    audit = add("audit", "cross-check solver against the independent oracles")
    bench = add("bench", "time the Schur route against the alternant route")

    for cmd in (mult, schur, orbit, character, sub_cmd):
        cmd.add_argument("--rank", type=int, required=True, help="number of rows N (algebra A(N-1))")
    for cmd in (mult, orbit, character):
        cmd.add_argument("--weight", type=_int_tuple, default=None)
        cmd.add_argument("--partition", type=_int_tuple, default=None)
    schur.add_argument("--partition", type=_int_tuple, required=True)
    sub_cmd.add_argument("--height", type=int, required=True)
    mult.add_argument("--oracle", action="store_true", help="cross-check against oracles")

    audit.add_argument("--ranks", type=_int_tuple, default=())
    audit.add_argument("--max-height", type=int, default=4)
    audit.add_argument("--flagship", action="store_true")

    bench.add_argument("--ranks", type=_int_tuple, default=())
    bench.add_argument("--heights", type=_int_tuple, default=())
    return parser


def parse_query(argv: list[str]) -> Query:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    return Query(
        command=ns.command,
        rank=getattr(ns, "rank", 0),
        weight=getattr(ns, "weight", None),
        partition=getattr(ns, "partition", None),
        height=getattr(ns, "height", None),
        fmt=ns.format,
        oracle=getattr(ns, "oracle", False),
        ranks=getattr(ns, "ranks", ()),
        max_height=getattr(ns, "max_height", 4),
        heights=getattr(ns, "heights", ()),
        flagship=getattr(ns, "flagship", False),
    )


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    try:
        query = parse_query(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status, output = run(query)
    if status == EXIT_OK:
        sys.stdout.write(output)
    else:
        sys.stderr.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
