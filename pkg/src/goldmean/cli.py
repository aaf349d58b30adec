"""Command-line front end.

Every invocation is deterministic: identical argv produces byte-identical
output.  Three formats are supported everywhere: ``text`` (human-readable),
``json`` (one object with keys command/inputs/results/errors) and ``tsv``
(tab-separated, one record per line).  Exit codes: 0 success, 1 usage
error, 2 domain error; domain errors print a single ``error: <code>: ...``
line to stderr and nothing to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, Decimal
from fractions import Fraction

from .errors import DomainError
from .harmonic import build_table, cross_check_integer_means, key_rows
from .quadratics import generalized_gm, metallic_mean
from .surds import QuadraticSurd, continued_fraction_of, to_decimal
from .triangles import diophantus_triple, table_one
from .trinomials import (
    DEFAULT_CONFIG,
    RootSet,
    SolverConfig,
    TrinomialSpec,
    solve_euler,
    solve_gm_general,
    solve_stakhov,
    solve_trinomial,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


@dataclass
class _Output:
    inputs: dict
    records: list
    text: list[str]
    tsv_rows: list[list] = field(default_factory=list)


def _truncate_float(value: float, digits: int) -> str:
    """Decimal rendering of a float, truncated toward zero."""
    quantum = Decimal(1).scaleb(-digits)
    return str(Decimal(value).quantize(quantum, rounding=ROUND_DOWN))


def _surd_json(surd: QuadraticSurd) -> dict:
    return {
        "a_num": surd.rat.numerator,
        "a_den": surd.rat.denominator,
        "b_num": surd.coeff.numerator,
        "b_den": surd.coeff.denominator,
        "d": surd.radicand,
    }


#: floats this close to zero are a zero root, not a positive one
_POSITIVE_EPS = 1e-9


def _root_records(roots: RootSet, digits: int,
                  exact: list[QuadraticSurd] | None = None) -> tuple[list, list, list]:
    """Records, text lines and tsv rows for a root set, largest root first."""
    records, lines, rows = [], [], []
    descending = list(reversed(roots.roots))
    for i, rec in enumerate(descending):
        label = f"x{i + 1}"
        if exact is not None:
            decimal = to_decimal(exact[i], digits)
            satisfactory = exact[i].sign() > 0
        else:
            decimal = _truncate_float(rec.value, digits)
            satisfactory = rec.value > _POSITIVE_EPS
        record = {
            "label": label,
            "decimal": decimal,
            "value": rec.value,
            "bracket_lo": rec.bracket[0],
            "bracket_hi": rec.bracket[1],
            "residual": rec.residual,
            "iterations": rec.iterations,
            "satisfactory": satisfactory,
        }
        line = f"{label} = {decimal}"
        if satisfactory:
            line += " (satisfactory)"
        if exact is not None:
            record["exact"] = _surd_json(exact[i])
            record["surd"] = str(exact[i])
            line += f"   [{exact[i]}]"
        records.append(record)
        lines.append(line)
        rows.append([rec.value, rec.bracket[0], rec.bracket[1], rec.residual])
    return records, lines, rows


def _solver_config(ns) -> SolverConfig:
    tol = getattr(ns, "tol", None)
    return SolverConfig(tolerance=tol) if tol is not None else DEFAULT_CONFIG


def _cmd_solve(ns) -> _Output:
    cfg = _solver_config(ns)
    roots = solve_gm_general(ns.n, ns.m, cfg)
    inputs = {"n": ns.n, "m": ns.m, "tolerance": cfg.tolerance}
    exact = None
    if ns.n == 2:
        pair = generalized_gm(ns.m)
        exact = [pair.x1, pair.x2]
        inputs["r"] = 2 * ns.m + 1
    records, lines, rows = _root_records(roots, ns.digits, exact)
    if ns.n == 2:
        lines.append(f"r = {2 * ns.m + 1}")
    return _Output(inputs, records, lines, rows)


def _cmd_mmf(ns) -> _Output:
    spec = TrinomialSpec(n=ns.n, p=ns.p, p_sign=ns.sign, m=ns.m, lower_exponent="one")
    roots = solve_trinomial(spec, DEFAULT_CONFIG)
    inputs = {"n": ns.n, "p": ns.p, "sign": ns.sign, "m": ns.m}
    records, lines, rows = _root_records(roots, ns.digits)
    return _Output(inputs, records, lines, rows)


def _cmd_stakhov(ns) -> _Output:
    value = solve_stakhov(ns.n, ns.variant)
    decimal = _truncate_float(value, ns.digits)
    inputs = {"n": ns.n, "variant": ns.variant}
    records = [{"decimal": decimal, "value": value}]
    lines = [f"x = {decimal} (variant {ns.variant})"]
    return _Output(inputs, records, lines, [[value]])


def _cmd_euler(ns) -> _Output:
    roots = solve_euler(ns.a, ns.n, ns.x, ns.mode)
    inputs = {"a": str(ns.a), "n": ns.n, "x": str(ns.x), "mode": ns.mode}
    records, lines, rows = _root_records(roots, ns.digits)
    return _Output(inputs, records, lines, rows)


def _cmd_metallic(ns) -> _Output:
    mean = metallic_mean(ns.p, ns.q)
    decimal = to_decimal(mean, ns.digits)
    inputs = {"p": ns.p, "q": str(ns.q)}
    record = {
        "decimal": decimal,
        "value": float(mean),
        "exact": _surd_json(mean),
        "surd": str(mean),
    }
    lines = [f"metallic mean (p={ns.p}, q={ns.q}) = {mean} = {decimal}"]
    row = [float(mean)]
    if ns.cf_terms is not None:
        cf = continued_fraction_of(mean, ns.cf_terms)
        record["cf_initial"] = list(cf.initial)
        record["cf_period"] = list(cf.period)
        record["cf_truncated"] = cf.truncated
        lines.append(f"continued fraction: {cf}")
        row.extend([",".join(map(str, cf.initial)), ",".join(map(str, cf.period))])
    return _Output(inputs, [record], lines, [row])


def _cmd_table1(ns) -> _Output:
    rows = table_one(ns.rows, ns.side)
    inputs = {"rows": ns.rows, "side": ns.side}
    records, lines, tsv_rows = [], [], []
    for row in rows:
        records.append({"side": row.side, "index": row.index,
                        "m": row.m, "h": row.h, "r": row.r})
        lines.append(f"{row.side:>5}  N={row.index}  m={row.m}  h={row.h}  r={row.r}")
        tsv_rows.append([row.side, row.index, row.m, row.h, row.r])
    return _Output(inputs, records, lines, tsv_rows)


def _cmd_diophantus(ns) -> _Output:
    inputs = {"count": ns.count}
    records, lines, tsv_rows = [], [], []
    for index in range(ns.count):
        triple = diophantus_triple(index)
        records.append({"a": triple.a, "b": triple.b, "c": triple.c})
        lines.append(f"{triple.c}^2 = {triple.b}^2 + {triple.a}^2")
        tsv_rows.append([triple.a, triple.b, triple.c])
    return _Output(inputs, records, lines, tsv_rows)


def _cmd_harmonic(ns) -> _Output:
    table = build_table(ns.size)
    inputs = {"size": ns.size, "doublets": ns.doublets, "key": ns.key}
    records, lines, tsv_rows = [], [], []
    if not ns.doublets and ns.key is None:
        for row in table.cells:
            records.append(list(row))
            lines.append("\t".join(str(v) for v in row))
            tsv_rows.append(list(row))
    if ns.doublets:
        for q, pair in cross_check_integer_means(table):
            k = pair[0]
            records.append({"k": k, "q": q,
                            "i1": k, "j1": k + 1, "i2": k + 1, "j2": k,
                            "pair_low": pair[0], "pair_high": pair[1]})
            lines.append(
                f"doublet q={q} at ({k},{k + 1})/({k + 1},{k}) -> integer pair {pair}"
            )
            tsv_rows.append([k, q, k, k + 1, k + 1, k, pair[0], pair[1]])
    if ns.key is not None:
        for k, square_plus, product in key_rows(ns.key):
            records.append({"k": k, "square_plus_side": square_plus, "product": product})
            lines.append(f"({k} x {k}) + {k} = {square_plus} = {k} x {k + 1}")
            tsv_rows.append([k, square_plus, product])
    return _Output(inputs, records, lines, tsv_rows)


_HANDLERS = {
    "solve": _cmd_solve,
    "mmf": _cmd_mmf,
    "stakhov": _cmd_stakhov,
    "euler": _cmd_euler,
    "metallic": _cmd_metallic,
    "table1": _cmd_table1,
    "diophantus": _cmd_diophantus,
    "harmonic": _cmd_harmonic,
}


def _cell(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(ns, out: _Output) -> None:
    if ns.format == "json":
        payload = {"command": ns.command, "inputs": out.inputs,
                   "results": out.records, "errors": []}
        print(json.dumps(payload))
    elif ns.format == "tsv":
        for row in out.tsv_rows:
            print("\t".join(_cell(v) for v in row))
    else:
        for line in out.text:
            print(line)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _digits(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 1000:
        raise argparse.ArgumentTypeError("digits must be in 1..1000")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text",
                        help="output format (default: text)")
    common.add_argument("--digits", type=_digits, default=10,
                        help="decimal rendering width (default: 10)")

    parser = argparse.ArgumentParser(
        prog="goldmean",
        description="Golden and metallic means: exact surds, certified trinomial "
                    "roots, triangle catalogs and the harmonic table.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="all real roots of x**n + x = m/2")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--m", type=_nonneg_int, required=True)
    p.add_argument("--tol", type=_positive_float, default=None,
                   help="scaled residual tolerance (default 1e-12)")

    p = sub.add_parser("mmf", parents=[common],
                       help="all real roots of x**n ± p*x = m/2")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--p", type=_positive_int, required=True)
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    p.add_argument("--m", type=_nonneg_int, required=True)

    p = sub.add_parser("stakhov", parents=[common],
                       help="positive root of x**n + x = 1 (a) or x**n + x**(n-1) = 1 (b)")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--variant", choices=("a", "b"), required=True)

    p = sub.add_parser("euler", parents=[common],
                       help="solve (a + b**n)/n = x for b")
    p.add_argument("--a", type=_fraction, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--x", type=_fraction, required=True)
    p.add_argument("--mode", choices=("direct", "constrained"), required=True)

    p = sub.add_parser("metallic", parents=[common],
                       help="positive root of x**2 - p*x - q = 0, exact")
    p.add_argument("--p", type=_positive_int, required=True)
    p.add_argument("--q", type=_fraction, required=True)
    p.add_argument("--cf-terms", type=_positive_int, default=None,
                   help="also expand this many continued-fraction terms")

    p = sub.add_parser("table1", parents=[common],
                       help="rows of the two-sided solution table")
    p.add_argument("--rows", type=_positive_int, required=True)
    p.add_argument("--side", choices=("left", "right", "both"), default="both")

    p = sub.add_parser("diophantus", parents=[common],
                       help="Pythagorean triples (2N+1, 2N(N+1), 2N(N+1)+1)")
    p.add_argument("--count", type=_positive_int, required=True)

    p = sub.add_parser("harmonic", parents=[common],
                       help="harmonic multiplication table, doublets and key")
    p.add_argument("--size", type=_positive_int, required=True)
    p.add_argument("--doublets", action="store_true",
                   help="list diagonal doublets with their integer mean pairs")
    p.add_argument("--key", type=_nonneg_int, default=None, metavar="K",
                   help="print key rows (k, k^2 + k, k(k+1)) for k in 0..K")
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv, dispatch, emit; returns the process exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage/help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        out = _HANDLERS[ns.command](ns)
    except DomainError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: invalid-argument: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(ns, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
