"""Command-line front end.

Exit status: 0 on success, 1 when a verification or span check fails, 2 on a
usage error.  Output is deterministic and locale independent; every JSON
document carries ``"schema_version": 1``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .bipoly import BiPoly, format_rat, parse_poly
from .ginv import GInv, g_invariant, sp
from .linbases import (
    BasisKind,
    NotInSpanError,
    basis_sequences,
    express_in_basis,
    gamma_matrix,
    relation_generators,
)
from .matroid import BasisListMatroid, FreedomMatroid, Matroid
from .seqlat import BitSeq
from .tutte import freedom_routes, tutte_freedom, tutte_oracle
from .verify import SUITES, run_suite

PERMUTATION_LIMIT = 9
SUBSET_LIMIT = 20


class UsageError(Exception):
    pass


# descriptors


def parse_descriptor(text: str) -> tuple[Matroid, BitSeq | None]:
    """``freedom:<bits>``, ``uniform:<r>,<n>`` or ``bases:<path.json>``."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise UsageError(f"malformed matroid descriptor {text!r}; expected freedom:, uniform: or bases:")
    if kind == "freedom":
        if not arg or any(ch not in "01" for ch in arg):
            raise UsageError(f"invalid bit string {arg!r} in descriptor {text!r}")
        s = BitSeq.parse(arg)
        return FreedomMatroid(s), s
    if kind == "uniform":
        parts = arg.split(",")
        try:
            r, n = (int(p) for p in parts)
        except ValueError:
            raise UsageError(f"invalid uniform parameters {arg!r}; expected <r>,<n>") from None
        if not 0 <= r <= n:
            raise UsageError(f"uniform:{arg} needs 0 <= r <= n")
        s = BitSeq([1] * r + [0] * (n - r))
        return FreedomMatroid(s), s
    if kind == "bases":
        try:
            with open(arg, encoding="utf-8") as fh:
                return BasisListMatroid.from_json(fh.read()), None
        except OSError as exc:
            raise UsageError(f"cannot read basis file {arg!r}: {exc.strerror}") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad basis file {arg!r}: {exc}") from None
    raise UsageError(f"unknown descriptor kind {kind!r} in {text!r}")


def _guard(n: int, limit: int, what: str, unsafe: bool) -> None:
    if n > limit and not unsafe:
        raise UsageError(f"n = {n} exceeds the {what} limit n <= {limit}; pass --unsafe to override")


def _parse_kind(text: str) -> BasisKind:
    try:
        return BasisKind(text)
    except ValueError:
        raise UsageError(f"unknown basis kind {text!r}; expected meet or join") from None


# rendering


def _json(doc: dict) -> str:
    return json.dumps({"schema_version": 1, **doc}, indent=2, sort_keys=False) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _poly_csv(p: BiPoly) -> str:
    return _csv([["x_exp", "y_exp", "coeff"]] + [[i, j, format_rat(c)] for i, j, c in p.sorted_terms()])


# subcommands


def cmd_tutte(args) -> tuple[str, int]:
    M, s = parse_descriptor(args.matroid)
    if s is not None:
        routes = dict(freedom_routes(s))
        if M.n <= SUBSET_LIMIT or args.unsafe:
            routes["oracle"] = tutte_oracle(M)
    else:
        _guard(M.n, SUBSET_LIMIT, "subset sweep", args.unsafe)
        routes = {"oracle": tutte_oracle(M)}
    values = list(routes.values())
    poly = values[0]
    agree = all(v == poly for v in values)
    status = 0 if agree else 1
    if args.format == "json":
        return _json({
            "matroid": args.matroid,
            "n": M.n,
            "r": M.r,
            "polynomial": poly.to_text(),
            "terms": poly.to_json(),
            "routes": {k: v.to_text() for k, v in routes.items()},
            "routes_agree": agree,
        }), status
    if args.format == "csv":
        return _poly_csv(poly), status
    verdict = "agree" if agree else "DISAGREE"
    return f"{poly.to_text()}\nroutes: {', '.join(routes)} ({verdict})\n", status


def cmd_ginv(args) -> tuple[str, int]:
    M, _ = parse_descriptor(args.matroid)
    _guard(M.n, PERMUTATION_LIMIT, "permutation sweep", args.unsafe)
    v = g_invariant(M)
    if args.format == "json":
        return _json({"matroid": args.matroid, **v.to_json()}), 0
    asc = args.order == "ascending"
    if args.format == "csv":
        return _csv([["symbol", "coeff"]] + [[str(s), format_rat(c)] for s, c in v.sorted_items(asc)]), 0
    return v.to_text(asc) + "\n", 0


def _read_ginv(text: str) -> GInv:
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            try:
                return GInv.from_json(fh.read())
            except (ValueError, KeyError, TypeError) as exc:
                raise UsageError(f"bad G-invariant file {text!r}: {exc}") from None
    bits = text.strip()
    if bits.startswith("[") and bits.endswith("]"):
        bits = bits[1:-1]
    if not bits or any(ch not in "01" for ch in bits):
        raise UsageError(f"expected a symbol like [10] or a JSON file, got {text!r}")
    return GInv.symbol(BitSeq.parse(bits))


def cmd_sp(args) -> tuple[str, int]:
    v = _read_ginv(args.symbol)
    p = sp(v)
    integral = p.is_integral()
    if args.format == "json":
        return _json({"n": v.n, "r": v.r, "polynomial": p.to_text(), "terms": p.to_json(), "integral": integral}), 0
    if args.format == "csv":
        return _poly_csv(p), 0
    return f"{p.to_text()}\nintegral: {str(integral).lower()}\n", 0


def _check_nr(n: int, r: int) -> None:
    if not 0 <= r <= n:
        raise UsageError(f"need 0 <= r <= n, got n={n}, r={r}")


def cmd_basis(args) -> tuple[str, int]:
    _check_nr(args.n, args.r)
    kind = _parse_kind(args.kind)
    seqs = basis_sequences(kind, args.n, args.r)
    if args.order == "ascending":
        seqs = sorted(seqs)
    rows = [(s, tutte_freedom(s)) for s in seqs]
    if args.format == "json":
        return _json({
            "n": args.n,
            "r": args.r,
            "kind": kind.value,
            "basis": [{"seq": str(s), "polynomial": p.to_text()} for s, p in rows],
        }), 0
    if args.format == "csv":
        return _csv([["seq", "polynomial"]] + [[str(s), p.to_text()] for s, p in rows]), 0
    return "".join(f"{s}  {p.to_text()}\n" for s, p in rows), 0


def _read_target(args) -> tuple[BiPoly, int, int]:
    text = args.target
    if text.split(":", 1)[0] in ("freedom", "uniform", "bases"):
        M, _ = parse_descriptor(text)
        _guard(M.n, SUBSET_LIMIT, "subset sweep", args.unsafe)
        return tutte_oracle(M), M.n, M.r
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            body = fh.read().strip()
        try:
            p = BiPoly.from_json(body) if body.startswith("[") else parse_poly(body)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad polynomial file {text!r}: {exc}") from None
    else:
        try:
            p = parse_poly(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.n is None or args.r is None:
        raise UsageError("a polynomial target needs --n and --r")
    return p, args.n, args.r


def cmd_express(args) -> tuple[str, int]:
    p, n, r = _read_target(args)
    _check_nr(n, r)
    kind = _parse_kind(args.kind)
    try:
        coords = express_in_basis(p, kind, n, r)
    except NotInSpanError as exc:
        if args.format == "json":
            return _json({"n": n, "r": r, "kind": kind.value, "in_span": False, "residual": exc.residual.to_text()}), 1
        return f"not in span\nresidual: {exc.residual.to_text()}\n", 1
    order = {s: k for k, s in enumerate(basis_sequences(kind, n, r))}
    items = sorted(coords.items(), key=lambda kv: order[kv[0]])
    integral = all(c.denominator == 1 for _, c in items)
    if args.format == "json":
        return _json({
            "n": n,
            "r": r,
            "kind": kind.value,
            "in_span": True,
            "integral": integral,
            "coordinates": [{"seq": str(s), "coeff": format_rat(c), "integral": c.denominator == 1} for s, c in items],
        }), 0
    if args.format == "csv":
        return _csv([["seq", "coeff"]] + [[str(s), format_rat(c)] for s, c in items]), 0
    lines = [f"{s}: {format_rat(c)}" for s, c in items]
    lines.append(f"integral: {str(integral).lower()}")
    return "\n".join(lines) + "\n", 0


def cmd_gamma(args) -> tuple[str, int]:
    if not 1 <= args.r <= args.n - 1:
        raise UsageError(f"gamma needs 1 <= r <= n-1, got n={args.n}, r={args.r}")
    G = gamma_matrix(args.n, args.r)
    if args.format == "json":
        return _json({"n": args.n, "r": args.r, **G.to_json()}), 0
    if args.format == "csv":
        return G.to_csv(), 0
    labels = [str(c) for c in G.col_labels]
    width = max(len(x) for x in G.row_labels)
    colw = [max(len(lab), *(len(format_rat(v)) for v in G.column(j))) for j, lab in enumerate(labels)]
    lines = [" " * width + "  " + "  ".join(lab.rjust(w) for lab, w in zip(labels, colw))]
    for label, row in zip(G.row_labels, G.rows):
        lines.append(label.ljust(width) + "  " + "  ".join(format_rat(v).rjust(w) for v, w in zip(row, colw)))
    return "\n".join(lines) + "\n", 0


def cmd_relations(args) -> tuple[str, int]:
    if not 1 <= args.r <= args.n - 1:
        raise UsageError(f"relations need 1 <= r <= n-1, got n={args.n}, r={args.r}")
    rels = relation_generators(args.n, args.r)
    status = 0 if all(rel.holds() for rel in rels) else 1
    if args.format == "json":
        return _json({"n": args.n, "r": args.r, "relations": [rel.to_json() for rel in rels]}), status
    if args.format == "csv":
        rows = [["tau", "height1_bottom", "height1_top", "top", "right", "left", "bottom"]]
        for rel in rels:
            iv = rel.interval
            rows.append([rel.tau, rel.upper_bottom, rel.upper_top, iv.top, iv.right, iv.left, iv.bottom])
        return _csv([[str(v) for v in row] for row in rows]), status
    lines = []
    for rel in rels:
        iv = rel.interval
        lines.append(rel.to_text())
        lines.append(f"  intervals [{rel.upper_bottom}, {rel.upper_top}] and [{iv.bottom}, {iv.top}]")
    return "\n".join(lines) + ("\n" if lines else ""), status


def cmd_verify(args) -> tuple[str, int]:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(['all', *SUITES])}")
    rep = run_suite(args.suite, args.max_n, args.seed)
    status = 0 if rep.ok else 1
    if args.format == "json":
        return json.dumps(rep.to_json(), indent=2) + "\n", status
    if args.format == "csv":
        return _csv([["name", "pass", "detail"]] + [[c.name, str(c.passed).lower(), c.detail] for c in rep.checks]), status
    lines = [rep.summary()]
    lines += [f"FAIL {c.name}: {c.detail}" for c in rep.failures]
    return "\n".join(lines) + "\n", status


# parser


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--format", choices=("text", "json", "csv"), **({"default": "text"} if not suppress else kw))
    p.add_argument("--max-n", type=int, **({"default": None} if not suppress else kw))
    p.add_argument("--seed", type=int, **({"default": 0} if not suppress else kw))
    p.add_argument("--unsafe", action="store_true", **({"default": False} if not suppress else kw))
    p.add_argument(
        "--order",
        choices=("descending", "ascending"),
        help="sequence listing order (descending binary value is canonical)",
        **({"default": "descending"} if not suppress else kw),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tuttespan", description="Tutte polynomials and G-invariants of freedom matroids.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial of a matroid")
    p.add_argument("matroid", help="freedom:<bits> | uniform:<r>,<n> | bases:<path.json>")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("ginv", parents=[common], help="G-invariant of a matroid")
    p.add_argument("matroid")
    p.set_defaults(func=cmd_ginv)

    p = sub.add_parser("sp", parents=[common], help="specialize a symbol or G-invariant file")
    p.add_argument("symbol", help="[bits] or a G-invariant JSON file")
    p.set_defaults(func=cmd_sp)

    p = sub.add_parser("basis", parents=[common], help="irreducible basis of T(n, r)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--kind", default="meet", help="meet or join")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("express", parents=[common], help="coordinates in an irreducible basis")
    p.add_argument("target", help="matroid descriptor, polynomial text, or polynomial file")
    p.add_argument("--kind", default="meet", help="meet or join")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_express)

    p = sub.add_parser("gamma", parents=[common], help="coefficient matrix of the join-irreducible basis")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("relations", parents=[common], help="generating relations among freedom Tutte polynomials")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, status = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
