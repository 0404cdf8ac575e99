"""Command-line front end.

Every subcommand prints a short human-readable report by default, or with
``--json`` a single JSON record ``{"command", "inputs", "result"}`` in which
every integer is an exact decimal string.

Exit codes: 0 on success, 2 for usage or validation errors, 3 when a
mathematical hypothesis fails (non-coprime moduli, non-idempotent operands,
non-liftable element).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Sequence

from . import __version__
from .arith import factor
from .crt import CongruenceSystem, crt_basis, crt_solve
from .errors import HypothesisFailure, RingError
from .idempotents import (
    DEFAULT_CAP,
    complement,
    enumerate_idempotents,
    join,
    meet,
    nilradical,
    primitive_idempotents,
    xor_add,
)
from .lifting import lift_idempotent
from .residue import Residue

EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3

_NATURAL = re.compile(r"[0-9]+")
_INTEGER = re.compile(r"-?[0-9]+")
_PAIR_SEP = re.compile(r"[,\s]+")

BOOLEAN_OPS = {"meet": 2, "join": 2, "complement": 1, "xor": 2}


class UsageError(Exception):
    pass


def parse_natural(text: str, name: str = "value") -> int:
    if not _NATURAL.fullmatch(text.strip()):
        raise UsageError(f"{name} must be a nonnegative decimal integer, got {text!r}")
    return int(text)


def parse_modulus(text: str) -> int:
    m = parse_natural(text, "modulus")
    if m < 1:
        raise UsageError("modulus must be >= 1 (Z/0Z is not supported)")
    return m


def parse_pairs(tokens: Sequence[str]) -> list[tuple[int, int]]:
    """Parse ``r:m`` tokens, separated by commas and/or whitespace."""
    pairs = []
    for token in _PAIR_SEP.split(" ".join(tokens).strip()):
        if not token:
            continue
        r, sep, m = token.partition(":")
        if not sep or not _INTEGER.fullmatch(r):
            raise UsageError(f"expected a congruence 'r:m', got {token!r}")
        pairs.append((int(r), parse_modulus(m)))
    if not pairs:
        raise UsageError("at least one congruence 'r:m' is required")
    return pairs


def _s(x: int) -> str:
    return str(x)


def cmd_factor(m: str) -> dict[str, Any]:
    fac = factor(parse_modulus(m))
    return {
        "command": "factor",
        "inputs": {"m": _s(fac.m)},
        "result": {"factors": [{"p": _s(p), "c": _s(c)} for p, c in fac]},
    }


def cmd_idempotents(m: str, cap: int = DEFAULT_CAP, basis_only: bool = False) -> dict[str, Any]:
    fac = factor(parse_modulus(m))
    if basis_only:
        basis = primitive_idempotents(fac)
    else:
        ids = enumerate_idempotents(fac, cap=cap)
        basis = ids.basis
    result: dict[str, Any] = {
        "n": _s(fac.n),
        "count": _s(2**fac.n),
        "basis": [
            {"p": _s(p), "c": _s(c), "element": _s(h)}
            for (p, c), h in zip(fac, basis)
        ],
    }
    if not basis_only:
        result["members"] = [_s(x) for x in ids.members]
    return {
        "command": "idempotents",
        "inputs": {"m": _s(fac.m), "basis_only": basis_only, "cap": _s(cap)},
        "result": result,
    }


def cmd_crt(pairs: Sequence[str]) -> dict[str, Any]:
    parsed = parse_pairs(pairs)
    system = CongruenceSystem.of(parsed)
    x = crt_solve(system)
    return {
        "command": "crt",
        "inputs": {"constraints": [{"r": _s(r), "m": _s(m)} for r, m in parsed]},
        "result": {
            "x": _s(x.value),
            "modulus": _s(x.modulus),
            "basis": [_s(h) for h in crt_basis(system.moduli)],
        },
    }


def cmd_lift(f: str, m: str) -> dict[str, Any]:
    mod = parse_modulus(m)
    value = parse_natural(f, "f")
    res = lift_idempotent(Residue.of(value, mod))
    return {
        "command": "lift",
        "inputs": {"f": _s(value), "m": _s(mod)},
        "result": {
            "lifted": _s(res.lifted.value),
            "difference": _s(res.difference.value),
            "iterations": _s(res.iterations),
        },
    }


def cmd_nilpotents(m: str) -> dict[str, Any]:
    fac = factor(parse_modulus(m))
    nil = nilradical(fac)
    return {
        "command": "nilpotents",
        "inputs": {"m": _s(fac.m)},
        "result": {"generator": _s(nil.generator), "count": _s(nil.nilpotent_count)},
    }


def cmd_boolean(op: str, args: Sequence[str], m: str) -> dict[str, Any]:
    if op not in BOOLEAN_OPS:
        raise UsageError(f"unknown boolean operation {op!r}; choose from {sorted(BOOLEAN_OPS)}")
    if len(args) != BOOLEAN_OPS[op]:
        raise UsageError(f"{op} takes {BOOLEAN_OPS[op]} operand(s), got {len(args)}")
    mod = parse_modulus(m)
    values = [parse_natural(a, "operand") for a in args]
    rs = [Residue.of(v, mod) for v in values]
    if op == "complement":
        out = complement(*rs)
    else:
        out = {"meet": meet, "join": join, "xor": xor_add}[op](*rs)
    return {
        "command": "boolean",
        "inputs": {"op": op, "args": [_s(v) for v in values], "m": _s(mod)},
        "result": {"value": _s(out.value)},
    }


def render_json(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def render_text(record: dict[str, Any]) -> str:
    inputs, result = record["inputs"], record["result"]
    command = record["command"]
    if command == "factor":
        parts = [p if c == "1" else f"{p}^{c}" for p, c in
                 ((f["p"], f["c"]) for f in result["factors"])]
        return f"{inputs['m']} = {' * '.join(parts) or '1'}"
    if command == "idempotents":
        lines = [f"Z/{inputs['m']}Z has {result['count']} idempotents "
                 f"({result['n']} distinct primes)"]
        for b in result["basis"]:
            pc = b["p"] if b["c"] == "1" else f"{b['p']}^{b['c']}"
            lines.append(f"  primitive for {pc}: {b['element']}")
        if "members" in result:
            lines.append("  members: " + ", ".join(result["members"]))
        return "\n".join(lines)
    if command == "crt":
        return f"x = {result['x']} (mod {result['modulus']})"
    if command == "lift":
        return (f"{inputs['f']} lifts to {result['lifted']} mod {inputs['m']} "
                f"(difference {result['difference']}, {result['iterations']} Newton steps)")
    if command == "nilpotents":
        return (f"nilradical of Z/{inputs['m']}Z = {result['generator']}Z/{inputs['m']}Z, "
                f"{result['count']} nilpotent elements")
    if command == "boolean":
        return f"{inputs['op']}({', '.join(inputs['args'])}) = {result['value']} (mod {inputs['m']})"
    raise ValueError(command)  # pragma: no cover


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")

    parser = argparse.ArgumentParser(
        prog="modidem",
        description="Idempotents, CRT and nilradicals of Z/mZ.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="prime factorization of m")
    p.add_argument("m")

    p = sub.add_parser("idempotents", parents=[common], help="all idempotents of Z/mZ")
    p.add_argument("m")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="refuse to enumerate when m has more distinct primes (default %(default)s)")
    p.add_argument("--basis-only", action="store_true",
                   help="print only the primitive idempotents")

    p = sub.add_parser("crt", parents=[common], help="solve x = r (mod m) for r:m pairs")
    p.add_argument("pairs", nargs="+", metavar="r:m")
    # Let "-3:5" through as a positional rather than an unknown option.
    p._negative_number_matcher = re.compile(r"^-\d[\d:,\s-]*$")

    p = sub.add_parser("lift", parents=[common], help="lift f to an idempotent mod m")
    p.add_argument("f")
    p.add_argument("m")

    p = sub.add_parser("nilpotents", parents=[common], help="nilradical of Z/mZ")
    p.add_argument("m")

    p = sub.add_parser("boolean", parents=[common], help="meet, join, complement or xor of idempotents")
    p.add_argument("op", choices=sorted(BOOLEAN_OPS))
    p.add_argument("operands", nargs="+", metavar="x", help="operands followed by m")
    return parser


def run(args: argparse.Namespace) -> dict[str, Any]:
    if args.command == "factor":
        return cmd_factor(args.m)
    if args.command == "idempotents":
        return cmd_idempotents(args.m, cap=args.cap, basis_only=args.basis_only)
    if args.command == "crt":
        return cmd_crt(args.pairs)
    if args.command == "lift":
        return cmd_lift(args.f, args.m)
    if args.command == "nilpotents":
        return cmd_nilpotents(args.m)
    if len(args.operands) < 2:
        raise UsageError("boolean needs at least one operand and the modulus")
    return cmd_boolean(args.op, args.operands[:-1], args.operands[-1])


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = run(args)
    except UsageError as exc:
        print(f"modidem {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisFailure as exc:
        print(f"modidem {args.command}: hypothesis failed: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except RingError as exc:
        print(f"modidem {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render_json(record) if args.json else render_text(record))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
