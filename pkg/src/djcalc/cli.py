"""Command-line front end: counts, dimensions, emptiness verdicts, identity
checks and parameter-grid sweeps, in machine-readable formats.

Every record carries the same fields (inputs, result, paths,
cross_check_delta, status, verdict) and rows come out in a fixed order, so
identical invocations produce byte-identical output.  Exit codes: 0 success,
2 validation error, 3 internal cross-check failure (the offending record is
still emitted, with a failure marker in its status).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import bn, dejonq, lls
from .errors import ContractViolation, HypothesisViolation, IntegralityError
from .exact import Partition

FORMATS = ("json", "csv", "plain")


# ---------------------------------------------------------------------------
# tiny integer expression language for partition patterns and f specs
# ---------------------------------------------------------------------------

def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif c.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif c in "+-*()":
            tokens.append(c)
            i += 1
        else:
            raise ValueError(f"unexpected character {c!r} in expression {text!r}")
    return tokens


def eval_int_expr(text: str, env: dict[str, int]) -> int:
    """Evaluate an integer expression over +, -, *, parentheses and the
    variables in `env` (e.g. g, r, d)."""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def atom() -> int:
        tok = peek()
        if tok is None:
            raise ValueError(f"unexpected end of expression {text!r}")
        if tok == "-":
            take()
            return -atom()
        if tok == "(":
            take()
            value = expr()
            if peek() != ")":
                raise ValueError(f"missing ')' in expression {text!r}")
            take()
            return value
        take()
        if tok.isdigit():
            return int(tok)
        if tok in env:
            return env[tok]
        raise ValueError(f"unknown variable {tok!r} in expression {text!r}")

    def term() -> int:
        value = atom()
        while peek() == "*":
            take()
            value *= atom()
        return value

    def expr() -> int:
        value = term()
        while peek() in ("+", "-"):
            if take() == "+":
                value += term()
            else:
                value -= term()
        return value

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens {tokens[pos:]} in expression {text!r}")
    return result


def parse_partition_spec(spec: str, env: dict[str, int]) -> Partition:
    """Parse '2,2,1' or power notation '2^3,1^2'; bases and exponents may be
    expressions in g, r, d (e.g. '2^r,1^(d-2*r)').  Zero exponents drop the
    part; negative exponents or non-positive parts are rejected.
    """
    parts: list[int] = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            raise ValueError(f"empty item in partition spec {spec!r}")
        if "^" in item:
            base_text, exp_text = item.split("^", 1)
            base = eval_int_expr(base_text, env)
            exp = eval_int_expr(exp_text, env)
        else:
            base = eval_int_expr(item, env)
            exp = 1
        if exp < 0:
            raise ValueError(f"partition item {item!r} has negative multiplicity {exp}")
        if exp > 0 and base < 1:
            raise ValueError(f"partition item {item!r} has non-positive part {base}")
        parts.extend([base] * exp)
    return Partition(parts)


def parse_f_spec(spec: str, env: dict[str, int], mu: Partition) -> int:
    """Parse an f value: an integer expression over g, r, d, e (partition
    length) and s (partition sum), or 'span=<expr>' for f = |mu| - span - 1."""
    env = dict(env)
    env["e"] = mu.length
    env["s"] = mu.total
    if spec.startswith("span="):
        return mu.total - eval_int_expr(spec[len("span="):], env) - 1
    return eval_int_expr(spec, env)


def parse_range(text: str) -> range:
    """Inclusive integer interval 'lo:hi', or a single value 'n'."""
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

def _record(inputs, result, paths, delta, status, verdict):
    return {
        "inputs": inputs,
        "result": result,
        "paths": list(paths),
        "cross_check_delta": delta,
        "status": status,
        "verdict": verdict,
    }


def _mu_text(mu: Partition) -> str:
    return ",".join(str(a) for a in mu.parts)


def _verdict(g: int, r: int, d: int, mu: Partition, f: int):
    """Emptiness verdict of the dimension theorem at (mu, f), or None when the
    parameters fall outside its hypotheses."""
    try:
        problem = bn.DJProblem(bn.SeriesParams(g, r, d), mu, f)
        return "empty" if bn.is_empty_for_general_curve(problem) else "possible"
    except ValueError:
        return None


# ---------------------------------------------------------------------------
# commands: each returns (records, exit_code)
# ---------------------------------------------------------------------------

def _count_record(g: int, r: int, d: int, mu: Partition):
    inputs = {"g": g, "r": r, "d": d, "mu": _mu_text(mu)}
    paths = ["bracket", "coefficient"]
    try:
        by_coeff = dejonq.dj_count(g, r, d, mu, path="coefficient")
        by_bracket = dejonq.dj_count(g, r, d, mu, path="bracket")
    except IntegralityError as exc:
        return _record(inputs, None, paths, None, f"integrality violation: {exc}", None), 3
    delta = by_bracket.value - by_coeff.value
    status = "ok" if delta == 0 else "cross-check failed: bracket and coefficient paths disagree"
    verdict = _verdict(g, r, d, mu, d - r)
    return _record(inputs, by_coeff.value, paths, delta, status, verdict), (0 if delta == 0 else 3)


def _cmd_count(args):
    env = {"g": args.g, "r": args.r, "d": args.d}
    mu = parse_partition_spec(args.mu, env)
    record, code = _count_record(args.g, args.r, args.d, mu)
    return [record], code


def _cmd_dim(args):
    env = {"g": args.g, "r": args.r, "d": args.d}
    mu = parse_partition_spec(args.mu, env)
    f = parse_f_spec(args.f, env, mu)
    problem = bn.DJProblem(bn.SeriesParams(args.g, args.r, args.d), mu, f)
    dim = bn.expected_dim_sigma(problem)
    inputs = {"g": args.g, "r": args.r, "d": args.d, "mu": _mu_text(mu), "f": f}
    verdict = "empty" if dim < 0 else "possible"
    return [_record(inputs, dim, ["dimension"], None, "ok", verdict)], 0


def _cmd_empty(args):
    env = {"g": args.g, "r": args.r, "d": args.d}
    mu = parse_partition_spec(args.mu, env)
    f = parse_f_spec(args.f, env, mu)
    problem = bn.DJProblem(bn.SeriesParams(args.g, args.r, args.d), mu, f)
    empty = bn.is_empty_for_general_curve(problem)
    inputs = {"g": args.g, "r": args.r, "d": args.d, "mu": _mu_text(mu), "f": f}
    verdict = "empty" if empty else "possible"
    return [_record(inputs, empty, ["dimension"], None, "ok", verdict)], 0


def _cmd_plucker(args):
    g, r, d = args.g, args.r, args.d
    counted, closed = dejonq.ramification_count_check(g, r, d)
    delta = counted - closed
    status = "ok" if delta == 0 else "cross-check failed: count and closed form disagree"
    inputs = {"g": g, "r": r, "d": d}
    record = _record(inputs, closed, ["coefficient", "closed_form"], delta, status, None)
    return [record], (0 if delta == 0 else 3)


def _cmd_identity(args):
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.samples):
        g, m, r, d, s, f = (rng.randint(args.lo, args.hi) for _ in range(6))
        lhs, rhs = lls.proof_identity(g, m, r, d, s, f)
        if lhs != rhs:
            failures += 1
    passes = args.samples - failures
    inputs = {"samples": args.samples, "seed": args.seed, "lo": args.lo, "hi": args.hi}
    status = "ok" if failures == 0 else f"cross-check failed: {failures} tuples violate the identity"
    record = _record(inputs, passes, ["polynomial"], failures, status, None)
    return [record], (0 if failures == 0 else 3)


def _cmd_sweep(args):
    records = []
    code = 0
    for g in parse_range(args.g):
        for r in parse_range(args.r):
            for d in parse_range(args.d):
                env = {"g": g, "r": r, "d": d}
                inputs = {"g": g, "r": r, "d": d, "mu": args.mu}
                if args.what in ("dim", "empty"):
                    inputs["f"] = args.f
                try:
                    mu = parse_partition_spec(args.mu, env)
                except ValueError as exc:
                    records.append(_record(inputs, None, [], None, f"skipped: {exc}", None))
                    continue
                inputs["mu"] = _mu_text(mu)
                if args.what == "count":
                    try:
                        record, row_code = _count_record(g, r, d, mu)
                    except ContractViolation as exc:
                        records.append(_record(inputs, None, [], None, f"skipped: {exc}", None))
                        continue
                    records.append(record)
                    code = max(code, row_code)
                    continue
                try:
                    f = parse_f_spec(args.f, env, mu)
                    inputs["f"] = f
                    problem = bn.DJProblem(bn.SeriesParams(g, r, d), mu, f)
                    dim = bn.expected_dim_sigma(problem)
                except ValueError as exc:
                    records.append(_record(inputs, None, [], None, f"skipped: {exc}", None))
                    continue
                verdict = "empty" if dim < 0 else "possible"
                result = dim if args.what == "dim" else dim < 0
                records.append(_record(inputs, result, ["dimension"], None, "ok", verdict))
    return records, code


COMMANDS = {
    "count": _cmd_count,
    "dim": _cmd_dim,
    "empty": _cmd_empty,
    "plucker": _cmd_plucker,
    "identity": _cmd_identity,
    "sweep": _cmd_sweep,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _plain_line(record) -> str:
    bits = [f"{k}={_cell(v)}" for k, v in record["inputs"].items()]
    bits.append(f"result={_cell(record['result'])}")
    bits.append(f"paths={'+'.join(record['paths'])}")
    bits.append(f"delta={_cell(record['cross_check_delta'])}")
    bits.append(f"status={record['status']}")
    bits.append(f"verdict={_cell(record['verdict'])}")
    return " ".join(bits)


def render(records, fmt: str, many: bool, command: str) -> str:
    if fmt == "json":
        payload = records if many else records[0]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        columns = list(records[0]["inputs"].keys()) + [
            "result", "paths", "cross_check_delta", "status", "verdict",
        ]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for record in records:
            row = [_cell(record["inputs"].get(k)) for k in columns[: len(record["inputs"])]]
            row.append(_cell(record["result"]))
            row.append("+".join(record["paths"]))
            row.append(_cell(record["cross_check_delta"]))
            row.append(record["status"])
            row.append(_cell(record["verdict"]))
            writer.writerow(row)
        return buf.getvalue()
    if command == "identity":
        record = records[0]
        passes, samples = record["result"], record["inputs"]["samples"]
        line = f"{passes}/{samples} identity holds"
        if passes != samples:
            line += f" ({samples - passes} failures)"
        return line + "\n"
    return "\n".join(_plain_line(record) for record in records) + "\n"


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="djcalc",
        description="Exact counts and dimension predicates for contact divisors in linear series on curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("count", help="contact-divisor count via both evaluation paths")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True, help="partition, e.g. '2,2' or '2^3,1^2'")
    add_format(p)

    p = sub.add_parser("dim", help="expected dimension of the universal secant locus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--f", required=True, help="rank deficiency: integer, expression, or 'span=<s>'")
    add_format(p)

    p = sub.add_parser("empty", help="is the secant locus empty for every series on a general curve?")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--f", required=True)
    add_format(p)

    p = sub.add_parser("plucker", help="simple-ramification count against the closed-form total")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    add_format(p)

    p = sub.add_parser("identity", help="randomized check of the dimension-count identity")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lo", type=int, default=-5)
    p.add_argument("--hi", type=int, default=20)
    add_format(p)

    p = sub.add_parser("sweep", help="evaluate a grid of (g, r, d) cells in fixed order")
    p.add_argument("--g", required=True, help="inclusive range 'lo:hi' or single value")
    p.add_argument("--r", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--mu", required=True, help="partition pattern, e.g. '2^r,1^(d-2*r)'")
    p.add_argument("--f", help="required for --what dim/empty")
    p.add_argument("--what", choices=("count", "dim", "empty"), default="count")
    add_format(p)

    return parser


def run(argv) -> tuple[int, str]:
    """Execute one parsed request: returns (exit code, serialized output).

    Validation problems raise ValueError; cross-check failures return exit
    code 3 with the offending record still present in the output.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep" and args.what in ("dim", "empty") and args.f is None:
        raise ValueError("--f is required for --what dim/empty")
    records, code = COMMANDS[args.command](args)
    return code, render(records, args.format, many=args.command == "sweep", command=args.command)


def main(argv=None) -> int:
    try:
        code, output = run(argv)
    except (ContractViolation, HypothesisViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
