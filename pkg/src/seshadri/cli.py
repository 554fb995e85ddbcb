"""Command-line front end: ``seshadri <subcommand> ...``.

Exit status: 0 for decided results (including Special and Empty), 2 when
the prover returns Unknown, 1 for usage or input errors.
"""

from __future__ import annotations

import argparse
import datetime
import json
import logging
import sys
from fractions import Fraction

from . import bounds, oracle, prover, surfaces
from .classification import classify
from .quasi import certify_quasi
from .systems import (
    InvalidSystemError,
    conditions_count,
    expected_dimension,
    parse_system,
    virtual_dimension,
)
from .verify import certificate_problems

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _emit(obj: dict, args, out=None) -> None:
    if not args.deterministic:
        obj = {**obj, "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat()}
    text = json.dumps(obj, indent=2, sort_keys=True)
    path = getattr(args, "out", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text, file=out or sys.stdout)


def _cache(args) -> tuple[prover.MemoCache, str | None]:
    path = args.cache or prover.default_cache_path()
    if path is None:
        return prover.MemoCache(), None
    return prover.cache_load(path), path


def cmd_dim(args) -> int:
    s = parse_system(args.system)
    _emit({
        "system": s.text(),
        "virtual_dimension": virtual_dimension(s),
        "expected_dimension": expected_dimension(s),
        "conditions": conditions_count(s),
    }, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    s = parse_system(args.system)
    verdict = classify(s)
    if not verdict.decided:
        verdict = certify_quasi(s)
    _emit({
        "system": s.text(),
        "verdict": verdict.tag.value,
        "rule": verdict.rule,
        "expected_dimension": expected_dimension(s),
    }, args)
    return EXIT_OK


def cmd_prove(args) -> int:
    s = parse_system(args.system)
    cache, path = _cache(args)
    outcome = prover.prove(s, args.max_depth, cache, args.threads)
    if path:
        prover.cache_store(cache, path)
    _emit({"system": s.text(), "expected_dimension": expected_dimension(s), **outcome.to_json()}, args)
    return EXIT_UNKNOWN if outcome.tag == prover.UNKNOWN else EXIT_OK


def cmd_verify(args) -> int:
    src = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
    with src:
        try:
            doc = json.load(src)
        except json.JSONDecodeError as exc:
            raise UsageError(f"not JSON: {exc}") from exc
    cert = doc.get("certificate", doc) if isinstance(doc, dict) else doc
    problems = certificate_problems(cert)
    result = {"valid": not problems, "problems": problems}
    if not problems:
        s = parse_system(cert["system"])
        result.update({
            "system": s.text(),
            "claim": "special" if cert["rule"].startswith("table-n") else "non-special",
            "expected_dimension": expected_dimension(s),
            "hash": cert["hash"],
        })
    _emit(result, args)
    return EXIT_OK if not problems else EXIT_ERROR


def cmd_oracle(args) -> int:
    s = parse_system(args.system)
    report = oracle.actual_dimension(s, args.prime, args.trials, args.seed)
    _emit({**report.to_json(), "special": report.actual_dim_estimate > report.expected_dim}, args)
    return EXIT_OK


def cmd_intersect(args) -> int:
    d1 = surfaces.parse_divisor(args.first)
    d2 = surfaces.parse_divisor(args.second) if args.second else d1
    _emit({"first": d1.text(), "second": d2.text(), "intersection": frac(surfaces.intersect(d1, d2))}, args)
    return EXIT_OK


def cmd_seshadri(args) -> int:
    if args.m:
        mults = tuple(int(x) for x in args.m.split(","))
        result = surfaces.seshadri_blownup_product(surfaces.ProductPolarization(args.a, args.b, mults))
        _emit({"a": args.a, "b": args.b, "m": list(mults), "seshadri": result.value, "caveat": result.caveat}, args)
    else:
        _emit({"a": args.a, "b": args.b, "seshadri": surfaces.seshadri_product(args.a, args.b)}, args)
    return EXIT_OK


def cmd_bound(args) -> int:
    cache, path = _cache(args)
    result = bounds.certified_lower_bound_search(
        args.r, args.dmax, args.backend, cache,
        prime=args.prime, trials=args.trials, seed=args.seed, threads=args.threads,
    )
    if path:
        prover.cache_store(cache, path)
    _emit(result.to_json(), args)
    return EXIT_OK


def cmd_table(args) -> int:
    t = bounds.barkowski_targets(args.s)
    rows = []
    for k in range(1, 2 * t.s + 2):
        r = t.s ** 2 + k
        if k in t.targets:
            rows.append({"r": r, "offset": k, "sqrt_r_over_a": frac(t.ratios[k]), "lower_bound": frac(t.targets[k])})
        else:
            rows.append({"r": r, "offset": k, "sqrt_r_over_a": None, "lower_bound": frac(t.fallback), "fallback": True})
    if args.json:
        _emit({"s": t.s, "rows": rows, "note": t.note}, args)
        return EXIT_OK
    print(f"{'r':>5}  {'sqrt(r)/a':>10}  {'lower bound':>11}")
    for row in rows:
        ratio = row["sqrt_r_over_a"] or "-"
        tail = "  (fallback)" if row.get("fallback") else ""
        print(f"{row['r']:>5}  {ratio:>10}  {row['lower_bound']:>11}{tail}")
    if t.note:
        print(f"note: {t.note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deterministic", action="store_true", help="omit the timestamp field")
    common.add_argument("--threads", type=int, default=1, help="worker cap")

    rng = argparse.ArgumentParser(add_help=False)
    rng.add_argument("--prime", type=int, default=oracle.DEFAULT_PRIME)
    rng.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS)
    rng.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)

    cached = argparse.ArgumentParser(add_help=False)
    cached.add_argument("--cache", default=None, help="JSONL memo file (default: $SESHADRI_CACHE)")
    cached.add_argument("--out", default=None, help="also write the JSON here")

    parser = _Parser(prog="seshadri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", parents=[common], help="virtual and expected dimension")
    p.add_argument("system")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("classify", parents=[common], help="base rules only")
    p.add_argument("system")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prove", parents=[common, cached], help="recursive certification")
    p.add_argument("system")
    p.add_argument("--max-depth", type=int, default=prover.DEFAULT_MAX_DEPTH)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("verify", parents=[common], help="check a certificate JSON file")
    p.add_argument("file", help="path, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common, rng], help="interpolation rank at random points")
    p.add_argument("system")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("intersect", parents=[common], help="intersection number of divisor classes")
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("seshadri", parents=[common], help="Seshadri constants on products of curves")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", default=None, help="comma-separated multiplicities of blown-up points")
    p.set_defaults(func=cmd_seshadri)

    p = sub.add_parser("bound", parents=[common, rng, cached], help="certified lower bound search")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--backend", choices=[b.value for b in bounds.Backend], default="oracle")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", parents=[common], help="Barkowski target ratios")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("seshadri: error: --threads must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (InvalidSystemError, UsageError, ValueError, OSError, bounds.BackendDisagreementError) as exc:
        print(f"seshadri: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
