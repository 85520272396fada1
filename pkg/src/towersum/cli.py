"""Command-line front end.

Exit status: 0 success, 1 hypothesis not applicable (or a verification
check failed), 2 invalid input or unsupported width.
"""
from __future__ import annotations

import argparse
import sys

from . import render as R
from .fermat import FermatSumSpec, fermat_sum_mod, verify_corollary3
from .mersenne import mersenne_chain, theorem2_verify, theorem2_witness
from .theorem1 import Inapplicability, build_witness, scan, verify_witness
from .tower import DEFAULT_BUDGET, BudgetError

OK, INAPPLICABLE, INVALID = 0, 1, 2


class UsageError(ValueError):
    pass


def _odd_modulus(text: str) -> int:
    try:
        N = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if N < 3 or N % 2 == 0:
        raise argparse.ArgumentTypeError(f"N must be an odd integer >= 3, got {N}")
    return N


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {v}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")
    common.add_argument(
        "--budget", type=_positive, default=DEFAULT_BUDGET,
        help="maximum number of summands for term-wise checks (default %(default)s)",
    )

    parser = _Parser(
        prog="towersum",
        description="Divisibility witnesses for 1 + 2^(2^n) + ... + 2^(2^(n+m)) modulo odd N.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("witness", parents=[common], help="build the witness for N")
    p.add_argument("N", type=_odd_modulus)

    p = sub.add_parser("verify", parents=[common], help="build and check the witness for N")
    p.add_argument("N", type=_odd_modulus)
    p.add_argument("--n-multiples", type=_positive, default=3)
    p.add_argument("--i-max", type=_nonnegative, default=2)

    p = sub.add_parser("scan", parents=[common], help="witnesses for every odd N in a range")
    p.add_argument("--from", dest="start", type=_positive, required=True)
    p.add_argument("--to", dest="stop", type=_positive, required=True)
    p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("mersenne", parents=[common], help="double Mersenne chain for q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k-max", type=_positive, default=2)
    p.add_argument("--i-max", type=_nonnegative, default=1)

    p = sub.add_parser("fermat-sum", parents=[common], help="F_n + ... + F_{n+m} mod N")
    p.add_argument("N", type=_odd_modulus)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_nonnegative, required=True)
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _cmd_witness(args) -> int:
    result = build_witness(args.N)
    _emit(R.render(result, "json" if args.json else "text"))
    return INAPPLICABLE if isinstance(result, Inapplicability) else OK


def _cmd_verify(args) -> int:
    result = build_witness(args.N)
    if isinstance(result, Inapplicability):
        _emit(R.render(result, "json" if args.json else "text"))
        return INAPPLICABLE
    report = verify_witness(result, args.n_multiples, args.i_max, args.budget)
    if args.json:
        _emit(R.render(report, "json"))
    else:
        _emit(R.witness_text(result))
        _emit(R.report_text(report))
    return OK if report.passed else INAPPLICABLE


def _cmd_scan(args) -> int:
    if args.start > args.stop:
        raise ValueError(f"--from {args.start} is greater than --to {args.stop}")
    if args.start < 3:
        raise ValueError("--from must be >= 3")
    results = scan(args.start, args.stop, workers=args.workers, budget=args.budget)
    _emit(R.render(results, "json" if args.json else "text"))
    return OK


def _cmd_mersenne(args) -> int:
    chain = mersenne_chain(args.q)
    payload = R.chain_payload(chain)
    result = theorem2_witness(args.q)
    if isinstance(result, Inapplicability):
        payload["reason"] = result.reason.value
        payload["detail"] = result.detail
        if args.json:
            _emit(R.to_json(payload))
        else:
            _emit(f"q = {chain.q}, p = {chain.p}: chain not admissible ({result.detail})")
        return INAPPLICABLE
    report = theorem2_verify(result, args.k_max, args.i_max, args.budget)
    cor3 = all(
        verify_corollary3(result, k, i, args.budget)
        for k in range(1, args.k_max + 1)
        for i in range(args.i_max + 1)
    )
    if args.json:
        payload.update(R.witness_payload(result))
        payload.update(R.report_payload(report))
        payload["corollary3"] = cor3
        _emit(R.to_json(payload))
    else:
        _emit(f"q = {chain.q} -> p = {chain.p} (prime) -> N = 2^{chain.p} - 1 (prime)")
        _emit(R.witness_text(result))
        _emit(R.report_text(report))
        _emit(f"Fermat sums == q - 1 + r*q (mod N): {'PASS' if cor3 else 'FAIL'}")
    return OK if report.passed and cor3 else INAPPLICABLE


def _cmd_fermat_sum(args) -> int:
    spec = FermatSumSpec(args.n, args.m, args.N)
    residue = fermat_sum_mod(spec, budget=args.budget).value
    m_mod = args.m % args.N
    if args.json:
        _emit(R.to_json({
            "N": args.N,
            "n": args.n,
            "m": str(args.m),
            "residue": residue,
            "m_mod_N": m_mod,
            "congruent_to_m": residue == m_mod,
        }))
    else:
        _emit(f"F_{args.n} + ... + F_{args.n + args.m} == {residue} (mod {args.N})")
        _emit(f"m mod N = {m_mod}")
    return OK


COMMANDS = {
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "mersenne": _cmd_mersenne,
    "fermat-sum": _cmd_fermat_sum,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return INVALID
    try:
        return COMMANDS[args.verb](args)
    except (ValueError, BudgetError) as exc:
        print(f"towersum {args.verb}: {exc}", file=sys.stderr)
        return INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
