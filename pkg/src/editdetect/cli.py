"""Command-line front end.

Subcommands wrap the library one-to-one: ``encode``, ``decode``, ``corrupt``,
``verify``, ``bounds``, ``maxcode``, and ``stress``.  Output is plain text by
default or JSON with ``--format json``.  Exit codes: 0 success / verified,
1 verification failure, 2 usage or validation error, 3 malformed input.

Bit strings live one per line; blank lines and lines starting with ``#`` are
ignored.  Error patterns use the grammar ``B=del@P`` / ``B=ins@G:V`` with
comma-separated entries (1-based block ``B`` and position ``P``, gap ``G``
in ``[0, ell]``, bit ``V``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitstring import BitString
from .channel import apply_pattern, format_pattern, parse_pattern, random_pattern
from .codes import encode
from .decoders import PROBE_NAMES, decode, decoder_for, shifted_decoder
from .errors import EditDetectError, MalformedReceived
from .params import CodeParams, Family, validate_params
from .stress import stress_run
from .verify import bounds, check_decoder_exhaustive, max_code_search

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3


def _params_from(args: argparse.Namespace) -> CodeParams:
    family = Family(args.family)
    if family is not Family.DELETION and args.delta is not None:
        print(
            f"warning: --delta is fixed for family {family.value}; ignoring",
            file=sys.stderr,
        )
    return validate_params(family, args.delta, args.ell, args.n)


def _parse_bits(text: str, exit_code: int) -> BitString:
    try:
        return BitString(text)
    except ValueError as exc:
        raise _CliExit(exit_code, str(exc)) from exc


class _CliExit(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read_lines(path: str) -> list[str]:
    data = sys.stdin.read() if path == "-" else open(path, encoding="ascii").read()
    out = []
    for line in data.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _emit(args: argparse.Namespace, plain: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(plain)


def cmd_encode(args: argparse.Namespace) -> int:
    params = _params_from(args)
    message = _parse_bits(args.message, EXIT_USAGE)
    codeword = encode(params, message)
    _emit(args, codeword.bits, {"codeword": codeword.bits, "params": params.label()})
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    params = _params_from(args)
    received = _parse_bits(args.received, EXIT_MALFORMED)
    counts = decode(params, received)
    _emit(
        args,
        counts.format_plain(),
        {
            "deletions": list(counts.deletions),
            "insertions": list(counts.insertions),
            "params": params.label(),
        },
    )
    return EXIT_OK


def cmd_corrupt(args: argparse.Namespace) -> int:
    params = _params_from(args)
    if args.string is not None:
        lines = [args.string]
    elif args.infile is not None:
        lines = _read_lines(args.infile)
    else:
        raise _CliExit(EXIT_USAGE, "one of --string or --infile is required")
    if (args.pattern is None) == (not args.random):
        raise _CliExit(EXIT_USAGE, "exactly one of --pattern or --random is required")

    outputs = []
    for k, line in enumerate(lines):
        x = _parse_bits(line, EXIT_MALFORMED)
        if args.random:
            pattern = random_pattern(params, args.seed + k)
        else:
            pattern = parse_pattern(args.pattern, params)
        y = apply_pattern(params, x, pattern)
        outputs.append({"received": y.bits, "pattern": format_pattern(pattern)})
    if args.format == "json":
        print(json.dumps(outputs, indent=2))
    else:
        for entry in outputs:
            print(entry["received"])
            if args.random:
                print(f"pattern={entry['pattern']}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    params = _params_from(args)
    decoder = decoder_for(params)
    if args.mutate_probe:
        name, _, shift = args.mutate_probe.partition(":")
        if name not in PROBE_NAMES[params.family]:
            raise _CliExit(
                EXIT_USAGE,
                f"unknown probe {name!r}; family {params.family.value} has "
                f"{', '.join(PROBE_NAMES[params.family])}",
            )
        decoder = shifted_decoder(params, name, int(shift or "1"))
    report = check_decoder_exhaustive(params, decoder, jobs=args.jobs)
    print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def cmd_bounds(args: argparse.Namespace) -> int:
    values = bounds(args.delta, args.ell, args.n)
    caps = {
        "size_cap_any": values.size_cap(args.n, block_decodable=False),
        "size_cap_block_decodable": values.size_cap(args.n, block_decodable=True),
    }
    payload = {
        "bound1_bits": values.bound1,
        "bound_thm2_bits": values.bound_thm2,
        "bound_thm3_bits": values.bound_thm3,
        "epsilon": values.epsilon,
        "construction_redundancy_bits": values.construction_redundancy,
        "blocks": values.m,
        "thm2_applicable": values.thm2_applicable,
        **caps,
    }
    plain = "\n".join(f"{k} = {v}" for k, v in payload.items())
    _emit(args, plain, payload)
    return EXIT_OK


def cmd_maxcode(args: argparse.Namespace) -> int:
    report = max_code_search(
        args.ell, args.n, args.delta, block_decodable=args.block_decodable
    )
    print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def cmd_stress(args: argparse.Namespace) -> int:
    params = _params_from(args)
    result = stress_run(params, trials=args.trials, seed=args.seed)
    if args.format == "json":
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        print(
            f"trials={result['trials']} failures={result['failures']} "
            f"throughput={result['throughput_bits_per_s']:.3g} bits/s"
        )
        print("n\tdecode_s\tratio")
        for row in result["scaling"]:
            ratio = "-" if row["ratio"] is None else f"{row['ratio']:.2f}"
            print(f"{row['n']}\t{row['decode_s']:.4f}\t{ratio}")
    return EXIT_OK if result["failures"] == 0 else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="editdetect",
        description="Per-block deletion/insertion detection codecs and verifiers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=[f.value for f in Family])
        p.add_argument("--delta", type=int, default=None, help="per-block deletion budget (del family)")
        p.add_argument("--ell", type=int, required=True, help="block length in bits")
        p.add_argument("--n", type=int, required=True, help="codeword length in bits")
        p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("encode", help="encode a message into a codeword")
    add_params(p)
    p.add_argument("--message", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="recover per-block edit counts")
    add_params(p)
    p.add_argument("--received", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("corrupt", help="apply an edit pattern to a string")
    add_params(p)
    p.add_argument("--string", help="bit string to corrupt")
    p.add_argument("--infile", help="file of bit strings, one per line ('-' for stdin)")
    p.add_argument("--pattern", help="pattern in B=del@P / B=ins@G:V grammar")
    p.add_argument("--random", action="store_true", help="draw a seeded random pattern")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("verify", help="exhaustive decoder check against the oracle")
    add_params(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--mutate-probe",
        metavar="NAME:SHIFT",
        help="testing hook: shift a named decoder probe before checking",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="redundancy lower bounds for deletion counting")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("maxcode", help="exact maximum code size by exhaustive search")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--block-decodable", action="store_true")
    p.set_defaults(func=cmd_maxcode)

    p = sub.add_parser("stress", help="seeded random-pattern stress and timing run")
    add_params(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_stress)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except MalformedReceived as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (EditDetectError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
