"""Command-line front end.

Subcommands: ``algebra`` (construct and validate), ``invariants`` (invariant
subspace of a module descriptor), ``homology`` (Betti table with prediction
comparison), ``verify`` (the structure/claim suites).

Global flags (environment variables with the same names, uppercased and
prefixed with LEIBNIZ_HOMOLOGY_, override the defaults): --seed, --primes,
--cap-exact, --cap-modular, --json.

Module descriptor mini-grammar for ``invariants --module``:
    wedge:I:k      the k-th wedge power of the translations
    tensor:h:k     the k-th tensor power of the affine algebra
    I*wedge:k      translations ⊗ wedge^k
    so*wedge:k     so(p,q) ⊗ wedge^k
    so             the adjoint module of so(p,q)

Exit codes: 0 all checks passed, 1 check failure, 2 usage error, 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .homology import HomologyOptions, cohomology_dims, homology_dims
from .invariants import invariant_subspace
from .liealg import Signature, build_abelian, build_affine, build_so, validate
from .linalg import CapExceededError
from .repspace import Space, mixed_space, tensor_space, wedge_space
from .verify import SCHEMA_VERSION, Environment, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

ENV_PREFIX = "LEIBNIZ_HOMOLOGY_"


def _env_default(name: str, fallback, cast):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return cast(raw)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=_env_default("SEED", 0, int),
                        help="seed for prime selection and random spot checks")
    parser.add_argument("--primes", type=int, default=_env_default("PRIMES", 2, int),
                        help="number of agreeing primes required for modular ranks")
    parser.add_argument("--cap-exact", type=int, default=_env_default("CAP_EXACT", 10_000, int),
                        help="max columns for exact elimination")
    parser.add_argument("--cap-modular", type=int,
                        default=_env_default("CAP_MODULAR", 3_000_000, int),
                        help="max columns for modular elimination")
    parser.add_argument("--json", metavar="PATH",
                        default=_env_default("JSON", None, str),
                        help="write the machine-readable report to PATH")


def _signature(args) -> Signature:
    try:
        return Signature(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


def _emit(args, payload: dict) -> None:
    if args.json:
        data = json.dumps(payload, indent=2, sort_keys=False) + "\n"
        with open(args.json, "w") as fh:
            fh.write(data)


# ---------------------------------------------------------------------------


def cmd_algebra(args) -> int:
    sig = _signature(args)
    so = build_so(sig)
    h = build_affine(sig)
    rep_so, rep_h = validate(so), validate(h)
    print(f"signature {sig}: dim so = {so.dim}, dim affine = {h.dim}")
    print("basis:", " ".join(str(lab) for lab in h.labels))
    print(f"validation: so {'pass' if rep_so.ok else 'FAIL'}, affine {'pass' if rep_h.ok else 'FAIL'}")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "algebra",
        "signature": {"p": sig.p, "q": sig.q},
        "environment": {"seed": args.seed},
        "results": [
            {
                "dim_so": so.dim,
                "dim_affine": h.dim,
                "labels": [str(lab) for lab in h.labels],
                "validation": {"so": rep_so.ok, "affine": rep_h.ok},
                "structure": [
                    {"a": str(h.labels[a]), "b": str(h.labels[b]),
                     "bracket": {str(h.labels[c]): int(v) for c, v in sorted(vec.items())}}
                    for (a, b), vec in sorted(h.structure.items())
                    if a < b
                ],
            }
        ],
    }
    _emit(args, payload)
    return EXIT_OK if rep_so.ok and rep_h.ok else EXIT_CHECK_FAILED


def _parse_module(desc: str, sig: Signature) -> tuple[Space, Optional[int]]:
    """Descriptor -> (space, expected dimension or None)."""
    h = build_affine(sig)
    n = sig.n
    parts = desc.split(":")
    try:
        if parts[0] == "wedge" and parts[1] == "I":
            k = int(parts[2])
            return wedge_space(h, k), (1 if k in (0, n) else 0)
        if parts[0] == "tensor" and parts[1] == "h":
            return tensor_space(h, int(parts[2])), None
        if parts[0] == "I*wedge":
            k = int(parts[1])
            return mixed_space(h, k, lead=h.translation_indices), (1 if k in (1, n - 1) else 0)
        if parts[0] == "so*wedge":
            k = int(parts[1])
            if n == 4 and k == 2:
                return mixed_space(h, k, lead=h.so_indices), None
            return mixed_space(h, k, lead=h.so_indices), (1 if k in (2, n - 2) else 0)
        if parts[0] == "so" and len(parts) == 1:
            return tensor_space(h, 1, factors=h.so_indices), 0
    except (IndexError, ValueError):
        pass
    raise UsageError(
        f"cannot parse module descriptor {desc!r} "
        "(expected wedge:I:k, tensor:h:k, I*wedge:k, so*wedge:k or so)"
    )


def cmd_invariants(args) -> int:
    sig = _signature(args)
    space, expected = _parse_module(args.module, sig)
    so = build_so(sig)
    basis = invariant_subspace(so, space)
    flag = ""
    if expected is not None:
        flag = f" (expected {expected}: {'match' if basis.dim == expected else 'MISMATCH'})"
    elif sig.n == 4 and args.module == "so*wedge:2":
        flag = " (expected 2 by direct computation; the k=2 / k=n-2 statements coincide here)"
    print(f"invariants of {args.module} under so{sig}: dim {basis.dim}{flag}")
    for chain in basis.basis:
        print("  ", chain)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "invariants",
        "signature": {"p": sig.p, "q": sig.q},
        "environment": {"seed": args.seed},
        "results": [
            {
                "module": args.module,
                "dim": basis.dim,
                "expected": expected,
                "basis": [
                    [
                        {
                            "word": chain.word_str(w),
                            "numerator": c.numerator,
                            "denominator": c.denominator,
                        }
                        for w, c in chain.terms()
                    ]
                    for chain in basis.basis
                ],
            }
        ],
    }
    _emit(args, payload)
    if expected is not None and basis.dim != expected:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_homology(args) -> int:
    if args.abelian is not None:
        if args.p is not None or args.q is not None:
            raise UsageError("--abelian excludes --p/--q")
        algebra = build_abelian(args.abelian)
        default_deg = 3
    else:
        if args.p is None or args.q is None:
            raise UsageError("need --p and --q (or --abelian N)")
        sig = _signature(args)
        algebra = build_affine(sig)
        default_deg = 5 if sig.n == 4 else 4
    max_degree = args.max_degree if args.max_degree is not None else default_deg
    opts = HomologyOptions(
        mode=args.mode,
        cap_exact=args.cap_exact,
        cap_modular=args.cap_modular,
        primes=args.primes,
        seed=args.seed,
    )
    report = homology_dims(algebra, max_degree, options=opts)
    print(report.table())
    dual = cohomology_dims(report)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "homology",
        "signature": {"p": args.p, "q": args.q} if args.abelian is None else {"abelian": args.abelian},
        "environment": report.environment,
        "results": [report.to_json_dict(), dual.to_json_dict()],
    }
    _emit(args, payload)
    if report.capped_at is not None and report.capped_at <= max_degree + 1:
        print(f"partial report: {report.cap_message}", file=sys.stderr)
        return EXIT_CAP
    if report.matches is not None and not all(report.matches):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    sig = _signature(args)
    env = Environment(
        seed=args.seed,
        primes=args.primes,
        cap_exact=args.cap_exact,
        cap_modular=args.cap_modular,
    )
    try:
        report = run_suite(args.suite, sig, env)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(report.table())
    _emit(args, report.to_json_dict())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibniz-homology",
        description="Exact workbench for the Leibniz homology of affine indefinite orthogonal Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_alg = sub.add_parser("algebra", help="construct and validate the algebras of a signature")
    p_alg.add_argument("--p", type=int, required=True)
    p_alg.add_argument("--q", type=int, required=True)
    _add_common(p_alg)
    p_alg.set_defaults(func=cmd_algebra)

    p_inv = sub.add_parser("invariants", help="invariant subspace of a module descriptor")
    p_inv.add_argument("--p", type=int, required=True)
    p_inv.add_argument("--q", type=int, required=True)
    p_inv.add_argument("--module", required=True,
                       help="wedge:I:k | tensor:h:k | I*wedge:k | so*wedge:k | so")
    _add_common(p_inv)
    p_inv.set_defaults(func=cmd_invariants)

    p_hom = sub.add_parser("homology", help="Betti table of the Loday complex")
    p_hom.add_argument("--p", type=int)
    p_hom.add_argument("--q", type=int)
    p_hom.add_argument("--abelian", type=int, metavar="N",
                       help="use the N-dimensional abelian algebra instead of --p/--q")
    p_hom.add_argument("--max-degree", type=int, default=None)
    p_hom.add_argument("--mode", choices=("auto", "exact", "modular"), default="auto")
    _add_common(p_hom)
    p_hom.set_defaults(func=cmd_homology)

    p_ver = sub.add_parser("verify", help="run the structure / claim verification suites")
    p_ver.add_argument("--suite", choices=("structure", "paper", "all"), default="all")
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.add_argument("--q", type=int, required=True)
    _add_common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
