"""Command-line front end.

Every subcommand prints JSON to stdout (or --out FILE).  Exit codes: 0 for
success (including bound-only verification outcomes), 2 when verification
finds a mismatch, 3 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .codes import NegacyclicCode
from .cosets import build_cosets
from .distance import SearchBudget, parse_budget
from .families import (build_family1, build_family2, build_family3,
                       build_family4)
from .ff import field_from_text
from .poly import Poly
from .verify import (ResultCache, best_code_search, cached_distance_report,
                     render_scope, verify_claims)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(3)


def _emit(payload: dict, out: Optional[str]):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_code(path: str) -> NegacyclicCode:
    with (sys.stdin if path == "-" else open(path)) as fh:
        return NegacyclicCode.from_descriptor(json.load(fh))


def _budget(args) -> SearchBudget:
    kw = {}
    if getattr(args, "budget", None):
        kw["max_message_enum"] = parse_budget(args.budget)
    if getattr(args, "w_max", None) is not None:
        kw["max_column_weight"] = args.w_max
    return SearchBudget(**kw)


def _cache(args) -> Optional[ResultCache]:
    if getattr(args, "no_cache", False):
        return None
    return ResultCache(getattr(args, "cache", None))


def main(argv=None) -> int:
    ap = _Parser(prog="negacyclic",
                 description="ternary negacyclic code toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("field", help="construct GF(p^m)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus")
    p.add_argument("--out")

    p = sub.add_parser("cosets", help="q-cyclotomic cosets mod N")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-mod", type=int, required=True, dest="n_mod")
    p.add_argument("--out")

    p = sub.add_parser("build", help="build a code from check cosets or generator")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--base-m", type=int, default=1)
    p.add_argument("--base-modulus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", help="comma-separated check coset leaders")
    p.add_argument("--zeros", help="comma-separated zero coset leaders")
    p.add_argument("--generator", help="generator polynomial, ascending coeffs")
    p.add_argument("--lam", type=int, default=-1, choices=(-1, 1))
    p.add_argument("--host-modulus")
    p.add_argument("--out")

    for name, hlp in (("dual", "dual of a code descriptor"),
                      ("psi", "cyclic image under x -> -x (odd length)"),
                      ("decompose", "even-length residue decomposition")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--code", required=True, help="descriptor file or -")
        p.add_argument("--out")

    p = sub.add_parser("distance", help="distance report for a code descriptor")
    p.add_argument("--code", required=True)
    p.add_argument("--budget", default=None, help="e.g. 3^16")
    p.add_argument("--w-max", type=int, default=None, dest="w_max")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("family", help="build one of the four families")
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--rho", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--host-modulus")
    p.add_argument("--out")

    p = sub.add_parser("best", help="best negacyclic/cyclic distance at (n, k)")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lam", type=int, default=-1, choices=(-1, 1))
    p.add_argument("--budget", default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run a verification scope")
    p.add_argument("--scope", default="all")
    p.add_argument("--budget", default=None)
    p.add_argument("--w-max", type=int, default=None, dest="w_max")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--render", action="store_true",
                   help="also print a plain-text table to stderr")
    p.add_argument("--out")

    args = ap.parse_args(argv)

    if args.cmd == "field":
        f = field_from_text(args.p, args.m, args.modulus)
        d = f.descriptor()
        d["primitive_modulus"] = f.primitive_flag
        _emit(d, args.out)
        return 0

    if args.cmd == "cosets":
        _emit(build_cosets(args.q, args.n_mod).to_json(), args.out)
        return 0

    if args.cmd == "build":
        base = field_from_text(args.q if args.base_m == 1 else 3,
                               args.base_m, args.base_modulus)
        host_mod = ([int(c) for c in args.host_modulus.split(",")]
                    if args.host_modulus else None)
        given = [x for x in (args.check, args.zeros, args.generator) if x]
        if len(given) != 1:
            ap.error("give exactly one of --check/--zeros/--generator")
        if args.check:
            leaders = [int(v) for v in args.check.split(",")]
            code = NegacyclicCode.from_check(base, args.n, leaders, args.lam, host_mod)
        elif args.zeros:
            leaders = [int(v) for v in args.zeros.split(",")]
            code = NegacyclicCode.from_zeros(base, args.n, leaders, args.lam, host_mod)
        else:
            g = Poly.from_text(base, args.generator)
            code = NegacyclicCode.from_generator(base, args.n, g, args.lam, host_mod)
        _emit(code.descriptor(), args.out)
        return 0

    if args.cmd == "dual":
        _emit(_load_code(args.code).dual().descriptor(), args.out)
        return 0

    if args.cmd == "psi":
        _emit(_load_code(args.code).psi_image().descriptor(), args.out)
        return 0

    if args.cmd == "decompose":
        code = _load_code(args.code)
        r1, r2, lam = code.residue_decompose()
        _emit({"lambda_sqrt": lam.as_int(),
               "res_minus": r1.descriptor(),
               "res_plus": r2.descriptor()}, args.out)
        return 0

    if args.cmd == "distance":
        code = _load_code(args.code)
        rep = cached_distance_report(code, _budget(args), args.threads,
                                     _cache(args))
        _emit(rep.to_json(), args.out)
        return 0

    if args.cmd == "family":
        if args.id == 1:
            if args.rho is None:
                ap.error("--rho required for family 1")
            host_mod = ([int(c) for c in args.host_modulus.split(",")]
                        if args.host_modulus else None)
            b = build_family1(args.rho, host_mod)
            payload = {"code": b.code.descriptor(),
                       "companion": b.companion.descriptor(),
                       "h_exponent": b.h_exponent,
                       "claims": {k: c.to_json() for k, c in b.claims.items()}}
        elif args.id == 2:
            if args.ell is None or args.n is None:
                ap.error("--ell and --n required for family 2")
            b = build_family2(args.ell, args.n)
            payload = {"code": b.code.descriptor(), "variant": b.variant,
                       "claims": {k: c.to_json() for k, c in b.claims.items()}}
        elif args.id == 3:
            if args.m is None or args.n is None:
                ap.error("--m and --n required for family 3")
            b = build_family3(args.m, args.n)
            payload = {"code": b.code.descriptor(), "variant": b.variant,
                       "claims": {k: c.to_json() for k, c in b.claims.items()}}
        else:
            if args.j is None or args.m is None:
                ap.error("--j and --m required for family 4")
            b = build_family4(args.j, args.m)
            payload = {"code": b.code.descriptor(),
                       "claims": {k: c.to_json() for k, c in b.claims.items()}}
        _emit(payload, args.out)
        return 0

    if args.cmd == "best":
        d, gen, code = best_code_search(args.q, args.n, args.k, args.lam,
                                        _budget(args), args.threads,
                                        _cache(args))
        _emit({"d": d, "generator": gen.to_text(),
               "code": code.descriptor()}, args.out)
        return 0

    if args.cmd == "verify":
        try:
            manifest = verify_claims(args.scope, _budget(args), args.threads,
                                    _cache(args))
        except ValueError as exc:
            ap.error(str(exc))
        _emit(manifest.to_json(), args.out)
        if args.render:
            print(render_scope(manifest), file=sys.stderr)
        return manifest.exit_code

    ap.error(f"unknown command {args.cmd}")  # pragma: no cover
    return 3


if __name__ == "__main__":
    sys.exit(main())
