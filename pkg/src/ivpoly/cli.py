"""Command-line front end.

Exit codes: 0 computed and member/success, 1 computed and non-member,
2 usage or parse error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import replace

from . import algint, density, matrixlab, membership
from .arith.matrix import ModMat
from .arith.parse import parse_int_matrix, parse_poly, parse_quadratic_element, parse_zpoly
from .arith.poly import format_poly
from .config import Settings, load_settings
from .errors import IrreducibilityUnknown, IvpError, NotInS, ResourceLimit

EXIT_OK, EXIT_NONMEMBER, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

RINGS = ("z", "matrices", "matrix-class", "r-alpha", "s-alpha", "ok", "subalgebra", "conductor")


class _Usage(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--config", metavar="FILE", help="key=value settings file")
    p.add_argument("--jobs", type=int, help="worker processes for enumerations")
    p.add_argument("--seed", type=int, help="seed for randomized sampling")
    p.add_argument("--degree-cap", type=int)
    p.add_argument("--enumeration-cap", type=int)
    p.add_argument("--matrix-cap", type=int, help="cap on d^(n^2) for matrix enumeration")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ivpoly", description="Integer-valued polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="membership of a polynomial in a ring")
    check.add_argument("--ring", choices=RINGS, required=True)
    check.add_argument("--n", type=int, help="matrix dimension for --ring matrices")
    check.add_argument("--charpoly", help="monic p for --ring matrix-class")
    check.add_argument("--minpoly", help="minimal polynomial for r-alpha, s-alpha, subalgebra, conductor")
    check.add_argument("--disc", type=int, help="squarefree D for --ring ok")
    check.add_argument("poly", nargs="?", default="-", help="polynomial (default: stdin)")

    gen = sub.add_parser("generate", parents=[common], help="product construction of a member of Int(M_n(Z))")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--den", type=int, required=True)

    null = sub.add_parser("nullideal", parents=[common], help="null ideal of a matrix mod d up to a degree bound")
    src = null.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help="integer matrix, e.g. '[[0,1],[1,0]]'")
    src.add_argument("--charpoly", help="intersect over all matrices with this characteristic polynomial")
    null.add_argument("--mod", type=int, required=True)
    null.add_argument("--bound", type=int, help="degree bound (default n, or 3n with --charpoly)")

    integ = sub.add_parser("integralize", parents=[common], help="monic phi with phi(f) in R_alpha")
    integ.add_argument("--minpoly", required=True)
    integ.add_argument("poly", nargs="?", default="-")

    oracle = sub.add_parser("oracle", parents=[common], help="exhaustive check over all matrices mod d")
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("poly", nargs="?", default="-")

    dens = sub.add_parser("density", help="density experiments")
    dsub = dens.add_subparsers(dest="experiment", required=True)
    cov = dsub.add_parser("coverage", parents=[common])
    cov.add_argument("--order", required=True, help="monic p defining Z[theta]")
    cov.add_argument("--mod", type=int, required=True)
    cov.add_argument("--k-bound", type=int)
    cov.add_argument("--exclude-generators", action="store_true")
    sand = dsub.add_parser("sandwich", parents=[common])
    sand.add_argument("--n", type=int, default=2)
    sand.add_argument("--family", help="comma-separated squarefree D (default all |D| <= 20)")
    sand.add_argument("--samples", type=int, help="check this many seeded random members instead of POLY")
    sand.add_argument("poly", nargs="?", default="-")
    fals = dsub.add_parser("falsifier", parents=[common])
    fals.add_argument("--den", default="2,3", help="comma-separated denominators")
    fals.add_argument("--max-degree", type=int, default=8)
    fals.add_argument("--coeff-bound", type=int, default=6)
    fals.add_argument("--alpha-bound", type=int, default=10)

    alg = sub.add_parser("algint", help="quadratic and higher algebraic integers")
    asub = alg.add_subparsers(dest="action", required=True)
    idx = asub.add_parser("index", parents=[common], help="index of Z[alpha] in O_K (quadratic)")
    idx.add_argument("--minpoly", required=True)
    ev = asub.add_parser("eval", parents=[common], help="coordinates of f(alpha) in the power basis")
    ev.add_argument("--minpoly", required=True)
    ev.add_argument("poly", nargs="?", default="-")
    pre = asub.add_parser("preimage", parents=[common], help="f with f(alpha) = a + b*w")
    pre.add_argument("--minpoly", required=True)
    pre.add_argument("element")
    return parser


def _settings(args) -> Settings:
    s = load_settings(args.config) if args.config else Settings()
    overrides = {
        "jobs": args.jobs,
        "seed": args.seed,
        "degree_cap": args.degree_cap,
        "enumeration_cap": args.enumeration_cap,
        "matrix_enumeration_cap": args.matrix_cap,
    }
    return replace(s, **{k: v for k, v in overrides.items() if v is not None})


def _read_poly(text: str):
    if text == "-":
        text = sys.stdin.read()
    return membership.canonicalize(parse_poly(text))


def _need(value, flag: str):
    if value is None:
        raise _Usage(f"{flag} is required for this ring")
    return value


def _alpha(text: str) -> algint.AlgebraicInteger:
    return algint.mk_algebraic_integer(parse_zpoly(text))


def _verdict_text(ring: str, f, verdict) -> str:
    lines = [f"candidate: {f}", f"ring: {ring}", f"member: {'yes' if verdict.member else 'no'}"]
    if verdict.witness is not None:
        lines.append(f"witness ({verdict.witness.kind}): {verdict.witness.render()}")
    return "\n".join(lines)


def _cmd_check(args, s: Settings):
    f = _read_poly(args.poly)
    ring = args.ring
    if ring == "z":
        v = membership.is_int_valued_on_Z(f)
    elif ring == "matrices":
        v = membership.is_int_valued_on_MnZ(f, _need(args.n, "--n"), cap=s.enumeration_cap, jobs=s.jobs)
    elif ring == "matrix-class":
        v = membership.is_int_valued_on_Mnp(f, parse_zpoly(_need(args.charpoly, "--charpoly")))
    elif ring == "ok":
        v = algint.in_IntQ_OK(f, algint.QuadraticField(_need(args.disc, "--disc")), cap=s.enumeration_cap)
    elif ring == "subalgebra":
        p = parse_zpoly(_need(args.minpoly, "--minpoly"))
        v = membership.is_int_valued_on_subalgebra(f, p, cap=s.enumeration_cap, jobs=s.jobs)
    else:
        alpha = _alpha(_need(args.minpoly, "--minpoly"))
        fn = {"r-alpha": algint.in_R_alpha, "s-alpha": algint.in_S_alpha, "conductor": algint.in_conductor}[ring]
        v = fn(f, alpha)
    report = {"ring": ring, "candidate": str(f), **v.to_json()}
    return report, _verdict_text(ring, f, v), EXIT_OK if v.member else EXIT_NONMEMBER


def _cmd_oracle(args, s: Settings):
    f = _read_poly(args.poly)
    v = matrixlab.oracle_int_MnZ(f, args.n, cap=s.matrix_enumeration_cap, jobs=s.jobs)
    ring = "matrices"
    report = {"ring": ring, "candidate": str(f), **v.to_json()}
    return report, _verdict_text(ring, f, v), EXIT_OK if v.member else EXIT_NONMEMBER


def _cmd_generate(args, s: Settings):
    f = membership.generate_int_MnZ(args.n, args.den, degree_cap=s.degree_cap)
    report = {"n": args.n, "den": f.den, "degree": f.degree, "candidate": str(f)}
    return report, str(f), EXIT_OK


def _cmd_nullideal(args, s: Settings):
    if args.mod < 2:
        raise _Usage("--mod must be >= 2")
    if args.matrix is not None:
        m = ModMat(parse_int_matrix(args.matrix), args.mod)
        bound = m.n if args.bound is None else args.bound
        span = matrixlab.null_ideal_span(m, bound)
    else:
        p = parse_zpoly(args.charpoly)
        span = matrixlab.intersect_null_ideals(p, args.mod, args.bound, cap=s.matrix_enumeration_cap)
    text = [f"modulus: {span.modulus}", f"degree bound: {span.degree_bound}"]
    text += [f"  {g}" for g in span.generators] or ["  (zero module)"]
    return span.to_json(), "\n".join(text), EXIT_OK


def _cmd_integralize(args, s: Settings):
    f = _read_poly(args.poly)
    alpha = _alpha(args.minpoly)
    phi = algint.integralizer(f, alpha, degree_cap=s.degree_cap)
    ok = algint.in_R_alpha(algint.compose(phi, f), alpha).member
    report = {
        "candidate": str(f),
        "minpoly": str(alpha.minpoly),
        "phi": str(phi),
        "degree": phi.degree,
        "composition_in_r_alpha": ok,
    }
    text = f"phi: {phi}\ndegree: {phi.degree}\nphi(f) in R_alpha: {'yes' if ok else 'no'}"
    return report, text, EXIT_OK if ok else EXIT_NONMEMBER


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise _Usage(f"expected comma-separated integers, got {text!r}") from None


def _cmd_density(args, s: Settings):
    if args.experiment == "coverage":
        r = density.coverage_by_degree_n(
            parse_zpoly(args.order),
            args.mod,
            args.k_bound,
            exclude_generators=args.exclude_generators,
            cap=s.enumeration_cap,
        )
        lines = [f"order: Z[X]/({r.order})", f"modulus: {r.modulus}"]
        for c in r.classes:
            if c.representative is None:
                rep = "NOT_FOUND"
            else:
                rep = f"{format_poly(c.representative, var='t')} (k={c.k})"
            lines.append(f"  {list(c.residue)} -> {rep}")
        lines.append(f"not found: {r.not_found}")
        return r.to_json(), "\n".join(lines), EXIT_OK if r.not_found == 0 else EXIT_NONMEMBER
    if args.experiment == "sandwich":
        family = density.squarefree_family() if args.family is None else _int_list(args.family)
        if args.samples is not None:
            rng = random.Random(s.seed)
            bad = []
            for _ in range(args.samples):
                f = density.random_int_MnZ_member(args.n, rng.choice((2, 3)), rng)
                rep = density.sandwich_check(f, args.n, family, cap=s.enumeration_cap)
                if not rep.consistent:
                    bad.append(rep)
            report = {
                "seed": s.seed,
                "count": args.samples,
                "family": family,
                "violations": [r.to_json() for r in bad],
            }
            text = f"seed: {s.seed}\nsamples: {args.samples}\nviolations: {len(bad)}"
            return report, text, EXIT_OK if not bad else EXIT_NONMEMBER
        f = _read_poly(args.poly)
        rep = density.sandwich_check(f, args.n, family, cap=s.enumeration_cap)
        lines = [f"candidate: {f}", f"Int(M_{args.n}(Z)): {'member' if rep.lower.member else 'non-member'}"]
        lines += [f"  D = {D}: {'member' if v.member else 'non-member'}" for D, v in rep.upper]
        lines.append(f"consistent: {'yes' if rep.consistent else 'no'}")
        return rep.to_json(), "\n".join(lines), EXIT_OK if rep.consistent else EXIT_NONMEMBER
    rep = density.theorem2_falsifier(
        tuple(_int_list(args.den)), args.max_degree, args.coeff_bound, args.alpha_bound
    )
    lines = [
        f"alpha sample: {rep.alpha_sample}",
        f"examined: {rep.examined}",
        f"survivors: {len(rep.survivors)}",
    ] + [f"  {f}" for f in rep.survivors]
    return rep.to_json(), "\n".join(lines), EXIT_OK if not rep.survivors else EXIT_NONMEMBER


def _cmd_algint(args, s: Settings):
    alpha = _alpha(args.minpoly)
    report = {"minpoly": str(alpha.minpoly)}
    if args.action == "index":
        report["field_D"] = algint.field_of(alpha).D
        report["index"] = algint.index_of_order(alpha)
        text = f"field: Q(sqrt({report['field_D']}))\nindex: {report['index']}"
    elif args.action == "eval":
        f = _read_poly(args.poly)
        coords = algint.eval_at_alpha(f, alpha)
        report["candidate"] = str(f)
        report["coordinates"] = [str(c) for c in coords]
        text = "coordinates: " + " ".join(report["coordinates"])
    else:
        beta = parse_quadratic_element(args.element)
        f = algint.preimage_under_eval(beta, alpha)
        report["element"] = args.element.strip()
        report["preimage"] = str(f)
        text = str(f)
    return report, text, EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "generate": _cmd_generate,
    "nullideal": _cmd_nullideal,
    "integralize": _cmd_integralize,
    "density": _cmd_density,
    "algint": _cmd_algint,
}


def _emit_error(as_json: bool, kind: str, message: str) -> None:
    if as_json:
        print(json.dumps({"error": {"kind": kind, "message": message}}))
    print(f"ivpoly: {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        settings = _settings(args)
        report, text, code = _COMMANDS[args.command](args, settings)
    except ResourceLimit as exc:
        _emit_error(as_json, "resource_limit", str(exc))
        return EXIT_LIMIT
    except IrreducibilityUnknown as exc:
        _emit_error(as_json, "irreducibility_unknown", str(exc))
        return EXIT_LIMIT
    except NotInS as exc:
        _emit_error(as_json, "not_in_s", str(exc))
        return EXIT_NONMEMBER
    except (_Usage, IvpError, ValueError, OSError) as exc:
        _emit_error(as_json, type(exc).__name__, str(exc))
        return EXIT_USAGE
    if as_json:
        print(json.dumps(report))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
