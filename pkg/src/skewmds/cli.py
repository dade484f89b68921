"""Command-line front end.

Subcommands: ring-info, construct, verify, search, oracle, reproduce, emit.
Exit codes: 0 = MDS (or success for non-verdict commands), 2 = verified
non-MDS, 1 = error.  --catalog appends one JSON object per line; --seed
makes sampling commands deterministic.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional, Sequence

from .constructions import (
    FAMILIES,
    ConstructionResult,
    ConstructionSpec,
    build,
)
from .errors import SkewMdsError
from .galois_ring import GaloisRing, RingElement, make_ring
from .jsonio import (
    element_from_json,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    ring_to_json,
)
from .matrices import (
    GRMatrix,
    check_quasi_involutory,
    is_mds,
    twisted_chain,
)
from .oracle import CodeInstance, min_distance, weight_criterion_support
from .skew import SkewPoly, build_w_poly

EXIT_MDS = 0
EXIT_ERROR = 1
EXIT_NOT_MDS = 2


def _parse_literal(text: str) -> list:
    """Parse "1,2,2,1" or "[1,0,0],[2,0,0],..." into a Python list."""
    try:
        value = json.loads(f"[{text}]")
    except json.JSONDecodeError as exc:
        raise SkewMdsError(f"cannot parse element list {text!r}: {exc}") from exc
    return value


def _parse_poly(ring: GaloisRing, text: str) -> SkewPoly:
    return SkewPoly(ring, [element_from_json(ring, c) for c in _parse_literal(text)])


def _parse_element(ring: GaloisRing, text: str) -> RingElement:
    value = _parse_literal(text)
    if len(value) == 1:
        value = value[0]
    return element_from_json(ring, value)


def _ring_from_args(args) -> GaloisRing:
    modulus = _parse_literal(args.modulus) if args.modulus else None
    return make_ring(args.p, args.s, args.m, modulus=modulus, sigma_exponent=args.e)


def _add_ring_flags(sub):
    sub.add_argument("--p", type=int, default=2, help="prime characteristic base")
    sub.add_argument("--s", type=int, default=1, help="precision exponent (char = p^s)")
    sub.add_argument("--m", type=int, default=1, help="residue field degree")
    sub.add_argument("--modulus", help="basic primitive modulus coeffs, low to high")
    sub.add_argument("--e", type=int, default=0, help="twist exponent: sigma = theta^e")


def _emit_json(obj, args) -> None:
    indent = 2 if getattr(args, "json", False) else None
    print(json.dumps(obj, indent=indent))


def _append_catalog(path: Optional[str], record: dict) -> None:
    if not path:
        return
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def _record(result: ConstructionResult, min_d: Optional[int] = None) -> dict:
    rec = {
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        "ring": ring_to_json(result.working_ring),
        "g": [list(c.coeffs) for c in result.g.coeffs],
        "matrix": [
            [list(result.matrix[i, j].coeffs) for j in range(result.matrix.cols)]
            for i in range(result.matrix.rows)
        ],
        "mds": result.report.mds,
        "quasi_involutory": result.report.quasi_involutory,
        "coeffs_in_base": list(result.coeffs_in_base),
    }
    if result.spec is not None:
        rec["spec"] = result.spec.to_json()
    if result.condition_holds is not None:
        rec["condition_holds"] = result.condition_holds
    if min_d is not None:
        rec["min_distance"] = min_d
    return rec


# -- subcommands -------------------------------------------------------------


def cmd_ring_info(args) -> int:
    ring = _ring_from_args(args)
    info = ring_to_json(ring)
    info.update(
        {
            "size": ring.size,
            "characteristic": ring.char,
            "sigma_order": ring.sigma_order,
            "teichmuller_generator": list(ring.teichmuller_generator.coeffs),
        }
    )
    _emit_json(info, args)
    return EXIT_MDS


def _spec_from_args(ring: GaloisRing, args) -> ConstructionSpec:
    eta = None
    if args.eta:
        eta = tuple(_parse_element(ring, x.strip()) for x in args.eta.split(";"))
    c = _parse_element(ring, args.c) if args.c else None
    return ConstructionSpec(
        family=args.family,
        ring=ring,
        k=args.k,
        t=args.t,
        b=args.b,
        c=c,
        eta=eta,
        xi_exponent=args.xi_exponent,
        extension_degree=args.extension_degree,
    )


def cmd_construct(args) -> int:
    ring = _ring_from_args(args)
    if args.family == "from-poly":
        if not args.g:
            raise SkewMdsError("from-poly needs --g")
        g = _parse_poly(ring, args.g)
        t = args.t if args.t is not None else g.degree
        mat = twisted_chain(g, t)
        report = is_mds(mat)
        if args.check_involutory:
            report.quasi_involutory = check_quasi_involutory(g)
        result = ConstructionResult(
            spec=None,
            working_ring=ring,
            embedding=None,
            roots=(),
            g=g,
            matrix=mat,
            report=report,
            coeffs_in_base=tuple(True for _ in g.coeffs),
        )
    else:
        spec = _spec_from_args(ring, args)
        result = build(spec)
        if args.check_involutory:
            result.report.quasi_involutory = check_quasi_involutory(result.g)
    _emit_json(result.to_json(), args)
    _append_catalog(args.catalog, _record(result))
    return EXIT_MDS if result.report.mds else EXIT_NOT_MDS


def cmd_verify(args) -> int:
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            mat = matrix_from_json(json.load(fh))
        g = None
        t = None
    else:
        if not args.g:
            raise SkewMdsError("verify needs a matrix file or --g")
        ring = _ring_from_args(args)
        g = _parse_poly(ring, args.g)
        t = args.t if args.t is not None else g.degree
        mat = twisted_chain(g, t)
    report = is_mds(mat)
    if args.oracle:
        report.min_distance = min_distance(CodeInstance(mat))
    if args.criterion:
        if g is None:
            raise SkewMdsError("--criterion needs --g (support basis is built from g)")
        agrees = weight_criterion_support(g, t) == report.mds
        if not agrees:
            raise SkewMdsError("weight criterion disagrees with the minor test")
    _emit_json(report.to_json(), args)
    return EXIT_MDS if report.mds else EXIT_NOT_MDS


def _parse_range(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def cmd_search(args) -> int:
    ring = _ring_from_args(args)
    rng = random.Random(args.seed)
    records = []
    n_mds = n_other = n_err = 0
    for b in _parse_range(args.b_range):
        for xe in _parse_range(args.xi_range):
            for _ in range(max(1, args.eta_samples) if args.family == "root_perturbed" else 1):
                eta = None
                if args.family == "root_perturbed":
                    eta = tuple(ring.random_nilpotent(rng) for _ in range(args.k))
                try:
                    spec = ConstructionSpec(
                        family=args.family,
                        ring=ring,
                        k=args.k,
                        t=args.t,
                        b=b,
                        eta=eta,
                        xi_exponent=xe,
                        extension_degree=args.extension_degree,
                    )
                    result = build(spec)
                except SkewMdsError as exc:
                    n_err += 1
                    print(
                        json.dumps({"b": b, "xi_exponent": xe, "error": str(exc)}),
                        file=sys.stderr,
                    )
                    continue
                rec = _record(result)
                rec["b"] = b
                rec["xi_exponent"] = xe
                records.append(rec)
                if result.report.mds:
                    n_mds += 1
                else:
                    n_other += 1
                print(json.dumps(rec, sort_keys=True))
                _append_catalog(args.catalog, rec)
    if args.plot:
        _render_search_plot(records, args.plot)
    print(
        f"search: {n_mds} mds, {n_other} non-mds, {n_err} errors",
        file=sys.stderr,
    )
    return EXIT_MDS


def _render_search_plot(records: Sequence[dict], path: str) -> None:
    """Bar chart of verdict counts per offset b, saved next to the records."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_b: dict[int, list[bool]] = {}
    for rec in records:
        by_b.setdefault(rec["b"], []).append(rec["mds"])
    bs = sorted(by_b)
    mds_counts = [sum(by_b[b]) for b in bs]
    non_counts = [len(by_b[b]) - sum(by_b[b]) for b in bs]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(bs, mds_counts, label="mds", color="#2a6f4e")
    ax.bar(bs, non_counts, bottom=mds_counts, label="not mds", color="#b0413e")
    ax.set_xlabel("power offset b")
    ax.set_ylabel("candidates")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_oracle(args) -> int:
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            mat = matrix_from_json(json.load(fh))
    else:
        if not args.g:
            raise SkewMdsError("oracle needs a matrix file or --g")
        ring = _ring_from_args(args)
        g = _parse_poly(ring, args.g)
        t = args.t if args.t is not None else g.degree
        mat = twisted_chain(g, t)
    d = min_distance(CodeInstance(mat))
    report = {"min_distance": d, "mds": d == mat.rows + 1}
    _emit_json(report, args)
    return EXIT_MDS if report["mds"] else EXIT_NOT_MDS


def _golden_checks() -> list[tuple[str, bool, str]]:
    out = []

    # degree-3 square chain over GR(25, 5^6), twist theta^2
    ring = make_ring(5, 2, 3, modulus=[3, 3, 0, 1], sigma_exponent=2)
    g = SkewPoly(ring, [ring.from_int(c) for c in (1, 2, 2, 1)])
    ng = twisted_chain(g, 3)
    want = [[24, 23, 23], [2, 3, 2], [23, 23, 24]]
    got = [[ng[i, j].coeffs[0] for j in range(3)] for i in range(3)]
    constant = all(
        all(c == 0 for c in ng[i, j].coeffs[1:]) for i in range(3) for j in range(3)
    )
    ok = (
        got == want
        and constant
        and is_mds(ng).mds
        and check_quasi_involutory(g)
    )
    out.append(("GR(25,5^6) involutory chain", ok, f"N_g rows {got}"))

    # degree-4 chain over GR(4, 2^8), twist theta
    ring = make_ring(2, 2, 4, modulus=[1, 1, 0, 0, 1], sigma_exponent=1)
    a = ring.zeta
    g = SkewPoly(
        ring,
        [
            ring.one,
            ring.one,
            a**3,
            ring.from_int(3) + ring.from_int(3) * a + a**2 + ring.from_int(2) * a**3,
            ring.one,
        ],
    )
    rep = is_mds(twisted_chain(g, 4))
    out.append(("GR(4,2^8) degree-4 chain", rep.mds, "all minors unit"))

    # degree-3 chains over GR(4, 2^16), untwisted, with and without
    # nilpotent root perturbation
    ring = make_ring(2, 2, 8, modulus=[1, 1, 0, 0, 0, 0, 1, 1, 1], sigma_exponent=0)
    xi = ring.zeta
    two = ring.from_int(2)
    plain = build_w_poly([ring.one, xi, xi**2])
    shifted = build_w_poly([ring.one + two, xi + two * xi, xi**2 + two * xi**2])
    ok = is_mds(twisted_chain(plain, 3)).mds and is_mds(twisted_chain(shifted, 3)).mds
    out.append(("GR(4,2^16) perturbed roots", ok, "both chains MDS"))

    return out


def cmd_reproduce(args) -> int:
    checks = _golden_checks()
    if args.json:
        print(json.dumps([{"name": n, "pass": ok} for n, ok, _ in checks]))
    else:
        for name, ok, detail in checks:
            print(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
    return EXIT_MDS if all(ok for _, ok, _ in checks) else EXIT_ERROR


def cmd_emit(args) -> int:
    ring = _ring_from_args(args)
    g = _parse_poly(ring, args.g)
    if args.format == "companion-recursion":
        # last companion row: the recursion taps -g_0 ... -g_{k-1}
        taps = [(-g.coeff(i)) for i in range(g.degree)]
        print(",".join(json.dumps(list(x.coeffs)) for x in taps))
        return EXIT_MDS
    raise SkewMdsError(f"unknown emit format {args.format!r}")


# -- argument wiring -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="append JSONL records to this path")
    common.add_argument("--seed", type=int, default=0, help="sampling seed")
    common.add_argument("--json", action="store_true", help="pretty-print JSON output")

    parser = argparse.ArgumentParser(
        prog="skewmds",
        description="Construct and verify quasi-recursive MDS matrices "
        "over Galois rings.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return subs.add_parser(name, parents=[common], **kw)

    sp = add_parser("ring-info", help="describe a Galois ring")
    _add_ring_flags(sp)
    sp.set_defaults(func=cmd_ring_info)

    sp = add_parser("construct", help="run one construction family")
    _add_ring_flags(sp)
    sp.add_argument("--family", default="consecutive_powers",
                    choices=list(FAMILIES) + ["from-poly"])
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--t", type=int)
    sp.add_argument("--b", type=int, default=1)
    sp.add_argument("--c", help="unit scale element literal")
    sp.add_argument("--eta", help="semicolon-separated nilpotent element literals")
    sp.add_argument("--g", help="polynomial for from-poly, coeffs low to high")
    sp.add_argument("--xi-exponent", type=int, default=1)
    sp.add_argument("--extension-degree", type=int)
    sp.add_argument("--check-involutory", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = add_parser("verify", help="MDS-check a matrix or a chain of g")
    _add_ring_flags(sp)
    sp.add_argument("--matrix", help="matrix JSON file")
    sp.add_argument("--g", help="polynomial coeffs low to high")
    sp.add_argument("--t", type=int)
    sp.add_argument("--oracle", action="store_true", help="also run min_distance")
    sp.add_argument("--criterion", action="store_true",
                    help="cross-check the support weight criterion")
    sp.set_defaults(func=cmd_verify)

    sp = add_parser("search", help="sweep a family over b / xi exponents")
    _add_ring_flags(sp)
    sp.add_argument("--family", default="consecutive_powers", choices=list(FAMILIES))
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--t", type=int)
    sp.add_argument("--b-range", default="0:0", help="lo:hi inclusive")
    sp.add_argument("--xi-range", default="1:1", help="lo:hi inclusive")
    sp.add_argument("--eta-samples", type=int, default=1)
    sp.add_argument("--extension-degree", type=int)
    sp.add_argument("--plot", help="save a verdict bar chart to this file")
    sp.set_defaults(func=cmd_search)

    sp = add_parser("oracle", help="exhaustive minimum-distance check")
    _add_ring_flags(sp)
    sp.add_argument("--matrix", help="matrix JSON file")
    sp.add_argument("--g", help="polynomial coeffs low to high")
    sp.add_argument("--t", type=int)
    sp.set_defaults(func=cmd_oracle)

    sp = add_parser("reproduce", help="re-run the golden examples")
    sp.set_defaults(func=cmd_reproduce)

    sp = add_parser("emit", help="export recursion coefficients")
    _add_ring_flags(sp)
    sp.add_argument("--format", default="companion-recursion")
    sp.add_argument("--g", required=True)
    sp.set_defaults(func=cmd_emit)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SkewMdsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
