"""Command-line surface: catalog listing, expansion, basis building, verification.

Every command is deterministic: identical invocations print byte-identical
output (stable key order, no timestamps).  Exit codes: 0 success, 1
verification failure, 2 usage or input error, 3 precision exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys

from .basis import BasisCache, build_f, build_phi, duality_residuals, residue_pairing
from .errors import (
    EmptyWindow,
    IndexOutOfRange,
    NonIntegralValuation,
    NotADivisor,
    NotPrime,
    OutOfWindow,
    PrecisionExhausted,
    QHeckeError,
    UnknownPair,
)
from .forms import (
    ALL_ONE_DIM_ROWS,
    PRINTED_82_PHI2,
    EtaQuotientSpec,
    catalog_entry,
    catalog_form,
    catalog_pairs,
    eta_product_expand,
    named_form,
)
from .valuations import (
    scan_qualifying_primes,
    verify_coefficient_formula,
    verify_expansion_identity,
    verify_hecke_decomposition,
    verify_valuations,
)

_USAGE_ERRORS = (UnknownPair, NotPrime, NotADivisor, NonIntegralValuation, IndexOutOfRange)
_PRECISION_ERRORS = (PrecisionExhausted, EmptyWindow, OutOfWindow)

_W82_TEXT = (
    "the published phi2 entry for (8,2), eta(1^80 2^-64), has weight 8 instead of "
    "2-k = -6 and breaks duality; the catalog uses eta(1^16 2^-32)*(2E2(2z)-E2(z))"
)


def _parse_pair(text: str):
    try:
        k, n = text.split(",")
        return int(k), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k,N (e.g. 8,2), got {text!r}") from None


def _parse_eta(text: str) -> EtaQuotientSpec:
    try:
        level_part, body = text.split(":")
        exps = {}
        for chunk in body.split(","):
            if "^" in chunk:
                d, r = chunk.split("^")
            else:
                d, r = chunk, "1"
            exps[int(d)] = exps.get(int(d), 0) + int(r)
        return EtaQuotientSpec(int(level_part), exps)
    except (ValueError, KeyError) as exc:
        raise argparse.ArgumentTypeError(f"bad eta selector {text!r}: {exc}") from None


def _emit(obj: dict, args, human_lines) -> None:
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        for line in human_lines:
            print(line)


def _cache_from(args) -> BasisCache:
    if getattr(args, "no_cache", False):
        return BasisCache()
    return BasisCache(args.cache_dir)


def _series_obj(series) -> dict:
    return series.to_json_obj()


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_catalog(args) -> int:
    rows = []
    pairs = catalog_pairs()
    selected = ALL_ONE_DIM_ROWS if args.all else [
        r for r in ALL_ONE_DIM_ROWS if (r["k"], r["N"]) in pairs
    ]
    if args.pair is not None:
        selected = [r for r in selected if (r["k"], r["N"]) == args.pair]
        if not selected:
            raise UnknownPair(f"{args.pair} is not in the listing")
    human = []
    for r in selected:
        k, n = r["k"], r["N"]
        in_scope = (k, n) in pairs
        row = {
            "k": k,
            "N": n,
            "genus": r["genus"],
            "cm": r["cm"],
            "in_scope": in_scope,
            "g": r["prefix"],
        }
        if in_scope:
            entry = catalog_entry(k, n)
            row["recipes"] = {
                which: {
                    "expr": entry.recipe(which).render(),
                    "prefix_lo": entry.recipe(which).prefix_lo,
                    "prefix": list(entry.recipe(which).prefix),
                }
                for which in ("g", "L", "phi2")
            }
            if entry.warnings:
                row["warnings"] = list(entry.warnings)
        rows.append(row)
        flag = "" if in_scope else "  [out of scope]"
        human.append(f"({k},{n})  genus {r['genus']}  cm={'yes' if r['cm'] else 'no'}  g = {r['prefix']}{flag}")
    _emit({"rows": rows}, args, human)
    return 0


def _cmd_expand(args) -> int:
    sel = args.selector
    warnings = []
    if sel[0] in ("g", "L", "phi2"):
        if len(sel) != 2:
            raise argparse.ArgumentTypeError("usage: expand {g|L|phi2} k,N")
        k, n = _parse_pair(sel[1])
        series = catalog_form(k, n, sel[0], args.prec)
        label = f"{sel[0]} for ({k},{n})"
        if sel[0] == "phi2":
            warnings.extend(catalog_entry(k, n).warnings)
    elif sel[0] == "eta":
        if len(sel) != 2:
            raise argparse.ArgumentTypeError("usage: expand eta N:delta^r,...")
        spec = _parse_eta(sel[1])
        series = eta_product_expand(spec, args.prec)
        label = spec.render()
        if spec == PRINTED_82_PHI2:
            warnings.append(_W82_TEXT)
    elif sel[0] in ("delta", "j"):
        if len(sel) != 1:
            raise argparse.ArgumentTypeError(f"usage: expand {sel[0]}")
        series = named_form(sel[0], args.prec)
        label = sel[0]
    else:
        raise argparse.ArgumentTypeError(f"unknown selector {sel[0]!r}")
    obj = {"selector": " ".join(sel), "warnings": warnings, "series": _series_obj(series)}
    human = [f"{label}:", f"  {series}"]
    human += [f"  warning: {w}" for w in warnings]
    _emit(obj, args, human)
    return 0


def _cmd_basis(args) -> int:
    k, n = args.pair
    cache = _cache_from(args)
    build = build_phi if args.family == "phi" else build_f
    elem = build(k, n, args.index, args.prec, cache)
    series = elem.series
    if series.hi > args.prec:
        series = series.restrict(hi=args.prec)
    obj = {
        "family": elem.family,
        "index": elem.index,
        "k": k,
        "N": n,
        "integral": elem.integral,
        "elimination": [[i, str(c)] for i, c in elem.elimination_coeffs],
        "series": _series_obj(series),
    }
    human = [
        f"{elem.family}_{elem.index} for ({k},{n}):",
        f"  {series}",
        f"  elimination multipliers: {list(elem.elimination_coeffs)}",
    ]
    _emit(obj, args, human)
    return 0


def _residual_report(kind: str, params: dict, residual, args) -> int:
    ok = residual.is_zero()
    obj = {"check": kind, **params, "window": [residual.lo, residual.hi], "ok": ok}
    if not ok:
        obj["residual"] = _series_obj(residual)
    human = [f"{kind} {params}: {'ok' if ok else 'FAILED'} on window [{residual.lo}, {residual.hi})"]
    if not ok:
        human.append(f"  residual: {residual}")
    _emit(obj, args, human)
    return 0 if ok else 1


def _cmd_dual(args) -> int:
    k, n = args.pair
    cache = _cache_from(args)
    res = duality_residuals(k, n, args.nmax, args.mmax, cache)
    pairing = residue_pairing(k, n, args.nmax, args.mmax, cache)
    bad = sorted([(nn, mm, v) for (nn, mm), v in res.items() if v != 0])
    badp = sorted([(nn, mm, v) for (nn, mm), v in pairing.items() if v != 0])
    ok = not bad and not badp
    obj = {
        "check": "duality",
        "k": k,
        "N": n,
        "nmax": args.nmax,
        "mmax": args.mmax,
        "duality_nonzero": [[a, b, str(v)] for a, b, v in bad],
        "pairing_nonzero": [[a, b, str(v)] for a, b, v in badp],
        "ok": ok,
    }
    human = [
        f"duality ({k},{n}) n<={args.nmax} m<={args.mmax}: "
        f"{'all residuals zero' if ok else 'NONZERO RESIDUALS'}",
    ]
    if bad:
        human.append(f"  duality residuals: {bad[:10]}")
    if badp:
        human.append(f"  pairing residuals: {badp[:10]}")
    _emit(obj, args, human)
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    k, n = args.pair
    cache = _cache_from(args)
    if args.verify_what == "duality":
        return _cmd_dual(args)
    if args.verify_what == "decomposition":
        residual = verify_hecke_decomposition(k, n, args.p, args.n, args.prec, cache)
        return _residual_report(
            "decomposition", {"k": k, "N": n, "p": args.p, "n": args.n}, residual, args)
    if args.verify_what == "expansion":
        residual = verify_expansion_identity(
            k, n, args.p, args.m, args.prec, args.perturb_a, cache)
        params = {"k": k, "N": n, "p": args.p, "m": args.m}
        if args.perturb_a is not None:
            params["a_override"] = args.perturb_a
        return _residual_report("expansion", params, residual, args)
    if args.verify_what == "coeff-formula":
        residual = verify_coefficient_formula(k, n, args.p, args.m, cache)
        ok = residual == 0
        obj = {"check": "coeff-formula", "k": k, "N": n, "p": args.p, "m": args.m,
               "residual": str(residual), "ok": ok}
        _emit(obj, args, [f"coeff-formula ({k},{n}) p={args.p} m={args.m}: "
                          f"{'ok' if ok else f'FAILED, residual {residual}'}"])
        return 0 if ok else 1
    if args.verify_what == "valuations":
        report = verify_valuations(k, n, args.p, args.mmax, args.scan, cache)
        obj = report.to_json_obj()
        human = [
            f"valuations ({k},{n}) p={args.p}: a(p)={report.a_p}, "
            f"qualifies={report.qualified} {report.qualifies}",
            f"  v_p(C(p^m)) for m=1..{args.mmax}: {list(report.vp_c)} "
            f"(constant: {report.vp_c_constant})",
        ]
        for d in report.diff:
            human.append(
                f"  m={d.m}: v_p(F|T/C - g) = {d.valuation} "
                f"(predicted {d.predicted}, witness q^{d.witness_exponent}, "
                f"scanned {d.scanned}) {'ok' if d.matches else 'MISMATCH'}"
            )
        _emit(obj, args, human)
        if not report.qualified:
            return 0  # informational: hypotheses fail, nothing is claimed
        return 0 if report.passes else 1
    if args.verify_what == "scan":
        rows = scan_qualifying_primes(k, n, args.pmax, cache)
        obj = {"check": "scan", "k": k, "N": n, "pmax": args.pmax, "rows": [
            {**r, "vp_C_p": "inf" if r["vp_C_p"] == float("inf") else r["vp_C_p"]}
            for r in rows
        ]}
        human = [f"qualifying-prime scan ({k},{n}) up to {args.pmax}:"]
        for r in rows:
            human.append(
                f"  p={r['p']}: a(p)={r['a_p']}, p|a(p)={not r['p_coprime_to_a_p']}, "
                f"v_p(C(p))={r['vp_C_p']} -> {'qualifies' if r['qualifies'] else 'no'}"
            )
        _emit(obj, args, human)
        return 0
    raise argparse.ArgumentTypeError(f"unknown verify subcommand {args.verify_what!r}")


# ---------------------------------------------------------------------------


def _add_common(sp, prec_default=64):
    sp.add_argument("--prec", type=int, default=prec_default,
                    help=f"precision (default {prec_default})")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.add_argument("--cache-dir", default="./.hecke-cache",
                    help="basis cache directory (default ./.hecke-cache)")
    sp.add_argument("--no-cache", action="store_true", help="do not read or write the disk cache")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qhecke",
        description="Exact q-series catalog, canonical bases, and p-adic valuation checks "
                    "for one-dimensional cusp form spaces.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the catalogued spaces")
    p.add_argument("--all", action="store_true", help="include out-of-scope rows")
    p.add_argument("--pair", type=_parse_pair, default=None, help="restrict to one k,N")
    _add_common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("expand", help="expand a form: g|L|phi2 k,N | eta N:d^r,... | delta | j")
    p.add_argument("selector", nargs="+", help="g|L|phi2 k,N / eta N:d^r,... / delta / j")
    _add_common(p, prec_default=16)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("basis", help="build a canonical basis element")
    p.add_argument("family", choices=("phi", "F"))
    p.add_argument("pair", type=_parse_pair)
    p.add_argument("index", type=int)
    _add_common(p, prec_default=24)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("dual", help="duality residual table C_m(n) - A_n(m)")
    p.add_argument("pair", type=_parse_pair)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--mmax", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("verify", help="run a verification")
    vsub = p.add_subparsers(dest="verify_what", required=True)

    v = vsub.add_parser("duality", help="duality + residue pairing residuals")
    v.add_argument("pair", type=_parse_pair)
    v.add_argument("--nmax", type=int, default=20)
    v.add_argument("--mmax", type=int, default=20)
    _add_common(v)
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("decomposition", help="F|T_k(p^n) = p^((k-1)n) F_{p^n} + C(p^n) g")
    v.add_argument("pair", type=_parse_pair)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    _add_common(v, prec_default=100)
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("expansion", help="iterated-U expansion of F|U(p^m)")
    v.add_argument("pair", type=_parse_pair)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--perturb-a", type=int, default=None,
                   help="override a(p) (negative control)")
    _add_common(v, prec_default=50)
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("coeff-formula", help="C(p^m) against the beta-weighted sum")
    v.add_argument("pair", type=_parse_pair)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    _add_common(v)
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("valuations", help="v_p(C(p^m)) and difference-series valuations")
    v.add_argument("pair", type=_parse_pair)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--mmax", type=int, default=3)
    v.add_argument("--scan", type=int, default=50, help="minimum coefficients scanned")
    _add_common(v)
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("scan", help="tabulate hypothesis flags for primes up to pmax")
    v.add_argument("pair", type=_parse_pair)
    v.add_argument("--pmax", type=int, default=30)
    _add_common(v)
    v.set_defaults(func=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except _PRECISION_ERRORS as exc:
        _fail(args, exc)
        return 3
    except _USAGE_ERRORS as exc:
        _fail(args, exc)
        return 2
    except QHeckeError as exc:
        _fail(args, exc)
        return 1


def _fail(args, exc) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}, indent=2))
    else:
        print(f"error: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
