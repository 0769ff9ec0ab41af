"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error (bad data, failed
invariant, unknown prime, ...).  ``--json`` switches any subcommand to a
stable machine-readable schema documented in the README.  Exact values
print as rational strings (with an explicit sqrt tag when present),
floats with 15 significant digits; GSP4_PRECISION overrides the float
tolerance.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .distinguish import (
    distinguish_level,
    explicit_main_term,
    rankin_coefficient_table,
    smallest_coprime_prime,
    weighted_prime_sum,
)
from .errors import Gsp4Error
from .euler import (
    ANALYTIC,
    ARITHMETIC,
    eigen_series_local,
    rescale,
    spin_reciprocal_eigen,
    spin_reciprocal_satake,
    std_reciprocal,
)
from .hecke import EigenvalueSystem, lambda_prime_power
from .records import format_rational, load_eigenform, load_elliptic
from .satake import (
    SatakeSystem,
    eigenvalues_from_spin_multiset,
    from_eigenvalues,
    representative_pair,
    spin_multiset,
    std_multiset_from_normalized,
)
from .scalars import SqrtRational, default_tolerance, scalars_close
from .sk import (
    QuadChar,
    sk_eigenvalue,
    sk_eigenvalue_p2,
    sk_spin_coefficients,
    sk_twisted_coefficients,
)
from .weil import (
    SPIN_SPIN,
    STD_STD,
    gamma_eval,
    l_factor,
    parse_rep_sum,
    rankin_arch_factors,
    sort_atoms,
    tensor,
)

_REP_PAIRS = {"rho4xrho4": SPIN_SPIN, "rho5xrho5": STD_STD}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _fmt_float(x: float) -> str:
    return format(x, ".15g")


def scalar_text(v) -> str:
    if isinstance(v, SqrtRational):
        return str(v)
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, complex):
        return f"{_fmt_float(v.real)}{v.imag:+.15g}j"
    return _fmt_float(v)


def scalar_json(v):
    if isinstance(v, SqrtRational):
        if v.d == 1:
            return format_rational(v.q)
        return {"q": format_rational(v.q), "d": v.d}
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def _atom_json(atom):
    return {"kind": atom.kind, "shift": format_rational(atom.shift)}


def _irrep_json(r):
    return {
        "kind": r.kind,
        "ell": r.ell if r.kind == "two_dim" else None,
        "t": format_rational(r.t),
    }


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_coprime_prime(args) -> int:
    p, bound = smallest_coprime_prime(args.level)
    payload = {
        "command": "coprime-prime",
        "level": args.level,
        "p": p,
        "bound": bound,
    }
    _emit(args, payload, [f"p={p} bound={_fmt_float(bound)}"])
    return 0


def _cmd_archimedean(args) -> int:
    pair = _REP_PAIRS[args.rep]
    atoms = rankin_arch_factors(args.k1, args.k2, pair)
    degree = sum(a.degree for a in atoms)
    value = None
    lines = [str(a) for a in atoms]
    lines.append(f"total degree: {degree}")
    if args.eval is not None:
        s = _parse_complex(args.eval)
        gv = gamma_eval(atoms, s)
        value = {
            "log_modulus": gv.log_modulus,
            "phase": gv.phase,
            "re": gv.value.real,
            "im": gv.value.imag,
        }
        lines.append(
            f"value at s={scalar_text(s)}: log|G|={_fmt_float(gv.log_modulus)} "
            f"phase={_fmt_float(gv.phase)}"
        )
    payload = {
        "command": "archimedean",
        "k1": args.k1,
        "k2": args.k2,
        "rep": args.rep,
        "atoms": [_atom_json(a) for a in atoms],
        "degree": degree,
        "value": value,
    }
    _emit(args, payload, lines)
    return 0


def _cmd_weil(args) -> int:
    a = parse_rep_sum(args.expr)
    b = parse_rep_sum(args.tensor)
    product = tensor(a, b)
    atoms = sort_atoms(l_factor(product))
    payload = {
        "command": "weil",
        "expr": args.expr,
        "tensor": args.tensor,
        "decomposition": [_irrep_json(r) for r in product],
        "dim": product.dim,
        "atoms": [_atom_json(x) for x in atoms],
    }
    lines = [
        f"tensor: {product}",
        f"dim: {product.dim}",
        "gamma factors: " + " ".join(str(x) for x in atoms),
    ]
    _emit(args, payload, lines)
    return 0


def _spin_series_exact(system, p, terms, normalized):
    l1, l2 = system.pair(p)
    rec = spin_reciprocal_eigen(l1, l2, p, system.k)
    if normalized:
        rec = rescale(rec, system.k, ANALYTIC)
        series = rec.reciprocal.truncated(terms).invert()
        kind = "a_coefficients"
    else:
        series = eigen_series_local(l1, l2, p, system.k, terms)
        kind = "eigenvalues"
    return rec, series, kind


def _spin_series_satake(system, p, terms, normalized):
    m = system.multiset(p)
    rec = spin_reciprocal_satake(m, p)
    if normalized:
        series = rec.reciprocal.truncated(terms).invert()
        kind = "a_coefficients"
    else:
        rec = rescale(rec, system.k, ARITHMETIC)
        l1, l2 = eigenvalues_from_spin_multiset(m, p, system.k)
        series = eigen_series_local(l1, l2, p, system.k, terms)
        kind = "eigenvalues"
    return rec, series, kind


def _cmd_euler(args) -> int:
    loaded = load_eigenform(args.form)
    system = loaded.system
    p = args.p
    terms = args.terms
    if args.rep == "spin":
        if loaded.is_exact:
            rec, series, kind = _spin_series_exact(system, p, terms, args.normalized)
        else:
            rec, series, kind = _spin_series_satake(system, p, terms, args.normalized)
    else:
        if loaded.is_exact:
            l1, l2 = system.pair(p)
            ns = from_eigenvalues(l1, l2, p, system.k)
        else:
            alpha, beta = representative_pair(system.multiset(p))
            from .satake import NormalizedSatake

            ns = NormalizedSatake(p, alpha, beta)
        rec = std_reciprocal(std_multiset_from_normalized(ns), p)
        series = rec.reciprocal.truncated(terms).invert()
        kind = "b_coefficients"
    payload = {
        "command": "euler",
        "form": loaded.label,
        "p": p,
        "rep": args.rep,
        "normalization": rec.normalization,
        "reciprocal": [scalar_json(c) for c in rec.reciprocal],
        "series_kind": kind,
        "series": [scalar_json(c) for c in series],
    }
    lines = [
        f"form: {loaded.label}",
        f"local reciprocal at p={p} ({rec.normalization}, degree {rec.degree}):",
        "  " + "  ".join(scalar_text(c) for c in rec.reciprocal),
        f"{kind} at p^r, r=0..{terms}:",
        "  " + "  ".join(scalar_text(c) for c in series),
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_eigs(args) -> int:
    loaded = load_eigenform(args.form)
    system = loaded.system
    p = args.p
    rmax = args.max_power
    if loaded.is_exact:
        work = system
        l1, l2 = system.pair(p)
    else:
        m = system.multiset(p)
        l1, l2 = eigenvalues_from_spin_multiset(m, p, system.k)
        work = EigenvalueSystem(system.k, system.level, {p: (l1, l2)})
    recursion = [lambda_prime_power(work, p, r) for r in range(rmax + 1)]
    series = list(eigen_series_local(l1, l2, p, system.k, rmax))
    if loaded.is_exact:
        agree = all(a == b for a, b in zip(recursion, series))
    else:
        tol = default_tolerance()
        agree = all(scalars_close(a, b, tol) for a, b in zip(recursion, series))
    payload = {
        "command": "eigs",
        "form": loaded.label,
        "p": p,
        "max_power": rmax,
        "recursion": [scalar_json(v) for v in recursion],
        "series": [scalar_json(v) for v in series],
        "agree": agree,
    }
    lines = [f"form: {loaded.label}  p={p}"]
    for r in range(rmax + 1):
        lines.append(
            f"lambda(p^{r}): recursion={scalar_text(recursion[r])} "
            f"series={scalar_text(series[r])}"
        )
    lines.append(f"agreement: {agree}")
    _emit(args, payload, lines)
    return 0 if agree else 2


def _cmd_distinguish(args) -> int:
    f1 = load_eigenform(args.form1)
    f2 = load_eigenform(args.form2)
    s1, s2 = f1.system, f2.system
    level = args.level
    if level is None:
        level = math.lcm(s1.level, s2.level)
    report = distinguish_level(s1, s2, level)
    payload = {
        "command": "distinguish",
        "form1": f1.label,
        "form2": f2.label,
        "level": level,
        "p": report.p,
        "index": report.index,
        "n": report.n,
        "bound": report.bound,
        "within_bound": report.within_bound,
        "borderline": report.borderline,
        "values": {
            str(i): [scalar_json(a), scalar_json(b)]
            for i, (a, b) in report.values.items()
        },
    }
    lines = [f"p = {report.p} (least prime coprime to {level})"]
    for i, (a, b) in report.values.items():
        marker = " <-- first disagreement" if i == report.index else ""
        lines.append(
            f"lambda(p^{i}): {scalar_text(a)} vs {scalar_text(b)}{marker}"
        )
    if report.index is None:
        lines.append("not distinguished at this prime (within_bound: n/a)")
    else:
        lines.append(
            f"n = {report.n}, bound (2 ln N + 2)^4 = {_fmt_float(report.bound)}, "
            f"within bound: {report.within_bound}"
        )
    _emit(args, payload, lines)
    return 0


def _cmd_sk_lift(args) -> int:
    loaded = load_elliptic(args.elliptic)
    f = loaded.form
    k = args.k
    chi = QuadChar(args.twist) if args.twist is not None else None
    if args.p is not None:
        lam_p = sk_eigenvalue(f, k, args.p)
        lam_p2 = sk_eigenvalue_p2(f, k, args.p)
        payload = {
            "command": "sk-lift",
            "elliptic": loaded.label,
            "k": k,
            "p": args.p,
            "lambda_p": scalar_json(lam_p),
            "lambda_p2": scalar_json(lam_p2),
        }
        lines = [
            f"lift of {loaded.label} at weight k={k}:",
            f"lambda({args.p}) = {scalar_text(lam_p)}",
            f"lambda({args.p}^2) = {scalar_text(lam_p2)}",
        ]
        _emit(args, payload, lines)
        return 0
    n_terms = args.terms
    if chi is None:
        coeffs = sk_spin_coefficients(f, n_terms)
        kind = "spin_coefficients"
    else:
        coeffs = sk_twisted_coefficients(f, chi, n_terms)
        kind = "twisted_coefficients"
    payload = {
        "command": "sk-lift",
        "elliptic": loaded.label,
        "k": k,
        "twist": args.twist,
        "series_kind": kind,
        "coefficients": [
            {"n": n, "value": scalar_json(v)} for n, v in coeffs.items()
        ],
    }
    lines = [f"lift of {loaded.label} at weight k={k}: {kind}"]
    for n, v in coeffs.items():
        lines.append(f"a({n}) = {scalar_text(v)}")
    _emit(args, payload, lines)
    return 0


def _satake_view(loaded) -> SatakeSystem:
    system = loaded.system
    if isinstance(system, SatakeSystem):
        return system
    msets = {}
    for p in system.primes:
        l1, l2 = system.pair(p)
        ns = from_eigenvalues(complex(l1), complex(l2), p, system.k)
        msets[p] = spin_multiset(ns)
    return SatakeSystem(system.k, system.level, msets)


def _cmd_rankin(args) -> int:
    f1 = load_eigenform(args.form1)
    f2 = load_eigenform(args.form2)
    x = args.x
    if x <= 1:
        raise Gsp4Error(f"--x must be > 1, got {x}")
    s1 = _satake_view(f1)
    s2 = _satake_view(f2)
    N = math.ceil(x * x) - 1
    table = rankin_coefficient_table(s1, s2, N)
    ws = weighted_prime_sum(table, x)
    mt = explicit_main_term(x)
    payload = {
        "command": "rankin",
        "form1": f1.label,
        "form2": f2.label,
        "x": x,
        "truncation": N,
        "lambda_table": [
            {"n": n, "value": v} for n, v in sorted(table.values.items())
        ],
        "weighted_prime_sum": ws,
        "main_term": mt,
        "difference": ws - mt,
    }
    lines = [f"Lambda table for {f1.label} x {f2.label}, prime powers <= {N}:"]
    for n, v in sorted(table.values.items()):
        lines.append(f"Lambda({n}) = {_fmt_float(v)}")
    lines.append(f"weighted prime sum (x={_fmt_float(x)}): {_fmt_float(ws)}")
    lines.append(f"main term 8(x-2+1/x): {_fmt_float(mt)}")
    lines.append(f"difference: {_fmt_float(ws - mt)}")
    _emit(args, payload, lines)
    return 0


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise Gsp4Error(f"--eval expects RE,IM, got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise Gsp4Error(f"--eval expects RE,IM numbers, got {text!r}") from exc


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gsp4l",
        description="Local L-factors, eigenvalue identities and "
        "distinguishing reports for degree-2 Siegel eigenforms.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("coprime-prime", _cmd_coprime_prime, help="least prime coprime to N")
    sp.add_argument("--level", type=int, required=True, metavar="N")

    sp = add("archimedean", _cmd_archimedean, help="gamma factors of a convolution")
    sp.add_argument("--k1", type=int, required=True)
    sp.add_argument("--k2", type=int, required=True)
    sp.add_argument("--rep", choices=sorted(_REP_PAIRS), required=True)
    sp.add_argument("--eval", metavar="RE,IM", help="evaluate the product at s")

    sp = add("weil", _cmd_weil, help="tensor two representation sums")
    sp.add_argument("--expr", required=True, help="e.g. 'phi(17)+phi(1)'")
    sp.add_argument("--tensor", required=True, help="second factor")

    sp = add("euler", _cmd_euler, help="local factor and series of a form")
    sp.add_argument("--form", required=True, metavar="PATH")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--rep", choices=["spin", "std"], required=True)
    sp.add_argument("--terms", type=int, default=8)
    sp.add_argument("--normalized", action="store_true")

    sp = add("eigs", _cmd_eigs, help="lambda(p^r) by recursion and by series")
    sp.add_argument("--form", required=True, metavar="PATH")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-power", type=int, required=True)

    sp = add("distinguish", _cmd_distinguish, help="first differing eigenvalue")
    sp.add_argument("--form1", required=True, metavar="PATH")
    sp.add_argument("--form2", required=True, metavar="PATH")
    sp.add_argument("--level", type=int, default=None, metavar="N")

    sp = add("sk-lift", _cmd_sk_lift, help="lift eigenvalues or coefficients")
    sp.add_argument("--elliptic", required=True, metavar="PATH")
    sp.add_argument("--k", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=int)
    group.add_argument("--terms", type=int, metavar="N")
    sp.add_argument("--twist", type=int, default=None, metavar="D")

    sp = add("rankin", _cmd_rankin, help="Lambda table and weighted prime sum")
    sp.add_argument("--form1", required=True, metavar="PATH")
    sp.add_argument("--form2", required=True, metavar="PATH")
    sp.add_argument("--x", type=float, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        print("usage: run 'gsp4l --help' for the synopsis", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except Gsp4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
