"""Command-line front end.

Every subcommand prints a report ``{command, params, results, pass,
elapsed_ms}``.  Exit code 0 when ``pass`` is true, 1 when a checked property
fails, 2 on usage or validation errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import cns, multind
from .bigpoly import IntPoly
from .cyclotomic import CnsBasis, base_polynomial, cyclotomic, euler_phi

SWEEPS = {"sweep-theorem1", "sweep-independence", "nagell", "quartic"}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _plain(obj):
    # Integers become decimal strings so bignums survive any JSON reader.
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return str(obj)


def _basis(args) -> CnsBasis:
    if args.poly is not None:
        if args.k is not None or args.m is not None:
            raise UsageError("give either --poly or --k/--m, not both")
        return CnsBasis.from_polynomial(IntPoly(args.poly))
    if args.k is None or args.m is None:
        raise UsageError("--k and --m are required (or --poly)")
    return base_polynomial(args.k, args.m)


def _basis_info(basis: CnsBasis) -> dict:
    return {
        "k": basis.k,
        "m": basis.m,
        "P": list(basis.P.coeffs),
        "polynomial": str(basis.P),
        "digit_bound": basis.digit_bound,
    }


def _expansion_info(exp: cns.DigitExpansion) -> dict:
    return {
        "digits": list(exp.digits),
        "status": exp.status.value,
        "steps": exp.steps,
        "cycle_entry": exp.cycle_entry,
        "cycle_length": exp.cycle_length,
    }


def _verdict_info(v: multind.IndependenceVerdict) -> dict:
    out = {
        "k": v.k,
        "m": v.m,
        "n": v.n,
        "norm_m": v.norm_m,
        "norm_n": v.norm_n,
        "outcome": v.outcome,
        "certificate": v.certificate.value if v.certificate else None,
        "primitive_pair": list(v.primitive_pair) if v.primitive_pair else None,
        "detail": v.detail,
    }
    if v.witness:
        w = v.witness
        out["witness"] = {"p": w.p, "q": w.q, "j": w.j, "verified": w.verified}
    return out


# -- subcommands: each returns (results, pass) --------------------------------


def cmd_poly(args):
    f = cyclotomic(args.k)
    return {"k": args.k, "phi": euler_phi(args.k), "coeffs": list(f.coeffs),
            "polynomial": str(f)}, True


def cmd_base(args):
    return _basis_info(base_polynomial(args.k, args.m)), True


def cmd_check_cns(args):
    basis = _basis(args)
    rep = cns.petho_check(basis.P)
    results = {
        "basis": _basis_info(basis),
        "criterion": {
            "monotone_ok": rep.monotone_ok,
            "p0_ok": rep.p0_ok,
            "no_unit_root_ok": rep.no_unit_root_ok,
            "passed": rep.passed,
            "first_violation": rep.first_violation,
        },
    }
    ok = rep.passed
    if args.exhaustive:
        ver = cns.exhaustive_verify(basis, args.box, args.max_steps, jobs=args.jobs)
        results["exhaustive"] = {
            "box_radius": ver.box_radius,
            "tested": ver.tested,
            "all_terminated": ver.all_terminated,
            "counterexample": list(ver.counterexample.coeffs) if ver.counterexample else None,
            "counterexample_expansion": (
                _expansion_info(ver.counterexample_expansion)
                if ver.counterexample_expansion else None
            ),
        }
        ok = ok and ver.all_terminated
    return results, ok


def cmd_encode(args):
    basis = _basis(args)
    if len(args.element) > basis.degree:
        raise UsageError(f"element has more than {basis.degree} coefficients")
    exp = cns.encode(basis, args.element, args.max_steps)
    return {"basis": _basis_info(basis), "element": args.element,
            **_expansion_info(exp)}, exp.terminated


def cmd_decode(args):
    basis = _basis(args)
    gamma = cns.decode(basis, args.digits)
    return {"basis": _basis_info(basis), "digits": args.digits,
            "element": list(gamma.coeffs)}, True


def cmd_sweep_theorem1(args):
    rep = cns.theorem1_sweep(args.phi_max, args.m_max, jobs=args.jobs)
    rows = [
        {"k": r.k, "m": r.m, "phi": euler_phi(r.k), "passed": r.report.passed,
         "first_violation": r.report.first_violation}
        for r in rep.results
    ]
    results = {
        "pair_count": rep.pair_count,
        "pass_count": rep.pass_count,
        "failures": [[r.k, r.m] for r in rep.failures],
        "rows": rows,
    }
    return results, not rep.failures


def cmd_independence(args):
    return _verdict_info(multind.independence_verdict(args.k, args.m, args.n)), True


def cmd_sweep_independence(args):
    sweep = multind.theorem2_sweep(args.k, args.max, n_min=args.n_min, jobs=args.jobs)
    rows = []
    for v in sweep.verdicts:
        w = v.witness
        rows.append({
            "k": v.k, "m": v.m, "n": v.n, "outcome": v.outcome,
            "certificate": v.certificate.value if v.certificate else "",
            "witness": f"{w.p}:{w.q}:{w.j}" if w else "",
        })
    results = {
        "pair_count": len(sweep.verdicts),
        "dependent_pairs": [[v.m, v.n] for v in sweep.dependent],
        "anomalies": [[v.m, v.n] for v in sweep.anomalies],
        "note": sweep.note,
        "rows": rows,
    }
    return results, sweep.passed


def cmd_nagell(args):
    sols = multind.nagell_search(args.x_max, args.k_max, args.q_max)
    rows = [{"x": s.x, "y": s.y, "k": s.k, "q": s.q} for s in sols]
    ok = all(s.holds() for s in sols) and {
        s.astuple() for s in sols} <= multind.KNOWN_NAGELL_SOLUTIONS
    return {"count": len(rows), "rows": rows}, ok


def cmd_quartic(args):
    sols = multind.quartic_search(args.x_max, args.q_max)
    rows = [{"X": X, "Y": Y, "q": q} for X, Y, q in sols]
    nontrivial = {s for s in sols if s[0] != 1}
    ok = all(X * X + 3 == 4 * Y**q for X, Y, q in sols) and (
        nontrivial <= multind.KNOWN_QUARTIC_SOLUTIONS)
    return {"count": len(rows), "nontrivial": sorted(map(list, nontrivial)),
            "rows": rows}, ok


def cmd_certificates(args):
    g01, g34 = multind.gcd_certificates(args.q)
    ok = g01 == IntPoly.const(1) and g34 == IntPoly([0, args.q])
    return {
        "q": args.q,
        "gcd_p0_p1": {"coeffs": list(g01.coeffs), "polynomial": str(g01).replace("X", "n")},
        "gcd_p3_p4": {"coeffs": list(g34.coeffs), "polynomial": str(g34).replace("X", "n")},
    }, ok


COMMANDS = {
    "poly": cmd_poly,
    "base": cmd_base,
    "check-cns": cmd_check_cns,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "sweep-theorem1": cmd_sweep_theorem1,
    "independence": cmd_independence,
    "sweep-independence": cmd_sweep_independence,
    "nagell": cmd_nagell,
    "quartic": cmd_quartic,
    "certificates": cmd_certificates,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 for byte-identical output")

    basis = argparse.ArgumentParser(add_help=False)
    basis.add_argument("--k", type=int)
    basis.add_argument("--m", type=int)
    basis.add_argument("--poly", type=_int_list,
                       help="monic P as coefficients, least significant first")
    basis.add_argument("--max-steps", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="cyclocns",
        description="Canonical number systems with bases -m + zeta_k.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="cyclotomic polynomial Phi_k")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("base", parents=[common], help="base polynomial Phi_k(m + X)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("check-cns", parents=[common, basis], help="Petho criterion")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--box", type=int, default=2)

    p = sub.add_parser("encode", parents=[common, basis], help="digit expansion")
    p.add_argument("--element", type=_int_list, required=True)

    p = sub.add_parser("decode", parents=[common, basis], help="digits to element")
    p.add_argument("--digits", type=_int_list, required=True)

    p = sub.add_parser("sweep-theorem1", parents=[common])
    p.add_argument("--phi-max", type=int, default=26)
    p.add_argument("--m-max", type=int, default=19)

    p = sub.add_parser("independence", parents=[common])
    for name in ("--k", "--m", "--n"):
        p.add_argument(name, type=int, required=True)

    p = sub.add_parser("sweep-independence", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)

    p = sub.add_parser("nagell", parents=[common])
    p.add_argument("--x-max", type=int, default=200)
    p.add_argument("--k-max", type=int, default=20)
    p.add_argument("--q-max", type=int, default=20)

    p = sub.add_parser("quartic", parents=[common])
    p.add_argument("--x-max", type=int, default=10**5)
    p.add_argument("--q-max", type=int, default=50)

    p = sub.add_parser("certificates", parents=[common])
    p.add_argument("--q", type=int, required=True)
    return parser


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    if fmt == "csv":
        rows = report["results"]["rows"]
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = [f"command: {report['command']}", f"pass: {report['pass']}"]
    for key, value in sorted(report["params"].items()):
        lines.append(f"param {key}: {value}")
    for key, value in sorted(report["results"].items()):
        if key == "rows":
            lines.append(f"rows: {len(value)}")
        else:
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


LIST_OPTIONS = ("--element", "--digits", "--poly")


def _join_list_values(argv: list[str]) -> list[str]:
    # "--element -1,0" would otherwise be parsed as an unknown option.
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in LIST_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = _join_list_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.format == "csv" and args.command not in SWEEPS:
        print(f"error: csv output is only available for {sorted(SWEEPS)}", file=sys.stderr)
        return 2
    if getattr(args, "max_steps", None) is None and hasattr(args, "max_steps"):
        args.max_steps = cns.default_max_steps()

    start = time.perf_counter()
    try:
        results, ok = COMMANDS[args.command](args)
    except (UsageError, ValueError, cns.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = 0 if args.no_timing else int((time.perf_counter() - start) * 1000)

    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "no_timing", "jobs")}
    report = {
        "command": args.command,
        "params": _plain(params),
        "results": _plain(results),
        "pass": bool(ok),
        "elapsed_ms": elapsed,
    }
    print(_render(report, args.format))
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
