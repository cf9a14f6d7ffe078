"""Command-line front end: single-shot subcommands and a JSON-lines batch mode.

Input is a JSON or TOML document {"b0": 2, "legs": [[2,1],[3,1],[4,1],[5,4]]}.
Parameter values on the command line and in all output use the published
labels p1..p_{nu-2}, where p_k multiplies the splice row of leg k+2.

Exit codes: 0 success, 1 usage or parse error, 2 validation error,
3 internal consistency failure (two routes that must agree disagreed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import frac_str, parse_frac
from .embdim import AnalyzeOptions, full_report, normalize_params, q_at_params
from .errors import ConsistencyError, OracleCapExceeded, ValidationError
from .graph import SeifertData, build_graph, canonical_cycle, fundamental_cycle, group_data
from .monomials import m_poincare
from .oracle import oracle_m_generators, oracle_q
from .series import (
    PoincarePolynomial,
    gamma,
    l_max_default,
    rational_form,
    s_value,
    series_bundle,
)

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

_ENV_THREADS = "WHSING_THREADS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


class ParseError(ValueError):
    pass


def parse_input(text: str) -> dict:
    """Decode a JSON or TOML job document; errors carry line/column."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"JSON parse error at line {exc.lineno} column {exc.colno}: "
                             f"{exc.msg}") from None
    else:
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ParseError(f"TOML parse error: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("input must be a table/object with b0 and legs")
    return data


def job_seifert(data: dict) -> SeifertData:
    if "b0" not in data or "legs" not in data:
        raise ValidationError("input needs both 'b0' and 'legs'")
    return SeifertData.from_json({"b0": data["b0"], "legs": data["legs"]})


def parse_params_arg(text: str, sd: SeifertData) -> dict[int, Fraction]:
    """\"p1=2,p2=1/3\" in published labels -> internal leg-indexed point."""
    point: dict[int, Fraction] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValidationError(f"bad parameter assignment {chunk!r}, expected pK=value")
        name, _, value = chunk.partition("=")
        name = name.strip()
        if not name.startswith("p") or not name[1:].isdigit():
            raise ValidationError(f"bad parameter name {name!r}, expected p1..p{sd.nu - 2}")
        k = int(name[1:])
        if not 1 <= k <= sd.nu - 2:
            raise ValidationError(f"{name} out of range: this input has p1..p{sd.nu - 2}")
        point[k + 2] = parse_frac(value.strip())
    return normalize_params(sd, point)


def _params_json(point: dict[int, Fraction]) -> dict[str, str]:
    return {f"p{leg - 2}": frac_str(v) for leg, v in sorted(point.items())}


# ---------------------------------------------------------------------------
# subcommand payloads

def run_invariants(sd: SeifertData, lmax: int | None) -> dict:
    g = build_graph(sd)
    gd = group_data(g)
    z, p_a = fundamental_cycle(g)
    zk = canonical_cycle(g)
    bundle = series_bundle(sd, lmax)
    return {
        "seifert": sd.to_json(),
        "graph": g.to_json(),
        "e": frac_str(sd.e),
        "alpha": sd.alpha,
        "o": sd.o,
        "gamma": frac_str(gamma(sd)),
        "H_order": gd.order,
        "H_invariant_factors": list(gd.invariant_factors),
        "Z": list(z),
        "p_a": p_a,
        "Z_K": [frac_str(c) for c in zk],
        "p_g": bundle.p_g,
    }


def run_hilbert(sd: SeifertData, lmax: int | None) -> dict:
    bundle = series_bundle(sd, lmax)
    num, den = rational_form(sd)
    return {
        "seifert": sd.to_json(),
        "l_max": bundle.l_max,
        "P_GX": bundle.p_gx.to_pairs(),
        "P_H1": bundle.p_h1.to_pairs(),
        "p_g": bundle.p_g,
        "rational_form": {"numerator": [frac_str(c) for c in num],
                          "denominator": [frac_str(c) for c in den]},
    }


def run_embdim(sd: SeifertData, opts: AnalyzeOptions,
               point: dict[int, Fraction] | None) -> dict:
    rep = full_report(sd, opts)
    out = rep.to_json()
    if point is not None:
        # pin the moduli: replace the generic count at every linear-algebra degree
        coeffs = {}
        for r in rep.degrees:
            q = q_at_params(sd, r.l, point) if r.method == "GenericLinearAlgebra" else r.q
            if q:
                coeffs[r.l] = q
        at_point = PoincarePolynomial(coeffs)
        out["params"] = _params_json(point)
        out["P_mX_at_params"] = at_point.to_pairs()
        out["embdim_at_params"] = at_point.evaluate_at_one()
    return out


def run_check(sd: SeifertData, opts: AnalyzeOptions,
              point: dict[int, Fraction] | None) -> tuple[dict, bool]:
    """Oracle-vs-main diff; second return value reports agreement."""
    from .embdim import sample_params

    if point is None:
        point = sample_params(sd.nu, opts.seed, 0, 0)
    lmx = opts.l_max if opts.l_max is not None else min(l_max_default(sd), 3 * sd.alpha)
    mismatches = []
    skipped = []
    for l in range(1, lmx + 1):
        try:
            o_q = oracle_q(sd, l, point)
        except OracleCapExceeded:
            skipped.append(l)
            continue
        m_q = q_at_params(sd, l, point) if s_value(sd, l) >= 0 else 0
        if o_q != m_q:
            mismatches.append({"l": l, "oracle": o_q, "main": m_q})
    try:
        o_gens = oracle_m_generators(sd, lmx)
        gens_match = o_gens == m_poincare(sd, lmx)
    except OracleCapExceeded:
        o_gens, gens_match = None, None
    report = {
        "seifert": sd.to_json(),
        "l_max": lmx,
        "params": _params_json(point),
        "degrees_checked": lmx - len(skipped),
        "degrees_skipped_by_cap": skipped,
        "q_mismatches": mismatches,
        "m_generators_match": gens_match,
    }
    ok = not mismatches and gens_match is not False
    return report, ok


# ---------------------------------------------------------------------------
# rendering

def _poly(pairs) -> str:
    return PoincarePolynomial.from_pairs(pairs).pretty()


def _dense(coeff_strs) -> str:
    """Dense coefficient-string list -> readable polynomial."""
    terms = []
    for d, c in enumerate(coeff_strs):
        if c in ("0", 0):
            continue
        if d == 0:
            terms.append(str(c))
        else:
            mono = "t" if d == 1 else f"t^{d}"
            terms.append(mono if c == "1" else f"-{mono}" if c == "-1" else f"{c}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def render_pretty(sub: str, out: dict) -> str:
    lines = []
    if sub == "invariants":
        legs = " ".join(f"({a},{w})" for a, w in out["seifert"]["legs"])
        lines.append(f"Seifert data: b0={out['seifert']['b0']}, legs {legs}")
        lines.append(f"e = {out['e']}   alpha = {out['alpha']}   o = {out['o']}   "
                     f"gamma = {out['gamma']}")
        lines.append(f"|H| = {out['H_order']}   invariant factors = "
                     f"{out['H_invariant_factors']}")
        lines.append(f"Z   = {out['Z']}   p_a(Z) = {out['p_a']}")
        lines.append(f"Z_K = {out['Z_K']}")
        lines.append(f"p_g = {out['p_g']}")
    elif sub == "hilbert":
        lines.append(f"P_GX: {_poly(out['P_GX'])}")
        lines.append(f"P_H1: {_poly(out['P_H1'])}")
        lines.append(f"p_g = {out['p_g']}")
        rf = out["rational_form"]
        lines.append(f"rational form: ({_dense(rf['numerator'])}) / "
                     f"({_dense(rf['denominator'])})")
    elif sub in ("embdim", "analyze"):
        lines.append(f"P_mX (generic): {_poly(out['P_mX_generic'])}")
        lines.append(f"embedding dimension (generic): {out['embdim_generic']}")
        if out.get("splice_range"):
            lines.append(f"splice embdim range: {tuple(out['splice_range'])}")
        undecided = [d["l"] for d in out["degrees"] if d["topological"] == "Undecided"]
        nontop = [d["l"] for d in out["degrees"] if d["topological"] == "No"]
        if nontop:
            lines.append(f"parameter-dependent degrees: {nontop}")
        if undecided:
            lines.append(f"undecided degrees: {undecided}")
        for js in out["jump_strata"]:
            lines.append(f"jump stratum {js['discriminant']} at degrees {js['degrees']}: "
                         f"embdim {js['embdim']}, witness {js['witness']}")
        if "embdim_at_params" in out:
            lines.append(f"P_mX at params: {_poly(out['P_mX_at_params'])}")
            lines.append(f"embedding dimension at params: {out['embdim_at_params']}")
        flags = ", ".join(f"{k}={v}" for k, v in out["flags"].items())
        lines.append(f"flags: {flags}")
    elif sub == "check":
        lines.append(f"checked degrees 1..{out['l_max']} at params {out['params']}")
        if out["degrees_skipped_by_cap"]:
            lines.append(f"skipped (oracle cap): {out['degrees_skipped_by_cap']}")
        lines.append(f"q mismatches: {out['q_mismatches'] or 'none'}")
        lines.append(f"m generators match: {out['m_generators_match']}")
    return "\n".join(lines)


def _emit(out: dict, sub: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(out, separators=(",", ":")))
    else:
        print(render_pretty(sub, out))


# ---------------------------------------------------------------------------
# batch

def _run_job(data: dict) -> dict:
    sd = job_seifert(data)
    sub = data.get("subcommand", "invariants")
    lmax = data.get("lmax")
    opts = AnalyzeOptions(
        trials=int(data.get("trials", 5)),
        seed=data.get("seed", 0),
        l_max=int(lmax) if lmax is not None else None,
        minors=(sub == "analyze"),
        threads=1,
    )
    point = None
    if data.get("params") is not None:
        raw = data["params"]
        if isinstance(raw, str):
            point = parse_params_arg(raw, sd)
        else:
            point = normalize_params(
                sd, {int(k[1:]) + 2 if isinstance(k, str) else int(k): parse_frac(str(v))
                     for k, v in raw.items()}
            )
    if sub == "invariants":
        return run_invariants(sd, opts.l_max)
    if sub == "hilbert":
        return run_hilbert(sd, opts.l_max)
    if sub in ("embdim", "analyze"):
        return run_embdim(sd, opts, point)
    if sub == "check":
        report, ok = run_check(sd, opts, point)
        report["ok"] = ok
        return report
    raise ValidationError(f"unknown subcommand {sub!r} in batch line")


def run_batch(stream, threads: int) -> int:
    from concurrent.futures import ThreadPoolExecutor

    jobs = []
    for line in stream:
        line = line.strip()
        if line:
            jobs.append(line)
    worst = 0

    def work(line: str) -> tuple[dict, int]:
        try:
            data = parse_input(line)
            return _run_job(data), 0
        except ParseError as exc:
            return {"error": str(exc)}, 1
        except ValidationError as exc:
            return {"error": str(exc)}, 2
        except (ConsistencyError, OracleCapExceeded) as exc:
            return {"error": str(exc)}, 3 if isinstance(exc, ConsistencyError) else 2

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for out, code in pool.map(work, jobs):
            print(json.dumps(out, separators=(",", ":")))
            worst = max(worst, code)
    return worst


# ---------------------------------------------------------------------------
# entry point

def _build_parser() -> _Parser:
    p = _Parser(prog="whsing",
                description="Graded invariants of weighted homogeneous surface "
                            "singularities from Seifert data.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name, blurb in (
        ("invariants", "graph, e, alpha, o, gamma, |H|, Z, Z_K, p_a, p_g"),
        ("hilbert", "Hilbert series P_GX, defect polynomial P_H1, rational form"),
        ("embdim", "per-degree generator counts and generic embedding dimension"),
        ("analyze", "embdim plus the symbolic discriminant/witness search"),
        ("check", "independent oracle recomputation, diff against the main path"),
        ("batch", "JSON-lines jobs on stdin, one result line each, input order"),
    ):
        q = sub.add_parser(name, help=blurb)
        if name != "batch":
            q.add_argument("input", help="path to a JSON or TOML file with b0 and legs, "
                                         "or '-' for stdin")
        q.add_argument("--lmax", type=int, default=None,
                       help="top degree (default: the structural bound)")
        q.add_argument("--trials", type=int, default=5,
                       help="random parameter trials per degree (default 5)")
        q.add_argument("--seed", default=0, help="seed for all randomized choices")
        q.add_argument("--params", default=None,
                       help='explicit moduli "p1=2,p2=1/3,..." in published labels '
                            "(p_k multiplies the splice row of leg k+2)")
        q.add_argument("--threads", type=int,
                       default=int(os.environ.get(_ENV_THREADS, "1")),
                       help=f"worker threads (default ${_ENV_THREADS} or 1)")
        q.add_argument("--format", choices=("json", "pretty"), default="pretty",
                       help="output format (default pretty)")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.subcommand == "batch":
            return run_batch(sys.stdin, args.threads)
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
        data = parse_input(text)
        sd = job_seifert(data)
        point = parse_params_arg(args.params, sd) if args.params else None
        opts = AnalyzeOptions(
            trials=args.trials,
            seed=args.seed,
            l_max=args.lmax,
            minors=(args.subcommand == "analyze"),
            threads=max(1, args.threads),
        )
        if args.subcommand == "invariants":
            _emit(run_invariants(sd, args.lmax), "invariants", args.format)
        elif args.subcommand == "hilbert":
            _emit(run_hilbert(sd, args.lmax), "hilbert", args.format)
        elif args.subcommand in ("embdim", "analyze"):
            _emit(run_embdim(sd, opts, point), args.subcommand, args.format)
        elif args.subcommand == "check":
            report, ok = run_check(sd, opts, point)
            _emit(report, "check", args.format)
            if not ok:
                return 3
        return 0
    except ParseError as exc:
        print(f"whsing: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"whsing: {exc}", file=sys.stderr)
        return 1
    except OracleCapExceeded as exc:
        print(f"whsing: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"whsing: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"whsing: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
