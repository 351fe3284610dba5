"""Command-line front end: case sweeps with machine-readable reports, plus a
single-point evaluator for spot debugging.

Subcommands:
  sweep            generate and run the identity-verification case list
  eval             print one evaluation at full precision
  list-identities  show every identity family and its default tolerance

Sweep reproducibility contract: a fixed SweepConfig (seed included) yields a
byte-identical JSON report when --no-timestamp is set (which also zeroes the
per-case wall-time fields, the only other run-dependent data).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import verifier
from .ball import ball_eval
from .errors import ConfigError, DomainError, ParseError, PoleError
from .paraboloid import jacobi_paraboloid, laguerre_paraboloid
from .transforms import (
    SplitParams, WrapParamsJacobi, WrapParamsLaguerre, eval_A, eval_B, eval_D,
    eval_g, eval_h_jacobi, eval_h_laguerre, fourier_h_jacobi_closed,
    fourier_h_laguerre_closed, lambda_factor, phi_factor, theta_factor,
)
from .verifier import (
    ALL_FAMILIES, DEFAULT_TOLERANCES, FAMILY_DESCRIPTIONS, FAMILY_GROUPS,
    IdentityCase, generate_cases, run_case,
)


@dataclass
class SweepConfig:
    """Flat sweep configuration; JSON config files carry the same field names
    and CLI flags override file values.  Draws come from a PCG64 generator
    (numpy default_rng) seeded with ``seed``, so the case list is a pure
    function of this object."""
    families: list = field(default_factory=lambda: list(ALL_FAMILIES))
    dims: list = field(default_factory=lambda: [1, 2])
    max_degree_1d: int = 6
    max_degree_multi: int = 3
    fourier_max_degree: int = 2
    parseval_max_degree: int = 2
    ort_param_draws: int = 3
    fourier_xi_draws: int = 2
    contig_draws: int = 100
    form_draws: int = 200
    seed: int = 42
    tolerances: dict = field(default_factory=dict)
    out_format: str = "json"
    out_path: str | None = None
    no_timestamp: bool = False

    def validate(self):
        unknown = [f for f in self.families if f not in ALL_FAMILIES]
        if unknown:
            raise ConfigError(f"unknown identity families: {unknown}")
        if not set(self.dims) <= {1, 2}:
            raise ConfigError("dims must be a subset of {1, 2}")
        for fam, tol in self.tolerances.items():
            if fam not in ALL_FAMILIES:
                raise ConfigError(f"tolerance for unknown family {fam!r}")
            if not tol > 0:
                raise ConfigError(f"tolerance for {fam} must be positive, got {tol}")
        for name in ("max_degree_1d", "max_degree_multi", "fourier_max_degree",
                     "parseval_max_degree", "ort_param_draws", "fourier_xi_draws",
                     "contig_draws", "form_draws"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be nonnegative")
        if self.out_format not in ("json", "csv"):
            raise ConfigError("out_format must be 'json' or 'csv'")
        return self


@dataclass
class RunSummary:
    total: int
    passed: int
    failed: int
    skipped: int
    worst_residual: dict
    wall_time: float


def expand_families(names):
    out = []
    for name in names:
        if name == "all":
            out.extend(ALL_FAMILIES)
        elif name in FAMILY_GROUPS:
            out.extend(FAMILY_GROUPS[name])
        elif name in ALL_FAMILIES:
            out.append(name)
        else:
            raise ConfigError(f"unknown family or group {name!r}")
    seen = set()
    return [f for f in out if not (f in seen or seen.add(f))]


def load_config(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    cfg = SweepConfig()
    valid = {f.name for f in dataclasses.fields(SweepConfig)}
    for key, val in raw.items():
        if key not in valid:
            raise ConfigError(f"unknown config field {key!r}")
        setattr(cfg, key, val)
    cfg.families = expand_families(cfg.families)
    return cfg


def _case_record(report, no_timestamp):
    case = report.case
    rec = {
        "identity_id": case.identity_id,
        "d": case.d,
        "m": case.m,
        "m2": case.m2,
        "k": list(case.k) if case.k is not None else None,
        "k2": list(case.k2) if case.k2 is not None else None,
        "params": {key: case.params[key] for key in sorted(case.params)},
        "lhs": {"re": report.lhs.real, "im": report.lhs.imag},
        "rhs": {"re": report.rhs.real, "im": report.rhs.imag},
        "abs_residual": report.abs_residual,
        "rel_residual": report.rel_residual,
        "passed": report.passed,
        "nodes": report.nodes,
        "seconds": 0.0 if no_timestamp else report.seconds,
    }
    if report.skipped_reason is not None:
        rec["skipped_reason"] = report.skipped_reason
    if case.xi is not None:
        rec["params"] = dict(rec["params"], **{f"xi{i+1}": v for i, v in enumerate(case.xi)})
    return rec


def _complex_str(z):
    return f"{z.real!r}{z.imag:+}i" if isinstance(z, complex) else repr(z)


def _write_csv(records, fh):
    cols = ["identity_id", "d", "m", "m2", "k", "k2", "lhs", "rhs",
            "abs_residual", "rel_residual", "passed", "skipped_reason",
            "nodes", "seconds", "params"]
    fh.write(",".join(cols) + "\n")
    for rec in records:
        row = [
            rec["identity_id"], str(rec["d"]), str(rec["m"]), str(rec["m2"]),
            "|".join(map(str, rec["k"])) if rec["k"] else "",
            "|".join(map(str, rec["k2"])) if rec["k2"] else "",
            f"{rec['lhs']['re']!r}{rec['lhs']['im']:+}i",
            f"{rec['rhs']['re']!r}{rec['rhs']['im']:+}i",
            repr(rec["abs_residual"]), repr(rec["rel_residual"]),
            str(rec["passed"]).lower(), rec.get("skipped_reason", ""),
            str(rec["nodes"]), repr(rec["seconds"]),
            ";".join(f"{key}={val!r}" for key, val in rec["params"].items()),
        ]
        fh.write(",".join('"' + c + '"' if "," in c else c for c in row) + "\n")


def run_sweep(cfg: SweepConfig, stream=None) -> RunSummary:
    """Execute all generated cases and write per-case records plus a summary.

    Returns the RunSummary; callers decide the exit status (0 iff failed == 0).
    """
    cfg.validate()
    t_start = time.perf_counter()
    cases = generate_cases(cfg)
    reports = []
    for case in cases:
        try:
            reports.append(run_case(case))
        except Exception as exc:  # mark non-verifiable cases failed, keep going
            reports.append(
                verifier.VerificationReport(
                    case=case, lhs=0j, rhs=0j, abs_residual=float("nan"),
                    rel_residual=float("nan"), passed=False, nodes=0,
                    seconds=0.0, skipped_reason=f"{type(exc).__name__}: {exc}",
                )
            )
    skipped = sum(1 for r in reports if r.passed and r.skipped_reason is not None)
    failed = sum(1 for r in reports if not r.passed)
    passed = len(reports) - failed - skipped
    worst = {}
    for r in reports:
        if r.skipped_reason is None and np.isfinite(r.rel_residual):
            worst[r.case.identity_id] = max(worst.get(r.case.identity_id, 0.0), r.rel_residual)
    wall = time.perf_counter() - t_start
    summary = RunSummary(len(reports), passed, failed, skipped,
                         {key: worst[key] for key in sorted(worst)}, wall)

    records = [_case_record(r, cfg.no_timestamp) for r in reports]
    doc = {
        "config": {
            "families": cfg.families, "dims": cfg.dims, "seed": cfg.seed,
            "max_degree_1d": cfg.max_degree_1d, "max_degree_multi": cfg.max_degree_multi,
            "fourier_max_degree": cfg.fourier_max_degree,
            "parseval_max_degree": cfg.parseval_max_degree,
            "ort_param_draws": cfg.ort_param_draws,
            "fourier_xi_draws": cfg.fourier_xi_draws,
            "contig_draws": cfg.contig_draws, "form_draws": cfg.form_draws,
            "tolerances": {key: cfg.tolerances[key] for key in sorted(cfg.tolerances)},
        },
        "summary": {
            "total": summary.total, "passed": summary.passed,
            "failed": summary.failed, "skipped": summary.skipped,
            "worst_residual": summary.worst_residual,
            "wall_time": 0.0 if cfg.no_timestamp else summary.wall_time,
        },
        "cases": records,
    }
    if not cfg.no_timestamp:
        doc["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")

    if cfg.out_path:
        try:
            with open(cfg.out_path, "w") as fh:
                if cfg.out_format == "json":
                    json.dump(doc, fh, indent=1)
                    fh.write("\n")
                else:
                    _write_csv(records, fh)
        except OSError as exc:
            raise IOError(f"cannot write report to {cfg.out_path}: {exc}") from exc
    if stream is not None:
        stream.write(
            f"{summary.total} cases: {summary.passed} passed, "
            f"{summary.failed} failed, {summary.skipped} skipped "
            f"({summary.wall_time:.1f} s)\n"
        )
        for fam in sorted(summary.worst_residual):
            stream.write(f"  worst {fam}: {summary.worst_residual[fam]:.3e}\n")
    return summary


# ---------------------------------------------------------------------------
# eval subcommand


def _parse_kv(text):
    out = {}
    if not text:
        return out
    for piece in text.split(","):
        if "=" not in piece:
            raise ParseError(f"expected name=value, got {piece!r}")
        key, val = piece.split("=", 1)
        try:
            out[key.strip()] = float(val)
        except ValueError as exc:
            raise ParseError(f"bad numeric value in {piece!r}") from exc
    return out


def _parse_multi_index(text, d):
    if text is None:
        return tuple([0] * d)
    try:
        k = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise ParseError(f"malformed multi-index {text!r}") from exc
    if len(k) != d or any(v < 0 for v in k):
        raise ParseError(f"multi-index {text!r} must have {d} nonnegative entries")
    return k


def _parse_complex_list(text, d, what):
    if text is None:
        raise ParseError(f"--{what} is required for this function")
    try:
        vals = [complex(v) for v in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"malformed {what} list {text!r}") from exc
    if len(vals) != d:
        raise ParseError(f"--{what} must have {d} entries")
    return vals


def _need(params, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise ParseError(f"missing parameters: {', '.join(missing)}")
    return [params[n] for n in names]


def eval_point(args) -> complex:
    """Evaluate one function at one point; exact dispatch for the CLI."""
    d = args.d
    p = _parse_kv(args.params)
    k = _parse_multi_index(args.k, d)
    fn = args.fn
    if fn in ("g", "ball"):
        x = _parse_complex_list(args.x, d, "x")
        if fn == "g":
            alpha, mu = _need(p, "alpha", "mu")
            return complex(eval_g(k, alpha, mu, x))
        mu, = _need(p, "mu")
        return complex(ball_eval(k, mu, [v.real for v in x]))
    if fn in ("Q", "R"):
        x = [v.real for v in _parse_complex_list(args.x, d, "x")]
        t = _parse_complex_list(args.t, 1, "t")[0].real
        if args.m is None:
            raise ParseError("--m is required")
        if fn == "Q":
            beta, gamma, mu = _need(p, "beta", "gamma", "mu")
            return complex(jacobi_paraboloid(args.m, k, beta, gamma, mu, t, x))
        beta, mu = _need(p, "beta", "mu")
        return complex(laguerre_paraboloid(args.m, k, beta, mu, t, x))
    if fn in ("hJ", "hL"):
        x = [v.real for v in _parse_complex_list(args.x, d, "x")]
        t = _parse_complex_list(args.t, 1, "t")[0].real
        if args.m is None:
            raise ParseError("--m is required")
        if fn == "hJ":
            alpha, zeta, eta, beta, gamma, mu = _need(p, "alpha", "zeta", "eta", "beta", "gamma", "mu")
            return complex(eval_h_jacobi(args.m, k, WrapParamsJacobi(alpha, zeta, eta, beta, gamma, mu), t, x))
        alpha, zeta, beta, mu = _need(p, "alpha", "zeta", "beta", "mu")
        return complex(eval_h_laguerre(args.m, k, WrapParamsLaguerre(alpha, zeta, beta, mu), t, x))
    if fn == "phi":
        alpha, mu = _need(p, "alpha", "mu")
        xi = _parse_complex_list(args.xi, 1, "xi")[0].real
        axis = int(p.get("axis", 1))
        return complex(phi_factor(axis, d, alpha, mu, k, xi))
    if fn == "theta":
        zeta, eta, beta, gamma, mu = _need(p, "zeta", "eta", "beta", "gamma", "mu")
        xi = _parse_complex_list(args.xi, 1, "xi")[0].real
        if args.m is None:
            raise ParseError("--m is required")
        return complex(theta_factor(args.m, k, zeta, eta, beta, gamma, mu, d, xi))
    if fn == "lambda":
        zeta, mu, beta = _need(p, "zeta", "mu", "beta")
        xi = _parse_complex_list(args.xi, 1, "xi")[0].real
        if args.m is None:
            raise ParseError("--m is required")
        return complex(lambda_factor(args.m, k, zeta, mu, beta, d, xi))
    if fn in ("fourierJ", "fourierL"):
        xi = [v.real for v in _parse_complex_list(args.xi, d + 1, "xi")]
        if args.m is None:
            raise ParseError("--m is required")
        if fn == "fourierJ":
            alpha, zeta, eta, beta, gamma, mu = _need(p, "alpha", "zeta", "eta", "beta", "gamma", "mu")
            return complex(fourier_h_jacobi_closed(args.m, k, WrapParamsJacobi(alpha, zeta, eta, beta, gamma, mu), d, xi))
        alpha, zeta, beta, mu = _need(p, "alpha", "zeta", "beta", "mu")
        return complex(fourier_h_laguerre_closed(args.m, k, WrapParamsLaguerre(alpha, zeta, beta, mu), d, xi))
    if fn == "D":
        alpha1, alpha2 = _need(p, "alpha1", "alpha2")
        x = _parse_complex_list(args.x, d, "x")
        return complex(eval_D(k, alpha1, alpha2, d, x))
    if fn in ("A", "B"):
        x = _parse_complex_list(args.x, d, "x")
        t = _parse_complex_list(args.t, 1, "t")[0]
        if args.m is None:
            raise ParseError("--m is required")
        if fn == "A":
            a1, a2, z1, z2, e1, e2 = _need(p, "alpha1", "alpha2", "zeta1", "zeta2", "eta1", "eta2")
            return complex(eval_A(args.m, k, SplitParams(a1, a2, z1, z2, e1, e2), d, t, x))
        a1, a2, z1, z2 = _need(p, "alpha1", "alpha2", "zeta1", "zeta2")
        return complex(eval_B(args.m, k, SplitParams(a1, a2, z1, z2), d, t, x))
    raise ParseError(f"unknown function {fn!r}")


EVAL_FUNCTIONS = ("g", "ball", "Q", "R", "hJ", "hL", "phi", "theta", "lambda",
                  "fourierJ", "fourierL", "D", "A", "B")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orthopara",
        description="verify the orthogonal-structure identities and evaluate the underlying functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="run an identity-verification sweep")
    sw.add_argument("--config", help="flat JSON config file (CLI flags override)")
    sw.add_argument("--seed", type=int, help="PRNG seed for the case draws")
    sw.add_argument("--tol", type=float, help="override every family tolerance")
    sw.add_argument("--d", help="comma-separated dimension list, e.g. 1,2")
    sw.add_argument("--max-degree", type=int, help="multivariate total-degree cap")
    sw.add_argument("--families", help="comma-separated family ids or groups (ORT, FOURIER, PARSEVAL, CONTIG, FORM_EQUIV, all)")
    sw.add_argument("--format", choices=("json", "csv"), help="report format")
    sw.add_argument("--out", help="report output path")
    sw.add_argument("--no-timestamp", action="store_true",
                    help="omit timestamps and wall times for byte-identical reruns")

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("--fn", required=True, choices=EVAL_FUNCTIONS)
    ev.add_argument("--d", type=int, required=True)
    ev.add_argument("--m", type=int)
    ev.add_argument("--k", help="comma-separated multi-index, e.g. 1,0")
    ev.add_argument("--params", help="comma-separated name=value parameters")
    ev.add_argument("--t", help="t coordinate (complex ok, e.g. 0.3+0.2j)")
    ev.add_argument("--x", help="comma-separated x coordinates")
    ev.add_argument("--xi", help="comma-separated frequency coordinates")

    sub.add_parser("list-identities", help="list identity families")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list-identities":
        for fam in ALL_FAMILIES:
            print(f"{fam:16s} tol={DEFAULT_TOLERANCES[fam]:.0e}  {FAMILY_DESCRIPTIONS[fam]}")
        return 0

    if args.command == "sweep":
        try:
            cfg = load_config(args.config) if args.config else SweepConfig()
            if args.seed is not None:
                cfg.seed = args.seed
            if args.tol is not None:
                if args.tol <= 0:
                    raise ConfigError("--tol must be positive")
                cfg.tolerances = {fam: args.tol for fam in ALL_FAMILIES}
            if args.d:
                try:
                    cfg.dims = [int(v) for v in args.d.split(",")]
                except ValueError as exc:
                    raise ConfigError(f"bad dimension list {args.d!r}") from exc
            if args.max_degree is not None:
                cfg.max_degree_multi = args.max_degree
            if args.families:
                cfg.families = expand_families(args.families.split(","))
            if args.format:
                cfg.out_format = args.format
            if args.out:
                cfg.out_path = args.out
            if args.no_timestamp:
                cfg.no_timestamp = True
            summary = run_sweep(cfg, stream=sys.stdout)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 2
        except IOError as exc:
            print(f"io error: {exc}", file=sys.stderr)
            return 3
        return 0 if summary.failed == 0 else 1

    # eval
    try:
        value = eval_point(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print("usage: orthopara eval --fn NAME --d D [--m M] [--k 1,0] "
              "[--params name=value,...] [--t T] [--x X1,...] [--xi XI1,...]",
              file=sys.stderr)
        return 2
    except (DomainError, PoleError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 4
    print(f"{args.fn} = ({value.real!r}) + ({value.imag!r})j")
    return 0


if __name__ == "__main__":
    sys.exit(main())
