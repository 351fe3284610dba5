"""Identity verification engine.

Turns every identity of the library into an executable case: orthogonality
Gram entries against norm formulas, closed-form Fourier transforms against
direct numeric transforms, the two Parseval constants, the 14 lifted
contiguous relations, and the Hahn-form equivalences.  Each case produces a
VerificationReport with a convergence certificate (two quadrature refinement
levels in agreement) behind every pass/fail verdict.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .ball import ball_integral, ball_eval, ball_norm, tail_sum
from .classical import (
    gegenbauer, gegenbauer_norm, jacobi, jacobi_norm, laguerre, laguerre_norm,
)
from .contiguous import a_relation_pair, b_relation_pair
from .errors import DomainError, PoleError, QuadratureNonConvergence
from .gammafn import log_gamma, pochhammer
from .paraboloid import (
    jacobi_paraboloid, jacobi_paraboloid_norm, laguerre_paraboloid,
    laguerre_paraboloid_norm, paraboloid_inner_product,
)
from .quadrature import composite_legendre, gauss_jacobi, gauss_laguerre, tensor_integrate
from .transforms import (
    SplitParams, WrapParamsJacobi, WrapParamsLaguerre, eval_A, eval_A_hahn,
    eval_B, eval_D, eval_D_hahn, eval_h_jacobi, eval_h_laguerre,
    fourier_h_jacobi_closed, fourier_h_laguerre_closed, phi_factor, phi_factor_hahn,
)

ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii")

FAMILY_DESCRIPTIONS = {
    "ORT_GEGEN": "1-D Gegenbauer Gram matrix vs norm formula",
    "ORT_JACOBI": "1-D Jacobi Gram matrix vs norm formula",
    "ORT_LAGUERRE": "1-D Laguerre Gram matrix vs norm formula",
    "ORT_BALL": "unit-ball basis Gram matrix vs product norm formula",
    "ORT_PARA_J": "height-1 paraboloid basis Gram matrix vs product norms",
    "ORT_PARA_L": "infinite-height paraboloid basis Gram matrix vs product norms",
    "FOURIER_J": "closed-form height-1 Fourier transform vs direct quadrature",
    "FOURIER_L": "closed-form infinite-height Fourier transform vs direct quadrature",
    "PARSEVAL_A": "height-1 Parseval integral vs printed constant",
    "PARSEVAL_B": "infinite-height Parseval integral vs printed constant",
    "FORM_EQUIV_PHI": "per-axis transform factor: series form vs Hahn form",
    "FORM_EQUIV_D": "Gamma-hypergeometric product: series form vs Hahn form",
    "FORM_EQUIV_A": "height-1 Parseval family: series form vs Hahn form",
}
for _r in ROMAN:
    FAMILY_DESCRIPTIONS[f"CONTIG_A_{_r}"] = f"lifted contiguous relation ({_r}) of the height-1 family"
    FAMILY_DESCRIPTIONS[f"CONTIG_B_{_r}"] = f"lifted contiguous relation ({_r}) of the infinite-height family"

FAMILY_GROUPS = {
    "ORT": ["ORT_GEGEN", "ORT_JACOBI", "ORT_LAGUERRE", "ORT_BALL", "ORT_PARA_J", "ORT_PARA_L"],
    "FOURIER": ["FOURIER_J", "FOURIER_L"],
    "PARSEVAL": ["PARSEVAL_A", "PARSEVAL_B"],
    "CONTIG": [f"CONTIG_A_{r}" for r in ROMAN] + [f"CONTIG_B_{r}" for r in ROMAN],
    "FORM_EQUIV": ["FORM_EQUIV_PHI", "FORM_EQUIV_D", "FORM_EQUIV_A"],
}
ALL_FAMILIES = [f for group in FAMILY_GROUPS.values() for f in group]

DEFAULT_TOLERANCES = {
    "ORT_GEGEN": 1e-10, "ORT_JACOBI": 1e-10, "ORT_LAGUERRE": 1e-10,
    "ORT_BALL": 1e-8, "ORT_PARA_J": 1e-8, "ORT_PARA_L": 1e-8,
    "FOURIER_J": 1e-6, "FOURIER_L": 1e-6,
    "PARSEVAL_A": 1e-6, "PARSEVAL_B": 1e-6,
    "FORM_EQUIV_PHI": 1e-10, "FORM_EQUIV_D": 1e-10, "FORM_EQUIV_A": 1e-10,
}
for _r in ROMAN:
    DEFAULT_TOLERANCES[f"CONTIG_A_{_r}"] = 1e-10
    DEFAULT_TOLERANCES[f"CONTIG_B_{_r}"] = 1e-10


@dataclass(frozen=True)
class IdentityCase:
    identity_id: str
    d: int
    tolerance: float
    m: int | None = None
    m2: int | None = None
    k: tuple | None = None
    k2: tuple | None = None
    params: dict = field(default_factory=dict)
    xi: tuple | None = None


@dataclass(frozen=True)
class VerificationReport:
    case: IdentityCase
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    passed: bool
    nodes: int
    seconds: float
    skipped_reason: str | None = None


def _finish(case, lhs, rhs, scale, nodes, t0):
    """Residuals per the reporting convention: relative against the larger
    side on the diagonal, absolute against ``scale`` when rhs == 0."""
    lhs = complex(lhs)
    rhs = complex(rhs)
    abs_res = abs(lhs - rhs)
    if rhs == 0:
        rel = abs_res / scale if scale > 0 else abs_res
    else:
        rel = abs_res / max(abs(lhs), abs(rhs))
    return VerificationReport(
        case=case, lhs=lhs, rhs=rhs, abs_residual=abs_res, rel_residual=rel,
        passed=bool(rel <= case.tolerance), nodes=nodes,
        seconds=time.perf_counter() - t0,
    )


def _skip(case, reason, t0):
    return VerificationReport(
        case=case, lhs=0j, rhs=0j, abs_residual=0.0, rel_residual=0.0,
        passed=True, nodes=0, seconds=time.perf_counter() - t0,
        skipped_reason=reason,
    )


# ---------------------------------------------------------------------------
# orthogonality


def _ort_1d(case):
    t0 = time.perf_counter()
    p = case.params
    m, m2 = case.m, case.m2
    fam = case.identity_id
    if fam == "ORT_GEGEN":
        mu = p["mu"]
        rule_of = lambda n: gauss_jacobi(n, mu - 0.5, mu - 0.5)
        poly = lambda x, mm: gegenbauer(mm, mu, x)
        norm = lambda mm: gegenbauer_norm(mm, mu)
    elif fam == "ORT_JACOBI":
        a, b = p["alpha"], p["beta"]
        rule_of = lambda n: gauss_jacobi(n, a, b)
        poly = lambda x, mm: jacobi(mm, a, b, x)
        norm = lambda mm: jacobi_norm(mm, a, b)
    else:
        a = p["alpha"]
        rule_of = lambda n: gauss_laguerre(n, a)
        poly = lambda x, mm: laguerre(mm, a, x)
        norm = lambda mm: laguerre_norm(mm, a)
    n0 = max(16, m + m2 + 4)
    vals = []
    nodes = 0
    for n in (n0, 2 * n0):
        r = rule_of(n)
        vals.append(np.sum(r.weights * poly(r.nodes, m) * poly(r.nodes, m2)))
        nodes += n
    scale = math.sqrt(norm(m) * norm(m2))
    if abs(vals[1] - vals[0]) > max(case.tolerance * abs(vals[1]), 0.1 * case.tolerance * scale):
        raise QuadratureNonConvergence(f"{fam} Gram entry ({m},{m2}) did not converge")
    rhs = norm(m) if m == m2 else 0.0
    return _finish(case, vals[1], rhs, scale, nodes, t0)


def _ort_ball(case):
    t0 = time.perf_counter()
    mu = case.params["mu"]
    k, k2, d = case.k, case.k2, case.d

    def F(*y):
        return ball_eval(k, mu, list(y), check_domain=False) * ball_eval(
            k2, mu, list(y), check_domain=False
        )

    n0 = max(12, tail_sum(k, 1) + tail_sum(k2, 1) + 4)
    v0 = ball_integral(F, d, mu, n0)
    v1 = ball_integral(F, d, mu, 2 * n0)
    scale = math.sqrt(ball_norm(k, mu) * ball_norm(k2, mu))
    if abs(v1 - v0) > max(case.tolerance * abs(v1), 0.1 * case.tolerance * scale):
        raise QuadratureNonConvergence(f"ball Gram entry {k} x {k2} did not converge")
    rhs = ball_norm(k, mu) if k == k2 else 0.0
    return _finish(case, v1, rhs, scale, nodes=d * (n0 + 2 * n0), t0=t0)


def _ort_para(case):
    t0 = time.perf_counter()
    p = case.params
    d = case.d
    mu = p["mu"]
    if case.identity_id == "ORT_PARA_J":
        weight = ("jacobi", p["beta"], p["gamma"])
        f = lambda t, x: jacobi_paraboloid(case.m, case.k, p["beta"], p["gamma"], mu, t, x, check_domain=False)
        g = lambda t, x: jacobi_paraboloid(case.m2, case.k2, p["beta"], p["gamma"], mu, t, x, check_domain=False)
        diag = lambda m, k: jacobi_paraboloid_norm(m, k, p["beta"], p["gamma"], mu, d)
    else:
        weight = ("laguerre", p["beta"])
        f = lambda t, x: laguerre_paraboloid(case.m, case.k, p["beta"], mu, t, x, check_domain=False)
        g = lambda t, x: laguerre_paraboloid(case.m2, case.k2, p["beta"], mu, t, x, check_domain=False)
        diag = lambda m, k: laguerre_paraboloid_norm(m, k, p["beta"], mu, d)
    n0 = max(12, case.m + case.m2 + 4)
    v0 = paraboloid_inner_product(f, g, d, mu, weight, n_axis=n0)
    v1 = paraboloid_inner_product(f, g, d, mu, weight, n_axis=2 * n0)
    scale = math.sqrt(diag(case.m, case.k) * diag(case.m2, case.k2))
    if abs(v1 - v0) > max(case.tolerance * abs(v1), 0.1 * case.tolerance * scale):
        raise QuadratureNonConvergence("paraboloid Gram entry did not converge")
    rhs = diag(case.m, case.k) if (case.m, case.k) == (case.m2, case.k2) else 0.0
    return _finish(case, v1, rhs, scale, nodes=(d + 1) * 3 * n0, t0=t0)


# ---------------------------------------------------------------------------
# Fourier closed forms vs direct transforms

_TRUNC_LOG = math.log(1e13)


def _x_axis_rule(level, rate, panels_per_unit=1.0):
    T = 1.15 * _TRUNC_LOG / rate
    panels = max(6, int(math.ceil(2 * T * panels_per_unit))) * 2**level
    return composite_legendre(-T, T, panels, 12)


def _t_axis_rule_jacobi(level, rate_left, rate_right):
    TL = 1.15 * _TRUNC_LOG / rate_left
    TR = 1.15 * _TRUNC_LOG / rate_right
    panels = max(6, int(math.ceil(TL + TR))) * 2**level
    return composite_legendre(-TL, TR, panels, 12)


def _t_axis_rule_laguerre(level, rate_left):
    TL = 1.15 * _TRUNC_LOG / rate_left
    TR = 4.8
    panels = max(6, int(math.ceil(TL + TR))) * 2**level
    return composite_legendre(-TL, TR, panels, 12)


def _fourier_direct(fam, m, k, wp, d, xi, level):
    """Direct numeric transform: full tensor quadrature for d = 1, per-axis
    separated 1-D transforms for d = 2 (the integrand factors by axis)."""
    n = tail_sum(k, 1)
    if fam == "FOURIER_J":
        t_rule = _t_axis_rule_jacobi(level, 2 * (wp.zeta + 0.5 * n), 2 * wp.eta)
    else:
        t_rule = _t_axis_rule_laguerre(level, wp.zeta + 0.5 * n)
    x_rules = [_x_axis_rule(level, 2 * wp.alpha) for _ in range(d)]
    nodes = len(t_rule) + sum(len(r) for r in x_rules)

    if d == 1:
        if fam == "FOURIER_J":
            h = lambda t, x: eval_h_jacobi(m, k, wp, t, [x])
        else:
            h = lambda t, x: eval_h_laguerre(m, k, wp, t, [x])
        val = tensor_integrate(
            [t_rule, x_rules[0]],
            lambda t, x: np.exp(-1j * (xi[1] * t + xi[0] * x)) * h(t, x),
        )
        return val, nodes

    # d = 2: per-axis factors of the separable integrand
    a_rad = n + wp.mu + wp.beta + 0.5 * (d - 1)
    if fam == "FOURIER_J":
        t_f = lambda t: (
            2.0 ** (-0.5 * n)
            * (1 + np.tanh(t)) ** (wp.zeta + 0.5 * n)
            * (1 - np.tanh(t)) ** wp.eta
            * jacobi(m - n, a_rad, wp.gamma, -np.tanh(t))
        )
    else:
        t_f = lambda t: np.exp(-0.5 * np.exp(t) + (wp.zeta + 0.5 * n) * t) * laguerre(
            m - n, a_rad, np.exp(t)
        )
    val = np.sum(t_rule.weights * np.exp(-1j * xi[d] * t_rule.nodes) * t_f(t_rule.nodes))
    for j in range(1, d + 1):
        K = tail_sum(k, j + 1)
        lam = wp.mu + K + 0.5 * (d - j)
        A = wp.alpha + 0.25 * (d - j) + 0.5 * K
        r = x_rules[j - 1]
        sech2 = 1.0 / np.cosh(r.nodes) ** 2
        fx = sech2**A * gegenbauer(k[j - 1], lam, np.tanh(r.nodes))
        val = val * np.sum(r.weights * np.exp(-1j * xi[j - 1] * r.nodes) * fx)
    return val, nodes


def _fourier(case):
    t0 = time.perf_counter()
    p = case.params
    if case.identity_id == "FOURIER_J":
        wp = WrapParamsJacobi(p["alpha"], p["zeta"], p["eta"], p["beta"], p["gamma"], p["mu"])
        closed = fourier_h_jacobi_closed(case.m, case.k, wp, case.d, case.xi)
    else:
        wp = WrapParamsLaguerre(p["alpha"], p["zeta"], p["beta"], p["mu"])
        closed = fourier_h_laguerre_closed(case.m, case.k, wp, case.d, case.xi)
    v0, n0 = _fourier_direct(case.identity_id, case.m, case.k, wp, case.d, case.xi, 0)
    v1, n1 = _fourier_direct(case.identity_id, case.m, case.k, wp, case.d, case.xi, 1)
    if abs(v1 - v0) > max(case.tolerance * abs(v1), 0.1 * case.tolerance * abs(closed)):
        raise QuadratureNonConvergence("direct transform did not converge")
    return _finish(case, v1, closed, abs(closed), n0 + n1, t0)


# ---------------------------------------------------------------------------
# Parseval

_PARSEVAL_LEVELS = (16, 24, 36)  # panels per (two-sided) axis, 1.5x refinement


def parseval_rhs(fam, m, k, sp, d):
    """The printed Parseval constant (diagonal value) in log space."""
    n = tail_sum(k, 1)
    M = m - n
    absa, absz = sp.abs_alpha, sp.abs_zeta
    if fam == "PARSEVAL_A":
        abse = sp.abs_eta
        lg = (
            (d + 1) * math.log(math.pi)
            + (-2 * d * absa + 2 * d + 3) * math.log(2)
            + log_gamma(m + absz) + log_gamma(M + abse)
            + log_gamma(0.5 * n + sp.zeta1 + sp.eta1)
            + log_gamma(0.5 * n + sp.zeta2 + sp.eta2)
            - log_gamma(m + absz + abse - 1.0)
        )
        val = np.exp(lg).real * math.factorial(M) * ball_norm(k, sp.mu)
        val /= pochhammer(n + absz, M) ** 2 * (2 * m - n + absz + abse - 1)
    else:
        lg = (
            (d + 1) * math.log(2 * math.pi)
            + (-2 * d * absa - n - absz + d + 1) * math.log(2)
            + log_gamma(absz + m)
        )
        val = np.exp(lg).real * math.factorial(M) * ball_norm(k, sp.mu)
        val /= pochhammer(n + absz, M) ** 2
    for j in range(1, d + 1):
        K = tail_sum(k, j + 1)
        kj = k[j - 1]
        lgj = log_gamma(K + 2 * sp.alpha1 + 0.5 * (d - j)) + log_gamma(
            K + 2 * sp.alpha2 + 0.5 * (d - j)
        )
        val *= math.factorial(kj) ** 2 * np.exp(lgj).real
        val /= 2.0 ** (2 * K) * pochhammer(2 * K + 2 * absa + d - j - 1, kj) ** 2
    return float(val)


def _parseval_lhs(fam, m, k, m2, k2, sp, d, level):
    T = 1.1 * math.log(100.0 / 1e-12) / math.pi
    rule = composite_legendre(-T, T, _PARSEVAL_LEVELS[level], 12)
    sw = sp.swapped()
    if fam == "PARSEVAL_A":
        def f(t, *xs):
            w = np.exp(log_gamma(sp.eta1 + 0.5j * t) + log_gamma(sp.eta2 - 0.5j * t))
            return (
                w
                * eval_A(m, k, sp, d, 1j * t, [1j * x for x in xs])
                * eval_A(m2, k2, sw, d, -1j * t, [-1j * x for x in xs])
            )
    else:
        def f(t, *xs):
            return eval_B(m, k, sp, d, 1j * t, [1j * x for x in xs]) * eval_B(
                m2, k2, sw, d, -1j * t, [-1j * x for x in xs]
            )
    return tensor_integrate([rule] * (d + 1), f), (d + 1) * len(rule)


def _parseval(case):
    t0 = time.perf_counter()
    p = case.params
    if case.identity_id == "PARSEVAL_A":
        sp = SplitParams(p["alpha1"], p["alpha2"], p["zeta1"], p["zeta2"], p["eta1"], p["eta2"])
    else:
        sp = SplitParams(p["alpha1"], p["alpha2"], p["zeta1"], p["zeta2"])
    diag1 = parseval_rhs(case.identity_id, case.m, case.k, sp, case.d)
    diag2 = parseval_rhs(case.identity_id, case.m2, case.k2, sp, case.d)
    scale = math.sqrt(diag1 * diag2)
    nodes = 0
    prev = None
    for level in range(len(_PARSEVAL_LEVELS)):
        val, n = _parseval_lhs(case.identity_id, case.m, case.k, case.m2, case.k2,
                               sp, case.d, level)
        nodes += n
        if prev is not None and abs(val - prev) <= max(
            case.tolerance * abs(val), 0.1 * case.tolerance * scale
        ):
            rhs = diag1 if (case.m, case.k) == (case.m2, case.k2) else 0.0
            return _finish(case, val, rhs, scale, nodes, t0)
        prev = val
    raise QuadratureNonConvergence("Parseval integral did not converge")


# ---------------------------------------------------------------------------
# contiguous relations and form equivalences


def _complex_point(params, prefix, d):
    t = complex(params[f"{prefix}t_re"], params[f"{prefix}t_im"])
    x = [complex(params[f"{prefix}x{j}_re"], params[f"{prefix}x{j}_im"]) for j in range(1, d + 1)]
    return t, x


def _contiguous(case):
    t0 = time.perf_counter()
    p = case.params
    fam, roman = case.identity_id.rsplit("_", 1)
    idx = ROMAN.index(roman) + 1
    t, x = _complex_point(p, "", case.d)
    try:
        if fam == "CONTIG_A":
            sp = SplitParams(p["alpha1"], p["alpha2"], p["zeta1"], p["zeta2"],
                             p["eta1"], p["eta2"], check=False)
            lhs, rhs = a_relation_pair(idx, case.m, case.k, sp, case.d, t, x)
        else:
            sp = SplitParams(p["alpha1"], p["alpha2"], p["zeta1"], p["zeta2"], check=False)
            lhs, rhs = b_relation_pair(idx, case.m, case.k, sp, case.d, t, x)
    except PoleError as exc:
        return _skip(case, f"pole: {exc}", t0)
    scale = max(abs(lhs), abs(rhs))
    return _finish(case, lhs, rhs, scale if scale > 0 else 1.0, 0, t0)


def _form_equiv(case):
    t0 = time.perf_counter()
    p = case.params
    if case.identity_id == "FORM_EQUIV_PHI":
        j = int(p["axis"])
        lhs = phi_factor(j, case.d, p["alpha"], p["mu"], case.k, p["xi"])
        rhs = phi_factor_hahn(j, case.d, p["alpha"], p["mu"], case.k, p["xi"])
    elif case.identity_id == "FORM_EQUIV_D":
        t, x = _complex_point(p, "", case.d)
        lhs = eval_D(case.k, p["alpha1"], p["alpha2"], case.d, x)
        rhs = eval_D_hahn(case.k, p["alpha1"], p["alpha2"], case.d, x)
    else:
        sp = SplitParams(p["alpha1"], p["alpha2"], p["zeta1"], p["zeta2"], p["eta1"], p["eta2"])
        t, x = _complex_point(p, "", case.d)
        lhs = eval_A(case.m, case.k, sp, case.d, t, x)
        rhs = eval_A_hahn(case.m, case.k, sp, case.d, t, x)
    scale = max(abs(lhs), abs(rhs))
    return _finish(case, lhs, rhs, scale if scale > 0 else 1.0, 0, t0)


_DISPATCH = {
    "ORT_GEGEN": _ort_1d, "ORT_JACOBI": _ort_1d, "ORT_LAGUERRE": _ort_1d,
    "ORT_BALL": _ort_ball, "ORT_PARA_J": _ort_para, "ORT_PARA_L": _ort_para,
    "FOURIER_J": _fourier, "FOURIER_L": _fourier,
    "PARSEVAL_A": _parseval, "PARSEVAL_B": _parseval,
    "FORM_EQUIV_PHI": _form_equiv, "FORM_EQUIV_D": _form_equiv, "FORM_EQUIV_A": _form_equiv,
}


def run_case(case: IdentityCase) -> VerificationReport:
    fn = _DISPATCH.get(case.identity_id)
    if fn is None and case.identity_id.startswith("CONTIG_"):
        fn = _contiguous
    if fn is None:
        raise DomainError(f"unknown identity id {case.identity_id!r}")
    return fn(case)


def _checked(case, prefixes):
    if not any(case.identity_id.startswith(p) for p in prefixes):
        raise DomainError(f"case family {case.identity_id!r} not handled by this check")
    return run_case(case)


def check_orthogonality(case: IdentityCase) -> VerificationReport:
    """Gram-matrix entry against the norm formulas (any ORT_* family)."""
    return _checked(case, ("ORT_",))


def check_fourier(case: IdentityCase) -> VerificationReport:
    """Closed-form transform against the direct numeric transform."""
    return _checked(case, ("FOURIER_",))


def check_parseval_A(case: IdentityCase) -> VerificationReport:
    """Height-1 Parseval integral against the printed constant."""
    return _checked(case, ("PARSEVAL_A",))


def check_parseval_B(case: IdentityCase) -> VerificationReport:
    """Infinite-height Parseval integral against the printed constant."""
    return _checked(case, ("PARSEVAL_B",))


def check_contiguous(case: IdentityCase) -> VerificationReport:
    """One lifted contiguous relation at the case's parameter/point draw."""
    return _checked(case, ("CONTIG_",))


# ---------------------------------------------------------------------------
# case generation


def multi_indices(d, total_max):
    """All multi-indices of length d with |k| <= total_max, lexicographic."""
    out = []
    for total in range(total_max + 1):
        for c in itertools.product(range(total + 1), repeat=d):
            if sum(c) == total:
                out.append(c)
    return out


def degree_index_pairs(d, m_max):
    """(m, k) with |k| <= m <= m_max."""
    return [(m, k) for m in range(m_max + 1) for k in multi_indices(d, m) if sum(k) <= m]


def generate_cases(cfg) -> list[IdentityCase]:
    """Deterministic case list: fixed family order, all draws from one
    seeded PCG64 generator."""
    rng = np.random.default_rng(cfg.seed)
    tol = lambda fam: cfg.tolerances.get(fam, DEFAULT_TOLERANCES[fam])
    cases = []
    fams = cfg.families

    for fam in ("ORT_GEGEN", "ORT_JACOBI", "ORT_LAGUERRE"):
        if fam not in fams:
            continue
        for _ in range(cfg.ort_param_draws):
            if fam == "ORT_GEGEN":
                params = {"mu": float(rng.uniform(0.3, 2.5))}
            elif fam == "ORT_JACOBI":
                params = {"alpha": float(rng.uniform(-0.6, 2.0)), "beta": float(rng.uniform(-0.6, 2.0))}
            else:
                params = {"alpha": float(rng.uniform(-0.6, 2.5))}
            for m in range(cfg.max_degree_1d + 1):
                for m2 in range(m, cfg.max_degree_1d + 1):
                    cases.append(IdentityCase(fam, 1, tol(fam), m=m, m2=m2, params=params))

    if "ORT_BALL" in fams:
        d = 2
        for mu in (0.5, 1.5):
            ks = multi_indices(d, cfg.max_degree_multi)
            for i, k in enumerate(ks):
                for k2 in ks[i:]:
                    cases.append(IdentityCase("ORT_BALL", d, tol("ORT_BALL"),
                                              k=k, k2=k2, params={"mu": mu}))

    for fam in ("ORT_PARA_J", "ORT_PARA_L"):
        if fam not in fams:
            continue
        for d in cfg.dims:
            params = {"beta": float(rng.uniform(-0.4, 1.2)), "mu": float(rng.uniform(0.3, 1.5))}
            if fam == "ORT_PARA_J":
                params["gamma"] = float(rng.uniform(-0.4, 1.2))
            pairs = degree_index_pairs(d, cfg.max_degree_multi)
            for i, (m, k) in enumerate(pairs):
                for (m2, k2) in pairs[i:]:
                    cases.append(IdentityCase(fam, d, tol(fam), m=m, m2=m2, k=k, k2=k2,
                                              params=params))

    for fam in ("FOURIER_J", "FOURIER_L"):
        if fam not in fams:
            continue
        for d in cfg.dims:
            params = {
                "alpha": float(rng.uniform(0.5, 1.2)),
                "zeta": float(rng.uniform(0.5, 1.2)),
                "beta": float(rng.uniform(-0.3, 0.8)),
                "mu": float(rng.uniform(0.3, 1.2)),
            }
            if fam == "FOURIER_J":
                params["eta"] = float(rng.uniform(0.5, 1.2))
                params["gamma"] = float(rng.uniform(-0.3, 0.8))
            pairs = [(m, k) for (m, k) in degree_index_pairs(d, cfg.fourier_max_degree)
                     if sum(k) <= 2]
            for (m, k) in pairs:
                for _ in range(cfg.fourier_xi_draws):
                    xi = tuple(float(v) for v in rng.uniform(-2.0, 2.0, d + 1))
                    cases.append(IdentityCase(fam, d, tol(fam), m=m, k=k, params=params, xi=xi))

    for fam in ("PARSEVAL_A", "PARSEVAL_B"):
        if fam not in fams:
            continue
        names = ["alpha1", "alpha2", "zeta1", "zeta2"]
        if fam == "PARSEVAL_A":
            names += ["eta1", "eta2"]
        params = {name: float(rng.uniform(0.4, 1.6)) for name in names}
        pairs = degree_index_pairs(1, cfg.parseval_max_degree)
        for (m, k) in pairs:
            for (m2, k2) in pairs:
                cases.append(IdentityCase(fam, 1, tol(fam), m=m, m2=m2, k=k, k2=k2,
                                          params=params))
        if 2 in cfg.dims:
            cases.append(IdentityCase(fam, 2, tol(fam), m=0, m2=0, k=(0, 0), k2=(0, 0),
                                      params=params))

    for fam_base in ("CONTIG_A", "CONTIG_B"):
        for roman in ROMAN:
            fam = f"{fam_base}_{roman}"
            if fam not in fams:
                continue
            for _ in range(cfg.contig_draws):
                d = int(rng.choice(cfg.dims))
                k = tuple(int(v) for v in rng.integers(0, 3, d))
                # m >= |k|+1 keeps the lower-degree terms well defined and the
                # two sides generically nonzero
                m = sum(k) + int(rng.integers(1, 3))
                names = ["alpha1", "alpha2", "zeta1", "zeta2"]
                if fam_base == "CONTIG_A":
                    names += ["eta1", "eta2"]
                params = {name: float(rng.uniform(0.3, 2.5)) for name in names}
                params["t_re"] = float(rng.uniform(-1, 1))
                params["t_im"] = float(rng.uniform(-1, 1))
                for j in range(1, d + 1):
                    params[f"x{j}_re"] = float(rng.uniform(-1, 1))
                    params[f"x{j}_im"] = float(rng.uniform(-1, 1))
                cases.append(IdentityCase(fam, d, tol(fam), m=m, k=k, params=params))

    for fam in ("FORM_EQUIV_PHI", "FORM_EQUIV_D", "FORM_EQUIV_A"):
        if fam not in fams:
            continue
        for _ in range(cfg.form_draws):
            d = int(rng.choice(cfg.dims))
            k = tuple(int(v) for v in rng.integers(0, 3, d))
            params = {}
            m = None
            if fam == "FORM_EQUIV_PHI":
                params["alpha"] = float(rng.uniform(0.2, 3.0))
                params["mu"] = float(rng.uniform(0.2, 3.0))
                params["xi"] = float(rng.uniform(-3.0, 3.0))
                params["axis"] = float(rng.integers(1, d + 1))
            else:
                params["alpha1"] = float(rng.uniform(0.2, 3.0))
                params["alpha2"] = float(rng.uniform(0.2, 3.0))
                if fam == "FORM_EQUIV_A":
                    for name in ("zeta1", "zeta2", "eta1", "eta2"):
                        params[name] = float(rng.uniform(0.2, 3.0))
                    m = sum(k) + int(rng.integers(0, 3))
                params["t_re"] = float(rng.uniform(-1, 1))
                params["t_im"] = float(rng.uniform(-1, 1))
                for j in range(1, d + 1):
                    params[f"x{j}_re"] = float(rng.uniform(-1, 1))
                    params[f"x{j}_im"] = float(rng.uniform(-1, 1))
            cases.append(IdentityCase(fam, d, tol(fam), m=m, k=k, params=params))

    return cases
