"""Numerical integration: Gauss rules, tanh-sinh for endpoint singularities,
truncated-line rules for Gamma-decay integrands, and tensor products.

Rule construction is cached; integration itself is pure, with deterministic
summation order so repeated runs produce bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_genlaguerre, roots_jacobi

from .errors import DomainError, QuadratureNonConvergence

MAX_NODES_PER_AXIS = 2**14


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple
    kind: str

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class IntegrationResult:
    value: complex
    nodes: int
    refinements: int
    last_delta: float


@lru_cache(maxsize=256)
def _gl_nodes(n):
    return leggauss(n)


def gauss_legendre(n):
    """n-point Gauss-Legendre rule on [-1, 1], exact for degree <= 2n-1."""
    if not 1 <= n <= MAX_NODES_PER_AXIS:
        raise DomainError(f"gauss_legendre: n = {n} outside [1, {MAX_NODES_PER_AXIS}]")
    x, w = _gl_nodes(n)
    return QuadratureRule(x, w, (-1.0, 1.0), "gauss_legendre")


@lru_cache(maxsize=256)
def _laguerre_nodes(n, alpha):
    x, w = roots_genlaguerre(n, alpha)
    return x, w


def gauss_laguerre(n, alpha=0.0):
    """n-point rule for integrals against t^alpha e^{-t} on (0, inf)."""
    if alpha <= -1:
        raise DomainError("gauss_laguerre: alpha must be > -1")
    x, w = _laguerre_nodes(n, float(alpha))
    return QuadratureRule(x, w, (0.0, np.inf), "gauss_laguerre")


@lru_cache(maxsize=512)
def _jacobi_nodes(n, a, b):
    x, w = roots_jacobi(n, a, b)
    return x, w


def gauss_jacobi(n, a, b):
    """n-point rule for integrals against (1-x)^a (1+x)^b on [-1, 1]."""
    if a <= -1 or b <= -1:
        raise DomainError("gauss_jacobi: exponents must be > -1")
    x, w = _jacobi_nodes(n, float(a), float(b))
    return QuadratureRule(x, w, (-1.0, 1.0), "gauss_jacobi")


@lru_cache(maxsize=64)
def _tanh_sinh_nodes(level):
    # nodes on (0, 1), generated directly through the logistic form
    # u = 1 / (1 + e^{-pi sinh(kh)}) so the left endpoint keeps full
    # relative precision for algebraic singularities at 0
    h = 0.5 / 2**level
    s_cap = 250.0
    k_max = int(np.ceil(np.arcsinh(s_cap / np.pi) / h))
    k = np.arange(-k_max, k_max + 1)
    s = np.pi * np.sinh(k * h)
    keep = np.abs(s) <= s_cap
    s = s[keep]
    kh = k[keep] * h
    sig = 1.0 / (1.0 + np.exp(-s))
    u = sig
    w = h * np.pi * np.cosh(kh) * sig * (1.0 - sig)
    return u, w


def tanh_sinh(level=3):
    """Tanh-sinh rule on (0, 1); integrates u^{a-1} endpoint singularities
    (a > 0) at double-exponential convergence.  Doubling ``level`` halves h."""
    u, w = _tanh_sinh_nodes(int(level))
    return QuadratureRule(u, w, (0.0, 1.0), "tanh_sinh")


def scaled(rule, lo, hi):
    """Affine image of a finite-interval rule on [lo, hi]."""
    a, b = rule.interval
    if not (np.isfinite(a) and np.isfinite(b)):
        raise DomainError("scaled: rule must live on a finite interval")
    slope = (hi - lo) / (b - a)
    return QuadratureRule(
        lo + (rule.nodes - a) * slope, rule.weights * slope, (lo, hi), rule.kind
    )


def composite_legendre(lo, hi, panels, n=12):
    """Composite Gauss-Legendre: ``panels`` equal panels of an n-point rule."""
    if panels * n > MAX_NODES_PER_AXIS:
        raise DomainError("composite_legendre: node budget exceeded")
    base = gauss_legendre(n)
    edges = np.linspace(lo, hi, panels + 1)
    nodes = []
    weights = []
    for i in range(panels):
        r = scaled(base, edges[i], edges[i + 1])
        nodes.append(r.nodes)
        weights.append(r.weights)
    return QuadratureRule(
        np.concatenate(nodes), np.concatenate(weights), (lo, hi), "truncated_line"
    )


def integrate(f, rule):
    """Sum w_i f(x_i) in fixed node order."""
    return np.sum(rule.weights * f(rule.nodes))


def integrate_to_tolerance(f, rule_factory, rel_tol=1e-10, max_refinements=10,
                           abs_floor=0.0, start_level=0):
    """Refine rule_factory(level) until two successive values agree.

    The agreement of the last two levels is the convergence certificate;
    failure after ``max_refinements`` raises QuadratureNonConvergence.
    """
    prev = None
    nodes = 0
    for level in range(start_level, start_level + max_refinements + 1):
        rule = rule_factory(level)
        val = integrate(f, rule)
        nodes += len(rule)
        if prev is not None:
            delta = abs(val - prev)
            if delta <= max(rel_tol * abs(val), abs_floor):
                return IntegrationResult(val, nodes, level - start_level, float(delta))
        prev = val
    raise QuadratureNonConvergence(
        f"no two successive refinements agreed to rel_tol={rel_tol:g}"
    )


def gamma_line_decay_rate(imag_coeffs):
    """Decay rate c with |integrand| <= C e^{-c|s|} for a product of gamma
    factors Gamma(a_j + i c_j s): each contributes (pi/2)|c_j|."""
    return 0.5 * np.pi * float(np.sum(np.abs(np.asarray(imag_coeffs, dtype=float))))


def line_rule_factory(halfwidth, nodes_per_panel=12, base_panels=None):
    """Factory of composite rules on [-T, T] whose panel count doubles per level."""
    T = float(halfwidth)
    if base_panels is None:
        base_panels = max(8, int(np.ceil(T)))

    def factory(level):
        return composite_legendre(-T, T, base_panels * 2**level, nodes_per_panel)

    return factory


def integrate_line_gamma_decay(f, decay_rate, rel_tol=1e-8, max_refinements=8,
                               abs_floor=0.0, halfwidth=None):
    """Integral over the real line of an integrand with Gamma-product decay.

    Truncates at T with e^{-c T} < 0.01 * rel_tol (plus a 10% margin for the
    polynomial factors), then refines composite Gauss-Legendre panels until
    two successive levels agree.
    """
    if decay_rate <= 0:
        raise DomainError("integrate_line_gamma_decay: decay rate must be positive")
    if halfwidth is None:
        halfwidth = 1.1 * np.log(100.0 / rel_tol) / decay_rate
    return integrate_to_tolerance(
        f, line_rule_factory(halfwidth), rel_tol=rel_tol,
        max_refinements=max_refinements, abs_floor=abs_floor,
    )


_CHUNK_LIMIT = 2**22


def tensor_integrate(rules, f):
    """Tensor-product quadrature of f(x_1, ..., x_n) for up to 3 axes.

    f must broadcast over its array arguments.  Axis order and summation
    order are fixed, so results are deterministic.
    """
    rules = list(rules)
    n = len(rules)
    if not 1 <= n <= 3:
        raise DomainError("tensor_integrate supports 1 to 3 axes")
    if n == 1:
        return integrate(f, rules[0])
    sizes = [len(r) for r in rules]
    grids = []
    for i, r in enumerate(rules):
        shape = [1] * (n - 1)
        shape.insert(i, sizes[i])
        grids.append(r.nodes.reshape(shape))
    if int(np.prod(sizes)) <= _CHUNK_LIMIT:
        vals = f(*grids)
        w = rules[0].weights.reshape(grids[0].shape)
        for i in range(1, n):
            w = w * rules[i].weights.reshape(grids[i].shape)
        return np.sum(w * vals)
    # chunk along the first axis to bound memory
    inner_w = rules[1].weights.reshape(grids[1].shape[1:])
    for i in range(2, n):
        inner_w = inner_w * rules[i].weights.reshape(grids[i].shape[1:])
    total = 0.0 + 0.0j
    w0 = rules[0].weights
    x0 = rules[0].nodes
    for j in range(sizes[0]):
        vals = f(x0[j], *(g[0] for g in grids[1:]))
        total += w0[j] * np.sum(inner_w * vals)
    return total
