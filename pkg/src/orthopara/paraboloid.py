"""Orthogonal bases on the solid paraboloid U^{d+1} = {|x|^2 <= t <= b}.

Two families share the shape f(t) * t^{n/2} P_k(x / sqrt(t)):

  * height b = 1, weight t^beta (1-t)^gamma (t-|x|^2)^(mu-1/2): the radial
    factor is a Jacobi polynomial in 1 - 2t;
  * height b = inf, weight t^beta e^{-t} (t-|x|^2)^(mu-1/2): the radial
    factor is a Laguerre polynomial in t.

The rescaled ball part is evaluated through ball_homogeneous, which is a
polynomial in (t, x), so the apex t = 0 is a regular point.
"""

from __future__ import annotations

import numpy as np

from .ball import ball_homogeneous, ball_integral, ball_norm, tail_sum, validate_multi_index
from .classical import jacobi, jacobi_norm, laguerre, laguerre_norm
from .errors import DomainError, QuadratureNonConvergence
from .quadrature import gauss_jacobi, gauss_laguerre

_DOMAIN_SLACK = 1e-12


def radial_alpha(n, beta, mu, d):
    """Parameter alpha_n = n + mu + beta + (d-1)/2 of the radial factor."""
    return n + mu + beta + 0.5 * (d - 1)


def _validate(m, k, beta, mu, d, gamma=None):
    k = validate_multi_index(k)
    if len(k) != d:
        raise DomainError(f"multi-index length {len(k)} != dimension {d}")
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError(f"|k| = {n} exceeds total degree m = {m}")
    if beta <= -0.5 * (d + 1):
        raise DomainError("requires beta > -(d+1)/2")
    if mu <= -0.5:
        raise DomainError("requires mu > -1/2")
    if gamma is not None and gamma <= -1:
        raise DomainError("requires gamma > -1")
    return k, n


def _check_point(t, x, b):
    t = np.asarray(t)
    if np.any(t < -_DOMAIN_SLACK) or (np.isfinite(b) and np.any(t > b + _DOMAIN_SLACK)):
        raise DomainError(f"t outside [0, {b}]")
    norm2 = sum(np.asarray(xj) ** 2 for xj in x)
    if np.any(norm2 > t + _DOMAIN_SLACK):
        raise DomainError("point violates |x|^2 <= t")


def jacobi_paraboloid(m, k, beta, gamma, mu, t, x, check_domain=True):
    """Q^n_{k,m}(t, x) = P_{m-n}^(alpha_n, gamma)(1-2t) t^{n/2} P_k(x/sqrt(t)),
    the height-1 family."""
    d = len(x)
    k, n = _validate(m, k, beta, mu, d, gamma)
    if check_domain:
        _check_point(t, x, 1.0)
    t = np.asarray(t)
    rad = jacobi(m - n, radial_alpha(n, beta, mu, d), gamma, 1.0 - 2.0 * t)
    return rad * ball_homogeneous(k, mu, x, t)


def laguerre_paraboloid(m, k, beta, mu, t, x, check_domain=True):
    """R^n_{k,m}(t, x) = L_{m-n}^(alpha_n)(t) t^{n/2} P_k(x/sqrt(t)),
    the infinite-height family."""
    d = len(x)
    k, n = _validate(m, k, beta, mu, d)
    if check_domain:
        _check_point(t, x, np.inf)
    t = np.asarray(t)
    rad = laguerre(m - n, radial_alpha(n, beta, mu, d), t)
    return rad * ball_homogeneous(k, mu, x, t)


def jacobi_paraboloid_norm(m, k, beta, gamma, mu, d):
    """Diagonal inner product of Q^n_{k,m}: the radial Jacobi norm picks up
    2^{-(alpha_n+gamma+1)} from mapping (0,1) onto (-1,1)."""
    k, n = _validate(m, k, beta, mu, d, gamma)
    a = radial_alpha(n, beta, mu, d)
    return 2.0 ** (-(a + gamma + 1)) * jacobi_norm(m - n, a, gamma) * ball_norm(k, mu)


def laguerre_paraboloid_norm(m, k, beta, mu, d):
    """Diagonal inner product of R^n_{k,m}: Gamma(alpha_n+m-n+1)/(m-n)! times
    the ball norm."""
    k, n = _validate(m, k, beta, mu, d)
    return laguerre_norm(m - n, radial_alpha(n, beta, mu, d)) * ball_norm(k, mu)


def _t_rule(kind, n_t, beta, gamma, mu, d):
    a = beta + mu + 0.5 * (d - 1)
    if kind == "jacobi":
        rule = gauss_jacobi(n_t, gamma, a)
        t = 0.5 * (1.0 + rule.nodes)
        w = rule.weights * 2.0 ** (-(a + gamma + 1))
    elif kind == "laguerre":
        rule = gauss_laguerre(n_t, a)
        t = rule.nodes
        w = rule.weights
    else:
        raise DomainError(f"unknown radial weight kind {kind!r}")
    return t, w


def paraboloid_inner_product(f, g, d, mu, weight, n_axis=40, rel_tol=None,
                             max_refinements=6):
    """<f, g> over U^{d+1} against the requested weight.

    ``weight`` is ("jacobi", beta, gamma) for b = 1 or ("laguerre", beta) for
    b = inf.  Uses the slice change of variable
    int_U f = int_0^b t^{d/2} int_{B^d} f(t, sqrt(t) y) dy dt with the
    algebraic weights absorbed into Gauss rules.  With rel_tol set, the axis
    order doubles until two successive values agree (the convergence
    certificate); otherwise a single rule of order n_axis is used.
    """
    if weight[0] == "jacobi":
        kind, beta, gamma = weight
    else:
        (kind, beta), gamma = weight, 0.0

    def compute(n):
        t_nodes, t_weights = _t_rule(kind, n, beta, gamma, mu, d)
        total = 0.0
        for ti, wi in zip(t_nodes, t_weights):
            sq = np.sqrt(ti)

            def F(*y):
                xs = [sq * yj for yj in y]
                return f(ti, xs) * g(ti, xs)

            total += wi * ball_integral(F, d, mu, n)
        return total

    if rel_tol is None:
        return compute(n_axis)
    prev = None
    n = n_axis
    for _ in range(max_refinements + 1):
        val = compute(n)
        if prev is not None and abs(val - prev) <= max(rel_tol * abs(val), 1e-300):
            return val
        prev = val
        n *= 2
    raise QuadratureNonConvergence(
        f"paraboloid inner product did not converge at rel_tol={rel_tol:g}"
    )
