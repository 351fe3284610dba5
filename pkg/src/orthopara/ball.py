"""Orthogonal polynomials on the unit ball B^d.

The basis is the nested-Gegenbauer product: factor j contributes

    (1 - |x_{j-1}|^2)^{k_j/2} C_{k_j}^(lam_j)( x_j / sqrt(1 - |x_{j-1}|^2) ),
    lam_j = mu + |k^{j+1}| + (d-j)/2,

evaluated here in homogenized form (a polynomial in x_j and the running
radicand), so boundary points never divide by a vanishing square root.
|k^j| denotes the tail sum k_j + ... + k_d.
"""

from __future__ import annotations

import math

import numpy as np

from .classical import gegenbauer_homogeneous
from .errors import DomainError
from .gammafn import log_gamma, pochhammer
from .quadrature import gauss_jacobi

_DOMAIN_SLACK = 1e-12


def validate_multi_index(k):
    k = tuple(int(v) for v in k)
    if any(v < 0 for v in k):
        raise DomainError(f"multi-index entries must be >= 0, got {k}")
    return k


def tail_sum(k, j):
    """|k^j| = k_j + ... + k_d for 1-based j; tail_sum(k, d+1) == 0."""
    return int(sum(k[j - 1:]))


def lambda_param(k, mu, j):
    """Gegenbauer parameter of the j-th factor: mu + |k^{j+1}| + (d-j)/2."""
    d = len(k)
    return mu + tail_sum(k, j + 1) + 0.5 * (d - j)


def ball_homogeneous(k, mu, x, t):
    """t^{|k|/2} P_k^mu(x / sqrt(t)) as a polynomial in (x, t).

    Equals prod_j H_{k_j}^(lam_j)(x_j, r_{j-1}) with r_j = t - (x_1^2+...+x_j^2)
    and H the homogenized Gegenbauer factor; t = 0 is a regular point.
    """
    k = validate_multi_index(k)
    d = len(k)
    if len(x) != d:
        raise DomainError(f"expected {d} coordinates, got {len(x)}")
    if mu <= -0.5:
        raise DomainError("ball polynomial requires mu > -1/2")
    r = np.asarray(t) + 0.0
    out = 1.0
    for j in range(1, d + 1):
        xj = np.asarray(x[j - 1])
        out = out * gegenbauer_homogeneous(k[j - 1], lambda_param(k, mu, j), xj, r)
        r = r - xj * xj
    return out


def ball_eval(k, mu, x, check_domain=True):
    """P_k^mu at a point (or broadcastable arrays of points) of B^d."""
    k = validate_multi_index(k)
    if check_domain:
        norm2 = sum(np.asarray(xj) ** 2 for xj in x)
        if np.any(norm2 > 1.0 + _DOMAIN_SLACK):
            raise DomainError("ball_eval: point outside the closed unit ball")
    return ball_homogeneous(k, mu, x, 1.0)


def ball_norm(k, mu):
    """Norm square of P_k^mu over B^d against (1 - |x|^2)^(mu - 1/2):

        pi^{d/2} Gamma(mu+1/2) (mu+d/2)_{|k|} / Gamma(mu+(d+1)/2+|k|)
        * prod_j (mu+(d-j)/2)_{|k^j|} (2mu+2|k^{j+1}|+d-j)_{k_j}
                 / ( k_j! (mu+(d-j+1)/2)_{|k^j|} ).
    """
    k = validate_multi_index(k)
    if mu <= -0.5:
        raise DomainError("ball_norm: requires mu > -1/2")
    d = len(k)
    n = tail_sum(k, 1)
    lg = (
        0.5 * d * math.log(math.pi)
        + log_gamma(mu + 0.5)
        - log_gamma(mu + 0.5 * (d + 1) + n)
    )
    val = float(np.exp(lg).real) * pochhammer(mu + 0.5 * d, n)
    for j in range(1, d + 1):
        kj = k[j - 1]
        tj = tail_sum(k, j)
        tj1 = tail_sum(k, j + 1)
        val *= pochhammer(mu + 0.5 * (d - j), tj)
        val *= pochhammer(2 * mu + 2 * tj1 + d - j, kj)
        val /= math.factorial(kj) * pochhammer(mu + 0.5 * (d - j + 1), tj)
    return float(val)


def cube_to_ball(v):
    """Iterated-slice coordinates: y_j = v_j prod_{i<j} sqrt(1 - v_i^2),
    mapping (-1,1)^d onto B^d; broadcastable."""
    y = []
    scale = 1.0
    for vj in v:
        vj = np.asarray(vj)
        y.append(vj * np.sqrt(scale))
        scale = scale * (1.0 - vj * vj)
    return y


def ball_rules(d, mu, n):
    """Per-axis Gauss-Jacobi rules absorbing the mapped weight: axis j carries
    (1 - v_j^2)^(mu - 1/2 + (d-j)/2) from the weight plus the slice Jacobian."""
    rules = []
    for j in range(1, d + 1):
        e = mu - 0.5 + 0.5 * (d - j)
        rules.append(gauss_jacobi(n, e, e))
    return rules


def ball_integral(F, d, mu, n):
    """Tensor quadrature of F(y_1, ..., y_d) (1-|y|^2)^(mu-1/2) over B^d.

    F must broadcast; summation order is fixed.
    """
    rules = ball_rules(d, mu, n)
    grids = []
    for j, r in enumerate(rules):
        shape = [1] * d
        shape[j] = len(r)
        grids.append(r.nodes.reshape(shape))
    y = cube_to_ball(grids)
    w = rules[0].weights.reshape(grids[0].shape)
    for j in range(1, d):
        w = w * rules[j].weights.reshape(grids[j].shape)
    return np.sum(w * F(*y))
