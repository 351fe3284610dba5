"""Wrapped basis functions on R^d / R^{d+1}, their closed-form Fourier
transforms, and the Gamma-hypergeometric families they generate.

Everything accepts numpy-broadcastable arguments for points and frequencies
(indices and parameters stay scalar), so frequency grids evaluate in one
vectorized pass.  Complex powers of the strictly positive bases that occur
here (2, 1 +- tanh) are principal-branch exp(w log base), which is
unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import math

import numpy as np

from .ball import tail_sum, validate_multi_index
from .classical import continuous_hahn, gegenbauer, jacobi, laguerre
from .errors import DomainError
from .gammafn import log_gamma, pochhammer
from .hyper import hyp2f1_at_2, hyp_terminating


@dataclass(frozen=True)
class WrapParamsJacobi:
    """Parameters of the height-1 wrapped function (damping exponents
    alpha/zeta/eta plus the weight parameters beta, gamma, mu)."""
    alpha: float
    zeta: float
    eta: float
    beta: float
    gamma: float
    mu: float


@dataclass(frozen=True)
class WrapParamsLaguerre:
    alpha: float
    zeta: float
    beta: float
    mu: float


@dataclass(frozen=True)
class SplitParams:
    """Split positive parameter pairs for the Parseval families.

    mu, beta, gamma are not free: the orthogonality statements hold only
    under the bindings mu = a1+a2-1/2, beta = z1+z2-a1-a2-1/2,
    gamma = e1+e2-1, so they are exposed as derived properties.
    The eta pair is absent for the B family.

    Positivity of every entry is the validity condition of the Parseval
    integrals; the contiguous relations shift parameters freely, so they
    construct instances with check=False.
    """
    alpha1: float
    alpha2: float
    zeta1: float
    zeta2: float
    eta1: float | None = None
    eta2: float | None = None
    check: bool = True

    def __post_init__(self):
        vals = [self.alpha1, self.alpha2, self.zeta1, self.zeta2]
        if (self.eta1 is None) != (self.eta2 is None):
            raise DomainError("eta parameters come as a pair")
        if self.eta1 is not None:
            vals += [self.eta1, self.eta2]
        if self.check and any(v <= 0 for v in vals):
            raise DomainError("split parameters must all be positive")

    @property
    def abs_alpha(self):
        return self.alpha1 + self.alpha2

    @property
    def abs_zeta(self):
        return self.zeta1 + self.zeta2

    @property
    def abs_eta(self):
        return self.eta1 + self.eta2

    @property
    def mu(self):
        return self.abs_alpha - 0.5

    @property
    def beta(self):
        return self.abs_zeta - self.abs_alpha - 0.5

    @property
    def gamma(self):
        return self.abs_eta - 1.0

    def swapped(self):
        """The partner parameter set appearing in the Parseval integrals."""
        return replace(
            self, alpha1=self.alpha2, alpha2=self.alpha1,
            zeta1=self.zeta2, zeta2=self.zeta1,
            eta1=self.eta2, eta2=self.eta1,
        )

    def shifted(self, **deltas):
        """New SplitParams with the named entries shifted additively."""
        changes = {name: getattr(self, name) + dv for name, dv in deltas.items()}
        return replace(self, **changes)


def _sech2(x):
    # 1 - tanh^2 x, stable for large |x|
    c = np.cosh(np.asarray(x))
    return 1.0 / (c * c)


def eval_g(k, alpha, mu, x):
    """Wrapped ball polynomial on R^d:

        g_d(x) = prod_j (1-tanh^2 x_j)^(alpha+(d-j)/4) P_k^mu(theta_1..theta_d)

    with theta_j = tanh x_j prod_{i<j} sqrt(1-tanh^2 x_i).  Computed in the
    equivalent separated form
    prod_j (1-tanh^2 x_j)^(alpha+(d-j)/4+|k^{j+1}|/2) C_{k_j}^(lam_j)(tanh x_j).
    """
    k = validate_multi_index(k)
    d = len(k)
    if len(x) != d:
        raise DomainError(f"expected {d} coordinates, got {len(x)}")
    out = 1.0
    for j in range(1, d + 1):
        xj = np.asarray(x[j - 1])
        sech2 = _sech2(xj)
        K = tail_sum(k, j + 1)
        lam = mu + K + 0.5 * (d - j)
        out = out * sech2 ** (alpha + 0.25 * (d - j) + 0.5 * K) * gegenbauer(
            k[j - 1], lam, np.tanh(xj)
        )
    return out


def eval_h_jacobi(m, k, params: WrapParamsJacobi, t, x):
    """Wrapped height-1 basis function on R^{d+1}:

        2^{-|k|/2} (1+tanh t)^(zeta+|k|/2) (1-tanh t)^eta
        * P_{m-|k|}^(|k|+mu+beta+(d-1)/2, gamma)(-tanh t) * g_d(x).
    """
    k = validate_multi_index(k)
    d = len(x)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    th = np.tanh(np.asarray(t, dtype=float))
    a = n + params.mu + params.beta + 0.5 * (d - 1)
    return (
        2.0 ** (-0.5 * n)
        * (1.0 + th) ** (params.zeta + 0.5 * n)
        * (1.0 - th) ** params.eta
        * jacobi(m - n, a, params.gamma, -th)
        * eval_g(k, params.alpha, params.mu, x)
    )


def eval_h_laguerre(m, k, params: WrapParamsLaguerre, t, x):
    """Wrapped infinite-height basis function on R^{d+1}:

        e^{-e^t/2 + (zeta+|k|/2) t} L_{m-|k|}^(|k|+mu+beta+(d-1)/2)(e^t) g_d(x).
    """
    k = validate_multi_index(k)
    d = len(x)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    t = np.asarray(t, dtype=float)
    et = np.exp(t)
    a = n + params.mu + params.beta + 0.5 * (d - 1)
    return (
        np.exp(-0.5 * et + (params.zeta + 0.5 * n) * t)
        * laguerre(m - n, a, et)
        * eval_g(k, params.alpha, params.mu, x)
    )


def _phi_beta_part(j, d, alpha, K, xi_j):
    ap = alpha + 0.5 * (K + 1j * xi_j) + 0.25 * (d - j)
    am = alpha + 0.5 * (K - 1j * xi_j) + 0.25 * (d - j)
    return np.exp(log_gamma(ap) + log_gamma(am) - log_gamma(ap + am)), ap


def phi_factor(j, d, alpha, mu, k, xi_j):
    """Per-axis factor of the closed-form transform of g_d (1-based axis j):

        B(alpha + (K+i xi)/2 + (d-j)/4, alpha + (K-i xi)/2 + (d-j)/4)
        * 3F2(-k_j, k_j+2(K+mu+(d-j)/2), alpha+(K+i xi)/2+(d-j)/4;
               K+mu+(d-j+1)/2, K+2 alpha+(d-j)/2; 1),     K = |k^{j+1}|.
    """
    k = validate_multi_index(k)
    K = tail_sum(k, j + 1)
    if alpha + 0.5 * K + 0.25 * (d - j) <= 0:
        raise DomainError("phi_factor: requires alpha + |k^{j+1}|/2 + (d-j)/4 > 0")
    bpart, ap = _phi_beta_part(j, d, alpha, K, np.asarray(xi_j))
    kj = k[j - 1]
    f = hyp_terminating(
        [-kj, kj + 2 * (K + mu + 0.5 * (d - j)), ap],
        [K + mu + 0.5 * (d - j + 1), K + 2 * alpha + 0.5 * (d - j)],
        1.0,
    )
    return bpart * f


def phi_factor_hahn(j, d, alpha, mu, k, xi_j):
    """phi_factor rewritten through a continuous Hahn polynomial at xi/2;
    must agree with phi_factor identically."""
    k = validate_multi_index(k)
    K = tail_sum(k, j + 1)
    if alpha + 0.5 * K + 0.25 * (d - j) <= 0:
        raise DomainError("phi_factor_hahn: requires alpha + |k^{j+1}|/2 + (d-j)/4 > 0")
    kj = k[j - 1]
    A = alpha + 0.5 * K + 0.25 * (d - j)
    Bp = mu - alpha + 0.5 * (K + 1) + 0.25 * (d - j)
    denom = (
        1j**kj
        * pochhammer(K + mu + 0.5 * (d - j + 1), kj)
        * pochhammer(K + 2 * alpha + 0.5 * (d - j), kj)
    )
    if denom == 0:
        raise DomainError("phi_factor_hahn: vanishing Pochhammer denominator")
    bpart, _ = _phi_beta_part(j, d, alpha, K, np.asarray(xi_j))
    p = continuous_hahn(kj, A, Bp, Bp, A, np.asarray(xi_j) / 2.0)
    return math.factorial(kj) / denom * bpart * p


def fourier_g_closed(k, alpha, mu, d, xi):
    """Closed-form Fourier transform of g_d:

        2^(2 d alpha + d(d-5)/4 + sum_j j k_{j+1})
        * prod_j (2(K_j+mu+(d-j)/2))_{k_j} / k_j! * phi_j(xi_j).
    """
    k = validate_multi_index(k)
    if len(k) != d or len(xi) != d:
        raise DomainError("fourier_g_closed: k and xi must have length d")
    expo = 2 * d * alpha + d * (d - 5) / 4 + sum(j * k[j] for j in range(1, d))
    out = 2.0**expo
    for j in range(1, d + 1):
        K = tail_sum(k, j + 1)
        kj = k[j - 1]
        out = out * pochhammer(2 * (K + mu + 0.5 * (d - j)), kj) / math.factorial(kj)
        out = out * phi_factor(j, d, alpha, mu, k, xi[j - 1])
    return out


def theta_factor(m, k, zeta, eta, beta, gamma, mu, d, xi_last):
    """Degree-coupling factor of the height-1 transform:

        3F2(-m+|k|, m+mu+beta+gamma+(d+1)/2, |k|/2+zeta-i xi/2;
             |k|+mu+beta+(d+1)/2, |k|/2+zeta+eta; 1).
    """
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    return hyp_terminating(
        [
            -(m - n),
            m + mu + beta + gamma + 0.5 * (d + 1),
            0.5 * n + zeta - 0.5j * np.asarray(xi_last),
        ],
        [n + mu + beta + 0.5 * (d + 1), 0.5 * n + zeta + eta],
        1.0,
    )


def fourier_h_jacobi_closed(m, k, params: WrapParamsJacobi, d, xi):
    """Closed-form Fourier transform of the height-1 wrapped function.

    xi is the full frequency point (xi_1..xi_d, xi_{d+1}).
    """
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    if params.zeta + 0.5 * n <= 0 or params.eta <= 0:
        raise DomainError("requires zeta + |k|/2 > 0 and eta > 0")
    if len(xi) != d + 1:
        raise DomainError("xi must have length d+1")
    xl = np.asarray(xi[d])
    lg = (
        log_gamma(params.zeta + 0.5 * n - 0.5j * xl)
        + log_gamma(params.eta + 0.5j * xl)
        - log_gamma(0.5 * n + params.zeta + params.eta)
    )
    pref = (
        2.0 ** (params.zeta + params.eta - 1)
        * pochhammer(n + params.mu + params.beta + 0.5 * (d + 1), m - n)
        / math.factorial(m - n)
        * np.exp(lg)
    )
    th = theta_factor(
        m, k, params.zeta, params.eta, params.beta, params.gamma, params.mu, d, xl
    )
    return pref * th * fourier_g_closed(k, params.alpha, params.mu, d, xi[:d])


def lambda_factor(m, k, zeta, mu, beta, d, xi_last):
    """Degree-coupling factor of the infinite-height transform:

        2F1(-m+|k|, zeta+|k|/2-i xi; |k|+mu+beta+(d+1)/2; 2).
    """
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    return hyp2f1_at_2(
        -(m - n),
        zeta + 0.5 * n - 1j * np.asarray(xi_last),
        n + mu + beta + 0.5 * (d + 1),
    )


def fourier_h_laguerre_closed(m, k, params: WrapParamsLaguerre, d, xi):
    """Closed-form Fourier transform of the infinite-height wrapped function.

    The 2^{-i xi_{d+1}} prefactor is complex of unit modulus.
    """
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    if params.zeta + 0.5 * n <= 0:
        raise DomainError("requires zeta + |k|/2 > 0")
    if len(xi) != d + 1:
        raise DomainError("xi must have length d+1")
    xl = np.asarray(xi[d])
    c = params.zeta + 0.5 * n - 1j * xl
    pref = (
        np.exp(c * math.log(2.0) + log_gamma(c))
        * pochhammer(n + params.mu + params.beta + 0.5 * (d + 1), m - n)
        / math.factorial(m - n)
    )
    lam = lambda_factor(m, k, params.zeta, params.mu, params.beta, d, xl)
    return pref * lam * fourier_g_closed(k, params.alpha, params.mu, d, xi[:d])


def eval_D(k, alpha1, alpha2, d, x):
    """Gamma-hypergeometric product over the x axes:

        prod_j Gamma(a1+(K_j-x_j)/2+(d-j)/4) Gamma(a1+(K_j+x_j)/2+(d-j)/4)
        * 3F2(-k_j, k_j+2(K_j+|a|+(d-j-1)/2), a1+(K_j+x_j)/2+(d-j)/4;
               K_j+|a|+(d-j)/2, K_j+2 a1+(d-j)/2; 1).
    """
    k = validate_multi_index(k)
    if len(k) != d or len(x) != d:
        raise DomainError("eval_D: k and x must have length d")
    absa = alpha1 + alpha2
    lg = 0.0
    fpart = 1.0
    for j in range(1, d + 1):
        K = tail_sum(k, j + 1)
        kj = k[j - 1]
        xj = np.asarray(x[j - 1])
        gp = alpha1 + 0.5 * (K + xj) + 0.25 * (d - j)
        gm = alpha1 + 0.5 * (K - xj) + 0.25 * (d - j)
        lg = lg + log_gamma(gp) + log_gamma(gm)
        fpart = fpart * hyp_terminating(
            [-kj, kj + 2 * (K + absa + 0.5 * (d - j - 1)), gp],
            [K + absa + 0.5 * (d - j), K + 2 * alpha1 + 0.5 * (d - j)],
            1.0,
        )
    return np.exp(lg) * fpart


def eval_D_hahn(k, alpha1, alpha2, d, x):
    """eval_D rewritten through continuous Hahn polynomials at -i x_j / 2."""
    k = validate_multi_index(k)
    if len(k) != d or len(x) != d:
        raise DomainError("eval_D_hahn: k and x must have length d")
    absa = alpha1 + alpha2
    lg = 0.0
    rest = 1.0
    for j in range(1, d + 1):
        K = tail_sum(k, j + 1)
        kj = k[j - 1]
        xj = np.asarray(x[j - 1])
        gp = alpha1 + 0.5 * (K + xj) + 0.25 * (d - j)
        gm = alpha1 + 0.5 * (K - xj) + 0.25 * (d - j)
        lg = lg + log_gamma(gp) + log_gamma(gm)
        A1 = alpha1 + 0.5 * K + 0.25 * (d - j)
        A2 = alpha2 + 0.5 * K + 0.25 * (d - j)
        denom = (
            pochhammer(K + 2 * alpha1 + 0.5 * (d - j), kj)
            * pochhammer(K + absa + 0.5 * (d - j), kj)
        )
        rest = rest * (
            math.factorial(kj) * 1j ** (-kj) / denom
            * continuous_hahn(kj, A1, A2, A2, A1, -0.5j * xj)
        )
    return np.exp(lg) * rest


def eval_A(m, k, sp: SplitParams, d, t, x):
    """The height-1 Parseval family:

        Gamma(|k|/2+z1-t/2)
        * 3F2(-m+|k|, m+|z|+|e|-1, |k|/2+z1-t/2; |k|+|z|, |k|/2+z1+e1; 1)
        * D_k(x; a1, a2).

    Accepts fully complex (t, x); the Parseval integrals evaluate it at
    (i t, i x) and (-i t, -i x) with the parameter pairs swapped.
    """
    if sp.eta1 is None:
        raise DomainError("eval_A requires the eta parameter pair")
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    arg = 0.5 * n + sp.zeta1 - 0.5 * np.asarray(t)
    f = hyp_terminating(
        [-(m - n), m + sp.abs_zeta + sp.abs_eta - 1, arg],
        [n + sp.abs_zeta, 0.5 * n + sp.zeta1 + sp.eta1],
        1.0,
    )
    return np.exp(log_gamma(arg)) * f * eval_D(k, sp.alpha1, sp.alpha2, d, x)


def eval_A_hahn(m, k, sp: SplitParams, d, t, x):
    """eval_A through the continuous Hahn form of both the t part and D."""
    if sp.eta1 is None:
        raise DomainError("eval_A_hahn requires the eta parameter pair")
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    M = m - n
    arg = 0.5 * n + sp.zeta1 - 0.5 * np.asarray(t)
    denom = pochhammer(n + sp.abs_zeta, M) * pochhammer(0.5 * n + sp.zeta1 + sp.eta1, M)
    p = continuous_hahn(
        M, 0.5 * n + sp.zeta1, sp.eta2, 0.5 * n + sp.zeta2, sp.eta1,
        0.5j * np.asarray(t),
    )
    return (
        math.factorial(M) * 1j ** (n - m) / denom
        * np.exp(log_gamma(arg)) * p
        * eval_D_hahn(k, sp.alpha1, sp.alpha2, d, x)
    )


def eval_B(m, k, sp: SplitParams, d, t, x):
    """The infinite-height Parseval family:

        Gamma(z1+|k|/2-t) D_k(x; a1, a2)
        * 2F1(-m+|k|, z1+|k|/2-t; |k|+|z|; 2).
    """
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    arg = sp.zeta1 + 0.5 * n - np.asarray(t)
    f = hyp2f1_at_2(-(m - n), arg, n + sp.abs_zeta)
    return np.exp(log_gamma(arg)) * f * eval_D(k, sp.alpha1, sp.alpha2, d, x)


def eval_B_hahn(m, k, sp: SplitParams, d, t, x):
    """eval_B with the x part in continuous Hahn form (the t part keeps its
    2F1 at argument 2)."""
    k = validate_multi_index(k)
    n = tail_sum(k, 1)
    if n > m:
        raise DomainError("requires |k| <= m")
    arg = sp.zeta1 + 0.5 * n - np.asarray(t)
    f = hyp2f1_at_2(-(m - n), arg, n + sp.abs_zeta)
    return np.exp(log_gamma(arg)) * f * eval_D_hahn(k, sp.alpha1, sp.alpha2, d, x)
