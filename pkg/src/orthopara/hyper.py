"""Generalized hypergeometric series pFq, specialized to the terminating
2F1 / 3F2 / 1F1 instances used throughout (including argument z = 2 and
complex parameters).

Terminating series are summed with the running-ratio recurrence

    term_{m+1} = term_m * prod(a_i + m) / prod(b_j + m) * z / (m + 1),

which is exact up to rounding for the N+1 terms of a series whose
certificate parameter has been snapped to its integer value.
"""

from __future__ import annotations

import numpy as np

from .errors import DenominatorPoleError, NonTerminatingError

SNAP_TOL = 1e-9
TAIL_RTOL = 1e-15
MAX_TERMS = 10000


def snap_nonpositive_int(a, tol=SNAP_TOL):
    """Integer n <= 0 with |a - n| <= tol, or None.  Scalars only."""
    a = np.asarray(a)
    if a.ndim != 0:
        return None
    a = complex(a)
    n = round(a.real)
    if n <= 0 and abs(a - n) <= tol:
        return n
    return None


def _termination_degree(numerator, tol=SNAP_TOL):
    """(index, N): position of the snapped parameter and the term count bound."""
    best = None
    for i, a in enumerate(numerator):
        n = snap_nonpositive_int(a, tol)
        if n is not None and (best is None or -n < best[1]):
            best = (i, -n)
    return best


def _check_denominator(denominator, n_terms):
    # a denominator parameter -j poles the factor (b + m) at m = j, which the
    # sum touches only while m <= n_terms - 2; later poles are harmless
    for b in denominator:
        nb = snap_nonpositive_int(b)
        if nb is not None and -nb <= n_terms - 2:
            raise DenominatorPoleError(
                f"denominator parameter {b} hits a pole before termination"
            )


def _result_dtype(*vals):
    return np.result_type(np.float64, *(np.asarray(v) for v in vals))


def _canonical_order(params):
    scalars = [p for p in params if np.ndim(p) == 0]
    arrays = [p for p in params if np.ndim(p) != 0]
    scalars.sort(key=lambda p: (complex(p).real, complex(p).imag))
    return scalars + arrays


def hyp_terminating(numerator, denominator, z, snap_tol=SNAP_TOL):
    """Terminating pFq(numerator; denominator; z).

    At least one numerator parameter must be a scalar within ``snap_tol`` of a
    non-positive integer; it is snapped to that integer and the finite sum of
    N+1 terms is returned.  Parameters and z may be broadcastable arrays.
    """
    numerator = list(numerator)
    denominator = list(denominator)
    cert = _termination_degree(numerator, snap_tol)
    if cert is None:
        raise NonTerminatingError("no terminating numerator parameter found")
    idx, degree = cert
    numerator[idx] = float(-degree)
    _check_denominator(denominator, degree + 1)
    # canonical parameter order: scalar parameters sorted by (re, im), arrays
    # after in given order, so permuted parameter lists produce identical floats
    numerator = _canonical_order(numerator)
    denominator = _canonical_order(denominator)

    dtype = _result_dtype(z, *numerator, *denominator)
    shape = np.broadcast_shapes(
        np.shape(z), *(np.shape(p) for p in numerator + denominator)
    )
    term = np.ones(shape, dtype=dtype)
    total = term.copy()
    for m in range(degree):
        ratio = np.asarray(z, dtype=dtype) / (m + 1)
        for a in numerator:
            ratio = ratio * (a + m)
        for b in denominator:
            ratio = ratio / (b + m)
        term = term * ratio
        total = total + term
    if total.ndim == 0:
        return total[()]
    return total


def hyp_nonterminating(numerator, denominator, z, rel_tol=TAIL_RTOL, max_terms=MAX_TERMS):
    """Convergent non-terminating pFq by direct summation.

    Supported when p <= q (all z) or p == q+1 with |z| < 1.  Scalars only;
    this path exists for oracles, not for the closed forms.
    """
    p, q = len(numerator), len(denominator)
    z = complex(z)
    if not (p <= q or (p == q + 1 and abs(z) < 1) or z == 0):
        raise NonTerminatingError(
            f"{p}F{q} at |z| = {abs(z):g} has no termination certificate and diverges"
        )
    for b in denominator:
        if snap_nonpositive_int(b) is not None:
            raise DenominatorPoleError(f"denominator parameter {b} is a pole")
    term = 1.0 + 0.0j
    total = term
    for m in range(max_terms):
        ratio = z / (m + 1)
        for a in numerator:
            ratio *= a + m
        for b in denominator:
            ratio /= b + m
        term *= ratio
        total += term
        if abs(term) <= rel_tol * abs(total) and m > 2:
            return total
    raise NonTerminatingError(f"series did not converge within {max_terms} terms")


def hyp(numerator, denominator, z):
    """Terminating sum when a certificate exists, direct summation otherwise."""
    if _termination_degree(list(numerator)) is not None:
        return hyp_terminating(numerator, denominator, z)
    return hyp_nonterminating(numerator, denominator, z)


def hyp2f1_at_2(a, b, c):
    """2F1(a, b; c; 2): only meaningful terminating, so ``a`` must be a
    non-positive integer (within the snap tolerance)."""
    if snap_nonpositive_int(a) is None:
        raise NonTerminatingError("2F1 at z = 2 requires a non-positive integer first parameter")
    return hyp_terminating([a, b], [c], 2.0)
