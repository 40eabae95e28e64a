"""Complex-parameter special functions.

Pochhammer symbols, the terminating Gauss hypergeometric sum, and Jacobi
polynomials evaluated two independent ways (hypergeometric representation
and three-term recurrence). Only the terminating branch of 2F1 is ever
needed here, so it is summed directly; no analytic continuation exists in
this module.

Scalar calls accumulate in extended precision (np.clongdouble) and return
ordinary complex. Array arguments are evaluated vectorized in complex128,
which is plenty for wave-function sampling; the 1e-10 cross-oracle
comparisons all go through the scalar path.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRecurrence, PoleInC

# default comparison tolerances; see module tests
REL_TOL = 1e-10
ABS_FLOOR = 1e-13

# pole / degeneracy guard on denominators and leading coefficients
_COEFF_FLOOR = 1e-13


@dataclass(frozen=True)
class HypergeometricReduction:
    """Record of a reduction to the Gauss equation.

    Stores the hypergeometric parameters (a, b, c) and a description of
    the coordinate substitution that produced the argument z. Terminating
    solutions have b at a non-positive integer within round-off.
    """

    a: complex
    b: complex
    c: complex
    z_map: str

    def is_terminating(self, tol: float = 1e-9) -> bool:
        b = complex(self.b)
        return abs(b.imag) <= tol and abs(b.real - round(b.real)) <= tol and round(b.real) <= 0


def _is_scalar(*vals) -> bool:
    return all(np.ndim(v) == 0 for v in vals)


def pochhammer(a, k: int):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1 exactly."""
    if k < 0:
        raise ValueError("k must be a non-negative integer")
    if _is_scalar(a):
        acc = np.clongdouble(1)
        av = np.clongdouble(a)
        for j in range(k):
            acc = acc * (av + j)
        return complex(acc)
    a = np.asarray(a, dtype=complex)
    acc = np.ones_like(a)
    for j in range(k):
        acc = acc * (a + j)
    return acc


def gauss2f1_terminating(N: int, b, c, z):
    """Terminating Gauss series sum_{k=0}^{N} (-N)_k (b)_k / ((c)_k k!) z^k.

    Exact termination after N+1 terms. Raises PoleInC when some (c)_k
    vanishes before the series terminates, i.e. c+k = 0 for 0 <= k <= N-1.
    """
    if N < 0:
        raise ValueError("N must be a non-negative integer")
    cc = complex(c) if _is_scalar(c) else None
    if cc is not None:
        for k in range(N):
            if abs(cc + k) < _COEFF_FLOOR:
                raise PoleInC(f"(c)_k vanishes at c={cc}, k={k + 1} before termination at N={N}")
    if _is_scalar(b, c, z):
        bv, cv, zv = np.clongdouble(b), np.clongdouble(c), np.clongdouble(z)
        total = np.clongdouble(1)
        term = np.clongdouble(1)
        for k in range(N):
            term = term * ((-N + k) * (bv + k)) / ((cv + k) * (k + 1)) * zv
            total = total + term
        return complex(total)
    b = np.asarray(b, dtype=complex)
    z = np.asarray(z, dtype=complex)
    c = np.asarray(c, dtype=complex)
    if cc is None:
        for k in range(N):
            if np.min(np.abs(c + k)) < _COEFF_FLOOR:
                raise PoleInC(f"(c)_k vanishes at k={k + 1} before termination at N={N}")
    total = np.ones(np.broadcast(b, c, z).shape, dtype=complex)
    term = total.copy()
    for k in range(N):
        term = term * ((-N + k) * (b + k)) / ((c + k) * (k + 1)) * z
        total = total + term
    return total


def jacobi_p_hyp(n: int, a, b, y):
    """Jacobi polynomial P_n^{(a,b)}(y) via the hypergeometric representation.

    P_n^{(a,b)}(y) = ((a+1)_n / n!) 2F1(-n, n+a+b+1; a+1; (1-y)/2),
    valid for fully complex parameters and argument. PoleInC propagates
    from the kernel when a+1 is a non-positive integer hit by the series.
    """
    if n < 0:
        raise ValueError("n must be a non-negative integer")
    if _is_scalar(a, b, y):
        av, bv = np.clongdouble(a), np.clongdouble(b)
        pref = np.clongdouble(1)
        for j in range(n):
            pref = pref * (av + 1 + j) / (j + 1)
        z = (1 - np.clongdouble(y)) / 2
        f = gauss2f1_terminating(n, complex(n + av + bv + 1), complex(av + 1), complex(z))
        return complex(pref * np.clongdouble(f))
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    y = np.asarray(y, dtype=complex)
    pref = np.ones(np.broadcast(a, b, y).shape, dtype=complex)
    for j in range(n):
        pref = pref * (a + 1 + j) / (j + 1)
    return pref * gauss2f1_terminating(n, n + a + b + 1, a + 1, (1 - y) / 2)


def jacobi_p_rec(n: int, a, b, y):
    """Jacobi polynomial via the standard three-term recurrence in degree.

    Independent of jacobi_p_hyp (no shared kernel): seeds P_0 = 1 and the
    degree-1 closed form, then advances
        c1 P_m = c2 P_{m-1} - c3 P_{m-2},
        c1 = 2m (m+a+b) (2m+a+b-2),
        c2 = (2m+a+b-1) [ (2m+a+b)(2m+a+b-2) y + a^2 - b^2 ],
        c3 = 2 (m+a-1) (m+b-1) (2m+a+b).
    Raises DegenerateRecurrence when c1 vanishes (complex parameters can
    zero it); nothing is skipped silently.
    """
    if n < 0:
        raise ValueError("n must be a non-negative integer")
    scalar = _is_scalar(a, b, y)
    dt = np.clongdouble if scalar else complex
    av, bv = dt(a), dt(b)
    yv = dt(y) if scalar else np.asarray(y, dtype=complex)
    one = dt(1) if scalar else np.ones_like(yv)
    if n == 0:
        return complex(one) if scalar else one
    p_prev = one
    p_cur = ((av - bv) + (av + bv + 2) * yv) / 2
    for m in range(2, n + 1):
        s = 2 * m + av + bv
        c1 = 2 * m * (m + av + bv) * (s - 2)
        if abs(complex(c1)) < _COEFF_FLOOR:
            raise DegenerateRecurrence(
                f"leading coefficient vanishes at degree {m} for a={complex(av)}, b={complex(bv)}"
            )
        c2 = (s - 1) * (s * (s - 2) * yv + av * av - bv * bv)
        c3 = 2 * (m + av - 1) * (m + bv - 1) * s
        p_prev, p_cur = p_cur, (c2 * p_cur - c3 * p_prev) / c1
    return complex(p_cur) if scalar else p_cur
