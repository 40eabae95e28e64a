"""Closed-form spectra and analytic eigenfunctions of the three families.

Enumeration is purely algebraic: each operation walks the admissible
quantum numbers, applies the closed-form energy, and stores the derived
auxiliary parameters needed by the wave functions. Range boundaries are
strict; a level sitting within 1e-12 of its admissibility boundary is
excluded and reported through BoundaryLevelWarning (the normalizability
argument degenerates exactly there).

Energies are kept as floats. If a closed form develops an imaginary part
above 1e-12 under nominally real couplings, that is a bug in this module,
not in the caller's input, and InternalConsistencyError says so.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .contour import arch_liouville_map, power_along_path, transport_wavefunction
from .errors import (
    BoundaryLevelWarning,
    DegenerateSWarning,
    InternalConsistencyError,
    InvalidParameters,
    OutOfRange,
    SingularPoint,
)
from .potentials import EckartParams, HulthenParams, PoschlTellerParams
from .special import HypergeometricReduction, jacobi_p_hyp

BOUNDARY_TOL = 1e-12

_SIGN_NAMES = {1: "+", -1: "-"}


@dataclass(frozen=True)
class QuantumNumbers:
    family: str
    N: int
    sigma: int = 1
    tau: int = 1

    def __post_init__(self):
        if self.N < 0:
            raise InvalidParameters("N must be a non-negative integer")
        if self.sigma not in (-1, 1) or self.tau not in (-1, 1):
            raise InvalidParameters("sigma and tau must be +1 or -1")

    def label(self) -> str:
        return f"({_SIGN_NAMES[self.sigma]},{_SIGN_NAMES[self.tau]},{self.N})"


@dataclass(frozen=True)
class Level:
    qn: QuantumNumbers
    energy: float
    aux: dict = field(default_factory=dict)


def eckart_spectrum(p: EckartParams) -> list:
    """All bound levels E_N = -D^2 + beta^2/D^2, D = A-N-1 > 0 strictly.

    aux carries u = D/2 - i beta/(2D), v = D/2 + i beta/(2D) (so u+v = D)
    and the record of the reduction to the terminating Gauss series.
    """
    levels = []
    N = 0
    while True:
        D = p.A - N - 1
        if D <= BOUNDARY_TOL:
            if 0.0 < D:
                warnings.warn(
                    f"Eckart N={N} sits on the u+v=0 boundary (D={D:.2e}); excluded",
                    BoundaryLevelWarning,
                )
            break
        E = -(D * D) + p.beta ** 2 / (D * D)
        u = D / 2 - 1j * p.beta / (2 * D)
        v = D / 2 + 1j * p.beta / (2 * D)
        check = -2 * (u * u + v * v)
        if abs(check - E) > 1e-12 * max(1.0, abs(E)):
            raise InternalConsistencyError("aux (u,v) disagree with the closed-form energy")
        aux = {
            "D": D,
            "u": u,
            "v": v,
            "a": 2 * p.A - N - 1,
            "reduction": HypergeometricReduction(
                a=2 * p.A - N - 1, b=-N, c=1 + 2 * u, z_map="z = (1 - coth r)/2"
            ),
        }
        levels.append(Level(QuantumNumbers("eckart", N), E, aux))
        N += 1
    return levels


def eckart_wavefunction(p: EckartParams, level: Level, points, convention: str = "reduction"):
    """psi(r) = (y-1)^u (y+1)^v P_N^{(par)}(y) with y = coth r.

    `convention` selects the Jacobi parameter pair: "reduction" uses
    (2u, 2v) as forced by matching the terminating Gauss series (c = 1+2u,
    a+b = 2u+2v+1); "printed" uses (u/2, v/2). The discrete Schrodinger
    residual arbitrates between them; "reduction" is the one that
    converges. Complex powers are branch-continuous along the points.
    """
    if convention not in ("reduction", "printed"):
        raise InvalidParameters("convention must be 'reduction' or 'printed'")
    u, v = level.aux["u"], level.aux["v"]
    r = np.asarray(points, dtype=complex)
    sh = np.sinh(r)
    if np.min(np.abs(sh)) < 1e-12:
        raise SingularPoint("sinh r vanishes on the requested points")
    # y -+ 1 computed as exp(-+r)/sinh r: identical values, no cancellation
    # in coth r -+ 1 at large |Re r|
    ym = np.exp(-r) / sh
    yp = np.exp(r) / sh
    y = np.cosh(r) / sh
    pa, pb = (2 * u, 2 * v) if convention == "reduction" else (u / 2, v / 2)
    poly = jacobi_p_hyp(level.qn.N, pa, pb, y)
    return power_along_path(ym, u) * power_along_path(yp, v) * poly


def rpt_spectrum(p: PoschlTellerParams) -> list:
    """Levels E = -(2N+1+sigma*alpha+tau*beta)^2 over all four (sigma,tau)
    families, N admissible while 2N+1 < -sigma*alpha-tau*beta strictly."""
    levels = []
    for sigma, tau in ((-1, -1), (-1, 1), (1, -1), (1, 1)):
        limit = -sigma * p.alpha - tau * p.beta
        N = 0
        while True:
            margin = limit - (2 * N + 1)
            if margin <= BOUNDARY_TOL:
                if margin > 0.0:
                    warnings.warn(
                        f"RPT ({_SIGN_NAMES[sigma]},{_SIGN_NAMES[tau]}) N={N} sits on the "
                        f"2N+1 = -sigma*alpha-tau*beta boundary; excluded",
                        BoundaryLevelWarning,
                    )
                break
            kappa = margin
            E = -((2 * N + 1 + sigma * p.alpha + tau * p.beta) ** 2)
            aux = {"kappa": kappa, "two_mu": tau * p.beta + 0.5, "two_nu": sigma * p.alpha + 0.5}
            levels.append(Level(QuantumNumbers("rpt", N, sigma, tau), E, aux))
            N += 1
    return levels


def rpt_wavefunction(p: PoschlTellerParams, level: Level, points):
    """psi = sinh^{tau*beta+1/2}(r) cosh^{sigma*alpha+1/2}(r)
    P_N^{(tau*beta, sigma*alpha)}(cosh 2r), branch-continuous."""
    qn = level.qn
    tb = qn.tau * p.beta
    sa = qn.sigma * p.alpha
    r = np.asarray(points, dtype=complex)
    sh, ch = np.sinh(r), np.cosh(r)
    if min(np.min(np.abs(sh)), np.min(np.abs(ch))) < 1e-12:
        raise SingularPoint("sinh r or cosh r vanishes on the requested points")
    poly = jacobi_p_hyp(qn.N, tb, sa, np.cosh(2 * r))
    return power_along_path(sh, tb + 0.5) * power_along_path(ch, sa + 0.5) * poly


def rpt_real_energy_condition(alpha, beta, sigma: int, tau: int, N: int):
    """E = -(2N+1+sigma*alpha+tau*beta)^2 with complex couplings.

    Returns (True, E) when Im E vanishes within 1e-12, which happens
    exactly when Im(sigma*alpha + tau*beta) = 0.
    """
    E = -((2 * N + 1 + sigma * complex(alpha) + tau * complex(beta)) ** 2)
    return (abs(E.imag) <= 1e-12, E)


def hulthen_spectrum(p: HulthenParams, max_levels: int = 10000) -> list:
    """Levels of the transformed family, enumerated by (sigma, n).

    s = sigma*alpha + 2n + 1; tau*beta = (C - s^2)/(2s);
    kappa = -(s^2 + C)/(2s); a level is accepted iff kappa > 0 and then
    E = C + (s - C/s)^2/4 = kappa^2 exactly. s = 0 slots and tau*beta = 0
    slots are skipped with DegenerateSWarning (beta > 0 convention).
    """
    levels = []
    for sigma in (-1, 1):
        n = 0
        while True:
            if n > max_levels:
                raise InternalConsistencyError("hulthen enumeration failed to terminate")
            s = sigma * p.alpha + 2 * n + 1
            if abs(s) <= BOUNDARY_TOL:
                warnings.warn(f"hulthen (sigma={sigma}, n={n}): s = 0, slot skipped", DegenerateSWarning)
                n += 1
                continue
            if s > 0 and s * s + p.C > -BOUNDARY_TOL:
                # s only grows with n, so kappa stays negative from here on
                break
            kappa = -(s * s + p.C) / (2 * s)
            if kappa > BOUNDARY_TOL:
                tau_beta = (p.C - s * s) / (2 * s)
                if abs(tau_beta) <= BOUNDARY_TOL:
                    warnings.warn(
                        f"hulthen (sigma={sigma}, n={n}): tau*beta = 0, level excluded",
                        DegenerateSWarning,
                    )
                else:
                    E = p.C + 0.25 * (s - p.C / s) ** 2
                    if abs(E - kappa * kappa) > 1e-12 * max(1.0, kappa * kappa):
                        raise InternalConsistencyError("E and kappa^2 closed forms disagree")
                    tau = 1 if tau_beta > 0 else -1
                    aux = {"s": s, "tau_beta": tau_beta, "kappa": kappa, "beta": abs(tau_beta)}
                    levels.append(Level(QuantumNumbers("hulthen", n, sigma, tau), E, aux))
            n += 1
    return levels


def hulthen_wavefunction(p: HulthenParams, level: Level, arch, x_samples):
    """Psi(xi(x)) = chi[r(xi)] / sqrt(r'(xi)) along the arch.

    chi is the parent eigenfunction rebuilt from the level's derived
    parameters (beta = |tau*beta|, tau = sign); the arch map supplies
    r(xi) = x - i*eps and the metric factor.
    """
    if "kappa" not in level.aux or level.qn.family != "hulthen":
        raise InvalidParameters("level must come from hulthen_spectrum")
    tb = level.aux["tau_beta"]
    sa = level.qn.sigma * p.alpha
    n = level.qn.N
    lmap = arch_liouville_map(level.aux["kappa"])

    def chi(r):
        sh, ch = np.sinh(r), np.cosh(r)
        poly = jacobi_p_hyp(n, tb, sa, np.cosh(2 * r))
        return power_along_path(sh, tb + 0.5) * power_along_path(ch, sa + 0.5) * poly

    xi = arch.point(np.asarray(x_samples, dtype=float))
    return transport_wavefunction(chi, lmap, xi)


def eckart_spacing(p: EckartParams, N: int) -> float:
    """Closed-form gap E_N - E_{N-1} = (2D+1)(1 + beta^2/(D^2 (D+1)^2)),
    D = A-N-1; both N and N-1 must be admissible. Always exceeds 1."""
    if N < 1:
        raise OutOfRange("spacing needs N >= 1")
    D = p.A - N - 1
    if D <= BOUNDARY_TOL:
        raise OutOfRange(f"level N={N} is not admissible for A={p.A}")
    return (2 * D + 1) * (1 + p.beta ** 2 / (D * D * (D + 1) * (D + 1)))
