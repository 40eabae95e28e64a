"""Closed-form bound-state tables for the three potential families.

Every energy printed here comes from an algebraic formula, not from a
matrix. The finite-difference cross-check lives in verify_all.py; this
script is about what the formulas say and when a family is empty.
"""

import numpy as np

from ptspectra import (
    EckartParams,
    HulthenParams,
    PoschlTellerParams,
    eckart_spacing,
    eckart_spectrum,
    hulthen_spectrum,
    rpt_spectrum,
)


def show_eckart():
    p = EckartParams(A=3.0, beta=1.0, epsilon=0.5)
    print(f"Eckart A={p.A} beta={p.beta}")
    for level in eckart_spectrum(p):
        u, v = level.aux["u"], level.aux["v"]
        print(f"  N={level.qn.N}  E={level.energy:+.6f}  u={u:.4f}  v={v:.4f}")
    print(f"  gap E_1 - E_0 = {eckart_spacing(p, 1):.6f}  (always > 1)")
    print()


def show_rpt():
    p = PoschlTellerParams(alpha=3.5, beta=1.5, epsilon=0.3)
    print(f"Poschl-Teller alpha={p.alpha} beta={p.beta}")
    for level in rpt_spectrum(p):
        print(f"  {level.qn.label()}  E={level.energy:+.6f}  kappa={level.aux['kappa']:.4f}")
    print("  (+,-) family empty here: beta > alpha + 1 fails")
    print()


def show_hulthen():
    p = HulthenParams(alpha=2.0, C=2.0)
    print(f"Hulthen alpha={p.alpha} C={p.C}  (A={p.A}, B={p.B})")
    for level in hulthen_spectrum(p):
        print(f"  {level.qn.label()}  E={level.energy:+.6f}  s={level.aux['s']:+.3f}  "
              f"tau*beta={level.aux['tau_beta']:+.3f}  kappa={level.aux['kappa']:.3f}")
    print()


def family_census(draws=2000, seed=7):
    """The three level families exist iff alpha+beta > 1, alpha > beta+1,
    beta > alpha+1. Count how often a random coupling pair activates each."""
    rng = np.random.default_rng(seed)
    counts = {"(-,-)": 0, "(-,+)": 0, "(+,-)": 0}
    for _ in range(draws):
        a, b = rng.uniform(0, 6, size=2)
        counts["(-,-)"] += a + b > 1
        counts["(-,+)"] += a > b + 1
        counts["(+,-)"] += b > a + 1
    print(f"family activation over {draws} random (alpha, beta) in (0,6)^2:")
    for k, n in counts.items():
        print(f"  {k}: {n / draws:.1%}")


if __name__ == "__main__":
    show_eckart()
    show_rpt()
    show_hulthen()
    family_census()
