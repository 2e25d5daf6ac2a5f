"""Resonance landscape of the general tridiagonal solution.

The general pair (A, B) has poles where gamma_n = xi0 q**-n - zeta0 q**n or
y_n = xi0 q**-n - zeta0 q**(n+1) vanishes; approaching such a line the band
entries blow up like 1/margin**2.  This script walks zeta0/xi0 toward a
resonance at fixed q and prints the normalized margin min_n |gamma_n|, |y_n|,
the operator norms, and the commutator residual.  The residual stays at
rounding level relative to the operator scale all the way in: the construction
loses no accuracy beyond what the exploding entries themselves impose.

Usage:
    python scripts/resonance_margin.py --q 0.5 --size 12 --steps 25
"""

import argparse

from qosc import (
    GeneralParams,
    QoscError,
    build_general,
    inf_norm,
    q_commutator_residual,
)


def margin(q, xi0, zeta0, size):
    m = float("inf")
    for n in range(size + 1):
        scale = abs(xi0) * q**-n + abs(zeta0) * q**n
        m = min(m, abs(xi0 * q**-n - zeta0 * q**n) / scale)
        m = min(m, abs(xi0 * q**-n - zeta0 * q ** (n + 1)) / scale)
    return m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=float, default=0.5)
    ap.add_argument("--size", type=int, default=12)
    ap.add_argument("--steps", type=int, default=25)
    ap.add_argument("--s1", type=float, default=0.4)
    ap.add_argument("--s2", type=float, default=-0.3)
    args = ap.parse_args()

    q, size = args.q, args.size
    xi0 = 1.0
    # gamma_2 = 0 at zeta0 = q**-4; approach it from 10% away down to 1e-6.
    pole = q**-4
    print(f"# q={q}, size={size}, xi0={xi0}, pole at zeta0={pole:.6g} (gamma_2 = 0)")
    print(f"{'zeta0':>14}  {'min margin':>11}  {'norm(A)norm(B)':>14}  {'residual/scale':>14}")
    for k in range(args.steps):
        offset = 0.1 * (10 ** (-5 * k / (args.steps - 1)))
        zeta0 = pole * (1.0 - offset)
        m = margin(q, xi0, zeta0, size)
        try:
            A, B, _ = build_general(GeneralParams(q, xi0, zeta0, args.s1, args.s2), size)
        except QoscError as exc:
            print(f"{zeta0:>14.8g}  {m:>11.3e}  raised {type(exc).__name__}")
            continue
        rep = q_commutator_residual(A, B, q)
        scale = max(1.0, inf_norm(A) * inf_norm(B))
        print(f"{zeta0:>14.8g}  {m:>11.3e}  {scale:>14.3e}  {rep.max_abs / scale:>14.3e}")


if __name__ == "__main__":
    main()
