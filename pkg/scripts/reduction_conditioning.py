"""Conditioning of the operator-reduction match for Askey-Wilson data.

The monic reduction of the structured operator W reproduces the Askey-Wilson
recurrence coefficients analytically, but in floating point the agreement
degrades with the degree n: the diagonal of W multiplies a near-cancelled
b_n = 1 - D_n - C_n by a z_n ~ q**-n factor, so the raw relative deviation
grows roughly like q**(-2n) * eps.  This script measures both the raw
deviation and the deviation normalized by the per-coefficient cancellation
scale, draw by draw, and prints the growth profile.

Usage:
    python scripts/reduction_conditioning.py --draws 200 --count 21 --seed 7
"""

import argparse
import random

from qosc import (
    AWParams,
    NotMonicReducibleError,
    QoscError,
    ResonanceError,
    askey_wilson,
    aw_parameter_map,
    build_W,
    to_monic,
)


def jacobi_pieces(sp, count):
    """Magnitude data for the cancellation scale: |D_n|, |C_n|, z_n."""
    q, c1, c2, c3 = sp.q, sp.c1, sp.c2, sp.c3
    c12 = c1 * c2
    Ds, Cs, zs = [], [], []
    for n in range(count):
        Ds.append(
            (1 - c1 * q ** (n + 1)) * (1 - c12 * q ** (n + 1)) * (1 - c3 * q ** (n + 1))
            / ((1 - c12 * q ** (2 * n + 1)) * (1 - c12 * q ** (2 * n + 2)))
        )
        Cs.append(
            0.0
            if n == 0
            else -c1 * c3 * q ** (n + 1) * (1 - q**n) * (1 - c2 * q**n)
            * (1 - c12 / c3 * q**n)
            / ((1 - c12 * q ** (2 * n + 1)) * (1 - c12 * q ** (2 * n)))
        )
        zs.append(c12 * q ** (n + 1) + q ** (-n))
    return Ds, Cs, zs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--draws", type=int, default=200)
    ap.add_argument("--count", type=int, default=21)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--q-min", type=float, default=0.3)
    ap.add_argument("--q-max", type=float, default=0.95)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    raw_worst = [0.0] * args.count
    scaled_worst = [0.0] * args.count
    done = 0
    while done < args.draws:
        q = rng.uniform(args.q_min, args.q_max)
        a = [rng.choice([-1, 1]) * rng.uniform(1e-3, 0.9) for _ in range(4)]
        try:
            p = AWParams(q, *a)
            sp, w = aw_parameter_map(p)
            monic, _ = to_monic(build_W(sp, w, args.count))
            direct = askey_wilson(p, args.count)
        except (ResonanceError, NotMonicReducibleError, QoscError):
            continue
        Ds, Cs, zs = jacobi_pieces(sp, args.count)
        t0, t1, t2, t3 = abs(w.tau0), abs(w.tau1), abs(w.tau2), abs(w.tau3)
        for n in range(args.count):
            err = abs(monic.b[n] - direct.b[n])
            raw_worst[n] = max(raw_worst[n], err / max(1.0, abs(direct.b[n])))
            cond = ((t1 + t2) * abs(zs[n]) + t3) * (1 + abs(Ds[n]) + abs(Cs[n])) + t0
            scaled_worst[n] = max(
                scaled_worst[n], err / max(1.0, abs(direct.b[n]), cond)
            )
        done += 1

    print(f"# {done} accepted draws, q in ({args.q_min}, {args.q_max}), count {args.count}")
    print(f"{'n':>3}  {'raw rel dev':>12}  {'scaled dev':>12}")
    for n in range(args.count):
        print(f"{n:>3}  {raw_worst[n]:>12.3e}  {scaled_worst[n]:>12.3e}")
    print(f"# worst raw    {max(raw_worst):.3e}")
    print(f"# worst scaled {max(scaled_worst):.3e}")


if __name__ == "__main__":
    main()
