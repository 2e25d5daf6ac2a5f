"""Tridiagonal representations of the q-oscillator relation A@B - q*B@A = I.

The two-parameter family of geometric bands xi_n = xi0 * q**-n,
zeta_n = zeta0 * q**n, together with the constants (s1, s2), produces the most
general irreducible tridiagonal pair with A monic.  ``build_general``
constructs the truncation, ``classify`` inverts it from raw matrices,
``canonical_pair`` gives the diagonal/bidiagonal normal form, and
``decompose`` splits a pair into irreducible blocks along geometric chains of
the spectrum of A.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidNormalizationError,
    InvalidParameterError,
    NotAQOscillatorError,
    NotDecomposableError,
    ReducibleRepresentationError,
    ResonanceError,
    TooSmallError,
)
from .numerics import TolerancePolicy
from .opmatrix import (
    BandMatrix,
    ResidualReport,
    band_tridiagonal,
    guard_size,
    eigenvalues,
    q_commutator_residual,
)

# Relative floor below which a structural denominator counts as resonant and
# a u_n counts as a vanished off-diagonal (reducible truncation).
_DEGENERACY_RTOL = 1e-10


def _check_q(q) -> None:
    if q == 0 or q == 1 or q == -1:
        raise InvalidParameterError("q must avoid 0, 1, -1")


@dataclass(frozen=True)
class GeneralParams:
    """Parameters (q, xi0, zeta0, s1, s2) of the general tridiagonal pair."""

    q: object
    xi0: object
    zeta0: object
    s1: object
    s2: object

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.xi0 == 0 or self.zeta0 == 0:
            raise InvalidParameterError("xi0 and zeta0 must be nonzero")


@dataclass(frozen=True)
class StructuredParams:
    """Parameters (q, c1, c2, c3) of the big q-Jacobi-type operators."""

    q: object
    c1: object
    c2: object
    c3: object

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.c1 == 0 or self.c3 == 0:
            raise InvalidParameterError("c1 and c3 must be nonzero")


@dataclass(frozen=True)
class GeneralSolutionTrace:
    """All intermediate sequences of a build_general run.

    Index ranges: xi, zeta, y, K, b, eta, u cover n = 0..size-1 (with u[0] = 0
    by convention); z covers n = 0..size-1; gamma covers n = 0..size since b_n
    needs gamma_{n+1}.
    """

    xi: tuple
    zeta: tuple
    z: tuple
    gamma: tuple
    y: tuple
    K: tuple
    s0: object
    b: tuple
    eta: tuple
    u: tuple


def build_general(p: GeneralParams, size: int):
    """Truncated pair (A, B, trace) of the general solution.

    A is monic tridiagonal (unit subdiagonal, diagonal b_n, superdiagonal u_n);
    B has subdiagonal xi_n, diagonal eta_n, superdiagonal zeta_{n+1} * u_{n+1}.
    Raises ResonanceError when a gamma_n or y_n denominator vanishes in range
    and ReducibleRepresentationError when some u_n vanishes (n = 1..size-1).
    """
    if size < 3:
        raise TooSmallError("size must be >= 3")
    q, xi0, zeta0, s1, s2 = p.q, p.xi0, p.zeta0, p.s1, p.s2
    guard_size(q, size)
    aq = abs(float(q))
    axi, azeta = abs(float(xi0)), abs(float(zeta0))

    qp = {k: q**k for k in range(-size, size + 2)}

    gamma = []
    for n in range(size + 1):
        g = xi0 * qp[-n] - zeta0 * qp[n]
        if abs(g) <= _DEGENERACY_RTOL * (axi * aq**-n + azeta * aq**n):
            raise ResonanceError(f"gamma_{n} vanishes")
        gamma.append(g)
    y = []
    for n in range(size):
        v = xi0 * qp[-n] - zeta0 * qp[n + 1]
        if abs(v) <= _DEGENERACY_RTOL * (axi * aq**-n + azeta * aq ** (n + 1)):
            raise ResonanceError(f"y_{n} vanishes")
        y.append(v)

    z = [xi0 * qp[-n] + zeta0 * qp[n + 1] for n in range(size)]
    xi = [xi0 * qp[-n] for n in range(size)]
    zeta = [zeta0 * qp[n] for n in range(size)]

    b, eta = [], []
    for n in range(size):
        den = gamma[n] * gamma[n + 1]
        b.append((s1 * z[n] + (q + 1) * s2) / den)
        eta.append((s1 * xi0 * zeta0 * (q + 1) + s2 * z[n]) / den)

    K = [
        qp[2 - n] * (s2 + s1 * zeta0 * qp[n]) * (s2 * qp[n] + s1 * xi0) / gamma[n] ** 2
        for n in range(size)
    ]
    s0 = q * (xi0 + zeta0) / (q - 1) - K[0]

    u = [0]
    for n in range(1, size):
        core = (xi0 * qp[-n] + zeta0 * qp[n]) / (1 / q - 1) + K[n] + s0
        un = core / (y[n] * y[n - 1])
        floor = (
            (abs(float(xi0 * qp[-n])) + abs(float(zeta0 * qp[n]))) / abs(float(1 / q - 1))
            + abs(float(K[n]))
            + abs(float(s0))
        ) / abs(float(y[n] * y[n - 1]))
        if abs(un) <= _DEGENERACY_RTOL * floor:
            raise ReducibleRepresentationError(f"u_{n} vanishes: truncation is reducible")
        u.append(un)

    A = band_tridiagonal((1,) * (size - 1), b, u[1:])
    B = band_tridiagonal(xi[1:], eta, tuple(zeta[n] * u[n] for n in range(1, size)))
    trace = GeneralSolutionTrace(
        xi=tuple(xi),
        zeta=tuple(zeta),
        z=tuple(z),
        gamma=tuple(gamma),
        y=tuple(y),
        K=tuple(K),
        s0=s0,
        b=tuple(b),
        eta=tuple(eta),
        u=tuple(u),
    )
    return A, B, trace


def _read_tridiagonal_pair(A: BandMatrix, B: BandMatrix):
    """Extract (b, u, xi, eta, zeta) sequences; A must be monic tridiagonal."""
    if A.size != B.size:
        raise InvalidParameterError("size mismatch")
    size = A.size
    if size < 3:
        raise TooSmallError("band sequences need size >= 3")
    if A.lower > 1 or A.upper > 1 or B.lower > 1 or B.upper > 1:
        raise InvalidParameterError("pair must be tridiagonal")
    for n in range(size - 1):
        if abs(A.entry(n + 1, n) - 1) > 1e-12:
            raise InvalidNormalizationError("A must have unit subdiagonal")
    b = [A.entry(n, n) for n in range(size)]
    u = [0] + [A.entry(n - 1, n) for n in range(1, size)]
    for n in range(1, size):
        if u[n] == 0:
            raise ReducibleRepresentationError(f"u_{n} = 0: pair is not irreducible")
    xi = [None] + [B.entry(n, n - 1) for n in range(1, size)]
    eta = [B.entry(n, n) for n in range(size)]
    zeta = [None] + [B.entry(n - 1, n) / u[n] for n in range(1, size)]
    return b, u, xi, eta, zeta


@dataclass(frozen=True)
class XiResiduals:
    """The five band conditions equivalent to A@B - q*B@A = I.

    With size = N+1: xi1/xi5 cover n = 2..N, xi2/xi4 cover n = 1..N and xi3
    covers n = 0..N-1 (the n = 0 term uses u_0 = 0).
    """

    xi1: tuple
    xi2: tuple
    xi3: tuple
    xi4: tuple
    xi5: tuple

    def max_abs(self) -> float:
        vals = [abs(float(v)) for seq in (self.xi1, self.xi2, self.xi3, self.xi4, self.xi5) for v in seq]
        return max(vals) if vals else 0.0


def xi_residuals(A: BandMatrix, B: BandMatrix, q) -> XiResiduals:
    """Evaluate the five structural conditions on a monic tridiagonal pair."""
    _check_q(q)
    b, u, xi, eta, zeta = _read_tridiagonal_pair(A, B)
    N = A.size - 1
    xi1 = tuple(xi[n - 1] - q * xi[n] for n in range(2, N + 1))
    xi5 = tuple(zeta[n] - q * zeta[n - 1] for n in range(2, N + 1))
    xi2 = tuple(xi[n] * (b[n] - q * b[n - 1]) + eta[n - 1] - q * eta[n] for n in range(1, N + 1))
    xi4 = tuple(zeta[n] * (b[n - 1] - q * b[n]) + eta[n] - q * eta[n - 1] for n in range(1, N + 1))
    xi3 = []
    for n in range(0, N):
        zu_n = zeta[n] * u[n] if n >= 1 else 0
        xu_n = xi[n] * u[n] if n >= 1 else 0
        xi3.append(
            zu_n
            - q * zeta[n + 1] * u[n + 1]
            + xi[n + 1] * u[n + 1]
            - q * xu_n
            + (1 - q) * b[n] * eta[n]
            - 1
        )
    return XiResiduals(xi1, xi2, tuple(xi3), xi4, xi5)


def classify(A: BandMatrix, B: BandMatrix, q, pol: TolerancePolicy = TolerancePolicy()):
    """Recover GeneralParams from a raw pair and report the refit residual.

    Validates the q-commutator and the geometric band laws first
    (NotAQOscillatorError on violation), then reads (xi0, zeta0) off the first
    band entries, inverts (b_0, eta_0) for (s1, s2), rebuilds, and compares
    every stored band entry.  The report's max_abs is the worst deviation
    normalized by max(1, |reference entry|).
    """
    comm = q_commutator_residual(A, B, q, None, pol)
    if not comm.passed:
        raise NotAQOscillatorError(
            f"q-commutator residual {comm.max_abs:.3e} exceeds {comm.tolerance:.3e}"
        )
    b, u, xi, eta, zeta = _read_tridiagonal_pair(A, B)
    size = A.size
    if xi[1] == 0 or zeta[1] == 0:
        raise NotAQOscillatorError("first band entries xi_1, zeta_1 must be nonzero")
    xi0 = q * xi[1]
    zeta0 = zeta[1] / q
    for n in range(1, size):
        want_xi = xi0 * q**-n
        want_zeta = zeta0 * q**n
        if abs(float(xi[n] - want_xi)) > pol.effective(abs(float(want_xi))):
            raise NotAQOscillatorError(f"xi_{n} violates the geometric law")
        if abs(float(zeta[n] - want_zeta)) > pol.effective(abs(float(want_zeta))):
            raise NotAQOscillatorError(f"zeta_{n} violates the geometric law")
    z0 = xi0 + zeta0 * q
    s1 = (z0 * b[0] - (q + 1) * eta[0]) / q
    s2 = (z0 * eta[0] - (q + 1) * xi0 * zeta0 * b[0]) / q
    params = GeneralParams(q, xi0, zeta0, s1, s2)
    A2, B2, _ = build_general(params, size)
    worst, loc = 0.0, None
    for ref, got in ((A, A2), (B, B2)):
        for k in sorted(set(ref.bands) | set(got.bands)):
            width = size - abs(k)
            rb = ref.bands.get(k, (0,) * width)
            gb = got.bands.get(k, (0,) * width)
            for t in range(width):
                dev = abs(float(rb[t] - gb[t])) / max(1.0, abs(float(rb[t])))
                if dev > worst:
                    worst = dev
                    i = t + max(0, -k)
                    loc = (i, i + k)
    tol = pol.effective(1.0)
    report = ResidualReport(worst, loc, (0, size - 1), 1.0, tol, worst <= tol)
    return params, report


def canonical_pair(a, q, size: int):
    """Diagonal/bidiagonal normal form: A = diag(a * q**-n), B upper bidiagonal.

    B has diagonal a' * q**n with a' = 1/(a*(1-q)) and unit superdiagonal; the
    commutator identity holds entrywise on every row of the truncation, last
    row included.  No size guard: entries are exact powers and the identity is
    float-exact to a few ulp regardless of spread.
    """
    if q == 0 or q == 1:
        raise InvalidParameterError("q must avoid 0 and 1")
    if a == 0:
        raise InvalidParameterError("a must be nonzero")
    if size < 1:
        raise InvalidParameterError("size must be >= 1")
    adiag = [a]
    for _ in range(size - 1):
        adiag.append(adiag[-1] / q)
    ap = 1 / (a * (1 - q))
    bdiag = [ap]
    for _ in range(size - 1):
        bdiag.append(bdiag[-1] * q)
    A = BandMatrix(size, {0: tuple(adiag)})
    bands = {0: tuple(bdiag)}
    if size > 1:
        bands[1] = (1,) * (size - 1)
    B = BandMatrix(size, bands)
    return A, B


# Relative tolerance for matching successive points of a geometric chain.
# Chain gaps are a full factor of 1/q apart while eigenvalues are accurate to
# ~1e-9 relative, so a fixed 1e-6 window separates the two regimes safely.
_CHAIN_RTOL = 1e-6


def _geometric_chains(values: list, q) -> list:
    """Partition values into maximal chains v, v/q, v/q^2, ... (|q| < 1 or > 1)."""
    order = sorted(range(len(values)), key=lambda i: abs(values[i]))
    used = [False] * len(values)
    chains = []
    for start in order:
        if used[start]:
            continue
        chain = [values[start]]
        used[start] = True
        while True:
            target = chain[-1] / q
            best, best_err = None, None
            for j in order:
                if used[j]:
                    continue
                err = abs(values[j] - target)
                if err <= _CHAIN_RTOL * max(abs(target), 1e-300) and (best is None or err < best_err):
                    best, best_err = j, err
            if best is None:
                break
            chain.append(values[best])
            used[best] = True
        chains.append(chain)
    return chains


def decompose(A: BandMatrix, B: BandMatrix, q, pol: TolerancePolicy = TolerancePolicy()):
    """Split a q-oscillator pair into irreducible blocks.

    Computes the spectrum of A, groups it into maximal geometric chains with
    ratio 1/q, certifies via eigenvectors of A that B is block preserving
    (inverse iteration + dense solve; off-block mass judged at the scale of
    the transformed B), and returns [(ascending block spectrum, block size)]
    ordered by smallest eigenvalue.  Raises NotDecomposableError when the
    off-block mass exceeds tolerance.
    """
    comm = q_commutator_residual(A, B, q, None, pol)
    if not comm.passed:
        raise NotAQOscillatorError(
            f"q-commutator residual {comm.max_abs:.3e} exceeds {comm.tolerance:.3e}"
        )
    ev = eigenvalues(A, pol)
    chains = _geometric_chains(ev, q)
    chains.sort(key=lambda c: min(c))

    ordered = [lam for chain in chains for lam in chain]
    Ad = np.array([[float(v) for v in row] for row in A.to_dense()])
    Bd = np.array([[float(v) for v in row] for row in B.to_dense()])
    size = A.size
    scale = max(1.0, float(np.abs(Ad).max()))
    V = np.zeros((size, size))
    for j, lam in enumerate(ordered):
        v = np.ones(size) / np.sqrt(size)
        for shift in (0.0, 1e-15 * scale, 1e-13 * scale, 1e-11 * scale):
            M = Ad - (lam + shift) * np.eye(size)
            try:
                for _ in range(3):
                    w = np.linalg.solve(M, v)
                    v = w / np.linalg.norm(w)
                break
            except np.linalg.LinAlgError:
                continue
        V[:, j] = v
    try:
        Bt = np.linalg.solve(V, Bd @ V)
    except np.linalg.LinAlgError as exc:
        raise NotDecomposableError(f"eigenvector matrix is singular: {exc}") from exc

    bounds = []
    pos = 0
    for chain in chains:
        bounds.append((pos, pos + len(chain)))
        pos += len(chain)
    off = 0.0
    for bi, (lo1, hi1) in enumerate(bounds):
        for bj, (lo2, hi2) in enumerate(bounds):
            if bi != bj:
                blockmax = float(np.abs(Bt[lo1:hi1, lo2:hi2]).max()) if hi1 > lo1 and hi2 > lo2 else 0.0
                off = max(off, blockmax)
    bscale = max(1.0, float(np.abs(Bt).max()))
    if off > pol.effective(bscale):
        raise NotDecomposableError(
            f"off-block mass {off:.3e} exceeds {pol.effective(bscale):.3e}"
        )
    return [(tuple(sorted(chain)), len(chain)) for chain in chains]
