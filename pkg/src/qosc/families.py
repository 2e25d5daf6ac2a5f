"""Monic orthogonal-polynomial families and their spectra.

Recurrences are stored monically: x P_n = P_{n+1} + b_n P_n + u_n P_{n-1},
so the Jacobi matrix has unit subdiagonal, diagonal b_n and superdiagonal u_n.
The finite families (q-Hahn, q-para-Krawtchouk) carry explicit eigenvalue
lattices which verify_spectrum certifies against the Jacobi matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidParameterError,
    ResonanceError,
    SpectrumMismatchError,
    UnsupportedFamilyError,
)
from .numerics import LaurentPoly, TolerancePolicy, laurent_add, laurent_mul, laurent_scale
from .opmatrix import (
    BandMatrix,
    ResidualReport,
    band_tridiagonal,
    char_poly_eval,
    eigenvalues,
    guard_size,
)
from .representation import StructuredParams, _check_q


@dataclass(frozen=True)
class MonicRecurrence:
    """Coefficients (b_n, u_n) of a monic three-term recurrence."""

    b: tuple
    u: tuple
    family: str = "custom"
    params: object = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "u", tuple(self.u))
        if len(self.b) < 1:
            raise InvalidParameterError("recurrence needs at least b_0")
        if len(self.u) != len(self.b) - 1:
            raise InvalidParameterError("u must have one entry fewer than b")

    @property
    def size(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class AWParams:
    """Askey-Wilson parameters (q, a1, a2, a3, a4)."""

    q: object
    a1: object
    a2: object
    a3: object
    a4: object

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.a1 == 0:
            raise InvalidParameterError("a1 must be nonzero")

    @property
    def g(self):
        return self.a1 * self.a2 * self.a3 * self.a4


@dataclass(frozen=True)
class QHahnParams:
    c1: object
    c2: object
    q: object
    N: int


@dataclass(frozen=True)
class QParaKrawtchoukParams:
    c3: object
    q: object
    N: int


def _nonresonant(value, label: str):
    if abs(float(value)) <= 1e-10:
        raise ResonanceError(f"denominator {label} vanishes")
    return value


def big_q_jacobi(p: StructuredParams, count: int) -> MonicRecurrence:
    """First ``count`` monic big q-Jacobi coefficients for parameters (c1, c2, c3).

    b_n = 1 - D_n - C_n and u_n = D_{n-1} C_n with the standard forward /
    backward rates; every 1 - c1*c2*q^k denominator in range must stay away
    from zero (ResonanceError otherwise).
    """
    if count < 1:
        raise InvalidParameterError("count must be >= 1")
    q, c1, c2, c3 = p.q, p.c1, p.c2, p.c3
    guard_size(q, count)
    c12 = c1 * c2

    def D(n):
        den = _nonresonant(1 - c12 * q ** (2 * n + 1), f"1-c1*c2*q^{2*n+1}") * _nonresonant(
            1 - c12 * q ** (2 * n + 2), f"1-c1*c2*q^{2*n+2}"
        )
        return (1 - c1 * q ** (n + 1)) * (1 - c12 * q ** (n + 1)) * (1 - c3 * q ** (n + 1)) / den

    def C(n):
        if n == 0:
            return 0
        den = _nonresonant(1 - c12 * q ** (2 * n + 1), f"1-c1*c2*q^{2*n+1}") * _nonresonant(
            1 - c12 * q ** (2 * n), f"1-c1*c2*q^{2*n}"
        )
        return -c1 * c3 * q ** (n + 1) * (1 - q**n) * (1 - c2 * q**n) * (1 - c12 / c3 * q**n) / den

    Ds = [D(n) for n in range(count)]
    Cs = [C(n) for n in range(count)]
    b = tuple(1 - Ds[n] - Cs[n] for n in range(count))
    u = tuple(Ds[n - 1] * Cs[n] for n in range(1, count))
    return MonicRecurrence(b, u, family="big-q-jacobi", params=p)


def askey_wilson(p: AWParams, count: int) -> MonicRecurrence:
    """First ``count`` monic Askey-Wilson coefficients in the variable x = cos-type
    average (a1 + 1/a1 normalization): b_n = (a1 + 1/a1 - D_n - C_n)/2,
    u_n = D_{n-1} C_n / 4."""
    if count < 1:
        raise InvalidParameterError("count must be >= 1")
    q, a1, a2, a3, a4 = p.q, p.a1, p.a2, p.a3, p.a4
    guard_size(q, count)
    g = p.g

    def D(n):
        den = a1 * _nonresonant(1 - g * q ** (2 * n - 1), f"1-g*q^{2*n-1}") * _nonresonant(
            1 - g * q ** (2 * n), f"1-g*q^{2*n}"
        )
        return (
            (1 - a1 * a2 * q**n)
            * (1 - a1 * a3 * q**n)
            * (1 - a1 * a4 * q**n)
            * (1 - g * q ** (n - 1))
            / den
        )

    def C(n):
        if n == 0:
            return 0
        den = _nonresonant(1 - g * q ** (2 * n - 1), f"1-g*q^{2*n-1}") * _nonresonant(
            1 - g * q ** (2 * n - 2), f"1-g*q^{2*n-2}"
        )
        return (
            a1
            * (1 - q**n)
            * (1 - a2 * a3 * q ** (n - 1))
            * (1 - a2 * a4 * q ** (n - 1))
            * (1 - a3 * a4 * q ** (n - 1))
            / den
        )

    Ds = [D(n) for n in range(count)]
    Cs = [C(n) for n in range(count)]
    inv_a1 = 1 / a1
    b = tuple((a1 + inv_a1 - Ds[n] - Cs[n]) / 2 for n in range(count))
    u = tuple(Ds[n - 1] * Cs[n] / 4 for n in range(1, count))
    return MonicRecurrence(b, u, family="askey-wilson", params=p)


def q_hahn(c1, c2, q, N: int) -> MonicRecurrence:
    """Finite q-Hahn family: big q-Jacobi at c3 = q**-(N+1), truncating at size N+1."""
    if N < 1:
        raise InvalidParameterError("N must be >= 1")
    rec = big_q_jacobi(StructuredParams(q, c1, c2, q ** (-N - 1)), N + 1)
    return MonicRecurrence(rec.b, rec.u, family="q-hahn", params=QHahnParams(c1, c2, q, N))


def q_para_krawtchouk(c3, q, N: int) -> MonicRecurrence:
    """Finite q-para-Krawtchouk family of size N+1 (N odd).

    Coincides with big q-Jacobi at c1 = c2 = q**-(N+1)/2 after cancelling the
    indeterminate middle coefficients, so it is built from its own closed
    forms; the half-integer powers reduce to integer powers of q.
    """
    if N < 1 or N % 2 == 0:
        raise InvalidParameterError("N must be odd and >= 1")
    _check_q(q)
    if c3 == 0:
        raise InvalidParameterError("c3 must be nonzero")
    guard_size(q, N + 1)
    half = (N - 1) // 2

    def D(n):
        den = _nonresonant(1 - q ** (2 * n - N), f"1-q^{2*n-N}") * _nonresonant(
            1 + q ** (n - half), f"1+q^{n-half}"
        )
        return (1 - q ** (n - N)) * (1 - c3 * q ** (n + 1)) / den

    def C(n):
        if n == 0:
            return 0
        den = _nonresonant(1 - q ** (2 * n - N), f"1-q^{2*n-N}") * _nonresonant(
            1 + q ** (n - half - 1), f"1+q^{n-half-1}"
        )
        return -c3 * q ** (n - half) * (1 - q**n) * (1 - q ** (n - N - 1) / c3) / den

    Ds = [D(n) for n in range(N + 1)]
    Cs = [C(n) for n in range(N + 1)]
    b = tuple(1 - Ds[n] - Cs[n] for n in range(N + 1))
    u = tuple(Ds[n - 1] * Cs[n] for n in range(1, N + 1))
    return MonicRecurrence(b, u, family="q-para-krawtchouk", params=QParaKrawtchoukParams(c3, q, N))


def jacobi_matrix(rec: MonicRecurrence) -> BandMatrix:
    """Monic Jacobi matrix: unit subdiagonal, diagonal b, superdiagonal u."""
    size = rec.size
    if size == 1:
        return BandMatrix(1, {0: rec.b})
    return band_tridiagonal((1,) * (size - 1), rec.b, rec.u)


def eval_monic(rec: MonicRecurrence, n: int, x):
    """P_n(x) by the monic three-term recurrence; n may reach rec.size."""
    if n < 0 or n > rec.size:
        raise InvalidParameterError(f"degree {n} outside 0..{rec.size}")
    p0, p1 = 1, None
    if n == 0:
        return p0
    p1 = x - rec.b[0]
    for k in range(1, n):
        p0, p1 = p1, (x - rec.b[k]) * p1 - rec.u[k - 1] * p0
    return p1


def expand_monic(rec: MonicRecurrence, n: int) -> LaurentPoly:
    """Coefficient expansion of P_n as a (Laurent) polynomial in x."""
    if n < 0 or n > rec.size:
        raise InvalidParameterError(f"degree {n} outside 0..{rec.size}")
    x = LaurentPoly({1: 1})
    p0 = LaurentPoly({0: 1})
    if n == 0:
        return p0
    p1 = laurent_add(x, LaurentPoly({0: -rec.b[0]}), tol=0.0)
    for k in range(1, n):
        shifted = laurent_add(x, LaurentPoly({0: -rec.b[k]}), tol=0.0)
        p2 = laurent_add(
            laurent_mul(shifted, p1, tol=0.0),
            laurent_scale(-rec.u[k - 1], p0, tol=0.0),
            tol=0.0,
        )
        p0, p1 = p1, p2
    return p1


@dataclass(frozen=True)
class SpectrumLattice:
    """Finite claimed spectrum tagged 'single-exponential' or 'bi-exponential'."""

    points: tuple
    kind: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        pts = sorted(float(x) for x in self.points)
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise InvalidParameterError("lattice points must be pairwise distinct")


def claimed_spectrum(rec: MonicRecurrence) -> SpectrumLattice:
    """Closed-form spectrum for the finite families.

    q-Hahn: {q**-s : s = 0..N}.  q-para-Krawtchouk: the bi-lattice
    {q**-s} union {c3 * q**(s+1)} for s = 0..(N-1)/2.  Other families raise
    UnsupportedFamilyError.
    """
    if rec.family == "q-hahn":
        p = rec.params
        return SpectrumLattice(tuple(p.q ** (-s) for s in range(p.N + 1)), "single-exponential")
    if rec.family == "q-para-krawtchouk":
        p = rec.params
        half = (p.N + 1) // 2
        pts = [p.q ** (-s) for s in range(half)] + [p.c3 * p.q ** (s + 1) for s in range(half)]
        return SpectrumLattice(tuple(pts), "bi-exponential")
    raise UnsupportedFamilyError(f"no closed-form spectrum for family {rec.family!r}")


def verify_spectrum(
    rec: MonicRecurrence, lattice: SpectrumLattice, pol: TolerancePolicy = TolerancePolicy()
) -> ResidualReport:
    """Certify that the Jacobi matrix spectrum equals the claimed lattice.

    Two checks share one report: (i) |charpoly(x_s)| scaled by the product of
    gaps prod_{t != s} |x_s - x_t| must stay within tolerance, and (ii) computed
    eigenvalues pair off with lattice points injectively at relative tolerance.
    The report's max_abs is the worst normalized quantity from either check.
    Raises SpectrumMismatchError when counts differ or pairing collides.
    """
    if len(lattice.points) != rec.size:
        raise SpectrumMismatchError(
            f"lattice has {len(lattice.points)} points for size {rec.size}"
        )
    J = jacobi_matrix(rec)
    pts = [float(x) for x in lattice.points]
    worst = 0.0
    loc = None
    for s, x in enumerate(pts):
        gap = 1.0
        for t, y in enumerate(pts):
            if t != s:
                gap *= abs(x - y)
        ratio = abs(float(char_poly_eval(J, x))) / gap
        if ratio > worst:
            worst, loc = ratio, (s, s)
    ev = eigenvalues(J, pol)
    taken = [False] * len(pts)
    for lam in ev:
        best, best_d = None, None
        for s, x in enumerate(pts):
            d = abs(lam - x)
            if best is None or d < best_d:
                best, best_d = s, d
        if taken[best]:
            raise SpectrumMismatchError(
                f"eigenvalue pairing is not injective at lattice point {pts[best]!r}"
            )
        taken[best] = True
        rel = best_d / max(abs(pts[best]), 1e-300)
        if rel > worst:
            worst, loc = rel, (best, best)
    tol = pol.effective(1.0)
    return ResidualReport(worst, loc, (0, rec.size - 1), 1.0, tol, worst <= tol)
