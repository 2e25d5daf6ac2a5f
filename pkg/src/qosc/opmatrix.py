"""Banded operator matrices and residual checks.

The band kernel is deliberately pure Python and duck-typed: entries may be
floats, fractions.Fraction, or any ring element supporting +, -, *.  Exact
inputs therefore produce exact residuals through the very same code paths the
float build uses.  numpy enters only in the eigenvector certification inside
``decompose`` (see representation.py) and in tests.

Truncation bookkeeping: all infinite-matrix identities checked here hold on a
size x size truncation except for rows coupled to the cut, so residual checks
take an explicit row window and default to rows 0..size-2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InvalidParameterError,
    NumericFailureError,
    SizeGuardError,
    TooSmallError,
    UnsupportedSpectrumError,
)
from .numerics import TolerancePolicy

# Largest |q|-power spread allowed before geometric bands degrade float checks.
SIZE_GUARD_LIMIT = 1e12


def guard_size(q, size: int) -> None:
    """Reject sizes whose q-geometric entries would span > SIZE_GUARD_LIMIT."""
    if size < 1:
        raise InvalidParameterError("size must be >= 1")
    aq = abs(float(q))
    if aq == 0.0:
        raise InvalidParameterError("q must be nonzero")
    spread = max(aq, 1.0 / aq) ** size
    if spread > SIZE_GUARD_LIMIT:
        raise SizeGuardError(
            f"size {size} with q = {float(q)!r} spans {spread:.3e} > {SIZE_GUARD_LIMIT:.0e}"
        )


@dataclass
class BandMatrix:
    """Square matrix stored by diagonals.

    ``bands[k]`` holds the entries M[i, i+k]; index t in the stored tuple
    corresponds to row t + max(0, -k), so t == min(row, col).
    """

    size: int
    bands: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidParameterError("size must be >= 1")
        clean = {}
        for k, entries in self.bands.items():
            if not isinstance(k, int) or abs(k) > self.size - 1:
                raise InvalidParameterError(f"band offset {k!r} out of range")
            entries = tuple(entries)
            if len(entries) != self.size - abs(k):
                raise InvalidParameterError(
                    f"band {k} has {len(entries)} entries, expected {self.size - abs(k)}"
                )
            clean[k] = entries
        self.bands = clean

    @property
    def lower(self) -> int:
        return max((-k for k in self.bands if k < 0), default=0)

    @property
    def upper(self) -> int:
        return max((k for k in self.bands if k > 0), default=0)

    def entry(self, i: int, j: int):
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise InvalidParameterError("index out of range")
        band = self.bands.get(j - i)
        if band is None:
            return 0
        return band[min(i, j)]

    def to_dense(self) -> list:
        out = [[0] * self.size for _ in range(self.size)]
        for k, entries in self.bands.items():
            for t, v in enumerate(entries):
                i = t + max(0, -k)
                out[i][i + k] = v
        return out


def band_identity(size: int) -> BandMatrix:
    return BandMatrix(size, {0: (1,) * size})


def band_diagonal(diag) -> BandMatrix:
    diag = tuple(diag)
    return BandMatrix(len(diag), {0: diag})


def band_tridiagonal(sub, diag, sup) -> BandMatrix:
    diag = tuple(diag)
    size = len(diag)
    bands = {0: diag}
    sub, sup = tuple(sub), tuple(sup)
    if size > 1:
        if len(sub) != size - 1 or len(sup) != size - 1:
            raise InvalidParameterError("sub/super diagonals must have size-1 entries")
        bands[-1] = sub
        bands[1] = sup
    elif sub or sup:
        raise InvalidParameterError("size-1 matrix admits no off-diagonals")
    return BandMatrix(size, bands)


def _check_same_size(A: BandMatrix, B: BandMatrix) -> int:
    if A.size != B.size:
        raise InvalidParameterError("size mismatch")
    return A.size


def band_add(A: BandMatrix, B: BandMatrix) -> BandMatrix:
    size = _check_same_size(A, B)
    out = {}
    for k in sorted(set(A.bands) | set(B.bands)):
        a = A.bands.get(k)
        b = B.bands.get(k)
        if a is None:
            out[k] = b
        elif b is None:
            out[k] = a
        else:
            out[k] = tuple(x + y for x, y in zip(a, b))
    return BandMatrix(size, out)


def band_scale(c, A: BandMatrix) -> BandMatrix:
    return BandMatrix(A.size, {k: tuple(c * v for v in band) for k, band in A.bands.items()})


def band_sub(A: BandMatrix, B: BandMatrix) -> BandMatrix:
    return band_add(A, band_scale(-1, B))


def band_mul(A: BandMatrix, B: BandMatrix) -> BandMatrix:
    """Exact banded product; output bandwidth is the sum of input bandwidths."""
    size = _check_same_size(A, B)
    out: dict = {}
    for ka, banda in A.bands.items():
        for kb, bandb in B.bands.items():
            k = ka + kb
            if abs(k) > size - 1:
                continue
            acc = out.setdefault(k, [0] * (size - abs(k)))
            i_lo = max(0, -ka, -ka - kb)
            i_hi = size - 1 - max(0, ka, ka + kb)
            for i in range(i_lo, i_hi + 1):
                a = banda[i + min(0, ka)]
                b = bandb[i + ka + min(0, kb)]
                acc[i + min(0, k)] += a * b
    return BandMatrix(size, {k: tuple(v) for k, v in out.items()})


def inf_norm(M: BandMatrix) -> float:
    """Max absolute row sum."""
    sums = [0.0] * M.size
    for k, entries in M.bands.items():
        for t, v in enumerate(entries):
            sums[t + max(0, -k)] += abs(float(v))
    return max(sums) if sums else 0.0


def max_entry_diff(A: BandMatrix, B: BandMatrix):
    """(max |A_ij - B_ij|, location); scans the union of the stored bands."""
    size = _check_same_size(A, B)
    worst = 0.0
    loc = None
    for k in sorted(set(A.bands) | set(B.bands)):
        a = A.bands.get(k, (0,) * (size - abs(k)))
        b = B.bands.get(k, (0,) * (size - abs(k)))
        for t, (x, y) in enumerate(zip(a, b)):
            d = abs(float(x - y))
            if d > worst:
                worst = d
                i = t + max(0, -k)
                loc = (i, i + k)
    return worst, loc


@dataclass(frozen=True)
class ResidualReport:
    """Outcome of one matrix-identity check over a row window."""

    max_abs: float
    location: tuple | None
    rows: tuple
    scale: float
    tolerance: float
    passed: bool


def residual_report(R: BandMatrix, pol: TolerancePolicy, rows: tuple, scale: float) -> ResidualReport:
    """Max |R_ij| over rows[0] <= i <= rows[1], judged at the given scale."""
    lo, hi = rows
    if not (0 <= lo <= hi < R.size):
        raise InvalidParameterError("row window out of range")
    worst = 0.0
    loc = None
    for k, entries in R.bands.items():
        for t, v in enumerate(entries):
            i = t + max(0, -k)
            if lo <= i <= hi:
                d = abs(float(v))
                if d > worst:
                    worst = d
                    loc = (i, i + k)
    tol = pol.effective(scale)
    return ResidualReport(worst, loc, (lo, hi), float(scale), tol, worst <= tol)


def q_commutator_residual(
    A: BandMatrix,
    B: BandMatrix,
    q,
    rhs: BandMatrix | None = None,
    pol: TolerancePolicy = TolerancePolicy(),
    rows: tuple | None = None,
) -> ResidualReport:
    """Residual of A@B - q*B@A - rhs over interior rows (default 0..size-2).

    The last row of the truncation is corrupted by the cut and is excluded by
    default; pass rows explicitly to override.
    """
    size = _check_same_size(A, B)
    if size < 3:
        raise TooSmallError("q-commutator check needs size >= 3")
    if rhs is None:
        rhs = band_identity(size)
    R = band_sub(band_sub(band_mul(A, B), band_scale(q, band_mul(B, A))), rhs)
    if rows is None:
        rows = (0, size - 2)
    if pol.scale_mode == "operator-norm-product":
        scale = max(1.0, inf_norm(A) * inf_norm(B))
    else:
        scale = 1.0
    return residual_report(R, pol, rows, scale)


def diag_similarity(M: BandMatrix, d) -> BandMatrix:
    """Conjugation diag(d)^-1 M diag(d): entry (n, n+k) picks up d_{n+k}/d_n."""
    d = tuple(d)
    if len(d) != M.size:
        raise InvalidParameterError("diagonal length must equal matrix size")
    if any(x == 0 for x in d):
        raise InvalidParameterError("similarity diagonal must be nonzero")
    out = {}
    for k, entries in M.bands.items():
        scaled = []
        for t, v in enumerate(entries):
            n = t + max(0, -k)
            scaled.append(v * d[n + k] / d[n])
        out[k] = tuple(scaled)
    return BandMatrix(M.size, out)


def _tridiagonal_bu(M: BandMatrix):
    """(diag, sub*super products) of a tridiagonal matrix, for minor recurrences."""
    if M.lower > 1 or M.upper > 1:
        raise InvalidParameterError("matrix is not tridiagonal")
    size = M.size
    b = [M.entry(i, i) for i in range(size)]
    w = [M.entry(i + 1, i) * M.entry(i, i + 1) for i in range(size - 1)]
    return b, w


def char_poly_eval(M: BandMatrix, x):
    """det(xI - M) for tridiagonal M by the three-term minor recurrence.

    Duck-typed and unscaled: exact for exact inputs, may overflow for large
    sizes with wide entry ranges (eigenvalues() uses a rescaled variant).
    """
    b, w = _tridiagonal_bu(M)
    p0, p1 = 1, x - b[0]
    for k in range(1, len(b)):
        p0, p1 = p1, (x - b[k]) * p1 - w[k - 1] * p0
    return p1


# -- eigenvalue machinery -----------------------------------------------------
#
# Plain float minor recurrence for scanning, double-double compensated
# evaluation for the Newton polish.  Both rescale jointly (value + derivative)
# to dodge overflow/underflow; the polish terminates on a relative step bound.

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a: float, b: float):
    p = a * b
    aa = _SPLIT * a
    ahi = aa - (aa - a)
    alo = a - ahi
    bb = _SPLIT * b
    bhi = bb - (bb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(xh, xl, yh, yl):
    sh, sl = _two_sum(xh, yh)
    sl += xl + yl
    return _two_sum(sh, sl)


def _dd_mul_d(xh, xl, d):
    ph, pl = _two_prod(xh, d)
    pl += xl * d
    return _two_sum(ph, pl)


def _cp_float(b, w, x: float):
    """(p(x), p'(x)) up to a common positive rescale factor."""
    p0, p1 = 1.0, x - b[0]
    d0, d1 = 0.0, 1.0
    for k in range(1, len(b)):
        p2 = (x - b[k]) * p1 - w[k - 1] * p0
        d2 = p1 + (x - b[k]) * d1 - w[k - 1] * d0
        p0, p1, d0, d1 = p1, p2, d1, d2
        m = abs(p1) + abs(d1)
        if m > 1e120:
            s = 2.0**-400
            p0 *= s; p1 *= s; d0 *= s; d1 *= s
        elif 0.0 < m < 1e-120:
            s = 2.0**400
            p0 *= s; p1 *= s; d0 *= s; d1 *= s
    return p1, d1


def _cp_dd(b, w, x: float):
    """Compensated (double-double) p(x) plus float p'(x), jointly rescaled."""
    p0h, p0l = 1.0, 0.0
    p1h, p1l = _two_sum(x, -b[0])
    d0, d1 = 0.0, 1.0
    for k in range(1, len(b)):
        ah, al = _dd_mul_d(p1h, p1l, x - b[k])
        bh, bl = _dd_mul_d(p0h, p0l, -w[k - 1])
        p2h, p2l = _dd_add(ah, al, bh, bl)
        d2 = d1 * (x - b[k]) + p1h - w[k - 1] * d0
        p0h, p0l, p1h, p1l, d0, d1 = p1h, p1l, p2h, p2l, d1, d2
        m = abs(p1h) + abs(d1)
        if m > 1e120:
            s = 2.0**-400
            p0h *= s; p0l *= s; p1h *= s; p1l *= s; d0 *= s; d1 *= s
        elif 0.0 < m < 1e-120:
            s = 2.0**400
            p0h *= s; p0l *= s; p1h *= s; p1l *= s; d0 *= s; d1 *= s
    return p1h, p1l, d1


def _newton_dd(b, w, x0: float) -> float:
    x = x0
    for _ in range(80):
        ph, pl, d1 = _cp_dd(b, w, x)
        if d1 == 0.0:
            break
        xn = x - (ph + pl) / d1
        if abs(xn - x) <= 0.25e-15 * max(1e-300, abs(x)):
            return xn
        x = xn
    return x


def _sgn(x: float) -> int:
    return 1 if x > 0 else (-1 if x < 0 else 0)


def _seed_points(b, w, lo: float, hi: float) -> list:
    n = len(b)
    pts = set()
    # uniform sweep of the Gershgorin hull
    step = (hi - lo) / (8 * n)
    pts.update(lo + i * step for i in range(8 * n + 1))
    # logarithmic ladder toward 0 from both sides: geometric spectra pile up there
    big = max(abs(lo), abs(hi))
    if big > 0:
        import math

        for i in range(96):
            g = big * math.exp(-18.420680743952367 * (1 - i / 95.0))  # down to 1e-8 * big
            if lo <= g <= hi:
                pts.add(g)
            if lo <= -g <= hi:
                pts.add(-g)
    # neighborhoods of each diagonal Gershgorin disc
    for i, bi in enumerate(b):
        r = (1.0 if i > 0 else 0.0) + (abs(w[i]) if i < n - 1 else 0.0)
        for t in (-0.5, -0.1, 0.0, 0.1, 0.5):
            x = bi + t * max(r, 1e-6)
            if lo <= x <= hi:
                pts.add(x)
    return sorted(pts)


def _dedupe_sorted(roots: list) -> list:
    out = []
    for x in roots:
        if out and abs(x - out[-1]) <= 1e-11 * max(1.0, abs(x)):
            continue
        out.append(x)
    return out


def eigenvalues(M: BandMatrix, pol: TolerancePolicy = TolerancePolicy()) -> list:
    """All eigenvalues of a tridiagonal matrix with real simple spectrum.

    Characteristic-polynomial sign scan over a Gershgorin hull, bisection to
    isolate, then a compensated Newton polish.  Raises UnsupportedSpectrumError
    when n real roots cannot be isolated (complex pairs, repeated roots) and
    NumericFailureError when refinement stalls.
    """
    b, w = _tridiagonal_bu(M)
    b = [float(v) for v in b]
    w = [float(v) for v in w]
    n = len(b)
    if not all(abs(v) < float("inf") for v in b + w):
        raise InvalidParameterError("matrix entries must be finite")
    if n == 1:
        return [b[0]]
    los, his = [], []
    for i in range(n):
        # row-i Gershgorin disc of the monic-normalized comparison: sub weight 1
        r = (1.0 if i > 0 else 0.0) + (abs(w[i]) if i < n - 1 else 0.0)
        los.append(b[i] - r)
        his.append(b[i] + r)
    lo, hi = min(los), max(his)
    pad = 1e-9 * max(1.0, abs(lo), abs(hi))
    lo -= pad
    hi += pad

    grid = _seed_points(b, w, lo, hi)
    for _ in range(13):
        vals = [_cp_float(b, w, x)[0] for x in grid]
        brackets = [
            (grid[i], grid[i + 1], vals[i], vals[i + 1])
            for i in range(len(grid) - 1)
            if _sgn(vals[i]) * _sgn(vals[i + 1]) < 0
        ]
        exact = [grid[i] for i in range(len(grid)) if vals[i] == 0.0]
        if len(brackets) + len(exact) >= n:
            roots = list(exact)
            for a, c, fa, fc in brackets:
                for _ in range(50):
                    m = 0.5 * (a + c)
                    fm = _cp_float(b, w, m)[0]
                    if fm == 0.0:
                        a = c = m
                        break
                    if _sgn(fa) * _sgn(fm) < 0:
                        c, fc = m, fm
                    else:
                        a, fa = m, fm
                    if c - a <= 1e-13 * max(1.0, abs(a)):
                        break
                roots.append(_newton_dd(b, w, 0.5 * (a + c)))
            if not all(r == r and abs(r) < float("inf") for r in roots):
                raise NumericFailureError("eigenvalue polish produced a non-finite value")
            roots = _dedupe_sorted(sorted(roots))
            if len(roots) == n:
                return roots
            if len(roots) > n:
                raise NumericFailureError(
                    f"isolated {len(roots)} distinct roots for size {n}"
                )
        if len(grid) > 500_000:
            break
        grid = sorted(
            set(grid) | {0.5 * (grid[i] + grid[i + 1]) for i in range(len(grid) - 1)}
        )
    raise UnsupportedSpectrumError(
        f"could not isolate {n} simple real eigenvalues by sign scan"
    )
