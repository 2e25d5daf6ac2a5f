"""Tridiagonalization of the big q-Jacobi operator pair.

Z is the diagonal eigenvalue operator z_n = c1*c2*q**(n+1) + q**-n in the
polynomial eigenbasis; the companion operator B = r1*(Z@A - q*A@Z) + r0*I
completes A (multiplication by x) to a q-oscillator pair.  General pencils
W = tau1*Z@A + tau2*A@Z + tau3*A + tau0*I reduce to monic form by a diagonal
similarity; the Askey-Wilson parameter map lands exactly on the Askey-Wilson
recurrence.  The same operators act on Laurent polynomials through the
q-difference realization at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError, NotMonicReducibleError, ResonanceError
from .families import MonicRecurrence, big_q_jacobi, jacobi_matrix, AWParams
from .numerics import (
    DEFAULT_ABS_TOL,
    LaurentPoly,
    TolerancePolicy,
    laurent_add,
    laurent_mul,
    laurent_scale,
    laurent_scale_arg,
)
from .opmatrix import (
    BandMatrix,
    band_add,
    band_identity,
    band_mul,
    band_scale,
    band_sub,
    guard_size,
)
from .representation import StructuredParams


def eigenvalue_sequence(p: StructuredParams, size: int) -> tuple:
    """z_n = c1*c2*q**(n+1) + q**-n for n = 0..size-1."""
    q, c1, c2 = p.q, p.c1, p.c2
    return tuple(c1 * c2 * q ** (n + 1) + q**-n for n in range(size))


def _z_matrix(p: StructuredParams, size: int) -> BandMatrix:
    guard_size(p.q, size)
    return BandMatrix(size, {0: eigenvalue_sequence(p, size)})


@dataclass(frozen=True)
class DiagonalOperator:
    """Diagonal matrix diag(z_0, ..., z_{n-1}) with pairwise-distinct entries."""

    z: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", tuple(self.z))
        zf = [float(v) for v in self.z]
        for i in range(len(zf)):
            for j in range(i + 1, len(zf)):
                if abs(zf[i] - zf[j]) <= 1e-12 * max(1.0, abs(zf[i]), abs(zf[j])):
                    raise ResonanceError(f"z_{i} and z_{j} coincide")

    @property
    def size(self) -> int:
        return len(self.z)

    def matrix(self) -> BandMatrix:
        return BandMatrix(len(self.z), {0: self.z})


def build_Z(p: StructuredParams, size: int) -> DiagonalOperator:
    """Diagonal operator with entries z_n; entries must be pairwise distinct.

    Distinctness backs the eigenbasis arguments; pencil constructions that only
    need the diagonal values (companion_b, build_W) skip the check, since e.g.
    the q-para-Krawtchouk specialization has a palindromic z sequence.
    """
    guard_size(p.q, size)
    return DiagonalOperator(eigenvalue_sequence(p, size))


def r_coefficients(p: StructuredParams):
    """(r0, r1) of the companion combination B = r1*(Z@A - q*A@Z) + r0*I."""
    q, c1, c2, c3 = p.q, p.c1, p.c2, p.c3
    r0 = (c1 * (c2 + 1) + c3 * (c1 + 1)) / (c1 * c3 * (1 - q**2))
    r1 = -1 / (c1 * c3 * q * (q + 1) * (1 - q) ** 2)
    return r0, r1


def companion_b(A: BandMatrix, p: StructuredParams) -> BandMatrix:
    """B = r1*(Z@A - q*A@Z) + r0*I for a given realization A of multiplication by x."""
    Z = _z_matrix(p, A.size)
    r0, r1 = r_coefficients(p)
    ZA_qAZ = band_sub(band_mul(Z, A), band_scale(p.q, band_mul(A, Z)))
    return band_add(band_scale(r1, ZA_qAZ), band_scale(r0, band_identity(A.size)))


def build_B_from_A(p: StructuredParams, size: int) -> BandMatrix:
    """Companion B over the big q-Jacobi realization of A at these parameters."""
    A = jacobi_matrix(big_q_jacobi(p, size))
    return companion_b(A, p)


@dataclass(frozen=True)
class WCoeffs:
    """Coefficients of the pencil W = tau1*Z@A + tau2*A@Z + tau3*A + tau0*I."""

    tau0: object
    tau1: object
    tau2: object
    tau3: object


def build_W(p: StructuredParams, w: WCoeffs, size: int) -> BandMatrix:
    A = jacobi_matrix(big_q_jacobi(p, size))
    Z = _z_matrix(p, size)
    W = band_add(
        band_scale(w.tau1, band_mul(Z, A)),
        band_scale(w.tau2, band_mul(A, Z)),
    )
    W = band_add(W, band_scale(w.tau3, A))
    return band_add(W, band_scale(w.tau0, band_identity(size)))


def to_monic(W: BandMatrix, pol: TolerancePolicy = TolerancePolicy()):
    """Reduce a tridiagonal W to monic form by the diagonal similarity d.

    d_0 = 1, d_{n+1} = d_n * W[n+1, n]; the monic coefficients are
    b_n = W[n, n] and u_n = W[n, n-1] * W[n-1, n].  A vanishing subdiagonal
    entry (|.| <= abs_tol) admits no such reduction: NotMonicReducibleError.
    """
    if W.lower > 1 or W.upper > 1:
        raise InvalidParameterError("W must be tridiagonal")
    size = W.size
    d = [1]
    for n in range(size - 1):
        s = W.entry(n + 1, n)
        if abs(float(s)) <= pol.abs_tol:
            raise NotMonicReducibleError(f"subdiagonal entry ({n + 1},{n}) vanishes")
        d.append(d[-1] * s)
    b = tuple(W.entry(n, n) for n in range(size))
    u = tuple(W.entry(n, n - 1) * W.entry(n - 1, n) for n in range(1, size))
    return MonicRecurrence(b, u), tuple(d)


def aw_parameter_map(p: AWParams):
    """(StructuredParams, WCoeffs) whose monic pencil equals the Askey-Wilson
    recurrence at parameters (a1, a2, a3, a4):

        c1 = a1*a2/q,  c2 = a3*a4/q,  c3 = a1*a3/q,
        tau1 = 1/(2*a1*a2*a3*(q - 1/q)),  tau2 = -q*tau1,
        tau3 = 1/(2*a1),
        tau0 = (q*(a2 + a3) + a2*a3*(a1 + a4)) / (2*(q + 1)*a2*a3).
    """
    q, a1, a2, a3, a4 = p.q, p.a1, p.a2, p.a3, p.a4
    if a2 == 0 or a3 == 0:
        raise InvalidParameterError("a2 and a3 must be nonzero for the parameter map")
    sp = StructuredParams(q, a1 * a2 / q, a3 * a4 / q, a1 * a3 / q)
    tau1 = 1 / (2 * a1 * a2 * a3 * (q - 1 / q))
    w = WCoeffs(
        tau0=(q * (a2 + a3) + a2 * a3 * (a1 + a4)) / (2 * (q + 1) * a2 * a3),
        tau1=tau1,
        tau2=-q * tau1,
        tau3=1 / (2 * a1),
    )
    return sp, w


def companion_params(rec: MonicRecurrence) -> StructuredParams:
    """StructuredParams under which companion_b completes this family's Jacobi
    matrix to a q-oscillator pair.

    q-Hahn sits at c3 = q**-(N+1); q-para-Krawtchouk at c1 = c2 = q**-(N+1)/2
    (where the generic coefficient formulas degenerate but the pencil B does
    not).  Other families raise UnsupportedFamilyError.
    """
    from .errors import UnsupportedFamilyError

    if rec.family == "big-q-jacobi":
        return rec.params
    if rec.family == "q-hahn":
        p = rec.params
        return StructuredParams(p.q, p.c1, p.c2, p.q ** (-p.N - 1))
    if rec.family == "q-para-krawtchouk":
        p = rec.params
        c = p.q ** (-(p.N + 1) // 2)
        return StructuredParams(p.q, c, c, p.c3)
    raise UnsupportedFamilyError(f"no companion parameters for family {rec.family!r}")


@dataclass(frozen=True)
class PencilParams:
    mu: object
    lam: object


def pencil(p: StructuredParams, pp: PencilParams, size: int) -> BandMatrix:
    """C = A + mu*B + lam*I over the big q-Jacobi realization.

    Equals build_W at tau = (mu*r0 + lam, mu*r1, -q*mu*r1, 1) since B is itself
    a Z-pencil of A.
    """
    A = jacobi_matrix(big_q_jacobi(p, size))
    B = companion_b(A, p)
    C = band_add(A, band_scale(pp.mu, B))
    return band_add(C, band_scale(pp.lam, band_identity(size)))


# -- q-difference realization --------------------------------------------------


def _qdiff_tol(f: LaurentPoly) -> float:
    # cancellation threshold grows with the input's coefficient mass
    return DEFAULT_ABS_TOL * max(1.0, float(f.mass()))


def qdiff_Z_apply(f: LaurentPoly, p: StructuredParams) -> LaurentPoly:
    """The big q-Jacobi q-difference operator acting on a Laurent polynomial:

        (Z f)(x) = E(x) f(qx) + F(x) f(x/q) + (c1*c2*q + 1 - E(x) - F(x)) f(x)

    with E = c1*q*(x-1)*(c2*x-c3)/x**2 and F = (x-c1*q)*(x-c3*q)/x**2.
    Eigenpolynomials P_n satisfy Z P_n = z_n P_n.
    """
    if not f.coeffs:
        raise InvalidParameterError("f must be nonzero")
    q, c1, c2, c3 = p.q, p.c1, p.c2, p.c3
    tol = _qdiff_tol(f)
    E = LaurentPoly({0: c1 * c2 * q, -1: -c1 * (c2 + c3) * q, -2: c1 * c3 * q})
    F = LaurentPoly({0: 1, -1: -(c1 + c3) * q, -2: c1 * c3 * q**2})
    out = laurent_mul(E, laurent_scale_arg(f, q), tol=0.0)
    out = laurent_add(out, laurent_mul(F, laurent_scale_arg(f, 1 / q), tol=0.0), tol=0.0)
    diag = laurent_add(
        LaurentPoly({0: c1 * c2 * q + 1}),
        laurent_scale(-1, laurent_add(E, F, tol=0.0), tol=0.0),
        tol=0.0,
    )
    return laurent_add(out, laurent_mul(diag, f, tol=0.0), tol=tol)


def qdiff_B_apply(f: LaurentPoly, p: StructuredParams) -> LaurentPoly:
    """The companion operator in the q-difference picture:

        (B f)(x) = G(x) f(x/q) + f(x) / ((1-q)*x),
        G(x) = (x - q*c1)*(x - q*c3) / (q**2*(q-1)*c1*c3*x).

    For polynomial f the 1/x terms cancel and the result is again polynomial.
    """
    if not f.coeffs:
        raise InvalidParameterError("f must be nonzero")
    q, c1, c3 = p.q, p.c1, p.c3
    tol = _qdiff_tol(f)
    den = (q - 1) * c1 * c3
    G = LaurentPoly(
        {1: 1 / (q**2 * den), 0: -(c1 + c3) / (q * den), -1: 1 / (q - 1)}
    )
    out = laurent_mul(G, laurent_scale_arg(f, 1 / q), tol=0.0)
    tail = laurent_mul(LaurentPoly({-1: 1 / (1 - q)}), f, tol=0.0)
    return laurent_add(out, tail, tol=tol)
