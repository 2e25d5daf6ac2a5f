"""Shared numeric plumbing: tolerance policy, geometric sequences, Laurent polynomials.

All arithmetic here is duck-typed on purpose: the same code paths run with
floats and with exact types such as fractions.Fraction, which keeps exact-input
computations exact end to end.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameterError, PoleError

# Default absolute floor used when pruning numerically-zero Laurent coefficients.
DEFAULT_ABS_TOL = 1e-12


@dataclass(frozen=True)
class TolerancePolicy:
    """How residual checks turn a raw magnitude into pass/fail.

    The effective tolerance for a comparison made at magnitude ``scale`` is
    ``max(abs_tol, rel_tol * max(1, scale))``: the scale never tightens a check
    below its absolute floor, and scales below 1 do not shrink it either.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-9
    scale_mode: str = "operator-norm-product"

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise InvalidParameterError("tolerances must be positive")
        if self.scale_mode not in ("operator-norm-product", "unit"):
            raise InvalidParameterError(f"unknown scale_mode {self.scale_mode!r}")

    def effective(self, scale: float = 1.0) -> float:
        return max(self.abs_tol, self.rel_tol * max(1.0, float(scale)))


def geometric_seq(base, ratio, count: int) -> list:
    """[base, base*ratio, ..., base*ratio**(count-1)], computed by running product."""
    if count < 0:
        raise InvalidParameterError("count must be nonnegative")
    if ratio == 0:
        raise InvalidParameterError("ratio must be nonzero")
    out = []
    term = base
    for _ in range(count):
        out.append(term)
        term = term * ratio
    return out


@dataclass
class LaurentPoly:
    """Sparse Laurent polynomial: maps integer degree -> coefficient.

    Treated as immutable by convention; arithmetic goes through the module
    functions below, which prune coefficients with |c| <= tol afterwards.
    """

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for k in self.coeffs:
            if not isinstance(k, int):
                raise InvalidParameterError("degrees must be integers")

    @property
    def min_deg(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_deg(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def coeff(self, k: int):
        return self.coeffs.get(k, 0)

    def mass(self) -> float:
        """Sum of absolute coefficient values (the l1 mass)."""
        return sum(abs(c) for c in self.coeffs.values())


def _pruned(coeffs: dict, tol) -> LaurentPoly:
    return LaurentPoly({k: c for k, c in sorted(coeffs.items()) if abs(c) > tol})


def laurent(coeffs: dict, tol=DEFAULT_ABS_TOL) -> LaurentPoly:
    """Normalized constructor: drops |c| <= tol entries."""
    return _pruned(dict(coeffs), tol)


def laurent_scale_arg(p: LaurentPoly, q) -> LaurentPoly:
    """f(x) -> f(q*x): multiplies the degree-k coefficient by q**k."""
    if q == 0:
        raise InvalidParameterError("argument scale must be nonzero")
    return LaurentPoly({k: c * q**k for k, c in sorted(p.coeffs.items())})


def laurent_add(p1: LaurentPoly, p2: LaurentPoly, tol=DEFAULT_ABS_TOL) -> LaurentPoly:
    out = dict(p1.coeffs)
    for k, c in p2.coeffs.items():
        out[k] = out.get(k, 0) + c
    return _pruned(out, tol)


def laurent_mul(p1: LaurentPoly, p2: LaurentPoly, tol=DEFAULT_ABS_TOL) -> LaurentPoly:
    out: dict = {}
    for k1, c1 in p1.coeffs.items():
        for k2, c2 in p2.coeffs.items():
            k = k1 + k2
            out[k] = out.get(k, 0) + c1 * c2
    return _pruned(out, tol)


def laurent_scale(c, p: LaurentPoly, tol=DEFAULT_ABS_TOL) -> LaurentPoly:
    return _pruned({k: c * v for k, v in p.coeffs.items()}, tol)


def laurent_eval(p: LaurentPoly, x):
    if x == 0 and p.min_deg < 0:
        raise PoleError("evaluation at x = 0 with negative-degree terms")
    total = 0
    for k, c in sorted(p.coeffs.items()):
        if x == 0:
            total = total + (c if k == 0 else 0)
        else:
            total = total + c * x**k
    return total
