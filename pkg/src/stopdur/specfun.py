"""Special functions and small numerical utilities.

Everything here works on Python floats. The digamma function, the real
branches of the Lambert W function and the exponential integral E1 are
implemented directly; root finding and quadrature delegate to SciPy behind
a narrow interface so callers only ever see this module's exceptions.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

from scipy import integrate as _integrate
from scipy import optimize as _optimize

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286061
INV_E = math.exp(-1.0)

DEFAULT_TOL = 1e-12

# Bernoulli-number coefficients B_2k / (2k) of the digamma asymptotic series.
_DIGAMMA_SERIES = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


@dataclass(frozen=True)
class Bracket:
    """Closed interval ``[lo, hi]`` used to bracket a root."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def digamma(x: float) -> float:
    """Digamma function psi(x) for real x > 0.

    Uses the recurrence psi(x) = psi(x + 1) - 1/x to shift the argument to
    at least 10, then the asymptotic expansion in 1/x^2.
    """
    x = float(x)
    if not x > 0.0 or math.isnan(x):
        raise DomainError(f"digamma requires x > 0, got {x}")
    shift = 0.0
    while x < 10.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    for coef in reversed(_DIGAMMA_SERIES):
        series = series * inv2 + coef
    return shift + math.log(x) - 0.5 / x - series * inv2


def harmonic(n: int) -> float:
    """n-th harmonic number, H_0 = 0."""
    if n < 0:
        raise DomainError(f"harmonic number needs n >= 0, got {n}")
    if n == 0:
        return 0.0
    return digamma(n + 1.0) + EULER_GAMMA


def lambert_w(z: float, branch: str = "principal") -> float:
    """Real Lambert W function.

    Parameters
    ----------
    z : float
        Argument. ``branch="principal"`` (W_0) accepts z >= -1/e,
        ``branch="lower"`` (W_-1) accepts -1/e <= z < 0.
    branch : {"principal", "lower"}

    Returns
    -------
    float
        w with w * exp(w) = z; w >= -1 on the principal branch and w <= -1
        on the lower branch.

    Notes
    -----
    Halley iteration started from the branch-point series when z is near
    -1/e and from logarithmic asymptotics elsewhere.
    """
    z = float(z)
    if branch not in ("principal", "lower"):
        raise DomainError(f"unknown branch {branch!r}")
    # Tolerate rounding of -1/e supplied by callers.
    if z < -INV_E:
        if z > -INV_E - 4e-16:
            z = -INV_E
        else:
            raise DomainError(f"Lambert W undefined below -1/e, got {z}")
    if branch == "lower" and z >= 0.0:
        raise DomainError(f"lower branch requires z < 0, got {z}")
    if z == -INV_E:
        return -1.0
    if z == 0.0:
        return 0.0

    p2 = 2.0 * (math.e * z + 1.0)
    p = math.sqrt(max(p2, 0.0))
    if branch == "principal":
        if z < -0.25:
            w = -1.0 + p - p2 / 3.0 + 11.0 / 72.0 * p * p2
        elif z < 3.0:
            w = math.log1p(z)
            w = w * (1.0 - math.log1p(w) / (2.0 + w))
        else:
            lz = math.log(z)
            w = lz - math.log(lz)
    else:
        if z < -0.25:
            w = -1.0 - p - p2 / 3.0 - 11.0 / 72.0 * p * p2
        else:
            lz = math.log(-z)
            w = lz - math.log(-lz)

    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - z
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denom == 0.0:
            break
        step = f / denom
        w_new = w - step
        if branch == "principal" and w_new < -1.0:
            w_new = 0.5 * (w - 1.0)
        elif branch == "lower" and w_new > -1.0:
            w_new = 0.5 * (w - 1.0)
        if abs(w_new - w) <= 4e-16 * (1.0 + abs(w_new)):
            return w_new
        w = w_new
    return w


def exp_integral_e1(c: float) -> float:
    """Exponential integral E1(c) = integral over [1, inf) of exp(-c x)/x dx.

    Power series below 1, modified Lentz continued fraction from 1 upward.
    """
    c = float(c)
    if not c > 0.0:
        raise DomainError(f"E1 requires c > 0, got {c}")
    if c < 1.0:
        total = 0.0
        term = 1.0
        for k in range(1, 200):
            term *= -c / k
            contrib = term / k
            total += contrib
            if abs(contrib) < 1e-17 * abs(total):
                break
        return -EULER_GAMMA - math.log(c) - total

    tiny = 1e-300
    b = c + 1.0
    cf = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        cf = b + a / cf
        delta = cf * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * math.exp(-c)
    raise ConvergenceError(f"E1 continued fraction did not converge at c={c}")


def solve_root(
    f: Callable[[float], float],
    bracket: Bracket,
    tol: float = DEFAULT_TOL,
    max_iter: int = 200,
) -> float:
    """Root of ``f`` inside ``bracket`` by Brent's method.

    Raises
    ------
    DomainError
        If ``f`` does not change sign across the bracket.
    ConvergenceError
        If the bracket is not reduced below ``tol`` within ``max_iter``.
    """
    flo = f(bracket.lo)
    fhi = f(bracket.hi)
    if flo == 0.0:
        return bracket.lo
    if fhi == 0.0:
        return bracket.hi
    if (flo > 0.0) == (fhi > 0.0):
        raise DomainError(
            f"no sign change on [{bracket.lo}, {bracket.hi}]: f={flo:.3g}, {fhi:.3g}"
        )
    try:
        root, info = _optimize.brentq(
            f, bracket.lo, bracket.hi, xtol=tol, maxiter=max_iter, full_output=True, disp=False
        )
    except RuntimeError as exc:  # pragma: no cover - brentq raises only with disp=True
        raise ConvergenceError(str(exc)) from exc
    if not info.converged:
        raise ConvergenceError(f"root finder stopped after {info.iterations} iterations")
    return float(root)


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
) -> float:
    """Definite integral of ``f`` over ``[lo, hi]`` to absolute tolerance ``tol``.

    An infinite upper limit is mapped to a finite interval with x = lo + (1 - t)/t
    before adaptive Gauss-Kronrod quadrature.
    """
    if math.isinf(hi):
        if math.isinf(lo):
            raise DomainError("only the upper limit may be infinite")

        def g(t):
            if t <= 0.0:
                return 0.0
            x = lo + (1.0 - t) / t
            return f(x) / (t * t)

        lo_, hi_, func = 0.0, 1.0, g
    else:
        lo_, hi_, func = lo, hi, f
    with warnings.catch_warnings():
        warnings.simplefilter("error", _integrate.IntegrationWarning)
        try:
            value, err = _integrate.quad(func, lo_, hi_, epsabs=tol, epsrel=0.0, limit=500)
        except _integrate.IntegrationWarning as exc:
            raise ConvergenceError(f"quadrature did not converge: {exc}") from exc
    return float(value)
