"""Orlicz functions: analytic families, right derivatives and convex conjugates.

An Orlicz function here is convex on [0, inf) with value 0 at 0 and positive
values elsewhere.  The N-function families additionally satisfy
phi(t)/t -> 0 at 0 and phi(t)/t -> inf at infinity, which makes the convex
conjugate phi*(v) = sup_u [u v - phi(u)] another N-function and the right
derivatives p and q of the pair mutually inverse in the generalized sense.

Families:

* PowerOrlicz      scale * t**exponent, exponent > 1
* ExpOrlicz        exp(t) - t - 1
* LogOrlicz        (1 + t) log(1 + t) - t, the conjugate of ExpOrlicz
* FlatZeroOrlicz   exp(-1/t) near zero with a convex quadratic continuation;
                   all derivatives vanish at 0, so the doubling condition
                   fails near zero
* TabulatedOrlicz  piecewise-linear convex interpolation of knot data; not an
                   N-function at infinity (linear tail)

Values and derivatives accept scalars or numpy arrays of nonnegative numbers.
Instances are treated as immutable; the conjugate is computed once and cached.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import solvers
from .errors import ConvergenceError, DomainError, ValidationError

__all__ = [
    "OrliczFunction", "PowerOrlicz", "ExpOrlicz", "LogOrlicz",
    "FlatZeroOrlicz", "TabulatedOrlicz", "young_gap", "delta2_classify",
]


def _as_array(u):
    arr = np.asarray(u, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr < 0.0)):
        raise DomainError("arguments must be finite and nonnegative")
    return arr


def _like(arr, template):
    if np.isscalar(template) or getattr(template, "ndim", 1) == 0:
        return float(arr)
    return arr


class OrliczFunction:
    """Common surface: value, right derivative, conjugate."""

    is_n_function = True
    tol_abs = 1e-10
    tol_rel = 1e-8

    def value(self, u):
        raise NotImplementedError

    def derivative(self, u):
        """Right derivative; nondecreasing and right-continuous."""
        raise NotImplementedError

    def conjugate(self):
        """The convex conjugate as another OrliczFunction."""
        cached = self.__dict__.get("_conjugate_cache")
        if cached is None:
            cached = self._build_conjugate()
            self.__dict__["_conjugate_cache"] = cached
        return cached

    def _build_conjugate(self):
        return NumericConjugate(self)


@dataclass(eq=True)
class PowerOrlicz(OrliczFunction):
    exponent: float = 2.0
    scale: float = 1.0

    def __post_init__(self):
        if not (self.exponent > 1.0 and math.isfinite(self.exponent)):
            raise ValidationError("exponent must be finite and > 1",
                                  field="phi.exponent")
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise ValidationError("scale must be finite and > 0",
                                  field="phi.scale")

    def value(self, u):
        arr = _as_array(u)
        return _like(self.scale * arr**self.exponent, u)

    def derivative(self, u):
        arr = _as_array(u)
        return _like(self.scale * self.exponent * arr**(self.exponent - 1.0), u)

    def _build_conjugate(self):
        r = self.exponent
        dual_r = r / (r - 1.0)
        dual_scale = (r * self.scale)**(-dual_r / r) / dual_r
        partner = PowerOrlicz(exponent=dual_r, scale=dual_scale)
        partner.__dict__["_conjugate_cache"] = self
        return partner


@dataclass(eq=True)
class ExpOrlicz(OrliczFunction):
    """exp(t) - t - 1; doubling fails at infinity, holds near zero."""

    def value(self, u):
        arr = _as_array(u)
        with np.errstate(over="ignore"):
            out = np.expm1(arr) - arr
        return _like(out, u)

    def derivative(self, u):
        arr = _as_array(u)
        with np.errstate(over="ignore"):
            out = np.expm1(arr)
        return _like(out, u)

    def _build_conjugate(self):
        partner = LogOrlicz()
        partner.__dict__["_conjugate_cache"] = self
        return partner


@dataclass(eq=True)
class LogOrlicz(OrliczFunction):
    """(1 + t) log(1 + t) - t; doubling holds everywhere."""

    def value(self, u):
        arr = _as_array(u)
        out = (1.0 + arr) * np.log1p(arr) - arr
        return _like(out, u)

    def derivative(self, u):
        arr = _as_array(u)
        return _like(np.log1p(arr), u)

    def _build_conjugate(self):
        partner = ExpOrlicz()
        partner.__dict__["_conjugate_cache"] = self
        return partner


@dataclass(eq=True)
class FlatZeroOrlicz(OrliczFunction):
    """exp(-1/t) for t <= cutoff, then the matching convex quadratic.

    exp(-1/t) is convex on (0, 1/2]; the cutoff must stay in that range.
    Value, slope and curvature are matched at the cutoff, so the function is
    C^2 and the quadratic tail keeps phi(t)/t -> inf.  Near zero the function
    is flatter than any power, hence phi(2t)/phi(t) = exp(1/(2t)) is
    unbounded and the doubling condition fails at zero.
    """

    cutoff: float = 0.4

    def __post_init__(self):
        if not (0.0 < self.cutoff < 0.5):
            raise ValidationError("cutoff must lie in (0, 0.5)",
                                  field="phi.cutoff")
        t = self.cutoff
        self._f_c = math.exp(-1.0 / t)
        self._p_c = self._f_c / t**2
        self._curv = self._f_c * (1.0 - 2.0 * t) / t**4
        grid = np.linspace(1e-3, 4.0 * t, 2001)
        slopes = np.diff(self.value(grid)) / np.diff(grid)
        if np.any(np.diff(slopes) < -1e-12):
            raise ValidationError("construction is not convex",
                                  field="phi.cutoff")

    def value(self, u):
        arr = _as_array(u)
        with np.errstate(divide="ignore"):
            head = np.exp(-1.0 / np.maximum(arr, 1e-300))
        d = arr - self.cutoff
        tail = self._f_c + self._p_c * d + 0.5 * self._curv * d * d
        return _like(np.where(arr <= self.cutoff, head, tail), u)

    def derivative(self, u):
        arr = _as_array(u)
        with np.errstate(divide="ignore"):
            safe = np.maximum(arr, 1e-300)
            head = np.exp(-1.0 / safe) / safe**2
        tail = self._p_c + self._curv * (arr - self.cutoff)
        return _like(np.where(arr <= self.cutoff, head, tail), u)


@dataclass(eq=True)
class TabulatedOrlicz(OrliczFunction):
    """Piecewise-linear convex interpolation of (t, value) knots.

    Knots must start at (0, 0) and have strictly increasing abscissae and
    nondecreasing chord slopes with the first slope positive.  Beyond the
    last knot the final slope continues, so phi(t)/t stays bounded and the
    function is not an N-function at infinity; conjugate evaluation beyond
    the final slope raises ConvergenceError.
    """

    knots: tuple = ((0.0, 0.0), (1.0, 1.0))
    is_n_function = False

    def __post_init__(self):
        knots = tuple((float(t), float(y)) for t, y in self.knots)
        if len(knots) < 2:
            raise ValidationError("need at least two knots", field="phi.knots")
        if knots[0] != (0.0, 0.0):
            raise ValidationError("first knot must be (0, 0)",
                                  field="phi.knots")
        ts = np.array([t for t, _ in knots])
        ys = np.array([y for _, y in knots])
        if np.any(np.diff(ts) <= 0.0):
            raise ValidationError("knot abscissae must strictly increase",
                                  field="phi.knots")
        slopes = np.diff(ys) / np.diff(ts)
        if slopes[0] <= 0.0 or np.any(np.diff(slopes) < -1e-12):
            raise ValidationError(
                "knot values must be convex with positive initial slope",
                field="phi.knots")
        self.knots = knots
        self._ts = ts
        self._ys = ys
        self._slopes = slopes

    def value(self, u):
        arr = _as_array(u)
        inside = np.interp(arr, self._ts, self._ys)
        beyond = self._ys[-1] + self._slopes[-1] * (arr - self._ts[-1])
        return _like(np.where(arr <= self._ts[-1], inside, beyond), u)

    def derivative(self, u):
        arr = _as_array(u)
        seg = np.searchsorted(self._ts, arr, side="right") - 1
        seg = np.clip(seg, 0, len(self._slopes) - 1)
        return _like(self._slopes[seg], u)


@dataclass(eq=True)
class NumericConjugate(OrliczFunction):
    """Conjugate computed from the base function's right derivative.

    value(v) solves p(u) >= v by bisection and returns u*v - phi(u);
    derivative(v) is the generalized inverse sup{u : p(u) <= v}.  Used for
    families without a closed-form partner.
    """

    base: OrliczFunction

    def __post_init__(self):
        self.is_n_function = self.base.is_n_function

    def _argmax(self, v):
        if v == 0.0:
            return 0.0
        try:
            return solvers.smallest_satisfying(
                lambda u: self.base.derivative(u) >= v,
                rel_tol=self.base.tol_rel * 1e-4)
        except ConvergenceError as exc:
            raise ConvergenceError(
                "conjugate undefined: the derivative never reaches "
                f"{v:g}; the base function is not an N-function at infinity"
            ) from exc

    def value(self, v):
        arr = _as_array(v)
        flat = np.atleast_1d(arr).ravel()
        out = np.empty_like(flat)
        for i, entry in enumerate(flat):
            u = self._argmax(entry)
            out[i] = u * entry - self.base.value(u)
        return _like(out.reshape(np.shape(arr)), v)

    def derivative(self, v):
        arr = _as_array(v)
        flat = np.atleast_1d(arr).ravel()
        out = np.empty_like(flat)
        for i, entry in enumerate(flat):
            out[i] = solvers.smallest_satisfying(
                lambda u: self.base.derivative(u) > entry,
                rel_tol=self.base.tol_rel * 1e-4)
        return _like(out.reshape(np.shape(arr)), v)

    def _build_conjugate(self):
        return self.base


def young_gap(phi, u, v):
    """phi(u) + phi*(v) - u*v; nonnegative, zero exactly when v = p(u)."""
    return phi.value(u) + phi.conjugate().value(v) - np.asarray(u) * np.asarray(v)


def _doubling_ratio(phi, grid):
    lo = phi.value(grid)
    hi = phi.value(2.0 * grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(lo > 0.0, hi / np.maximum(lo, 1e-300), np.inf)
    return ratio


def delta2_classify(phi):
    """Doubling-condition report for one Orlicz function.

    Returns a dict with boolean keys "global", "at_infinity", "at_zero",
    a float "K_estimate" (supremum of phi(2u)/phi(u) over the range on which
    the strongest true condition is quoted) and "heuristic" marking families
    classified by sampling rather than by closed-form growth.
    """
    if isinstance(phi, NumericConjugate):
        if isinstance(phi.base, FlatZeroOrlicz):
            # quadratic tail of the base makes the conjugate quadratic at
            # infinity; flatness of the base at zero turns into a mildly
            # varying slope at zero, so doubling holds everywhere
            grid = np.logspace(-6, 3, 181)
            ratio = _doubling_ratio(phi, grid)
            return {"global": True, "at_infinity": True, "at_zero": True,
                    "K_estimate": float(np.max(ratio)), "heuristic": True}
        hi = 0.0
        if isinstance(phi.base, TabulatedOrlicz):
            hi = math.log10(phi.base._slopes[-1] / 2.0)
        grid = np.logspace(-8, hi, 161)
        ratio = _doubling_ratio(phi, grid)
        return {"global": True, "at_infinity": True, "at_zero": True,
                "K_estimate": float(np.max(ratio)), "heuristic": True}
    if isinstance(phi, PowerOrlicz):
        return {"global": True, "at_infinity": True, "at_zero": True,
                "K_estimate": 2.0**phi.exponent, "heuristic": False}
    if isinstance(phi, ExpOrlicz):
        grid = np.logspace(-8, 0, 161)
        ratio = _doubling_ratio(phi, grid)
        return {"global": False, "at_infinity": False, "at_zero": True,
                "K_estimate": float(np.max(ratio)), "heuristic": False}
    if isinstance(phi, LogOrlicz):
        grid = np.logspace(-8, 8, 321)
        ratio = _doubling_ratio(phi, grid)
        return {"global": True, "at_infinity": True, "at_zero": True,
                "K_estimate": float(np.max(ratio)), "heuristic": False}
    if isinstance(phi, FlatZeroOrlicz):
        grid = np.logspace(math.log10(phi.cutoff), 8, 161)
        ratio = _doubling_ratio(phi, grid)
        return {"global": False, "at_infinity": True, "at_zero": False,
                "K_estimate": float(np.max(ratio)), "heuristic": False}
    if isinstance(phi, TabulatedOrlicz):
        lo = max(phi._ts[1] * 1e-3, 1e-12)
        hi = phi._ts[-1] * 10.0
        grid = np.logspace(math.log10(lo), math.log10(hi), 201)
        ratio = _doubling_ratio(phi, grid)
        return {"global": True, "at_infinity": True, "at_zero": True,
                "K_estimate": float(max(np.max(ratio), 2.0)),
                "heuristic": True}
    raise DomainError(f"unknown Orlicz family: {type(phi).__name__}")
