"""The curve y^d = f(x), its points, derived torsion constants, and the
reachability classification of candidate torsion orders.

Throughout: 2 <= d < n, gcd(n, d) = 1, char of the base field does not
divide d, and f is squarefree of exact degree n.  The smooth model then has a
single point O above x = infinity, with pole orders v_O(x) = -d and
v_O(y) = -n; classes [P - O] live in the Jacobian.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import BadParameters, NotOnCurve, RamifiedPoint, UnsupportedField
from .fields import Field, FieldElement
from .poly import Poly, is_squarefree


@dataclass(frozen=True)
class TorsionParams:
    """Derived constants for a given (n, d)."""

    n: int
    d: int
    ell0: int
    m0: int
    slack: int  # n - m0 + ell0; nonnegative iff order-m0 points can exist


def torsion_params(n: int, d: int) -> TorsionParams:
    """ell0 = floor((n+d)/d), m0 = d*ell0: the unique multiple of d strictly
    between n and n+d.  slack may be negative."""
    _validate_nd(n, d)
    ell0 = (n + d) // d
    m0 = d * ell0
    assert n < m0 < n + d and ell0 >= 2
    return TorsionParams(n=n, d=d, ell0=ell0, m0=m0, slack=n - m0 + ell0)


def _validate_nd(n: int, d: int):
    if not (2 <= d < n):
        raise BadParameters(f"need 2 <= d < n, got d={d}, n={n}")
    if gcd(n, d) != 1:
        raise BadParameters(f"need gcd(n, d) = 1, got gcd({n}, {d}) = {gcd(n, d)}")


class ReachabilityStatus(enum.Enum):
    REACHABLE_D_OR_N = "reachable_d_or_n"
    IMPOSSIBLE = "impossible"
    REQUIRES_M0_CONDITIONS = "requires_m0_conditions"
    ABOVE_M0 = "above_m0"


@dataclass(frozen=True)
class ReachabilityReport:
    status: ReachabilityStatus
    n: int
    d: int
    m: int
    params: TorsionParams
    reason: str
    # For m = m0 with slack >= 0: the sufficient conditions on the
    # characteristic under which order m0 is realized over an infinite base
    # field.  Sufficient only; a False entry never proves impossibility.
    m0_conditions: tuple = ()
    m0_condition_met: bool | None = None


def reachability_status(n: int, d: int, m: int, char: int = 0) -> ReachabilityReport:
    """Classify a candidate torsion order m for curves y^d = f(x), deg f = n."""
    params = torsion_params(n, d)
    if m <= 1:
        raise BadParameters("torsion order m must be > 1")
    if m in (d, n):
        return ReachabilityReport(ReachabilityStatus.REACHABLE_D_OR_N, n, d, m, params,
                                  "orders d and n occur for every base field")
    if 1 < m < d or d < m < n:
        return ReachabilityReport(ReachabilityStatus.IMPOSSIBLE, n, d, m, params,
                                  "no order strictly between 1 and d, or d and n")
    if n < m < params.m0:
        return ReachabilityReport(ReachabilityStatus.IMPOSSIBLE, n, d, m, params,
                                  f"orders above n start at m0 = {params.m0}")
    if m == params.m0:
        if params.slack < 0:
            return ReachabilityReport(
                ReachabilityStatus.IMPOSSIBLE, n, d, m, params,
                f"slack = {params.slack} < 0 rules out order m0")
        conds = _m0_char_conditions(params, char)
        return ReachabilityReport(
            ReachabilityStatus.REQUIRES_M0_CONDITIONS, n, d, m, params,
            "order m0 needs the certificate shape; sufficient char conditions attached",
            m0_conditions=conds, m0_condition_met=any(ok for _, ok in conds))
    return ReachabilityReport(ReachabilityStatus.ABOVE_M0, n, d, m, params,
                              "orders above m0 are not classified here")


def _m0_char_conditions(params: TorsionParams, char: int):
    conds = [("char = 0", char == 0), (f"char > n = {params.n}", char > params.n)]
    if params.slack == 0:
        conds.append((f"char does not divide ell0 = {params.ell0}",
                      char == 0 or params.ell0 % char != 0))
    else:
        conds.append((f"char does not divide slack = {params.slack}",
                      char == 0 or params.slack % char != 0))
    return tuple(conds)


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    def __iter__(self):
        return iter((self.x, self.y))

    def __repr__(self):
        return f"({self.x!r}, {self.y!r})"


class SuperellipticCurve:
    """y^d = f(x) with the standing validity assumptions checked up front."""

    __slots__ = ("field", "d", "n", "f", "params")

    def __init__(self, field: Field, d: int, f: Poly):
        if f.field != field:
            raise BadParameters("f is not defined over the given field")
        if f.is_zero() or f.is_constant():
            raise BadParameters("f must be nonconstant")
        n = f.degree
        _validate_nd(n, d)
        char = field.characteristic()
        if char != 0 and d % char == 0:
            raise BadParameters(f"characteristic {char} divides d = {d}")
        if not is_squarefree(f):
            raise BadParameters("f has repeated roots")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "params", torsion_params(n, d))

    def __setattr__(self, name, value):
        raise AttributeError("SuperellipticCurve is immutable")

    def __eq__(self, other):
        return (isinstance(other, SuperellipticCurve) and self.field == other.field
                and self.d == other.d and self.f == other.f)

    def __hash__(self):
        return hash((self.field, self.d, self.f))

    def __repr__(self):
        return f"SuperellipticCurve(y^{self.d} = {self.f!r} over {self.field!r})"

    def contains(self, x, y) -> bool:
        x, y = self.field(x), self.field(y)
        return y ** self.d == self.f(x)

    def point(self, x, y) -> AffinePoint:
        x, y = self.field(x), self.field(y)
        if not self.contains(x, y):
            raise NotOnCurve(f"y^{self.d} != f(x) at ({x!r}, {y!r})")
        return AffinePoint(x, y)

    def points_above(self, x):
        """All affine points with the given abscissa."""
        x = self.field(x)
        target = self.f(x)
        if self.field.kind == "Fp":
            return tuple(AffinePoint(x, y) for y in self.field.elements()
                         if y ** self.d == target)
        # over Q: y is a rational d-th root when one exists
        r = self.field.nth_root(target, self.d)
        if r is None:
            return ()
        pts = [AffinePoint(x, r)]
        if self.d % 2 == 0 and not r.is_zero():
            pts.append(AffinePoint(x, -r))
        return tuple(pts)


def point_on_curve(curve: SuperellipticCurve, x, y) -> AffinePoint:
    return curve.point(x, y)


def mu_d_orbit(curve: SuperellipticCurve, point: AffinePoint):
    """The d points (x, zeta*y) for zeta running over mu_d; needs mu_d in the
    base field and y != 0."""
    if point.y.is_zero():
        raise RamifiedPoint("orbit of a ramified point is trivial")
    try:
        zetas = curve.field.roots_of_unity(curve.d)
    except UnsupportedField:
        raise UnsupportedField(
            f"mu_{curve.d} is not rational over {curve.field!r}") from None
    return tuple(AffinePoint(point.x, z * point.y) for z in zetas)
