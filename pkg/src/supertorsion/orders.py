"""Independent computation of the exact order of [P - O] in the Jacobian.

Three backends:

* ``order_of_class`` -- works for any d: find the least k such that some
  function with pole divisor <= k*O vanishes at P to order >= k.  Such a
  function has divisor exactly k(P) - k(O), so k is the class order.  The
  search is exact linear algebra on truncated local expansions at P.
* ``elliptic_order`` -- chord/tangent group law on y^2 = cubic.
* ``cantor_order``  -- Mumford representation plus composition/reduction for
  hyperelliptic y^2 = f with odd deg f (genus >= 1), char != 2.

All backends are pure and deterministic; they are meant to cross-check each
other and the certificate constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curves import AffinePoint, SuperellipticCurve
from .errors import (
    BadParameters,
    NotRamified,
    PrecisionExhausted,
    RamifiedPoint,
    SingularCurve,
)
from .poly import Poly, TruncatedSeries, is_squarefree, poly_xgcd, series_dth_root


# ---------------------------------------------------------------------------
# Riemann-Roch style basis of functions with poles only at O
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RiemannRochBasis:
    """Monomials x^i y^j (0 <= j < d) with pole order d*i + n*j <= k at O.

    gcd(n, d) = 1 makes the pole orders pairwise distinct, so these monomials
    are a basis of the space of functions with divisor >= -k*O.
    """

    n: int
    d: int
    k: int
    monomials: tuple  # of (i, j)

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def rr_basis(n: int, d: int, k: int) -> RiemannRochBasis:
    if gcd(n, d) != 1:
        raise BadParameters("pole orders collide unless gcd(n, d) = 1")
    mons = [(i, j) for j in range(d) for i in range(k // d + 1) if d * i + n * j <= k]
    mons.sort(key=lambda ij: d * ij[0] + n * ij[1])
    return RiemannRochBasis(n=n, d=d, k=k, monomials=tuple(mons))


def gap_semigroup_count(n: int, d: int, k: int) -> int:
    """#{s <= k : s in the numerical semigroup generated by d and n}."""
    reachable = [False] * (k + 1)
    reachable[0] = True
    for s in range(1, k + 1):
        if (s >= d and reachable[s - d]) or (s >= n and reachable[s - n]):
            reachable[s] = True
    return sum(reachable)


def genus(n: int, d: int) -> int:
    """Number of gaps of the semigroup <d, n> = (n-1)(d-1)/2."""
    return (n - 1) * (d - 1) // 2


# ---------------------------------------------------------------------------
# exact left kernel of a small coefficient matrix
# ---------------------------------------------------------------------------

def left_kernel_vector(rows, field):
    """A nonzero vector c with sum_i c_i * rows[i] = 0, or None.

    Elimination tracks the combination in an identity tableau.  Over Q every
    row is first scaled to a primitive integer vector and updates use
    cross-multiplication, so all intermediate entries stay integral.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    m = len(rows)
    aug = []
    for i, r in enumerate(rows):
        tail = [field.zero] * m
        tail[i] = field.one
        aug.append(_primitive(list(r) + tail, field))
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, m):
            if not aug[r][col].is_zero():
                sel = r
                break
        if sel is None:
            continue
        aug[rank], aug[sel] = aug[sel], aug[rank]
        pivot = aug[rank][col]
        for r in range(rank + 1, m):
            if aug[r][col].is_zero():
                continue
            c = aug[r][col]
            aug[r] = _primitive(
                [pivot * aug[r][j] - c * aug[rank][j] for j in range(len(aug[r]))],
                field)
        rank += 1
        if rank == m:
            break
    if rank == m:
        return None
    return tuple(aug[rank][ncols:])


def _primitive(row, field):
    if field.kind != "Q":
        return row
    # clear denominators and divide by the integer content
    denlcm = 1
    for c in row:
        d = c.value.denominator
        denlcm = denlcm * d // gcd(denlcm, d)
    ints = [int(c.value * denlcm) for c in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return [field(v) for v in ints]


# ---------------------------------------------------------------------------
# order via vanishing functions (any d)
# ---------------------------------------------------------------------------

def _monomial_expansions(curve: SuperellipticCurve, point: AffinePoint, max_k: int,
                         precision: int):
    """Truncated t-expansions of the basis monomials at P, t = x - x(P)."""
    field = curve.field
    s = series_dth_root(curve.f, curve.d, point.x, point.y, precision)
    xser = TruncatedSeries(field, [point.x, field.one], precision)
    xpows = [TruncatedSeries(field, [field.one], precision)]
    for _ in range(max_k // curve.d + 1):
        xpows.append(xpows[-1] * xser)
    ypows = [TruncatedSeries(field, [field.one], precision)]
    for _ in range(curve.d - 1):
        ypows.append(ypows[-1] * s)

    def expand(i, j):
        return xpows[i] * ypows[j]

    return expand


def principality_profile(curve: SuperellipticCurve, point: AffinePoint, max_k: int):
    """[k in 1..max_k for which k(P) - k(O) is a principal divisor]."""
    if point.y.is_zero():
        raise RamifiedPoint("use order_of_ramified for points with y = 0")
    if max_k < 1:
        raise BadParameters("max_k must be >= 1")
    if not curve.contains(point.x, point.y):
        raise BadParameters("point does not lie on the curve")
    precision = max_k + 2
    expand = _monomial_expansions(curve, point, max_k, precision)
    principal = []
    for k in range(1, max_k + 1):
        basis = rr_basis(curve.n, curve.d, k)
        rows = [list(expand(i, j).coeffs[:k]) for (i, j) in basis.monomials]
        combo = left_kernel_vector(rows, curve.field)
        if combo is None:
            continue
        # the combination must vanish to order exactly k, never deeper
        full = [list(expand(i, j).coeffs) for (i, j) in basis.monomials]
        residual = [sum((c * row[t] for c, row in zip(combo, full)),
                        start=curve.field.zero) for t in range(precision)]
        if any(not residual[t].is_zero() for t in range(k)):
            raise PrecisionExhausted("kernel vector failed to vanish as computed")
        if residual[k].is_zero():
            raise PrecisionExhausted(
                f"vanishing order exceeded {k}; divisor bookkeeping violated")
        principal.append(k)
    return principal


def order_of_class(curve: SuperellipticCurve, point: AffinePoint,
                   max_k: int | None = None):
    """Least k with k(P) - k(O) principal, i.e. the order of [P - O]; None if
    it exceeds max_k (default 2*m0)."""
    if max_k is None:
        max_k = 2 * curve.params.m0
    if point.y.is_zero():
        raise RamifiedPoint("use order_of_ramified for points with y = 0")
    if max_k < 1:
        raise BadParameters("max_k must be >= 1")
    if not curve.contains(point.x, point.y):
        raise BadParameters("point does not lie on the curve")
    precision = max_k + 2
    expand = _monomial_expansions(curve, point, max_k, precision)
    for k in range(1, max_k + 1):
        basis = rr_basis(curve.n, curve.d, k)
        rows = [list(expand(i, j).coeffs[:k]) for (i, j) in basis.monomials]
        if left_kernel_vector(rows, curve.field) is not None:
            return k
    return None


def order_of_ramified(curve: SuperellipticCurve, point: AffinePoint) -> int:
    """Points with y = 0 have class order exactly d: x - x(P) has divisor
    d(P) - d(O) because f is squarefree at x(P)."""
    if not point.y.is_zero():
        raise NotRamified("point has y != 0")
    if not curve.f(point.x).is_zero():
        raise NotRamified("x(P) is not a root of f")
    # squarefreeness of f makes x(P) a simple root, so ord_P(x - x(P)) = d
    cofactor = curve.f // Poly(curve.field, (-point.x, curve.field.one))
    assert not cofactor(point.x).is_zero()
    return curve.d


# ---------------------------------------------------------------------------
# elliptic backend (y^2 = general cubic, one point at infinity)
# ---------------------------------------------------------------------------

def _check_cubic(f: Poly):
    if f.degree != 3:
        raise BadParameters("elliptic backend needs deg f = 3")
    if f.field.characteristic() == 2:
        raise BadParameters("char 2 not supported")
    if not is_squarefree(f):
        raise SingularCurve("cubic has repeated roots")


def elliptic_add(f: Poly, P, Q):
    """Chord/tangent addition on y^2 = f(x) (deg 3); None encodes O."""
    if P is None:
        return Q
    if Q is None:
        return P
    field = f.field
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2).is_zero():
        return None
    if x1 == x2:
        slope = f.derivative()(x1) / (field(2) * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    c3, c2 = f[3], f[2]
    x3 = (slope * slope - c2) / c3 - x1 - x2
    y3 = -(y1 + slope * (x3 - x1))
    return (x3, y3)


def elliptic_order(f: Poly, point, max_m: int):
    """Least m <= max_m with m*P = O under the chord/tangent law; else None."""
    _check_cubic(f)
    if isinstance(point, AffinePoint):
        point = (point.x, point.y)
    x, y = point
    if y * y != f(x):
        raise BadParameters("point does not lie on y^2 = f(x)")
    acc = point
    for m in range(1, max_m + 1):
        if acc is None:
            return m
        acc = elliptic_add(f, acc, point)
    return None


# ---------------------------------------------------------------------------
# Cantor backend (hyperelliptic y^2 = f, odd degree)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MumfordDivisor:
    """Reduced divisor (u, v): u monic, deg v < deg u <= genus, u | v^2 - f."""

    u: Poly
    v: Poly

    @classmethod
    def validated(cls, f: Poly, u: Poly, v: Poly):
        if u.is_zero() or u.leading != f.field.one:
            raise BadParameters("u must be monic")
        if not v.is_zero() and v.degree >= u.degree:
            raise BadParameters("need deg v < deg u")
        if not ((v * v - f) % u).is_zero():
            raise BadParameters("v^2 != f mod u")
        return cls(u=u, v=v)

    @classmethod
    def identity(cls, field):
        return cls(u=Poly.one(field), v=Poly.zero(field))

    @classmethod
    def from_point(cls, f: Poly, point):
        if isinstance(point, AffinePoint):
            point = (point.x, point.y)
        x0, y0 = point
        if y0 * y0 != f(x0):
            raise BadParameters("point does not lie on y^2 = f(x)")
        u = Poly(f.field, (-x0, f.field.one))
        v = Poly(f.field, (y0,))
        return cls(u=u, v=v)

    def is_identity(self):
        return self.u.degree == 0


def _cantor_compose(f: Poly, g: int, D1: MumfordDivisor, D2: MumfordDivisor):
    u1, v1 = D1.u, D1.v
    u2, v2 = D2.u, D2.v
    d1, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(d1, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2) // (d * d)
    t = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v = (t // d) % u
    return u.monic(), v


def _cantor_reduce(f: Poly, g: int, u: Poly, v: Poly):
    while u.degree > g:
        u2 = (f - v * v) // u
        v2 = (-v) % u2
        u, v = u2.monic(), v2
    return u, v % u if not u.is_constant() else Poly.zero(f.field)


def cantor_add(f: Poly, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    g = (f.degree - 1) // 2
    u, v = _cantor_compose(f, g, D1, D2)
    u, v = _cantor_reduce(f, g, u, v)
    return MumfordDivisor(u=u, v=v)


def _monicize(f: Poly, divisor: MumfordDivisor):
    """Transform y^2 = f to a monic model via (x, y) -> (c*x, c^g * y)."""
    field = f.field
    c = f.leading
    n = f.degree
    g = (n - 1) // 2
    F = Poly(field, [f[i] * c ** (n - 1 - i) for i in range(n + 1)])
    assert F.leading == field.one
    cg = c ** g
    # u(x) monic deg r  ->  c^r * u(X/c) monic in X; v(x) -> c^g * v(X/c)
    r = divisor.u.degree
    U = Poly(field, [divisor.u[i] * c ** (r - i) for i in range(r + 1)])
    V = Poly(field, [divisor.v[i] * cg / c ** i
                     for i in range(divisor.v.degree + 1)]) \
        if not divisor.v.is_zero() else Poly.zero(field)
    return F, MumfordDivisor.validated(F, U, V)


def cantor_order(f: Poly, divisor, max_m: int):
    """Least m <= max_m with m*[D] = 0 on Jac(y^2 = f), deg f odd; else None."""
    if f.degree % 2 != 1 or f.degree < 3:
        raise BadParameters("need odd deg f >= 3")
    if f.field.characteristic() == 2:
        raise BadParameters("char 2 not supported")
    if not is_squarefree(f):
        raise SingularCurve("f has repeated roots")
    if isinstance(divisor, (AffinePoint, tuple)):
        divisor = MumfordDivisor.from_point(f, divisor)
    else:
        divisor = MumfordDivisor.validated(f, divisor.u, divisor.v)
    if divisor.is_identity():
        return 1
    if f.leading != f.field.one:
        f, divisor = _monicize(f, divisor)
    acc = divisor
    for m in range(1, max_m + 1):
        if acc.is_identity():
            return m
        acc = cantor_add(f, acc, divisor)
    return None
