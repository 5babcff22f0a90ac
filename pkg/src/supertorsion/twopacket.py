"""Curves with two packets of order-m0 points, specialized constructions for
d = 2, and the finite exclusion set of bad lambda values.

For d = 2 the degree n is odd, m0 = n + 1 and ell0 = (n+1)/2.  A curve with
packets above x = 0 and x = -1 is the same thing as a double representation

    f = A1 x^(n+1) - u(x)^2 = A2 (x+1)^(n+1) - v(x)^2,   deg u = deg v = ell0.

Writing C for an (n+1)-th root of A1/A2 (C = 1 when A1 = A2), the monic
normalizations of u and v split the cyclotomic product
prod_{eps in mu_{n+1}} ((1 - C*eps)x + 1) into two halves H_I * H_{comp(I)},
which leads to the one-parameter shapes

    vt = (lam*H_I + (1/lam)*H_comp) / 2
    ut = (lam*H_I - (1/lam)*H_comp) / (2 C^ell0)        ("plus" sign; the
                                                         "minus" sign negates ut)

Only finitely many lam make x^(n+1) - ut^2 non-squarefree; ``bad_lambda_set``
assembles that exclusion set from the multiple-root analysis, and
``confirmed_bad_lambdas`` recomputes it by exhaustive sweep as an independent
check.  Separately, only the lam for which ut has leading coefficient +-1
give the polynomial degree n (anything else leaves degree n+1, which defines
no curve with a single infinite point); ``normalizing_lambdas`` lists them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import AffinePoint, SuperellipticCurve, torsion_params
from .errors import (
    BadParameters,
    CharDividesM0,
    DegreeNotNormalized,
    LinearlyDependent,
    NonvanishingViolation,
    NoRootOfUnityStructure,
    NoSquareRoot,
    NotSquarefree,
    SameAbscissa,
    UnsupportedField,
    ZeroParameter,
)
from .fields import Field, FieldElement, PrimeField
from .poly import Poly, is_squarefree, roots_in_field


# ---------------------------------------------------------------------------
# admissibility of (n, d) for two packets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Necessary conditions for >= 2 packets of order-m0 points, valid over
    characteristic-0 base fields with slack >= 0 and m0 != n+1.  The case
    m0 = n+1 is exempt: it always carries two packets (see
    ``example_m0_equals_nplus1``)."""

    n: int
    d: int
    m0: int
    ell0: int
    slack: int
    allowed: bool
    exempt: bool
    reasons: tuple

    @property
    def verdict(self) -> str:
        if self.exempt:
            return "exempt"
        return "allowed" if self.allowed else "disallowed"


def two_packet_admissible(n: int, d: int) -> AdmissibilityVerdict:
    params = torsion_params(n, d)
    if params.m0 == n + 1:
        return AdmissibilityVerdict(n=n, d=d, m0=params.m0, ell0=params.ell0,
                                    slack=params.slack, allowed=True, exempt=True,
                                    reasons=())
    reasons = []
    if params.slack < 0:
        reasons.append(f"slack = {params.slack} < 0: no order-m0 points at all")
    if d > 5:
        reasons.append("(i) d <= 5 fails")
    if n < 2 * d:
        if d > 4:
            reasons.append("(ii) n < 2d forces d <= 4")
        if params.m0 != 2 * d:
            reasons.append("(ii) n < 2d forces m0 = 2d")
        if n > 7:
            reasons.append("(ii) n < 2d forces n <= 7")
    if n == 7 and d != 3:
        reasons.append("(iii) n = 7 forces d = 3")
    if n in (5, 6):
        reasons.append("(iv) n is not 5 or 6")
    if n == 4 and d != 3:
        reasons.append("(v) n = 4 forces d = 3")
    if n == 9 and d != 4:
        reasons.append("(vi) n = 9 forces d = 4")
    return AdmissibilityVerdict(n=n, d=d, m0=params.m0, ell0=params.ell0,
                                slack=params.slack, allowed=not reasons,
                                exempt=False, reasons=tuple(reasons))


# ---------------------------------------------------------------------------
# Wronskian machinery (any d)
# ---------------------------------------------------------------------------

def fermat_identity_check(f1: Poly, f2: Poly, f3: Poly, d: int):
    """Whether f1^d + f2^d + f3^d is a nonzero constant; returns
    (is_constant, value_or_None)."""
    s = f1 ** d + f2 ** d + f3 ** d
    if s.is_zero() or not s.is_constant():
        return False, None
    return True, s[0]


def wronskian3(g1: Poly, g2: Poly, g3: Poly) -> Poly:
    """3x3 Wronskian determinant with rows (g, g', g'')."""
    rows = [(g, g.derivative(), g.derivative().derivative()) for g in (g1, g2, g3)]
    cols = list(zip(*rows))  # cols[k][i] = k-th derivative of g_{i+1}
    det = Poly.zero(g1.field)
    for sign, (i, j, k) in (
            (1, (0, 1, 2)), (-1, (0, 2, 1)), (-1, (1, 0, 2)),
            (1, (1, 2, 0)), (1, (2, 0, 1)), (-1, (2, 1, 0))):
        term = cols[0][i] * cols[1][j] * cols[2][k]
        det = det + term if sign > 0 else det - term
    return det


def wronskian_pair_form(f1: Poly, f2: Poly, d: int, constant: FieldElement) -> Poly:
    """constant * ((f1^d)'(f2^d)'' - (f2^d)'(f1^d)''): what the Wronskian of
    (f1^d, f2^d, f3^d) collapses to when f1^d + f2^d + f3^d = constant."""
    a, b = f1 ** d, f2 ** d
    a1, b1 = a.derivative(), b.derivative()
    a2, b2 = a1.derivative(), b1.derivative()
    return (a1 * b2 - b1 * a2) * constant


def wronskian_divisibility(f1: Poly, f2: Poly, f3: Poly, d: int) -> bool:
    """W(f1^d, f2^d, f3^d) is divisible by (f1 f2 f3)^(d-2): every entry of
    the i-th column carries f_i^(d-2)."""
    w = wronskian3(f1 ** d, f2 ** d, f3 ** d)
    if d <= 2:
        return True
    divisor = (f1 * f2 * f3) ** (d - 2)
    if divisor.is_zero():
        return w.is_zero()
    return (w % divisor).is_zero()


@dataclass(frozen=True)
class WronskianAudit:
    degree: int
    lower: int
    upper: int
    degree_ok: bool
    slope_bound_ok: bool  # ell0 (d - 6) <= -3
    divisibility_ok: bool


def wronskian_degree_audit(f1: Poly, f2: Poly, f3: Poly, d: int,
                           ell0: int) -> WronskianAudit:
    """Degree window 3*ell0*(d-2) <= deg W <= 2*ell0*d - 3 for independent
    d-th powers, plus the derived constraint ell0*(d-6) <= -3."""
    w = wronskian3(f1 ** d, f2 ** d, f3 ** d)
    if w.is_zero():
        raise LinearlyDependent("f1^d, f2^d, f3^d are linearly dependent")
    lower, upper = 3 * ell0 * (d - 2), 2 * ell0 * d - 3
    return WronskianAudit(
        degree=w.degree, lower=lower, upper=upper,
        degree_ok=lower <= w.degree <= upper,
        slope_bound_ok=ell0 * (d - 6) <= -3,
        divisibility_ok=wronskian_divisibility(f1, f2, f3, d))


# ---------------------------------------------------------------------------
# the H products and packet shapes (d = 2)
# ---------------------------------------------------------------------------

def build_H(I, C: FieldElement) -> Poly:
    """prod_{eps in I} ((1 - C*eps) x + 1).  A factor with C*eps = 1 is the
    constant 1 and silently drops the degree; callers that need full degree
    must check ``degenerate_factors``."""
    field = C.field
    h = Poly.one(field)
    for eps in I:
        h = h * Poly(field, (field.one, field.one - C * eps))
    return h


def degenerate_factors(I, C: FieldElement):
    return tuple(eps for eps in I if (C * eps) == C.field.one)


def _mu_and_complement(field: Field, n: int, I):
    mu = field.roots_of_unity(n + 1)
    I = tuple(I)
    for eps in I:
        if eps not in mu:
            raise BadParameters(f"{eps!r} is not an (n+1)-th root of unity")
    if len(set(I)) != len(I):
        raise BadParameters("I has repeated elements")
    comp = tuple(e for e in mu if e not in I)
    return mu, I, comp


def _packet_inputs(field: Field, n: int, I, lam, C):
    if field.kind != "Fp":
        raise UnsupportedField("packet constructions live over prime fields")
    if n % 2 != 1 or n < 3:
        raise BadParameters("d = 2 needs odd n >= 3")
    p = field.p
    if p == 2 or (n + 1) % p == 0:
        raise BadParameters(f"need p odd with p not dividing n+1 = {n + 1}")
    ell0 = (n + 1) // 2
    lam = field(lam)
    if lam.is_zero():
        raise ZeroParameter("lambda must be nonzero")
    C = field(C)
    if C.is_zero():
        raise ZeroParameter("C must be nonzero")
    mu, I, comp = _mu_and_complement(field, n, I)
    if len(I) != ell0:
        raise BadParameters(f"|I| = {len(I)}, expected ell0 = {ell0}")
    return p, ell0, lam, C, I, comp


def packet_parts(field: Field, n: int, I, lam, C, sign: str = "plus"):
    """(ut, vt) for the given subset and lambda.

    vt = (lam*H_I + (1/lam)*H_comp)/2 always;
    ut = +-(lam*H_I - (1/lam)*H_comp)/(2 C^ell0) with the sign chosen by
    ``sign`` in {"plus", "minus"}.
    """
    if sign not in ("plus", "minus"):
        raise BadParameters("sign must be 'plus' or 'minus'")
    _, ell0, lam, C, I, comp = _packet_inputs(field, n, I, lam, C)
    hi, hc = build_H(I, C), build_H(comp, C)
    half = field(2).inverse()
    a, b = lam * half, lam.inverse() * half
    vt = a * hi + b * hc
    ut = (a * hi - b * hc) * (C ** ell0).inverse()
    if sign == "minus":
        ut = -ut
    return ut, vt


def packet_polynomial(field: Field, n: int, I, lam, C, sign: str = "plus") -> Poly:
    """x^(n+1) - ut^2: degree n exactly when lam normalizes the leading term,
    degree n+1 otherwise.  Squarefreeness of this polynomial is what the bad
    lambda analysis controls."""
    ut, _ = packet_parts(field, n, I, lam, C, sign)
    return Poly.monomial(field, n + 1) - ut * ut


def normalizing_lambdas(field: Field, n: int, I, C):
    """The lam with leading(ut) = +-1, i.e. the only lam for which
    x^(n+1) - ut^2 has degree n.  At most four values."""
    _, ell0, _, C, I, comp = _packet_inputs(field, n, I, 1, C)
    hi, hc = build_H(I, C), build_H(comp, C)
    a = hi[ell0]  # 0 when the H_I factor for eps with C*eps = 1 dropped degree
    b = hc[ell0]
    out = []
    two_cl = 2 * C ** ell0
    for target in (two_cl, -two_cl):
        # lam*a - (1/lam)*b = target  <=>  a*lam^2 - target*lam - b = 0
        for lam in _quadratic_roots(a, -target, -b, field):
            if not lam.is_zero() and lam not in out:
                out.append(lam)
    return tuple(out)


def _quadratic_roots(a: FieldElement, b: FieldElement, c: FieldElement, field):
    """Roots in the base field of a*x^2 + b*x + c (degenerating gracefully)."""
    if a.is_zero():
        if b.is_zero():
            return ()
        return (-c / b,)
    disc = b * b - 4 * a * c
    s = field.sqrt(disc)
    if s is None:
        return ()
    inv2a = (2 * a).inverse()
    r1, r2 = (-b + s) * inv2a, (-b - s) * inv2a
    return (r1,) if r1 == r2 else (r1, r2)


# ---------------------------------------------------------------------------
# the families themselves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PacketFamily:
    """A verified two-packet hyperelliptic curve y^2 = f with
    f = A1 x^(n+1) - u^2 = A2 (x+1)^(n+1) - v^2."""

    field: Field
    p: int
    n: int
    ell0: int
    m0: int
    I: tuple
    lam: FieldElement
    C: FieldElement
    A1: FieldElement
    A2: FieldElement
    B1: FieldElement
    B2: FieldElement
    u: Poly
    v: Poly
    f: Poly
    sign: str
    twisted: bool  # True when built in the normalized (A1 = 1) twist form

    def curve(self) -> SuperellipticCurve:
        return SuperellipticCurve(self.field, 2, self.f)

    def packet_points(self):
        """All points above x = 0 and x = -1 (two packets of two)."""
        curve = self.curve()
        pts = []
        for a in (self.field.zero, -self.field.one):
            pts.extend(curve.points_above(a))
        return tuple(pts)


def _finish_family(field, n, I, lam, C, A1, A2, B1, B2, ut, vt, sign, twisted):
    ell0 = (n + 1) // 2
    u, v = B1 * ut, B2 * vt
    f = A1 * Poly.monomial(field, n + 1) - u * u
    second = A2 * Poly(field, (field.one, field.one)) ** (n + 1) - v * v
    if f != second:
        raise BadParameters("double representation failed: inconsistent inputs")
    if f.degree != n:
        raise DegreeNotNormalized(
            f"lambda = {lam!r} leaves deg f = {f.degree}, not n = {n}; "
            f"normalizing lambdas: {normalizing_lambdas(field, n, I, C)!r}",
            lam=lam, polynomial=f)
    if not is_squarefree(f):
        raise NotSquarefree(f"bad lambda = {lam!r}: f has a repeated root")
    return PacketFamily(field=field, p=field.p, n=n, ell0=ell0, m0=n + 1, I=I,
                        lam=lam, C=C, A1=A1, A2=A2, B1=B1, B2=B2, u=u, v=v, f=f,
                        sign=sign, twisted=twisted)


def build_two_packet_general(field, n: int, I, lam, A1, A2, C=None,
                             sign: str = "plus", allow_twist: bool = True):
    """Unequal case A1 != A2: C is an (n+1)-th root of A1/A2 (passed in or
    found deterministically), u = B1*ut and v = B2*vt for square roots
    B1, B2 of A1, A2.

    When a square root is missing, ``allow_twist`` falls back to the
    normalized model f = x^(n+1) - ut^2 (A1 = 1, A2 = C^-(n+1)), whose roots
    always exist; the result is flagged ``twisted``.
    """
    field = _as_prime_field(field)
    A1, A2 = field(A1), field(A2)
    if A1.is_zero() or A2.is_zero():
        raise ZeroParameter("A1 and A2 must be nonzero")
    if A1 == A2:
        raise BadParameters("equal A1 = A2 is the C = 1 case; use "
                            "build_two_packet_equal")
    ratio = A1 / A2
    if C is None:
        C = field.nth_root(ratio, n + 1)
        if C is None:
            raise NoRootOfUnityStructure(
                f"A1/A2 = {ratio!r} has no (n+1)-th root in F_{field.p}")
    else:
        C = field(C)
        if C ** (n + 1) != ratio:
            raise BadParameters("C^(n+1) != A1/A2")
    ut, vt = packet_parts(field, n, I, lam, C, sign)
    _, ell0, lam, C, I, _ = _packet_inputs(field, n, I, lam, C)
    B1, B2 = field.nth_root(A1, 2), field.nth_root(A2, 2)
    if B1 is None or B2 is None:
        if not allow_twist:
            raise NoSquareRoot(f"A1 or A2 has no square root in F_{field.p}")
        cl_inv = (C ** ell0).inverse()
        return _finish_family(field, n, I, lam, C,
                              field.one, cl_inv * cl_inv, field.one, cl_inv,
                              ut, vt, sign, twisted=True)
    return _finish_family(field, n, I, lam, C, A1, A2, B1, B2, ut, vt, sign,
                          twisted=False)


def build_two_packet_equal(field, n: int, I, lam, sign: str = "plus"):
    """Equal case A1 = A2 = 1, C = 1: one of H_I, H_comp drops to degree
    ell0 - 1 through the eps = 1 factor.  lam = +-1 is excluded up front
    (those always give a degenerate polynomial)."""
    field = _as_prime_field(field)
    lam = field(lam)
    if lam == field.one or lam == -field.one:
        raise BadParameters("lambda = +-1 is excluded in the equal case")
    one = field.one
    ut, vt = packet_parts(field, n, I, lam, one, sign)
    _, ell0, lam, C, I, comp = _packet_inputs(field, n, I, lam, one)
    # the split degrees must be {ell0, ell0 - 1}
    hi, hc = build_H(I, one), build_H(comp, one)
    if {hi.degree, hc.degree} != {ell0, ell0 - 1}:
        raise BadParameters("unexpected H degree split")
    assert {(vt - ut).degree, (vt + ut).degree} == {ell0, ell0 - 1}
    return _finish_family(field, n, I, lam, one, one, one, one, one,
                          ut, vt, sign, twisted=False)


def _as_prime_field(field):
    if isinstance(field, int):
        return PrimeField(field)
    if isinstance(field, PrimeField):
        return field
    raise UnsupportedField("packet constructions live over prime fields")


@dataclass(frozen=True)
class PacketExample:
    """(x+1)^m0 - x^m0 with its two packet abscissas and the double
    representation data."""

    curve: SuperellipticCurve
    abscissas: tuple
    points: tuple  # points realized over the base field
    A2: FieldElement
    v: Poly
    A1: FieldElement
    u: Poly | None  # needs gamma with gamma^d = -1 in the base field
    gamma: FieldElement | None


def example_m0_equals_nplus1(base_field: Field, n: int, d: int) -> PacketExample:
    """The curve y^d = (x+1)^m0 - x^m0 for m0 = n+1: every point above x = 0
    or x = -1 has order m0."""
    params = torsion_params(n, d)
    if params.m0 != n + 1:
        raise BadParameters(f"m0 = {params.m0} != n+1; the example needs d | n+1")
    char = base_field.characteristic()
    if char != 0 and params.m0 % char == 0:
        raise CharDividesM0(f"characteristic {char} divides m0 = {params.m0}")
    m0, ell0 = params.m0, params.ell0
    xp1 = Poly(base_field, (base_field.one, base_field.one))
    f = xp1 ** m0 - Poly.monomial(base_field, m0)
    curve = SuperellipticCurve(base_field, d, f)
    v = Poly.monomial(base_field, ell0)
    assert f == base_field.one * xp1 ** m0 - v ** d
    gamma = base_field.nth_root(base_field(-1), d)
    u = gamma * xp1 ** ell0 if gamma is not None else None
    if u is not None:
        assert f == base_field(-1) * Poly.monomial(base_field, m0) - u ** d
    pts = []
    for a in (base_field.zero, -base_field.one):
        pts.extend(curve.points_above(a))
    return PacketExample(curve=curve, abscissas=(base_field.zero, -base_field.one),
                         points=tuple(pts), A2=base_field.one, v=v,
                         A1=base_field(-1), u=u, gamma=gamma)


# ---------------------------------------------------------------------------
# the exclusion set of bad lambda values
# ---------------------------------------------------------------------------

def nonvanishing_bracket(h: Poly, ell0: int) -> Poly:
    """ell0*H - x*H': kills the top coefficient, keeps ell0*H(0) != 0; never
    the zero polynomial for an H with nonzero constant term."""
    field = h.field
    return field(ell0) * h - Poly.x(field) * h.derivative()


def bad_lambda_set(field, n: int, I, C) -> frozenset:
    """Every lambda for which x^(n+1) - ut^2 may acquire a multiple root.

    Assembled from the multiple-root analysis of the factorization
    4 C^(n+1) (x^(n+1) - ut^2) = (2 C^ell0 x^ell0 - phi)(2 C^ell0 x^ell0 + phi),
    phi = lam*H_I - (1/lam)*H_comp:

    * a common root of the two factors forces x0 = 0 and lam = +-1;
    * a multiple root x0 of the first factor satisfies
      H_I(x0) lam^2 - 2 C^ell0 x0^ell0 lam - H_comp(x0) = 0 together with
      lam^2 (ell0 H_I - x H_I')(x0) = (ell0 H_comp - x H_comp')(x0), which
      eliminates lam into a fixed polynomial in x0;
    * the second factor is the first with lam negated, so the set is closed
      under negation.

    The result is a deliberate superset of the truly bad values; compare with
    ``confirmed_bad_lambdas``.  When the eliminant vanishes identically the
    analysis localizes nothing and every abscissa is scanned.
    """
    field = _as_prime_field(field)
    p, ell0, _, C, I, comp = _packet_inputs(field, n, I, 1, C)
    if p % 2 == 0 or (n + 1) % p == 0 or ell0 % p == 0:
        raise BadParameters(f"need p odd, p not dividing 2(n+1)ell0")
    hi, hc = build_H(I, C), build_H(comp, C)
    bi, bc = nonvanishing_bracket(hi, ell0), nonvanishing_bracket(hc, ell0)
    if bi.is_zero() or bc.is_zero():
        raise NonvanishingViolation("ell0*H - x*H' vanished identically")
    wh = hi.derivative() * hc - hc.derivative() * hi
    # eliminant: 4 C^(n+1) * bc * bi * x^(n+1) - x^2 * wh^2, with x^2 removed
    cl = C ** ell0
    eliminant = (4 * C ** (n + 1)) * bc * bi * Poly.monomial(field, n - 1) - wh * wh
    if eliminant.is_zero():
        candidates_x = tuple(field.elements())
    else:
        candidates_x = roots_in_field(eliminant)
        # the elimination divides by the brackets; cover their zeros too
        extra = [x for x in field.elements()
                 if bi(x).is_zero() or bc(x).is_zero()]
        candidates_x = tuple(set(candidates_x) | set(extra))
    bad = {field.one, -field.one}
    for x0 in candidates_x:
        a = hi(x0)
        b = -2 * cl * x0 ** ell0
        c = -hc(x0)
        for lam in _quadratic_roots(a, b, c, field):
            if not lam.is_zero():
                bad.add(lam)
    bad |= {-lam for lam in bad}
    return frozenset(bad)


def confirmed_bad_lambdas(field, n: int, I, C, sign: str = "plus") -> frozenset:
    """Exhaustive sweep: the lambda for which x^(n+1) - ut^2 actually fails
    squarefreeness (the zero polynomial counts as failing)."""
    field = _as_prime_field(field)
    out = set()
    for lam in field.units():
        f = packet_polynomial(field, n, I, lam, C, sign)
        if f.is_zero() or not is_squarefree(f):
            out.add(lam)
    return frozenset(out)


# ---------------------------------------------------------------------------
# moving two packet abscissas to 0 and -1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftMap:
    """x -> scale*x + offset on the base line, y -> y/y_scale on the cover;
    y_scale is a d-th root of scale^n and may be missing over the base
    field (flagged), in which case only the x-side is available."""

    scale: FieldElement
    offset: FieldElement
    y_scale: FieldElement | None

    @property
    def extension_required(self) -> bool:
        return self.y_scale is None


def shift_points_to_0_minus1(curve: SuperellipticCurve, P: AffinePoint,
                             Q: AffinePoint):
    """Produce the isomorphic curve with x(P), x(Q) moved to 0, -1: f_new =
    scale^-n * f(scale*x + offset).  Orders of points are preserved since the
    infinite point maps to the infinite point."""
    if P.x == Q.x:
        raise SameAbscissa("P and Q must have distinct abscissas")
    field = curve.field
    offset = P.x
    scale = P.x - Q.x
    substituted = curve.f.compose(Poly(field, (offset, scale)))
    f_new = substituted * (scale ** curve.n).inverse()
    new_curve = SuperellipticCurve(field, curve.d, f_new)
    y_scale = field.nth_root(scale ** curve.n, curve.d)
    smap = ShiftMap(scale=scale, offset=offset, y_scale=y_scale)
    images = None
    if y_scale is not None:
        images = (new_curve.point(field.zero, P.y / y_scale),
                  new_curve.point(-field.one, Q.y / y_scale))
    return new_curve, smap, images


# ---------------------------------------------------------------------------
# the degree-2 Wronskian triple of a built family
# ---------------------------------------------------------------------------

def packet_wronskian_triple(fam: PacketFamily):
    """(f1, f2, f3) with f1^2 + f2^2 + f3^2 = A1: f1 = B2 (1+t)^ell0,
    f2 = reversal of u, f3 = eta * reversal of v with eta^2 = -1."""
    field = fam.field
    eta = field.nth_root(field(-1), 2)
    if eta is None:
        raise UnsupportedField(f"F_{fam.p} has no square root of -1")
    f1 = fam.B2 * Poly(field, (field.one, field.one)) ** fam.ell0
    f2 = fam.u.reverse(fam.ell0)
    f3 = eta * fam.v.reverse(fam.ell0)
    ok, value = fermat_identity_check(f1, f2, f3, 2)
    if not ok or value != fam.A1:
        raise BadParameters("triple does not sum to A1")
    return f1, f2, f3
