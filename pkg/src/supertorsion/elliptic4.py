"""Elliptic curves with a marked point of order 4 (the n = 3, d = 2 case).

The family y^2 = (2B x^2 + B1 x + 1)(B1 x + 1) carries Q0 = (0, 1) of order 4
and Q2 = (-1/B1, 0) of order 2 with 2*Q0 = Q2; it is separable exactly when
B1^2 - 8B != 0.  The classical one-parameter curve
y^2 + xy - by = x^3 - bx^2 with 4-torsion point (0, 0) sits inside it via
B = -2/b, B1 = -1/b, and both reduce to the same quartic-free cubic, which is
what ``to_kubert``/``from_kubert`` verify symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import AffinePoint
from .errors import (
    BadParameters,
    CharTwo,
    Degenerate,
    DegenerateB,
    ZeroParameter,
)
from .fields import Field, FieldElement
from .orders import elliptic_add, elliptic_order
from .poly import Poly, is_squarefree


@dataclass(frozen=True)
class EllipticFourFamily:
    field: Field
    B: FieldElement
    B1: FieldElement
    f: Poly

    @property
    def q0(self) -> AffinePoint:
        return AffinePoint(self.field.zero, self.field.one)

    @property
    def q2(self) -> AffinePoint:
        return AffinePoint(-self.B1.inverse(), self.field.zero)


def build_family(B, B1) -> EllipticFourFamily:
    if not isinstance(B, FieldElement) or not isinstance(B1, FieldElement):
        raise BadParameters("B and B1 must be field elements")
    field = B.field
    if field.characteristic() == 2:
        raise CharTwo("the family needs characteristic != 2")
    if B.is_zero() or B1.is_zero():
        raise ZeroParameter("B and B1 must be nonzero")
    if (B1 * B1 - 8 * B).is_zero():
        raise Degenerate("B1^2 - 8B = 0: the quadratic factor has a double root")
    quadratic = Poly(field, (field.one, B1, 2 * B))
    linear = Poly(field, (field.one, B1))
    f = quadratic * linear
    expanded = Poly(field, (field.one, 2 * B1, 2 * B + B1 * B1, 2 * B * B1))
    assert f == expanded
    assert is_squarefree(f)
    return EllipticFourFamily(field=field, B=B, B1=B1, f=f)


@dataclass(frozen=True)
class OrderStructureReport:
    order_q0: int | None
    order_q2: int | None
    doubling_ok: bool
    tangent_ok: bool

    @property
    def passed(self) -> bool:
        return (self.order_q0 == 4 and self.order_q2 == 2
                and self.doubling_ok and self.tangent_ok)


def check_order_structure(fam: EllipticFourFamily) -> OrderStructureReport:
    """order(Q0) = 4, order(Q2) = 2, 2*Q0 = Q2, and the tangent at Q0 is the
    line y = B1*x + 1 through Q2."""
    q0 = (fam.q0.x, fam.q0.y)
    q2 = (fam.q2.x, fam.q2.y)
    order_q0 = elliptic_order(fam.f, q0, 8)
    order_q2 = elliptic_order(fam.f, q2, 8)
    doubled = elliptic_add(fam.f, q0, q0)
    doubling_ok = doubled == q2
    # tangent slope at Q0 is f'(0)/2 = B1, and Q2 lies on y = B1 x + 1
    slope = fam.f.derivative()(fam.field.zero) / fam.field(2)
    tangent_ok = slope == fam.B1 and (fam.B1 * q2[0] + 1) == q2[1]
    return OrderStructureReport(order_q0=order_q0, order_q2=order_q2,
                                doubling_ok=doubling_ok, tangent_ok=tangent_ok)


@dataclass(frozen=True)
class KubertCurve:
    """y^2 + xy - by = x^3 - bx^2 with marked point (0, 0); b^4(1+16b) != 0."""

    field: Field
    b: FieldElement


def kubert_curve(b) -> KubertCurve:
    if not isinstance(b, FieldElement):
        raise BadParameters("b must be a field element")
    if b.is_zero() or (1 + 16 * b).is_zero():
        raise DegenerateB("need b^4 (1 + 16b) != 0")
    return KubertCurve(field=b.field, b=b)


@dataclass(frozen=True)
class PointMap:
    """(x, y) -> (x, c0(x) + c1*y): the explicit isomorphism from the Kubert
    model onto y^2 = f_{B,B1}."""

    c0: Poly
    c1: FieldElement

    def __call__(self, x, y):
        return (x, self.c0(x) + self.c1 * y)


class _KubertAlgebra:
    """Arithmetic in K[x][y] / (y^2 + xy - by - x^3 + bx^2), elements stored
    as a0(x) + a1(x)*y."""

    def __init__(self, b: FieldElement):
        field = b.field
        self.field = field
        # y^2 reduces to (x^3 - b x^2) + (b - x) y
        self.red0 = Poly(field, (0, 0, -b, field.one))
        self.red1 = Poly(field, (b, -field.one))

    def mul(self, A, B):
        a0, a1 = A
        b0, b1 = B
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a1 * b1
        return (c0 + c2 * self.red0, c1 + c2 * self.red1)

    def sub(self, A, B):
        return (A[0] - B[0], A[1] - B[1])


def from_kubert(b) -> tuple[EllipticFourFamily, PointMap]:
    """Realize the Kubert curve inside the (B, B1) family: B = -2/b,
    B1 = -1/b, point map (x, y) -> (x, (b - x - 2y)/b); checked symbolically
    against the curve relation."""
    curve = kubert_curve(b)
    field = curve.field
    if field.characteristic() == 2:
        raise CharTwo("needs characteristic != 2")
    b = curve.b
    binv = b.inverse()
    fam = build_family(-2 * binv, -binv)
    pmap = PointMap(c0=Poly(field, (field.one, -binv)), c1=-2 * binv)
    # verify: (c0 + c1 y)^2 - f(x) reduces to 0 modulo the Kubert relation
    alg = _KubertAlgebra(b)
    image_y = (pmap.c0, Poly.constant(pmap.c1))
    lhs = alg.mul(image_y, image_y)
    residual = alg.sub(lhs, (fam.f, Poly.zero(field)))
    assert residual[0].is_zero() and residual[1].is_zero()
    assert pmap(field.zero, field.zero) == (field.zero, field.one)
    return fam, pmap


def to_kubert(fam: EllipticFourFamily) -> FieldElement:
    """b = -B/(2 B1^2); verified by reducing both models to the same cubic."""
    b = -fam.B / (2 * fam.B1 * fam.B1)
    assert reduced_cubic_from_family(fam.B, fam.B1) == reduced_cubic_from_kubert(b, fam.B1)
    return b


def reduced_cubic_from_family(B: FieldElement, B1: FieldElement) -> Poly:
    """Scale y^2 = (ax^2+cx+1)(cx+1), a = 2B, c = B1, by x -> a c x,
    y -> 2 a c y: gives y^2 = 4x^3 + 4(a + c^2)x^2 + 8 a c^2 x + 4 a^2 c^2."""
    field = B.field
    a, c = 2 * B, B1
    return Poly(field, (4 * a * a * c * c, 8 * a * c * c, 4 * (a + c * c), field(4)))


def reduced_cubic_from_kubert(b: FieldElement, c: FieldElement) -> Poly:
    """The Kubert model first becomes y^2 = 4x^3 + (1-4b)x^2 - 2bx + b^2;
    scaling x -> 4c^2 x, y -> 8c^3 y then lands on the same target cubic."""
    field = b.field
    e1 = Poly(field, (b * b, -2 * b, 1 - 4 * b, field(4)))
    # substitute x = X/(4c^2), multiply through by 64 c^6
    c2 = 4 * c * c
    scaled = Poly(field, [e1[i] * c2 ** (3 - i) for i in range(4)])
    return scaled


def kubert_model_cubic(b: FieldElement) -> Poly:
    """Complete the square in y: the Kubert curve is y^2 = 4x^3 + (1-4b)x^2
    - 2bx + b^2 after y -> (2y + x - b)/2 rescaling."""
    field = b.field
    return Poly(field, (b * b, -2 * b, 1 - 4 * b, field(4)))
