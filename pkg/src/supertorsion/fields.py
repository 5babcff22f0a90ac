"""Exact scalar arithmetic over Q and prime fields F_p behind one interface.

Rationals are stored as ``fractions.Fraction`` (always reduced, positive
denominator); prime-field values as residues in [0, p).  All operations are
pure and elements are immutable, so values are safe to share freely.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParameters, DivisionByZero, FieldMismatch, UnsupportedField


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of the two supported base fields."""

    kind = None  # "Q" or "Fp"

    def characteristic(self) -> int:
        raise NotImplementedError

    def __call__(self, value) -> "FieldElement":
        raise NotImplementedError

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def nth_root(self, x: "FieldElement", k: int):
        """Some r with r^k = x, or None if no such r exists in this field."""
        raise NotImplementedError

    def roots_of_unity(self, m: int):
        """All m distinct m-th roots of unity, ordered as powers g^0..g^(m-1)
        of the smallest generator of the order-m subgroup."""
        raise NotImplementedError

    def sqrt(self, x: "FieldElement"):
        return self.nth_root(x, 2)


class Rationals(Field):
    kind = "Q"

    def characteristic(self) -> int:
        return 0

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self and value.field.kind != "Q":
                raise FieldMismatch("cannot coerce a prime-field element into Q")
            return FieldElement(self, value.value)
        if isinstance(value, (int, Fraction)):
            return FieldElement(self, Fraction(value))
        if isinstance(value, str):
            return FieldElement(self, Fraction(value))
        if isinstance(value, tuple) and len(value) == 2:
            return FieldElement(self, Fraction(value[0], value[1]))
        raise BadParameters(f"cannot build a rational from {value!r}")

    def nth_root(self, x, k):
        if k < 1:
            raise BadParameters("root index must be >= 1")
        v = x.value
        if k == 1:
            return x
        if v == 0:
            return self.zero
        if v < 0 and k % 2 == 0:
            return None
        num = _int_kth_root(abs(v.numerator), k)
        den = _int_kth_root(v.denominator, k)
        if num is None or den is None:
            return None
        r = Fraction(num, den)
        if v < 0:
            r = -r
        return FieldElement(self, r)

    def roots_of_unity(self, m):
        if m == 1:
            return (self.one,)
        if m == 2:
            return (self.one, self(-1))
        raise UnsupportedField(f"Q contains no primitive {m}-th roots of unity")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "Fp"

    def __init__(self, p: int):
        if not is_prime(p):
            raise BadParameters(f"{p} is not prime")
        self.p = p

    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("cannot coerce across fields")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, str):
            return FieldElement(self, int(value) % self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            num = value.numerator % self.p
            den = pow(value.denominator % self.p, self.p - 2, self.p)
            return FieldElement(self, num * den % self.p)
        raise BadParameters(f"cannot build an F_{self.p} element from {value!r}")

    def elements(self):
        for v in range(self.p):
            yield FieldElement(self, v)

    def units(self):
        for v in range(1, self.p):
            yield FieldElement(self, v)

    def nth_root(self, x, k):
        if k < 1:
            raise BadParameters("root index must be >= 1")
        target = x.value
        for r in range(self.p):
            if pow(r, k, self.p) == target:
                return FieldElement(self, r)
        return None

    def multiplicative_order(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        x, o = a, 1
        while x != 1:
            x = x * a % self.p
            o += 1
        return o

    def roots_of_unity(self, m):
        if m < 1:
            raise BadParameters("m must be >= 1")
        if (self.p - 1) % m != 0:
            raise UnsupportedField(f"mu_{m} is not contained in F_{self.p}")
        g = None
        for a in range(1, self.p):
            if self.multiplicative_order(a) == m:
                g = a
                break
        if g is None:  # unreachable for prime p with m | p-1
            raise UnsupportedField(f"no element of order {m} in F_{self.p}^*")
        return tuple(FieldElement(self, pow(g, i, self.p)) for i in range(m))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


#: the field of rational numbers (a shared instance; all Rationals compare equal)
QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def _int_kth_root(n: int, k: int):
    """Exact integer k-th root of n >= 0, or None."""
    if n in (0, 1):
        return n
    lo, hi = 1, 1
    while hi ** k < n:
        lo, hi = hi, hi * 2
    while lo <= hi:
        mid = (lo + hi) // 2
        m = mid ** k
        if m == n:
            return mid
        if m < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


class FieldElement:
    """Immutable scalar: a Fraction over Q, a residue in [0, p) over F_p."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.field.kind == "Fp":
            return FieldElement(self.field, (self.value + o.value) % self.field.p)
        return FieldElement(self.field, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.field.kind == "Fp":
            return FieldElement(self.field, (self.value - o.value) % self.field.p)
        return FieldElement(self.field, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.field.kind == "Fp":
            return FieldElement(self.field, self.value * o.value % self.field.p)
        return FieldElement(self.field, self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        if self.field.kind == "Fp":
            return FieldElement(self.field, (-self.value) % self.field.p)
        return FieldElement(self.field, -self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.field.kind == "Fp":
            return FieldElement(self.field, pow(self.value, e, self.field.p))
        return FieldElement(self.field, self.value ** e)

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.field.kind == "Fp":
            return FieldElement(self.field, pow(self.value, self.field.p - 2, self.field.p))
        return FieldElement(self.field, 1 / self.value)

    def __bool__(self):
        return self.value != 0

    def is_zero(self):
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return str(self.value)
