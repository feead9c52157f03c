"""Exact arithmetic in Q(sqrt 5)."""
from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction


class QSqrt5:
    """a + b*sqrt(5) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt5 is immutable")

    @staticmethod
    def _lift(x) -> QSqrt5:
        if isinstance(x, QSqrt5):
            return x
        if isinstance(x, (int, Fraction)):
            return QSqrt5(x, 0)
        raise TypeError(f"cannot convert {type(x).__name__} to QSqrt5")

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt5" if self.a else f"{self.b}*sqrt5"

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        o = self._lift(other)
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt5:
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, other):
        o = self._lift(other)
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        num = self * o.conjugate()
        return QSqrt5(num.a / nrm, num.b / nrm)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        return sa if self.a * self.a > 5 * self.b * self.b else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def decimal(self, digits: int = 50) -> Decimal:
        """Decimal approximation; for display and test witnesses only."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            s5 = Decimal(5).sqrt()
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            return +(a + b * s5)

    def __float__(self):
        return float(self.decimal(20))


ZERO = QSqrt5(0)
ONE = QSqrt5(1)
SQRT5 = QSqrt5(0, 1)
# -cos(pi/m) for the labels that live in this field
NEG_COS = {2: QSqrt5(0), 3: QSqrt5(Fraction(-1, 2)), 5: QSqrt5(Fraction(-1, 4), Fraction(-1, 4))}
