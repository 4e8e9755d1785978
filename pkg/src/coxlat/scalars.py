"""Exact ordered fields: the rationals and the golden field Q(sqrt 5).

Rational systems use :class:`fractions.Fraction` directly.  The golden field
is represented by :class:`Golden`, a pair ``a + b*sqrt(5)`` of fractions whose
sign (and hence ordering) is decided with rational arithmetic only.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def _sign_q5(a: Fraction, b: Fraction) -> int:
    # sign of a + b*sqrt(5)
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 with 5 b^2 (never equal, sqrt 5 is irrational)
    if a * a > 5 * b * b:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


class Golden:
    """An element ``a + b*sqrt(5)`` of Q(sqrt 5) with exact arithmetic."""

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _lift(other) -> "Golden | None":
        if isinstance(other, Golden):
            return other
        if isinstance(other, (int, Fraction)):
            return Golden(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Golden(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Golden(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Golden(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - 5 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        conj = Golden(o.a / norm, -o.b / norm)
        return self * conj

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Golden(-self.a, -self.b)

    def __pos__(self):
        return self

    def sign(self) -> int:
        return _sign_q5(self.a, self.b)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def _cmp(self, other) -> int:
        o = self._lift(other)
        if o is None:
            raise TypeError(f"cannot compare Golden with {type(other).__name__}")
        return _sign_q5(self.a - o.a, self.b - o.b)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"Golden({self.a!s}, {self.b!s})"

    def __str__(self):
        return format_scalar(self)


PHI = Golden(Fraction(1, 2), Fraction(1, 2))  # golden ratio = 2 cos(pi/5)

Scalar = Union[int, Fraction, Golden]


def sign(x: Scalar) -> int:
    if isinstance(x, Golden):
        return x.sign()
    return (x > 0) - (x < 0)


def format_scalar(x: Scalar) -> str:
    """Exact string form: ``p/q`` for rationals, ``(p/q)+(r/s)√5`` for golden."""
    if isinstance(x, Golden):
        if x.b == 0:
            return str(x.a)
        return f"({x.a})+({x.b})√5"
    return str(Fraction(x))


_GOLDEN_RE = re.compile(r"^\((?P<a>[^()]+)\)\+\((?P<b>[^()]+)\)√5$")


def parse_scalar(text: str) -> Scalar:
    text = text.strip()
    m = _GOLDEN_RE.match(text)
    if m:
        return Golden(Fraction(m.group("a")), Fraction(m.group("b")))
    return Fraction(text)


class Field:
    """The scalar field attached to a Coxeter system."""

    def __init__(self, name: str):
        if name not in ("QQ", "QQ(sqrt5)"):
            raise ValueError(f"unknown field {name!r}")
        self.name = name

    @property
    def is_golden(self) -> bool:
        return self.name == "QQ(sqrt5)"

    def __call__(self, x) -> Scalar:
        if self.is_golden:
            return x if isinstance(x, Golden) else Golden(x)
        if isinstance(x, Golden):
            if x.b != 0:
                raise ValueError(f"{x} is not rational")
            return x.a
        return Fraction(x)

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"Field({self.name!r})"


QQ = Field("QQ")
QQ5 = Field("QQ(sqrt5)")
