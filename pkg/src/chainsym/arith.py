"""Exact scalar arithmetic for the three coefficient backends.

A backend ("ring") is a small immutable object that knows how to put raw
Python values into canonical form and how to add, multiply and invert them.
Matrices store raw canonical values (``int`` or ``Fraction``) together with
their ring; :class:`Scalar` wraps a single value when a typed scalar is
wanted at an API boundary.

>>> F5 = PrimeField(5)
>>> scalar_arith("mul", Scalar(F5, 2), Scalar(F5, 3))
Scalar(F_5, 1)
>>> scalar_inverse(Scalar(QQ, Fraction(-2, 3)))
Scalar(QQ, -3/2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any


class BackendMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Ring:
    """Common interface of the coefficient backends."""

    kind: str
    is_field: bool

    def canonical(self, x: Any):
        raise NotImplementedError

    def zero(self):
        return self.canonical(0)

    def one(self):
        return self.canonical(1)

    def add(self, a, b):
        return self.canonical(a + b)

    def sub(self, a, b):
        return self.canonical(a - b)

    def mul(self, a, b):
        return self.canonical(a * b)

    def neg(self, a):
        return self.canonical(-a)

    def inverse(self, a):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    # Euclidean structure, used by the diagonalisation routines.
    def norm(self, a) -> int:
        raise NotImplementedError

    def divmod(self, a, b):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def elements(self):
        raise TypeError(f"{self} is infinite")


@dataclass(frozen=True)
class PrimeField(Ring):
    p: int

    kind = "prime-field"
    is_field = True

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def canonical(self, x):
        if type(x) is int:
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise NotInvertible(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inverse(self, a):
        a %= self.p
        if a == 0:
            raise NotInvertible("zero has no inverse")
        return pow(a, self.p - 2, self.p)

    def is_unit(self, a):
        return a % self.p != 0

    def norm(self, a):
        return 0 if a % self.p == 0 else 1

    def divmod(self, a, b):
        return self.mul(a, self.inverse(b)), 0

    def parse(self, s):
        return self.canonical(Fraction(str(s)))

    def to_json(self):
        return {"kind": self.kind, "p": self.p}

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Rationals(Ring):
    kind = "rationals"
    is_field = True

    def canonical(self, x):
        return Fraction(x)

    def inverse(self, a):
        if a == 0:
            raise NotInvertible("zero has no inverse")
        return 1 / Fraction(a)

    def is_unit(self, a):
        return a != 0

    def norm(self, a):
        return 0 if a == 0 else 1

    def divmod(self, a, b):
        return Fraction(a) / b, Fraction(0)

    def parse(self, s):
        return Fraction(str(s))

    def format(self, a):
        return str(Fraction(a))

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class Integers(Ring):
    kind = "integers"
    is_field = False

    def canonical(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def inverse(self, a):
        if a in (1, -1):
            return a
        if a == 0:
            raise NotInvertible("zero has no inverse")
        raise NotInvertible(f"{a} is not a unit of ZZ")

    def is_unit(self, a):
        return a in (1, -1)

    def norm(self, a):
        return abs(a)

    def divmod(self, a, b):
        # remainder of least absolute value keeps Smith form entries small
        q, r = divmod(a, b)
        if 2 * abs(r) > abs(b):
            q += 1
            r -= b
        return q, r

    def parse(self, s):
        return self.canonical(Fraction(str(s)))

    def __repr__(self):
        return "ZZ"


QQ = Rationals()
ZZ = Integers()


def ring_from_json(obj: dict) -> Ring:
    kind = obj.get("kind")
    extra = set(obj) - {"kind", "p"}
    if extra:
        raise ValueError(f"unknown coefficient fields {sorted(extra)}")
    if kind == "prime-field":
        if "p" not in obj:
            raise ValueError("prime-field coefficients need a modulus p")
        return PrimeField(int(obj["p"]))
    if "p" in obj:
        raise ValueError(f"modulus p given for {kind} coefficients")
    if kind == "rationals":
        return QQ
    if kind == "integers":
        return ZZ
    raise ValueError(f"unknown coefficient kind {kind!r}")


@dataclass(frozen=True)
class Scalar:
    ring: Ring
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.canonical(self.value))

    def _check(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(self.ring, other)
        if other.ring != self.ring:
            raise BackendMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def inverse(self):
        return Scalar(self.ring, self.ring.inverse(self.value))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Scalar({self.ring!r}, {self})"


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if a.ring != b.ring:
        raise BackendMismatch(f"{a.ring} vs {b.ring}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def scalar_inverse(a: Scalar) -> Scalar:
    return a.inverse()
