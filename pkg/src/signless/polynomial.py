"""Dense polynomials with exact integer coefficients."""

from __future__ import annotations

import json
from typing import Iterable, Sequence, Union


class IntPolynomial:
    """Immutable polynomial, coefficients stored constant term first.

    Trailing zeros are stripped, so ``coeffs`` is empty for the zero polynomial
    and the leading coefficient is otherwise nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls([0, 1])

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPolynomial:
        """Build from highest power first, e.g. ``[1, -6, 9, -4]`` is x^3-6x^2+9x-4."""
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        other = _coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(m))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"polynomial power must be a nonnegative integer, got {k!r}")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[str]:
        """Decimal coefficient strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Union[str, Sequence[str]]) -> IntPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data)


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


X = IntPolynomial.x()
ONE = IntPolynomial.constant(1)


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def subtract(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def power(p: IntPolynomial, k: int) -> IntPolynomial:
    return p ** k
