"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or decimal string")
    return Fraction(value)


@dataclass(frozen=True)
class GFSeries:
    """``sum c_n x^n`` known for ``0 <= n <= order``.

    Every operation truncates to the smaller of its operands' orders, so
    computing at a high order and truncating agrees with computing at the
    low order directly.
    """

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(to_fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Iterable) -> "GFSeries":
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "GFSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def from_tail(cls, tail: Iterable, constant=1) -> "GFSeries":
        """``constant + sum_{n>=1} tail[n-1] x^n``."""
        return cls((constant,) + tuple(tail))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def tail(self) -> list:
        return list(self.coeffs[1:])

    def truncate(self, order: int) -> "GFSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return GFSeries(self.coeffs[: order + 1])

    def _common(self, other: "GFSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "GFSeries") -> "GFSeries":
        n = self._common(other)
        return GFSeries(tuple(self[i] + other[i] for i in range(n + 1)))

    def __neg__(self) -> "GFSeries":
        return GFSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "GFSeries") -> "GFSeries":
        return self + (-other)

    def scale(self, c) -> "GFSeries":
        c = to_fraction(c)
        return GFSeries(tuple(c * x for x in self.coeffs))

    def __mul__(self, other: "GFSeries") -> "GFSeries":
        n = self._common(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other[j]
        return GFSeries(tuple(out))

    def reciprocal(self) -> "GFSeries":
        c0 = self[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        out = [1 / c0]
        for n in range(1, self.order + 1):
            s = sum((self[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s / c0)
        return GFSeries(tuple(out))

    def __truediv__(self, other: "GFSeries") -> "GFSeries":
        n = self._common(other)
        return self.truncate(n) * other.truncate(n).reciprocal()

    def hadamard(self, other: "GFSeries") -> "GFSeries":
        n = self._common(other)
        return GFSeries(tuple(self[i] * other[i] for i in range(n + 1)))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> "GFSeries":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = [Fraction(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("order does not match the number of coefficients")
        return cls(tuple(coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)
