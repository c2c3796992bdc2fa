"""Exact truncated q-series whose coefficients are integer polynomials in x.

Two value types live here:

* ``XPoly`` -- a polynomial in the weight marker ``x`` with Python ``int``
  coefficients, stored trailing-zero free so that ``==`` is structural.
* ``QSeries`` -- a power series in ``q`` cut off above a fixed order, with an
  ``XPoly`` at every q-degree.

Everything is immutable and exact. Series of different orders never mix
silently; call ``truncate`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union


class ContractError(ValueError):
    """Raised when a caller breaks an operation's precondition."""


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class XPoly:
    """Polynomial in x; ``coeffs[i]`` is the coefficient of x**i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> "XPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "XPoly":
        if exponent < 0:
            raise ContractError(f"negative x-exponent {exponent}")
        return cls((0,) * exponent + (c,))

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "XPoly | int") -> "XPoly":
        other = _as_xpoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other: "XPoly | int") -> "XPoly":
        return self + (-_as_xpoly(other))

    def __rsub__(self, other: int) -> "XPoly":
        return _as_xpoly(other) - self

    def __mul__(self, other: "XPoly | int") -> "XPoly":
        return poly_mul(self, _as_xpoly(other))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out


def _as_xpoly(v: "XPoly | int") -> XPoly:
    if isinstance(v, XPoly):
        return v
    if isinstance(v, int):
        return XPoly((v,))
    return NotImplemented  # type: ignore[return-value]


ZERO = XPoly()
ONE = XPoly((1,))
X = XPoly((0, 1))


def poly_mul(a: XPoly, b: XPoly) -> XPoly:
    """Exact convolution product of two x-polynomials."""
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return XPoly(out)


Coefficient = Union[XPoly, int]


@dataclass(frozen=True)
class QSeries:
    """Power series in q truncated above ``order``.

    ``coeffs`` always has exactly ``order + 1`` entries; shorter inputs are
    zero-padded and longer ones are cut.
    """

    order: int
    coeffs: tuple[XPoly, ...] = ()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ContractError(f"order must be nonnegative, got {self.order}")
        cs = [_as_xpoly(c) for c in self.coeffs][: self.order + 1]
        cs.extend([ZERO] * (self.order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, (ONE,))

    @classmethod
    def from_ints(cls, order: int, ints: Sequence[int]) -> "QSeries":
        return cls(order, tuple(XPoly((c,)) for c in ints))

    @classmethod
    def monomial(cls, order: int, q_exp: int, c: Coefficient = 1) -> "QSeries":
        if q_exp < 0:
            raise ContractError(f"negative q-exponent {q_exp}")
        if q_exp > order:
            return cls(order)
        return cls(order, (ZERO,) * q_exp + (_as_xpoly(c),))

    def coeff(self, k: int) -> XPoly:
        return coeff(self, k)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ContractError(
                f"cannot extend a series known to order {self.order} up to {order}"
            )
        return QSeries(order, self.coeffs[: order + 1])

    def _check(self, other: "QSeries") -> None:
        if not isinstance(other, QSeries):
            raise TypeError(f"expected QSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ContractError(
                f"order mismatch: {self.order} vs {other.order}; truncate explicitly"
            )

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "QSeries | XPoly | int") -> "QSeries":
        if isinstance(other, (XPoly, int)):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other: "XPoly | int") -> "QSeries":
        return self.scale(other)

    def scale(self, c: Coefficient) -> "QSeries":
        """Multiply every coefficient by the x-polynomial ``c``."""
        c = _as_xpoly(c)
        return QSeries(self.order, tuple(poly_mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k (k >= 0), discarding what falls past the order."""
        if k < 0:
            raise ContractError(f"negative shift {k}")
        return QSeries(self.order, (ZERO,) * k + self.coeffs)

    def at_x(self, x: int) -> "QSeries":
        """Evaluate every coefficient at the integer ``x``."""
        return QSeries(self.order, tuple(XPoly((c(x),)) for c in self.coeffs))

    def int_coeffs(self, x: int = 1) -> list[int]:
        return [c(x) for c in self.coeffs]

    def min_degree(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            qpart = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not qpart:
                terms.append(str(c))
            elif sum(1 for v in c.coeffs if v) == 1:
                xs = str(c)
                terms.append(qpart if xs == "1" else f"{xs}*{qpart}")
            else:
                terms.append(f"({c})*{qpart}")
        return " + ".join(terms) if terms else "0"


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product of two series of the same order."""
    a._check(b)
    n = a.order
    out = [ZERO] * (n + 1)
    nz_b = [(j, cb) for j, cb in enumerate(b.coeffs) if cb]
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in nz_b:
            if i + j > n:
                break
            out[i + j] = out[i + j] + poly_mul(ca, cb)
    return QSeries(n, tuple(out))


def coeff(s: QSeries, k: int) -> XPoly:
    """Coefficient of q**k; ``k`` must lie in ``0..s.order``."""
    if not 0 <= k <= s.order:
        raise ContractError(f"q-degree {k} outside 0..{s.order}")
    return s.coeffs[k]


def q_pochhammer_even(d: int, order: int) -> QSeries:
    """(q^2; q^2)_d = (1 - q^2)(1 - q^4)...(1 - q^{2d}), truncated."""
    if d < 0:
        raise ContractError(f"d must be nonnegative, got {d}")
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(1, d + 1):
        step = 2 * j
        if step > order:
            break
        for i in range(order, step - 1, -1):
            c[i] -= c[i - step]
    return QSeries.from_ints(order, c)


@lru_cache(maxsize=None)
def _even_parts_table(d: int, order: int) -> tuple[int, ...]:
    # partitions of each k into parts from {2, 4, ..., 2d}
    c = [0] * (order + 1)
    c[0] = 1
    for j in range(1, d + 1):
        step = 2 * j
        for i in range(step, order + 1):
            c[i] += c[i - step]
    return tuple(c)


def inv_q_pochhammer_even(d: int, order: int) -> QSeries:
    """1 / (q^2; q^2)_d, truncated.

    Computed as the partition-counting series for even parts at most 2d,
    so no division is ever performed.
    """
    if d < 0:
        raise ContractError(f"d must be nonnegative, got {d}")
    return QSeries.from_ints(order, _even_parts_table(d, order))


@lru_cache(maxsize=None)
def _gaussian(A: int, B: int, e: int, order: int) -> tuple[int, ...]:
    # [A;B] at base q^e via [A;B] = [A-1;B-1] + q^{eB} [A-1;B]
    if B < 0 or B > A:
        return ()
    if B == 0 or B == A:
        return (1,)
    left = _gaussian(A - 1, B - 1, e, order)
    right = _gaussian(A - 1, B, e, order)
    shift = e * B
    out = [0] * min(order + 1, max(len(left), len(right) + shift))
    for i, c in enumerate(left):
        if i > order:
            break
        out[i] += c
    for i, c in enumerate(right):
        if i + shift > order:
            break
        out[i + shift] += c
    return _strip(out)


def q_binomial(A: int, B: int, base_exponent: int, order: int) -> QSeries:
    """Gaussian polynomial [A; B] evaluated at q**base_exponent.

    Zero when B < 0 or B > A. Built with the additive Pascal recurrence, so
    every intermediate value is a polynomial with nonnegative coefficients.
    """
    if base_exponent < 1:
        raise ContractError(f"base_exponent must be positive, got {base_exponent}")
    return QSeries.from_ints(order, _gaussian(A, B, base_exponent, order))
