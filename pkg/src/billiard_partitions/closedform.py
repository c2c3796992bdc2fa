"""Closed forms and recurrences for billiard-partition generating functions.

``s(d, n)`` is the generating polynomial of irreducible partitions with ``d``
parts and largest part ``n``; the x-exponent carries the weight and the
q-exponent the sum. Arguments are always (parts, largest).
"""

from __future__ import annotations

from functools import lru_cache

from .enumeration import PEType
from .qalgebra import (
    QSeries,
    X,
    XPoly,
    inv_q_pochhammer_even,
    q_binomial,
)

#: Which q-exponent to use for an odd largest part. ``"standard"`` is correct;
#: ``"misprint"`` reproduces a misprint carrying an extra ``-n`` and exists
#: only so the verification suites can prove they catch it.
ODD_EXPONENTS = ("standard", "misprint")


def _odd_q_exponent(d: int, n: int, variant: str) -> int:
    if variant == "standard":
        return 2 * n * n - 2 * d * n + d * d + 3 * n
    if variant == "misprint":
        return 2 * n * n - 2 * d * n - n + d * d + 3 * n
    raise ValueError(f"unknown odd-exponent variant {variant!r}; pick from {ODD_EXPONENTS}")


def s_closed(d: int, largest: int, order: int, odd_exponent: str = "standard") -> QSeries:
    """s(d, largest) from the q-binomial closed form.

    Even largest part 2n:
        x^(2n-d-1) q^(2n^2-2dn-n+d^2+2d) [n-1; 2n-d-1]_{q^2}
    Odd largest part 2n+1:
        x^(2n-d) q^(2n^2-2dn+d^2+3n) [n-1; 2n-d]_{q^2}
    """
    half, odd = divmod(largest, 2)
    n = half
    if odd:
        x_exp = 2 * n - d
        q_exp = _odd_q_exponent(d, n, odd_exponent)
        gauss = q_binomial(n - 1, 2 * n - d, 2, order)
    else:
        x_exp = 2 * n - d - 1
        q_exp = 2 * n * n - 2 * d * n - n + d * d + 2 * d
        gauss = q_binomial(n - 1, 2 * n - d - 1, 2, order)
    if gauss.is_zero() or q_exp > order:
        return QSeries.zero(order)
    # a nonzero binomial forces x_exp >= 0
    return gauss.shift(q_exp).scale(XPoly.monomial(x_exp))


def s_recurrence(d: int, largest: int, order: int) -> QSeries:
    """s(d, largest) from the part-by-part recurrence.

    s(d, 2n)   = q^(2n) (s(d-1, 2n-1) + x s(d-1, 2n-2))
    s(d, 2n+1) = q^(2n+1) s(d-1, 2n)
    with s(1, 2) = q^2 and s(1, n) = 0 otherwise.
    """
    return _s_rec(d, largest, order)


@lru_cache(maxsize=None)
def _s_rec(d: int, largest: int, order: int) -> QSeries:
    if d < 1 or largest < 1:
        return QSeries.zero(order)
    if d == 1:
        return QSeries.monomial(order, 2) if largest == 2 else QSeries.zero(order)
    if largest % 2 == 0:
        inner = _s_rec(d - 1, largest - 1, order) + _s_rec(d - 1, largest - 2, order).scale(X)
    else:
        inner = _s_rec(d - 1, largest - 1, order)
    return inner.shift(largest)


def s_tilde(d: int, largest: int, order: int) -> QSeries:
    """Reduced partitions with no parity condition on the smallest part, at x=1.

    For d >= 2 this is s(d, n) + q s(d-1, n): a reduced partition either ends
    in an even part (and is irreducible) or ends in 1 sitting under a 2. The
    single-part case is read off directly: (1) and (2) are the only members.
    """
    if d < 1 or largest < 1:
        return QSeries.zero(order)
    if d == 1:
        if largest in (1, 2):
            return QSeries.monomial(order, largest)
        return QSeries.zero(order)
    full = s_closed(d, largest, order) + s_closed(d - 1, largest, order).shift(1)
    return full.at_x(1)


def _shape_range(d: int, order: int, min_largest: int) -> range:
    # reduced shapes with d parts have largest part between d and 2d
    return range(max(min_largest, d), min(2 * d, order) + 1)


def _max_parts(order: int) -> int:
    # d distinct positive parts sum to at least d(d+1)/2
    d = 0
    while (d + 1) * (d + 2) // 2 <= order:
        d += 1
    return d


def euclid_series(order: int, weighted: bool = True, odd_exponent: str = "standard") -> QSeries:
    """1 + sum over d, n of s(d, n) / (q^2; q^2)_d, truncated at ``order``.

    With ``weighted=False`` the x marker is set to 1, giving plain counts.
    """
    total = QSeries.one(order)
    for d in range(1, _max_parts(order) + 1):
        shapes = QSeries.zero(order)
        for largest in _shape_range(d, order, d + 1):
            shapes = shapes + s_closed(d, largest, order, odd_exponent)
        if not shapes.is_zero():
            total = total + shapes * inv_q_pochhammer_even(d, order)
    return total if weighted else total.at_x(1)


def _component_series(order: int, tilde: bool) -> QSeries:
    acc = QSeries.zero(order)
    for d in range(1, _max_parts(order) + 1):
        shapes = QSeries.zero(order)
        for largest in _shape_range(d, order, 1):
            if tilde:
                shapes = shapes + s_tilde(d, largest, order)
            else:
                shapes = shapes + s_closed(d, largest, order).at_x(1)
        if not shapes.is_zero():
            acc = acc + shapes * inv_q_pochhammer_even(d, order)
    return acc


def pe_series(type_tag: PEType | str, order: int) -> QSeries:
    """Generating function of space-, time- or light-type partitions (x=1).

    The double sum over both components factors into a product of two
    single-component series; space pairs a plain m-list with an even-ended
    n-list, time the reverse, light needs both ends even.
    """
    tag = PEType(type_tag)
    even_end = _component_series(order, tilde=False)
    if tag is PEType.LIGHT:
        product = even_end * even_end
    else:
        product = even_end * _component_series(order, tilde=True)
    return QSeries.one(order) + product


__all__ = [
    "ODD_EXPONENTS",
    "s_closed",
    "s_recurrence",
    "s_tilde",
    "euclid_series",
    "pe_series",
]
