"""Brute-force generation of billiard partitions.

This module is the ground truth the closed forms are checked against, so it
only ever builds partitions directly from their defining conditions.

A Euclidean billiard partition is a partition into distinct parts whose
smallest part is even and where no two adjacent parts are both odd. The
largest part is the period of the trajectory and the rest are its winding
numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .qalgebra import ContractError

EvenPadding = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Partition:
    """Strictly decreasing tuple of positive parts, largest first."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        _check_strict(parts)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"9+4+2"``; rejects anything not strictly decreasing."""
        return cls(_parse_parts(text))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    @property
    def odd_count(self) -> int:
        return sum(p & 1 for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


class PEType(str, Enum):
    SPACE = "space"
    TIME = "time"
    LIGHT = "light"


@dataclass(frozen=True, order=True)
class PEPartition:
    """Two-component partition ``(m_1..m_l | n_1..n_k)`` with a type tag.

    No ordering is assumed between the two lists.
    """

    m_parts: tuple[int, ...]
    n_parts: tuple[int, ...]
    type_tag: PEType = PEType.SPACE

    def __post_init__(self) -> None:
        m = tuple(int(p) for p in self.m_parts)
        n = tuple(int(p) for p in self.n_parts)
        if not m or not n:
            raise ContractError("both components of a PE partition must be nonempty")
        _check_strict(m)
        _check_strict(n)
        object.__setattr__(self, "m_parts", m)
        object.__setattr__(self, "n_parts", n)
        object.__setattr__(self, "type_tag", PEType(self.type_tag))

    @classmethod
    def parse(cls, text: str, type_tag: PEType | str = PEType.SPACE) -> "PEPartition":
        pieces = text.split("|")
        if len(pieces) != 2:
            raise ContractError(f"expected exactly one '|' in {text!r}")
        return cls(_parse_parts(pieces[0]), _parse_parts(pieces[1]), PEType(type_tag))

    @property
    def total(self) -> int:
        return sum(self.m_parts) + sum(self.n_parts)

    @property
    def largest_sum(self) -> int:
        """m_1 + n_1, the alternative size statistic."""
        return self.m_parts[0] + self.n_parts[0]

    def swapped(self) -> "PEPartition":
        """Exchange the components; space and time tags trade places."""
        mirror = {PEType.SPACE: PEType.TIME, PEType.TIME: PEType.SPACE}
        return PEPartition(self.n_parts, self.m_parts, mirror.get(self.type_tag, self.type_tag))

    def __str__(self) -> str:
        return "+".join(map(str, self.m_parts)) + "|" + "+".join(map(str, self.n_parts))


_PART_RE = re.compile(r"^\s*\d+(\s*\+\s*\d+)*\s*$")


def _parse_parts(text: str) -> tuple[int, ...]:
    if not _PART_RE.match(text):
        raise ContractError(f"malformed partition {text!r}; expected INT(+INT)*")
    parts = tuple(int(t) for t in text.split("+"))
    _check_strict(parts)
    return parts


def _check_strict(parts: Sequence[int]) -> None:
    if any(p <= 0 for p in parts):
        raise ContractError(f"parts must be positive: {tuple(parts)}")
    if any(a <= b for a, b in zip(parts, parts[1:])):
        raise ContractError(f"parts must be strictly decreasing: {tuple(parts)}")


def no_adjacent_odd(parts: Sequence[int]) -> bool:
    return not any(a & 1 and b & 1 for a, b in zip(parts, parts[1:]))


def is_euclidean(p: Partition) -> bool:
    """Smallest part even and no two adjacent parts both odd."""
    if not p.parts:
        raise ContractError("is_euclidean needs a nonempty partition")
    return p.smallest % 2 == 0 and no_adjacent_odd(p.parts)


def _require_euclidean(p: Partition) -> None:
    if not p.parts:
        raise ContractError("empty partition")
    if p.smallest % 2:
        raise ContractError(f"{p}: smallest part must be even")
    if not no_adjacent_odd(p.parts):
        raise ContractError(f"{p}: adjacent parts must not both be odd")


def is_irreducible(p: Partition) -> bool:
    """Smallest part 2 and every adjacent gap at most 2 (p must be Euclidean)."""
    _require_euclidean(p)
    return p.smallest == 2 and all(a - b <= 2 for a, b in zip(p.parts, p.parts[1:]))


def weight_exponent(p: Partition) -> int:
    """Exponent w of the caustic-type weight 2**w.

    ``d - 1 - 2s`` for an even period, ``d - 2s`` for an odd one, where ``d``
    is the number of parts and ``s`` the number of odd parts.
    """
    _require_euclidean(p)
    d, s = p.length, p.odd_count
    return d - 1 - 2 * s if p.largest % 2 == 0 else d - 2 * s


def weight(p: Partition) -> int:
    return 2 ** weight_exponent(p)


def distinct_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every partition of n into distinct parts, lexicographically descending."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        # remaining parts are distinct and < p, so at most p(p-1)/2 more
        if p * (p + 1) // 2 < n:
            break
        for rest in distinct_partitions(n - p, p - 1):
            yield (p,) + rest


def _euclid_rec(remaining: int, max_part: int, prev_odd: bool) -> Iterator[tuple[int, ...]]:
    for p in range(min(remaining, max_part), 0, -1):
        odd = bool(p & 1)
        if odd and prev_odd:
            continue
        if p == remaining:
            if not odd:
                yield (p,)
            continue
        if p * (p + 1) // 2 < remaining:
            break
        for rest in _euclid_rec(remaining - p, p - 1, odd):
            yield (p,) + rest


def enumerate_by_sum(n: int) -> list[Partition]:
    """All Euclidean billiard partitions of n, lexicographically descending."""
    if n < 1:
        return []
    return [Partition(t) for t in _euclid_rec(n, n, False)]


def enumerate_by_shape(d: int, largest: int) -> list[Partition]:
    """All Euclidean billiard partitions with d parts and the given largest part."""
    out = []

    def rec(prefix: tuple[int, ...]) -> None:
        if len(prefix) == d:
            if prefix[-1] % 2 == 0:
                out.append(Partition(prefix))
            return
        need = d - len(prefix)
        for p in range(prefix[-1] - 1, need - 1, -1):
            if p & 1 and prefix[-1] & 1:
                continue
            rec(prefix + (p,))

    if d >= 1 and largest >= d:
        rec((largest,))
    return out


def _reduced_rec(d: int, largest: int, smallest_choices: tuple[int, ...]) -> list[Partition]:
    # build upward from the smallest part; gaps of 1 or 2, no two odds adjacent
    out = []

    def rec(chain: list[int]) -> None:
        top = chain[-1]
        if len(chain) == d:
            if top == largest:
                out.append(Partition(tuple(reversed(chain))))
            return
        for step in (1, 2):
            nxt = top + step
            if nxt > largest or (nxt & 1 and top & 1):
                continue
            chain.append(nxt)
            rec(chain)
            chain.pop()

    if d >= 1:
        for s in smallest_choices:
            if s <= largest:
                rec([s])
    out.sort(reverse=True)
    return out


def enumerate_irreducible(d: int, largest: int) -> list[Partition]:
    """Irreducible partitions with exactly d parts and the given largest part."""
    return _reduced_rec(d, largest, (2,))


def enumerate_reduced(d: int, largest: int) -> list[Partition]:
    """Reduced partitions for the tilde class.

    Same as irreducible except the smallest part may be 1 (the parity of the
    smallest part is unconstrained).
    """
    return _reduced_rec(d, largest, (1, 2))


def is_reducible_by_two(parts: Sequence[int], smallest_even: bool) -> bool:
    """True if lowering some part by 2 keeps the partition in its class.

    The literal definition of reducibility, kept as an independent check on
    the gap-based characterisation used by the enumerators.
    """
    for i in range(len(parts)):
        lowered = list(parts)
        lowered[i] -= 2
        if lowered[i] <= 0:
            continue
        if i + 1 < len(parts) and lowered[i] <= parts[i + 1]:
            continue
        if smallest_even and lowered[-1] % 2:
            continue
        if no_adjacent_odd(lowered):
            return True
    return False


def _reduced_parts(parts: Sequence[int], smallest_even: bool) -> tuple[int, ...]:
    base = []
    for i, lam in enumerate(reversed(parts)):
        if i == 0:
            r = 2 if lam % 2 == 0 else 1
            if smallest_even and r != 2:
                raise ContractError("smallest part must be even")
        else:
            prev = base[-1]
            r = prev + (1 if (lam - prev) & 1 else 2)
        base.append(r)
    return tuple(reversed(base))


def decompose(p: Partition) -> tuple[Partition, EvenPadding]:
    """Split p into its irreducible core and an even padding.

    Works upward from the smallest part: the core's smallest part is 2, and
    each further core part is the least value above the previous one that
    has the same parity as the original part.
    """
    _require_euclidean(p)
    core = _reduced_parts(p.parts, smallest_even=True)
    pad = tuple(a - b for a, b in zip(p.parts, core))
    return Partition(core), pad


def compose(p1: Partition, pad: Sequence[int]) -> Partition:
    """Inverse of :func:`decompose`."""
    if not is_irreducible(p1):
        raise ContractError(f"{p1} is not irreducible")
    pad = tuple(pad)
    if len(pad) != p1.length:
        raise ContractError(f"padding length {len(pad)} != {p1.length} parts")
    if any(v < 0 or v % 2 for v in pad):
        raise ContractError(f"padding entries must be even and nonnegative: {pad}")
    if any(a < b for a, b in zip(pad, pad[1:])):
        raise ContractError(f"padding must be nonincreasing: {pad}")
    return Partition(tuple(a + b for a, b in zip(p1.parts, pad)))


def is_pe_member(p: PEPartition) -> bool:
    """Membership in the space-, time- or light-type class named by the tag."""
    if not (no_adjacent_odd(p.m_parts) and no_adjacent_odd(p.n_parts)):
        return False
    m_even = p.m_parts[-1] % 2 == 0
    n_even = p.n_parts[-1] % 2 == 0
    if p.type_tag is PEType.SPACE:
        return n_even
    if p.type_tag is PEType.TIME:
        return m_even
    return m_even and n_even


def _components(n: int) -> list[tuple[int, ...]]:
    return [t for t in distinct_partitions(n) if no_adjacent_odd(t)]


def enumerate_pe_by_total(type_tag: PEType | str, n: int) -> list[PEPartition]:
    """All PE partitions of the given type whose parts sum to n overall."""
    tag = PEType(type_tag)
    found = []
    for a in range(1, n):
        for m in _components(a):
            for nn in _components(n - a):
                cand = PEPartition(m, nn, tag)
                if is_pe_member(cand):
                    found.append(cand)
    found.sort(key=lambda p: (p.m_parts, p.n_parts), reverse=True)
    return found


def enumerate_pe_by_largest_sum(type_tag: PEType | str, n: int) -> list[PEPartition]:
    """All PE partitions of the given type with m_1 + n_1 == n."""
    tag = PEType(type_tag)
    found = []
    for m1 in range(1, n):
        n1 = n - m1
        for m in _components_with_largest(m1):
            for nn in _components_with_largest(n1):
                cand = PEPartition(m, nn, tag)
                if is_pe_member(cand):
                    found.append(cand)
    found.sort(key=lambda p: (p.m_parts, p.n_parts), reverse=True)
    return found


def _components_with_largest(top: int) -> list[tuple[int, ...]]:
    # every subset of {1..top-1} appended below top, filtered by adjacency
    out = []

    def rec(prefix: tuple[int, ...]) -> None:
        out.append(prefix)
        for p in range(prefix[-1] - 1, 0, -1):
            if p & 1 and prefix[-1] & 1:
                continue
            rec(prefix + (p,))

    rec((top,))
    return out
