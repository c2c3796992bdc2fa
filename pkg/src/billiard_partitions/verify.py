"""Cross-checks between closed forms, recurrences, enumeration and fixtures.

Every suite returns a :class:`VerificationReport`; failures are recorded as
data and never raised.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Callable

import yaml

from . import closedform as cf
from .enumeration import (
    Partition,
    PEType,
    compose,
    decompose,
    enumerate_by_sum,
    enumerate_irreducible,
    enumerate_pe_by_largest_sum,
    enumerate_pe_by_total,
    enumerate_reduced,
    is_irreducible,
    is_pe_member,
    weight_exponent,
)
from .qalgebra import QSeries, XPoly


@dataclass(frozen=True)
class Mismatch:
    input: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    suite: str
    cells_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def check(self, label: str, expected: Any, actual: Any) -> bool:
        self.cells_checked += 1
        if expected != actual:
            self.mismatches.append(Mismatch(label, str(expected), str(actual)))
            return False
        return True

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"suite {self.suite}: {status} "
            f"({self.cells_checked} cells, {len(self.mismatches)} mismatches, "
            f"{self.elapsed_ms:.1f} ms)"
        ]
        for m in self.mismatches:
            lines.append(f"  {m.input}: expected {m.expected}, got {m.actual}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _timed(suite: str) -> Callable:
    def wrap(fn: Callable[..., None]) -> Callable[..., VerificationReport]:
        def run(*args: Any, **kwargs: Any) -> VerificationReport:
            report = VerificationReport(suite)
            t0 = time.perf_counter()
            fn(report, *args, **kwargs)
            report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
            return report

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


@lru_cache(maxsize=1)
def load_fixtures() -> dict[str, Any]:
    text = resources.files(__package__).joinpath("fixtures/published.yaml").read_text()
    return yaml.safe_load(text)


def corrected_unweighted_fixture() -> list[int]:
    """Printed unweighted series with the listed errata applied."""
    fx = load_fixtures()
    values = list(fx["euclid_unweighted"])
    for e in fx.get("errata", []):
        if e["table"] == "euclid_unweighted":
            values[e["degree"]] = e["corrected"]
    return values


def weight_polynomial(parts: list[Partition], order: int) -> QSeries:
    """Sum of x^w q^|p| over the given partitions, truncated at ``order``."""
    acc = [XPoly()] * (order + 1)
    for p in parts:
        if p.total <= order:
            acc[p.total] = acc[p.total] + XPoly.monomial(weight_exponent(p))
    return QSeries(order, tuple(acc))


def _count_series(parts: list[Any], order: int) -> QSeries:
    acc = [0] * (order + 1)
    for p in parts:
        if p.total <= order:
            acc[p.total] += 1
    return QSeries.from_ints(order, acc)


@_timed("shapes")
def verify_shapes(
    report: VerificationReport,
    d_max: int,
    n_max: int,
    order: int = 200,
    odd_exponent: str = "standard",
) -> None:
    """Closed form, recurrence and enumeration agree on every s(d, n) cell."""
    for d in range(1, d_max + 1):
        for n in range(1, n_max + 1):
            oracle = weight_polynomial(enumerate_irreducible(d, n), order)
            closed = cf.s_closed(d, n, order, odd_exponent)
            rec = cf.s_recurrence(d, n, order)
            report.check(f"closed s({d},{n})", oracle, closed)
            report.check(f"recurrence s({d},{n})", oracle, rec)


@_timed("tilde")
def verify_tilde(report: VerificationReport, d_max: int, n_max: int, order: int = 200) -> None:
    """s_tilde against enumeration of reduced partitions, plus the shift identity."""
    for d in range(1, d_max + 1):
        for n in range(1, n_max + 1):
            oracle = _count_series(enumerate_reduced(d, n), order)
            report.check(f"s_tilde({d},{n})", oracle, cf.s_tilde(d, n, order))
            if d >= 2:
                rhs = (cf.s_closed(d, n, order) + cf.s_closed(d - 1, n, order).shift(1)).at_x(1)
                report.check(f"identity s_tilde({d},{n})", rhs, cf.s_tilde(d, n, order))


@_timed("euclid")
def verify_euclid_series(
    report: VerificationReport, order: int = 40, odd_exponent: str = "standard"
) -> None:
    """Generating series against the oracle, the printed fixtures and x=1."""
    weighted = cf.euclid_series(order, weighted=True, odd_exponent=odd_exponent)
    unweighted = cf.euclid_series(order, weighted=False, odd_exponent=odd_exponent)

    report.check("weighted q^0", XPoly((1,)), weighted.coeff(0))
    report.check("unweighted q^0", XPoly((1,)), unweighted.coeff(0))
    for n in range(1, order + 1):
        parts = enumerate_by_sum(n)
        report.check(f"unweighted q^{n}", XPoly((len(parts),)), unweighted.coeff(n))
        report.check(f"weighted q^{n}", weight_polynomial(parts, order).coeff(n), weighted.coeff(n))

    for n in range(order + 1):
        report.check(f"x=1 consistency q^{n}", unweighted.coeff(n), XPoly((weighted.coeff(n)(1),)))

    fx = load_fixtures()
    top = min(order, len(fx["euclid_unweighted"]) - 1)
    fixed = corrected_unweighted_fixture()
    for n in range(top + 1):
        report.check(f"fixture unweighted q^{n}", fixed[n], unweighted.coeff(n)(1))
        report.check(f"fixture weighted q^{n}", XPoly(fx["euclid_weighted"][n]), weighted.coeff(n))
    for e in fx.get("errata", []):
        if e["degree"] <= top:
            report.notes.append(
                f"{e['table']} q^{e['degree']}: published {e['printed']}, "
                f"checked against corrected {e['corrected']}"
            )


@_timed("decomposition")
def verify_decomposition(report: VerificationReport, sum_max: int = 40) -> None:
    """Round trip, uniqueness and weight preservation of core + padding."""
    for n in range(1, sum_max + 1):
        for p in enumerate_by_sum(n):
            core, pad = decompose(p)
            label = str(p)
            report.check(f"{label} core irreducible", True, is_irreducible(core))
            report.check(f"{label} round trip", p, compose(core, pad))
            report.check(f"{label} weight", weight_exponent(p), weight_exponent(core))
            d = p.length
            candidates = []
            for largest in range(d + 1, 2 * d + 1):
                for c in enumerate_irreducible(d, largest):
                    diff = [a - b for a, b in zip(p.parts, c.parts)]
                    ok = all(v >= 0 and v % 2 == 0 for v in diff) and all(
                        a >= b for a, b in zip(diff, diff[1:])
                    )
                    if ok:
                        candidates.append(c)
            report.check(f"{label} unique core", [core], candidates)

    for item in load_fixtures()["decompositions"]:
        p = Partition.parse(item["partition"])
        if p.total <= sum_max:
            core, pad = decompose(p)
            report.check(
                f"fixture {item['partition']}",
                (item["core"], tuple(item["padding"])),
                (str(core), pad),
            )


@_timed("pe")
def verify_pe(report: VerificationReport, order: int = 24, largest_sum_probe: int = 10) -> None:
    """Pseudo-Euclidean series against exhaustive pair enumeration."""
    counts: dict[PEType, list[int]] = {}
    for tag in PEType:
        series = cf.pe_series(tag, order).int_coeffs()
        report.check(f"{tag.value} q^0", 1, series[0])
        oracle = [1]
        for n in range(1, order + 1):
            members = enumerate_pe_by_total(tag, n)
            oracle.append(len(members))
            report.check(f"{tag.value} q^{n}", len(members), series[n])
        counts[tag] = oracle

    for n in range(1, order + 1):
        for p in enumerate_pe_by_total(PEType.SPACE, n):
            report.check(f"mirror {p}", True, is_pe_member(p.swapped()))
        sp, tm, li = (counts[t][n] for t in (PEType.SPACE, PEType.TIME, PEType.LIGHT))
        report.check(f"space/time symmetry q^{n}", sp, tm)
        report.check(f"light bound q^{n}", True, li <= min(sp, tm))

    # the m_1 + n_1 size statistic does not produce these series
    top = min(order, largest_sum_probe)
    for tag in PEType:
        alt = [len(enumerate_pe_by_largest_sum(tag, n)) for n in range(1, top + 1)]
        differ = [n for n, c in zip(range(1, top + 1), alt) if c != counts[tag][n]]
        if differ:
            report.notes.append(
                f"{tag.value}: counting by m_1+n_1 gives {alt} for sizes 1..{top}; "
                f"differs from the total-sum series at sizes {differ}"
            )


SUITES = ("shapes", "tilde", "euclid", "decomposition", "pe")


def run_suite(name: str, **bounds: Any) -> list[VerificationReport]:
    """Run one suite (or ``"all"``) with CLI-style bounds."""
    d_max = bounds.get("d_max", 8)
    n_max = bounds.get("n_max", 24)
    order = bounds.get("order")
    sum_max = bounds.get("sum_max", 40)
    runners = {
        "shapes": lambda: verify_shapes(d_max, n_max, max(order or 200, d_max * n_max)),
        "tilde": lambda: verify_tilde(d_max, n_max, max(order or 200, d_max * n_max)),
        "euclid": lambda: verify_euclid_series(order if order is not None else 40),
        "decomposition": lambda: verify_decomposition(sum_max),
        "pe": lambda: verify_pe(order if order is not None else 24),
    }
    if name == "all":
        return [runners[s]() for s in SUITES]
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return [runners[name]()]
