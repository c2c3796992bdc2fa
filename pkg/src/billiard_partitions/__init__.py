"""Billiard partitions: enumeration, weights and q-series generating functions."""

from .closedform import euclid_series, pe_series, s_closed, s_recurrence, s_tilde
from .enumeration import (
    Partition,
    PEPartition,
    PEType,
    compose,
    decompose,
    enumerate_by_shape,
    enumerate_by_sum,
    enumerate_irreducible,
    enumerate_pe_by_total,
    enumerate_reduced,
    is_euclidean,
    is_irreducible,
    is_pe_member,
    weight_exponent,
)
from .qalgebra import (
    ContractError,
    QSeries,
    XPoly,
    coeff,
    inv_q_pochhammer_even,
    poly_mul,
    q_binomial,
    q_pochhammer_even,
    series_mul,
)
from .verify import VerificationReport

__version__ = "0.1.0"
