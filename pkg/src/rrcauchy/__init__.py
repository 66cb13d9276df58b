"""Exact truncated q-series, tableaux and Schur functions for Rogers-Ramanujan type identities."""
from .errors import (
    BadResidue,
    DomainViolation,
    InvalidParams,
    InvalidTableau,
    NegativeShift,
    RRCauchyError,
    ShapeMismatch,
    UnsortedBiword,
    UnsupportedClosedForm,
    ZeroConstantTerm,
)
from .partitions import Partition, PartitionConstraint, conjugate, count, generate, mod5_decompose
from .qseries import (
    FactoredProduct,
    QSeries,
    XYSeries,
    expand,
    gauss_binomial,
    normalize,
    poch_finite,
    poch_infinite,
    series_add,
    series_invert,
    series_mul,
)
from .rsk import Biword, TableauPair, partition_to_pq, pq_to_partition, rsk_forward, rsk_inverse
from .schur import Strategy, schur, schur_table
from .tableaux import FiniteAlphabet, GeometricAlphabet, Tableau, enumerate_ssyt, rr_alphabet, validate

__version__ = "0.1.0"

__all__ = [
    "BadResidue",
    "Biword",
    "DomainViolation",
    "FactoredProduct",
    "FiniteAlphabet",
    "GeometricAlphabet",
    "InvalidParams",
    "InvalidTableau",
    "NegativeShift",
    "Partition",
    "PartitionConstraint",
    "QSeries",
    "RRCauchyError",
    "ShapeMismatch",
    "Strategy",
    "Tableau",
    "TableauPair",
    "UnsortedBiword",
    "UnsupportedClosedForm",
    "XYSeries",
    "ZeroConstantTerm",
    "conjugate",
    "count",
    "enumerate_ssyt",
    "expand",
    "gauss_binomial",
    "generate",
    "mod5_decompose",
    "normalize",
    "partition_to_pq",
    "poch_finite",
    "poch_infinite",
    "pq_to_partition",
    "rr_alphabet",
    "rsk_forward",
    "rsk_inverse",
    "schur",
    "schur_table",
    "series_add",
    "series_invert",
    "series_mul",
    "validate",
]
