"""Okada algebra and monoid toolkit."""

from ._core import (
    ArcDiagram,
    FibonacciSet,
    InvariantViolation,
    SchemaError,
    dominance_covers,
    enumerate_yfs,
    gram_determinant,
    gram_matrix,
    green_counts,
    idempotent_count,
    join,
    meet,
    multiply,
    normalize,
    render_dominance,
    render_yf,
    rs,
    rs_inverse,
    schema_version,
    triangular_factorization,
    word_to_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
