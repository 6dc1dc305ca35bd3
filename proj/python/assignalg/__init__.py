"""Exact computation of polynomial assignment algebras.

Thin wrapper around the compiled extension. Report-producing functions
return the structured machine documents as plain dictionaries.
"""

import json

from . import _assignalg
from ._assignalg import (
    ModelError,
    DimensionError,
    validate,
    normalize,
    normalize_polynomial,
    basis_dims,
    is_member,
    corpus_names,
    corpus_document,
)

__all__ = [
    "ModelError",
    "DimensionError",
    "validate",
    "normalize",
    "normalize_polynomial",
    "basis_dims",
    "is_member",
    "module_report",
    "surjectivity_report",
    "kernel_report",
    "quotient_report",
    "extend",
    "oracle_compare",
    "quotient_circle_dims",
    "corpus_names",
    "corpus_document",
]


def module_report(text, degree_bound):
    """Graded dimensions, minimal generators, rank, and freeness verdict."""
    return json.loads(_assignalg.module_report(text, degree_bound))


def surjectivity_report(text):
    """Per-component independence of the collinearity classes of weights."""
    return json.loads(_assignalg.surjectivity_report(text))


def kernel_report(text, degree_bound):
    """Generators and dimensions of the two halves of the moment-map kernel."""
    return json.loads(_assignalg.kernel_report(text, degree_bound))


def quotient_report(text, degree_bound, circle=()):
    """Dimensions and generators of the quotient by a circle direction."""
    return json.loads(_assignalg.quotient_report(text, degree_bound, list(circle)))


def extend(text, degree_bound):
    """Solve an extension problem: witness polynomial or obstruction."""
    return json.loads(_assignalg.extend(text, degree_bound))


def oracle_compare(gkm_text, strata_text, degree_bound):
    """Compare graded dimensions of a gkm and a strata model."""
    return json.loads(_assignalg.oracle_compare(gkm_text, strata_text, degree_bound))


def quotient_circle_dims(text, degree_bound, circle=()):
    """Graded dimensions of a strata model after quotienting by a circle."""
    return _assignalg.quotient_circle_dims(text, degree_bound, list(circle))
