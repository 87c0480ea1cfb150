"""Exact verification of Ekeland, Takahashi and Caristi principles on finite quasi-metric spaces."""

from ._core import (
    Instance,
    QSpace,
    QvpError,
    caristi,
    check_equivalences,
    full_ekeland,
    generate,
    make_instance,
    oracle_wek,
    parse_instance,
    takahashi,
    weak_ekeland,
    witness,
)

__all__ = [
    "Instance",
    "QSpace",
    "QvpError",
    "caristi",
    "check_equivalences",
    "full_ekeland",
    "generate",
    "make_instance",
    "oracle_wek",
    "parse_instance",
    "takahashi",
    "weak_ekeland",
    "witness",
]
