"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise (or
when ``ANTIMATROID_PURE=1``) the pure-Python ``_pykernels`` module is used.
Both expose the same functions over bitmask sequences.
"""
import os

from . import _pykernels

if os.environ.get("ANTIMATROID_PURE") == "1":
    backend = _pykernels
else:
    try:
        from . import _ckernels as backend
    except ImportError:  # extension not built
        backend = _pykernels

BACKEND = "compiled" if backend is not _pykernels else "python"

is_accessible = backend.is_accessible
is_union_closed = backend.is_union_closed
satisfies_exchange = backend.satisfies_exchange
has_interval_property = backend.has_interval_property
union_closure = backend.union_closure
dense_isotone_witness = backend.dense_isotone_witness
family_isotone_witness = backend.family_isotone_witness

__all__ = [
    "BACKEND",
    "backend",
    "is_accessible",
    "is_union_closed",
    "satisfies_exchange",
    "has_interval_property",
    "union_closure",
    "dense_isotone_witness",
    "family_isotone_witness",
]
