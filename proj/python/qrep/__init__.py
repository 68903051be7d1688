"""Exact certificates for quantum representations of mapping class groups."""

import json

from ._core import (
    NonHyperbolic,
    ParseError,
    QrepError,
    __version__,
    block_dimension,
    burau_closure,
    count_orbits,
    find_indefinite_ell,
    gram_signs,
    quantum_integer_sign,
    run_cli,
    tadpole_basis,
    twist_eigenvalue,
    twist_order,
)
from . import _core


def certify(p):
    """Certificate for level p as a dict (same schema as `qrep certify --format json`)."""
    return json.loads(_core._certificate_json(p))


def veech(spec):
    """Perron data, classification and flat-surface data for a configuration graph."""
    return json.loads(_core._veech_json(spec))


def orbits(g, n, labeled=False):
    """Orbit list, count and H^2 bounds."""
    return json.loads(_core._orbits_json(g, n, labeled))


__all__ = [
    "NonHyperbolic",
    "ParseError",
    "QrepError",
    "__version__",
    "block_dimension",
    "burau_closure",
    "certify",
    "count_orbits",
    "find_indefinite_ell",
    "gram_signs",
    "orbits",
    "quantum_integer_sign",
    "run_cli",
    "tadpole_basis",
    "twist_eigenvalue",
    "twist_order",
    "veech",
]
