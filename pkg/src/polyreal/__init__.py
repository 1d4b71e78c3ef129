"""Polyhedral realizations of highest weight crystals over adapted sequences.

The package builds root data for four affine families, the crystal structure
on finitely supported integer sequences, linear inequality forms with their
closure operation, and three combinatorial generator families (extended
Young diagrams, revised extended Young diagrams, Young walls) together with
verification suites and a command-line interface.
"""

from .root_data import (
    AdaptedSequence,
    AlgebraType,
    FAMILIES,
    NotAdaptedError,
    RootDataError,
    RootSystem,
    build_adapted,
    build_root_system,
    fold,
    index_to_pair,
    p_table,
    pair_to_index,
)
from .lattice_crystal import (
    LatticeElement,
    enumerate_image,
    epsilon,
    etilde,
    format_element,
    ftilde,
    phi,
    sigma,
    weight_coeffs,
    weight_pairing,
)
from .forms import (
    LinearForm,
    beta_index,
    beta_pair,
    check_xi_positivity,
    closure,
    evaluate,
    s_prime,
)
from . import eyd, reyd, young_wall, verify, cli

__version__ = "0.1.0"

__all__ = [
    "AdaptedSequence",
    "AlgebraType",
    "FAMILIES",
    "NotAdaptedError",
    "RootDataError",
    "RootSystem",
    "build_adapted",
    "build_root_system",
    "fold",
    "index_to_pair",
    "p_table",
    "pair_to_index",
    "LatticeElement",
    "enumerate_image",
    "epsilon",
    "etilde",
    "format_element",
    "ftilde",
    "phi",
    "sigma",
    "weight_coeffs",
    "weight_pairing",
    "LinearForm",
    "beta_index",
    "beta_pair",
    "check_xi_positivity",
    "closure",
    "evaluate",
    "s_prime",
    "eyd",
    "reyd",
    "young_wall",
    "verify",
    "cli",
    "__version__",
]
