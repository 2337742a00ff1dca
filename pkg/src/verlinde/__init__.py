"""Exact Verlinde numbers for SL_r and Spin_m, with the surrounding identities.

The main entry points are :func:`verlinde_number` and :func:`verlinde_split`;
``verlinde.identities.run_all`` runs the whole verification suite.
"""

from .core import (
    GroupId,
    VerlindeQuery,
    enumerate_weights,
    term_value,
    verlinde_float,
    verlinde_number,
    verlinde_split,
)
from .closed_forms import closed_form
from .heights import height, level_dimension
from .prym import moduli_dimension, prym_sum, theta_dim

__version__ = "0.1.0"

__all__ = [
    "GroupId",
    "VerlindeQuery",
    "closed_form",
    "enumerate_weights",
    "height",
    "level_dimension",
    "moduli_dimension",
    "prym_sum",
    "term_value",
    "theta_dim",
    "verlinde_float",
    "verlinde_number",
    "verlinde_split",
]
