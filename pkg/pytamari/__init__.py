from __future__ import annotations

import importlib.metadata

# package imports
from .AltTamari import build_alt_tamari, count_nu_paths, enumerate_nu_paths, top_path
from .BracketVector import BracketVector, bracket_vector, componentwise_leq, nu_hat
from .Families import hook_tamari, two_row_tamari
from .FiniteLattice import FiniteLattice, LatticeError, OrbitDecomposition
from .LatticePath import IncrementVector, LatticePath, parse_path
from .Statistics import StatReport, orbit_stat_report
from .Switching import SwitchEmbedding, check_switching, star_compose
from .utils import ElementLimitError

# set the version number within the package using importlib
try:
    __version__: str | None = importlib.metadata.version("pytamari")
except importlib.metadata.PackageNotFoundError:
    # package is not installed
    __version__ = None

__all__ = (
    "BracketVector",
    "ElementLimitError",
    "FiniteLattice",
    "IncrementVector",
    "LatticeError",
    "LatticePath",
    "OrbitDecomposition",
    "StatReport",
    "SwitchEmbedding",
    "bracket_vector",
    "build_alt_tamari",
    "check_switching",
    "componentwise_leq",
    "count_nu_paths",
    "enumerate_nu_paths",
    "hook_tamari",
    "nu_hat",
    "orbit_stat_report",
    "parse_path",
    "star_compose",
    "top_path",
    "two_row_tamari",
)
