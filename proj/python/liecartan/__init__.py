"""Exact rational Lie algebra structure theory.

Vectors and subspace bases are lists of ``fractions.Fraction``; inputs may be
ints, Fractions or "p/q" strings.
"""

from pathlib import Path

from ._core import (
    LieAlgebra,
    LieCartanError,
    cartan_subalgebra,
    is_cartan_subalgebra,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    levi_decomposition,
    nilradical,
    pk_surjective,
    power_map_dense,
    quotient,
    radical,
    run_cli,
)
from . import _core

__all__ = [
    "LieAlgebra",
    "LieCartanError",
    "cartan_subalgebra",
    "data_dir",
    "fixture",
    "is_cartan_subalgebra",
    "is_nilpotent",
    "is_semisimple",
    "is_solvable",
    "levi_decomposition",
    "nilradical",
    "pk_surjective",
    "power_map_dense",
    "quotient",
    "radical",
    "run_cli",
    "verify",
]

__version__ = "0.1.0"


def data_dir() -> Path:
    """Bundled catalog: installed package data, else the source tree."""
    packaged = Path(__file__).with_name("data")
    return packaged if packaged.is_dir() else Path(_core.data_dir)


def fixture(name: str) -> LieAlgebra:
    return LieAlgebra.load(str(data_dir() / "algebras" / f"{name}.json"))


def verify(paths=(), all=False, data_dir_override=None):
    """Run the invariant suites; returns the JSON report as a dict."""
    root = data_dir_override or data_dir()
    return _core.verify([str(p) for p in paths], all, str(root))
