"""Hard Lefschetz duality checks for isometric flows.

Thin wrapper around the C++ core: model loading, the Gysin builder, the
THL/P/HL/equivalence/parity checkers and the integral lattice searches.
"""

from ._core import (
    LoadError,
    Model,
    ModelError,
    PolynomialParseError,
    __version__,
    corpus_ids,
    find_nonvanishing_point,
    gysin_build,
    integral_combination,
    load_model,
    model_from_json,
)

__all__ = [
    "LoadError",
    "Model",
    "ModelError",
    "PolynomialParseError",
    "__version__",
    "corpus_ids",
    "find_nonvanishing_point",
    "gysin_build",
    "integral_combination",
    "load_model",
    "model_from_json",
]
