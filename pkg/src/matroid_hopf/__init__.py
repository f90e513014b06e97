"""Exact matroid Tutte polynomials and the matroid Hopf algebra."""

from .matroid import (
    EMPTY,
    IsoKey,
    Matroid,
    MatroidError,
    canonical,
    catalog,
    contract,
    delete,
    direct_sum,
    dual,
    enumerate_matroids,
    from_bases,
    from_independent_sets,
    graphic,
    is_coloop,
    is_loop,
    nullity,
    rank,
    restrict,
    uniform,
)
from .poly import Poly
from .textformat import format_matroid, parse_matroid
from .tutte import recipe_Q, scaled_tutte, tutte_delcon, tutte_subset, tutte_uniform

__all__ = [
    "EMPTY",
    "IsoKey",
    "Matroid",
    "MatroidError",
    "Poly",
    "canonical",
    "catalog",
    "contract",
    "delete",
    "direct_sum",
    "dual",
    "enumerate_matroids",
    "format_matroid",
    "from_bases",
    "from_independent_sets",
    "graphic",
    "is_coloop",
    "is_loop",
    "nullity",
    "parse_matroid",
    "rank",
    "recipe_Q",
    "restrict",
    "scaled_tutte",
    "tutte_delcon",
    "tutte_subset",
    "tutte_uniform",
    "uniform",
]
