"""Moore-type bounds, constructions, spectra and enumeration for bipartite biregular graphs."""

from .core import BipartiteGraph, canonical_form, diameter, girth, is_biregular
from .bounds import Params, BoundResult, best_bound

__all__ = ["BipartiteGraph", "canonical_form", "diameter", "girth", "is_biregular",
           "Params", "BoundResult", "best_bound"]
__version__ = "0.1.0"
