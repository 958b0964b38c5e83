"""quadop: exact-arithmetic toolkit for quadratic data, their monoidal
products and duality functors, binary operadic quadratic data, graph operads,
and bounded-arity verification of the structural laws relating them.
"""

from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
