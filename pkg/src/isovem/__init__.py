"""Isoparametric virtual element methods on polygonal meshes."""

from isovem.kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
