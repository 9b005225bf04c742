"""Exact octonion arithmetic over the twisted group algebra of F8, and the
sixteen integral orders containing the Gravesian integers."""

from .algebra import Octonion, basis, multiply, conjugate, norm, associator

__all__ = ["Octonion", "basis", "multiply", "conjugate", "norm", "associator"]
