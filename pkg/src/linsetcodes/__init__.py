"""Linear sets on a projective line, the planar pointsets they generate,
and the few-weight Hamming codes attached to them, all by exact enumeration."""

__version__ = "0.1.0"

from .algebra import FieldContext, QPolynomial, build_field, qpoly

__all__ = ["FieldContext", "QPolynomial", "build_field", "qpoly", "__version__"]
