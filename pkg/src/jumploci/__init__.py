"""Exact computation of cohomology jumping loci: Orlik-Solomon and
configuration-space models, Aomoto complexes, resonance and tangent-cone
membership, master-function critical points, and Fox-calculus oracles."""

__version__ = "0.1.0"

from .errors import DegeneracyError, JumplociError, ParseError, PreconditionError

__all__ = [
    "DegeneracyError",
    "JumplociError",
    "ParseError",
    "PreconditionError",
    "__version__",
]
