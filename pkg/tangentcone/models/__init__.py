from .polynomial import MultiPoly
from .jet import CurveGerm, Jet, OrderResult
from .linalg import ExactMatrix, SubspaceBasis
from .ideal import IdealPresentation
from .algebra import AlgebraPoint, BilinearMap, BlockMap, Splitting

__all__ = [
    "MultiPoly", "CurveGerm", "Jet", "OrderResult", "ExactMatrix", "SubspaceBasis",
    "IdealPresentation", "AlgebraPoint", "BilinearMap", "BlockMap", "Splitting",
]
