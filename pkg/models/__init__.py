"""Data models for liequiver."""

from .errors import LieQuiverErrorType, LieQuiverError
from .lie import INFINITY, Extended, LieType, Weight, Root, PsiSet, LinearForm
from .quiver import Arrow, Path, PathList, QuiverGraph
from .algebra import FWord, FElement, SigmaMap
from .relations import PathVec, RelationSpace, TensorVec
from .families import GammaParameters, LatticeBox, XiParameters, parse_sides
from .pathalg import QuadraticAlgebra, HilbertMatrix
from .job import JobConfig

__all__ = [
    "LieQuiverErrorType", "LieQuiverError",
    "INFINITY", "Extended", "LieType", "Weight", "Root", "PsiSet", "LinearForm",
    "Arrow", "Path", "PathList", "QuiverGraph",
    "FWord", "FElement", "SigmaMap",
    "PathVec", "RelationSpace", "TensorVec",
    "LatticeBox", "GammaParameters", "XiParameters", "parse_sides",
    "QuadraticAlgebra", "HilbertMatrix",
    "JobConfig",
]
