"""Planar-Rips complexes: exact construction, classification and obstructions."""
from .complex import FlagComplex, Graph, clique_complex
from .geom import Point2
from .homology import Field, betti_numbers
from .rips import PointCloud, ThresholdMode, build_rips, build_udg

__version__ = "0.1.0"
