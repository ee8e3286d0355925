"""Fractional isomorphism of graphs and hypergraphs, decided exactly."""

from .hypergraph import Hypergraph, make
from .iso import IsoVerdict, IsoWitness, decide, iso_by_lp, iso_by_partition, verify_witness
from .lp import LPProblem, Infeasible, Optimal, Unbounded, solve
from .partition import coarsest_partition, common_partition
from .rational import RationalMatrix

__version__ = "0.1.0"

__all__ = [
    "Hypergraph", "make", "RationalMatrix",
    "LPProblem", "Optimal", "Infeasible", "Unbounded", "solve",
    "coarsest_partition", "common_partition",
    "IsoVerdict", "IsoWitness", "decide", "iso_by_lp", "iso_by_partition", "verify_witness",
]
