"""Concrete matroid representations and example generators."""
from .constructions import (SimpleGraph, courcelle_gadget, m_of_graph, object_construction,
                            principal_extension, raunch_sets)
from .gammoid import GammoidPresentation, strict_gammoid_oracle
from .graphs import (BicircularGraph, GainGraph, Multigraph, balance_and_gain, bicircular_minor,
                     bicircular_oracle, components, gain_minor, gain_oracle, nu, switch)
from .groups import Group, IntegerGroup, TableGroup, cyclic, symmetric3, trivial
from .lattice import LatticePathPresentation, greedy_heights, lattice_path_oracle
from .linear import LinearRep, UniformSpec, linear_oracle, uniform_oracle
from .transversal import (BipartitePresentation, fundamental_transversal_oracle,
                          standard_presentation, transversal_oracle)

__all__ = [
    "SimpleGraph", "courcelle_gadget", "m_of_graph", "object_construction",
    "principal_extension", "raunch_sets", "GammoidPresentation", "strict_gammoid_oracle",
    "BicircularGraph", "GainGraph", "Multigraph", "balance_and_gain", "bicircular_minor",
    "bicircular_oracle", "components", "gain_minor", "gain_oracle", "nu", "switch",
    "Group", "IntegerGroup", "TableGroup", "cyclic", "symmetric3", "trivial",
    "LatticePathPresentation", "greedy_heights", "lattice_path_oracle",
    "LinearRep", "UniformSpec", "linear_oracle", "uniform_oracle",
    "BipartitePresentation", "fundamental_transversal_oracle", "standard_presentation",
    "transversal_oracle", "oracle_for",
]


def oracle_for(presentation):
    """The matroid of any supported presentation."""
    if isinstance(presentation, LinearRep):
        return linear_oracle(presentation)
    if isinstance(presentation, UniformSpec):
        return uniform_oracle(presentation.r, presentation.n)
    if isinstance(presentation, BipartitePresentation):
        return fundamental_transversal_oracle(presentation)
    if isinstance(presentation, LatticePathPresentation):
        return lattice_path_oracle(presentation)
    if isinstance(presentation, BicircularGraph):
        return bicircular_oracle(presentation.graph, presentation.balanced_loops)
    if isinstance(presentation, GainGraph):
        return gain_oracle(presentation)
    if isinstance(presentation, GammoidPresentation):
        return strict_gammoid_oracle(presentation)
    if isinstance(presentation, SimpleGraph):
        return m_of_graph(presentation)
    raise TypeError(f"no oracle for {type(presentation).__name__}")
