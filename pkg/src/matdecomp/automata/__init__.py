"""Tree automata and the lattice path parse-tree construction."""
from .engine import FAMILY_LIMIT, SigmaTree, TreeAutomaton, accepted_family, accepts, encode, run
from .lattice import (DEP, LatticeParse, Staircase, StepFunction, lattice_parse, staircase_bound_check,
                      staircases)

__all__ = [
    "FAMILY_LIMIT", "SigmaTree", "TreeAutomaton", "accepted_family", "accepts", "encode", "run",
    "DEP", "LatticeParse", "Staircase", "StepFunction", "lattice_parse", "staircase_bound_check",
    "staircases",
]
