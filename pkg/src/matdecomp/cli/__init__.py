"""File formats, seeded generators, experiment suites and the command line."""
from .formats import InstanceParseError, parse_instance, write_instance, write_parse_tree
from .rng import Lcg

__all__ = ["InstanceParseError", "parse_instance", "write_instance", "write_parse_tree", "Lcg"]
